#pragma once

#include "maslov/trace.hpp"

namespace fixtures {

using namespace maslov;

inline Rational q(long long n, long long d = 1) { return Rational(n, d); }

// Convex CCW 16-gon whose vertical edges cross the x-axis at (1,0) and
// (-1,0) in their interiors. A rational stand-in for the unit circle.
inline PLPath circle16() {
    std::vector<Point> v = {
        {q(1), q(1, 5)},   {q(9, 10), q(3, 5)},   {q(3, 5), q(9, 10)},
        {q(1, 5), q(1)},   {q(-1, 5), q(1)},      {q(-3, 5), q(9, 10)},
        {q(-9, 10), q(3, 5)}, {q(-1), q(1, 5)},   {q(-1), q(-1, 5)},
        {q(-9, 10), q(-3, 5)}, {q(-3, 5), q(-9, 10)}, {q(-1, 5), q(-1)},
        {q(1, 5), q(-1)},  {q(3, 5), q(-9, 10)},  {q(9, 10), q(-3, 5)},
        {q(1), q(-1, 5)}};
    return make_loop(v);
}

inline PLPath x_axis() { return make_line(point(0, 0), point(1, 0)); }

// The flagship trace: alpha = x-axis, beta = circle16, boundary along the
// segment [-1,1] and the upper arc; w = 1 in the upper half-disc.
inline Trace half_disc_trace() {
    PLPath alpha = x_axis();
    PLPath beta = circle16();
    auto pts = intersect_curves(alpha, beta);  // [(-1,0), (1,0)]
    BoundaryPathSpec ga{pts[0], pts[1], Direction::Forward, 0};
    BoundaryPathSpec gb{pts[0], pts[1], Direction::Backward, 0};
    return make_trace(Surface::plane(), alpha, beta, pts[0], pts[1], ga, gb);
}

// Companion trace y -> x through the lower half-disc; w = -1 below the axis.
inline Trace lower_half_disc_trace() {
    PLPath alpha = x_axis();
    PLPath beta = circle16();
    auto pts = intersect_curves(alpha, beta);
    BoundaryPathSpec ga{pts[1], pts[0], Direction::Backward, 0};
    BoundaryPathSpec gb{pts[1], pts[0], Direction::Backward, 0};
    return make_trace(Surface::plane(), alpha, beta, pts[1], pts[0], ga, gb);
}

// Constant trace at the left crossing of the half-disc configuration.
inline Trace constant_trace() {
    PLPath alpha = x_axis();
    PLPath beta = circle16();
    auto pts = intersect_curves(alpha, beta);
    BoundaryPathSpec g{pts[0], pts[0], Direction::None, 0};
    return make_trace(Surface::plane(), alpha, beta, pts[0], pts[0], g, g);
}

// Half-disc layout with alpha a CCW rectangle loop whose bottom edge runs
// along the axis, so gamma_alpha can carry extra full loops.
inline Trace rect_half_disc_trace(long long alpha_extra_loops) {
    PLPath alpha = make_loop({point(-2, 0), point(2, 0), point(2, 3), point(-2, 3)});
    PLPath beta = circle16();
    auto pts = intersect_curves(alpha, beta);  // (-1,0) then (1,0) by alpha order? bottom edge runs +x from (-2,0)
    BoundaryPathSpec ga{pts[0], pts[1], Direction::Forward, alpha_extra_loops};
    BoundaryPathSpec gb{pts[0], pts[1], Direction::Backward, 0};
    return make_trace(Surface::plane(), alpha, beta, pts[0], pts[1], ga, gb);
}

}  // namespace fixtures
