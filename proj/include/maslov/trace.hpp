#pragma once

#include "maslov/geometry.hpp"

#include <string>
#include <vector>

namespace maslov {

enum class SurfaceTag { Plane, Annulus, Torus, SpherePlane };

struct Surface {
    SurfaceTag tag = SurfaceTag::Plane;
    Point period1{};  // Annulus and Torus
    Point period2{};  // Torus only

    bool operator==(const Surface&) const = default;

    static Surface plane() { return {}; }
    static Surface sphere_plane() { return {SurfaceTag::SpherePlane}; }
    static Surface annulus(Point p);
    static Surface torus(Point p1, Point p2);

    bool is_quotient() const {
        return tag == SurfaceTag::Annulus || tag == SurfaceTag::Torus;
    }
    /// Deck translation vectors spanning the group (one or two).
    std::vector<Point> deck_generators() const;
};

enum class Direction { Forward, Backward, None };

/// How a boundary path runs along its carrying curve between the trace
/// endpoints: travel direction plus extra full loops (closed or periodic
/// carriers only; negative means backward loops).
struct BoundaryPathSpec {
    IntersectionPoint start;
    IntersectionPoint end;
    Direction direction = Direction::Forward;
    long long extra_loops = 0;
};

/// Monotone run of curve parameters; `to < from` means reversed traversal.
struct Leg {
    Rational from;
    Rational to;
};

struct Trace {
    Surface surface;
    PLPath alpha;
    PLPath beta;
    IntersectionPoint x;
    IntersectionPoint y;
    BoundaryPathSpec gamma_alpha;
    BoundaryPathSpec gamma_beta;
    long long sphere_offset = 0;

    // Derived at construction.
    std::vector<Leg> alpha_legs;      // realized path of gamma_alpha along alpha
    std::vector<Leg> beta_legs;       // realized path of gamma_beta along beta
    Point beta_shift{};               // lift of beta carrying the boundary path
    std::vector<Point> beta_offsets;  // translates of beta realizing the quotient curve
    std::vector<IntersectionPoint> crossings;  // all crossings, sorted by alpha_position
};

Trace make_trace(const Surface& surface, PLPath alpha, PLPath beta,
                 const IntersectionPoint& x, const IntersectionPoint& y,
                 const BoundaryPathSpec& gamma_alpha, const BoundaryPathSpec& gamma_beta,
                 long long sphere_offset = 0);

/// Endpoint composition: t1 runs x -> y, t2 runs y -> z; the result runs
/// x -> z with boundary paths concatenated and offsets added.
Trace catenate(const Trace& t1, const Trace& t2);

/// Reflection across the x-axis (Plane / SpherePlane only); negates the
/// sphere offset.
Trace conjugate(const Trace& t);

/// Same trace with the sphere offset increased by d (SpherePlane only).
Trace sphere_shift(const Trace& t, long long d);

/// Closed polyline gamma_alpha followed by gamma_beta reversed, in the lift.
std::vector<Point> gamma_loop(const Trace& t);

/// The beta curve lift that carries the boundary path.
PLPath beta_lift(const Trace& t);

/// All curve lifts relevant near the trace (alpha plus each beta offset).
std::vector<PLPath> curve_lifts(const Trace& t);

/// Lattice vectors v (integer combinations of the generators) for which
/// box + v meets the window.
std::vector<Point> lattice_offsets(const std::vector<Point>& generators,
                                   const Box& box, const Box& window);

struct ArcCondition {
    bool satisfied = false;
    std::string reason;      // set when violated
    // Arcs A in alpha and B in beta as oriented parameter runs from x to y.
    Leg arc_a{};
    Leg arc_b{};
    int sign_a = 0;          // +1 iff A's x->y orientation agrees with alpha
    int sign_b = 0;
};

ArcCondition arc_condition(const Trace& t);

/// Sum of the four two-chain values in the quadrants around the crossing z.
long long m_value(const Trace& t, const IntersectionPoint& z);

}  // namespace maslov
