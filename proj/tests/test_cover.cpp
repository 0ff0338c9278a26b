#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "maslov/cover.hpp"
#include "maslov/maslov.hpp"
#include "fixtures.hpp"

using namespace maslov;
using namespace fixtures;

namespace {

PLPath wave_alpha() { return make_periodic({point(-1, 0), point(3, 0)}, point(4, 0)); }

PLPath wave_beta() {
    return make_periodic({point(-1, -1), point(1, 1), point(3, -1)}, point(4, 0));
}

const IntersectionPoint& find_at(const std::vector<IntersectionPoint>& pts,
                                 const Point& loc) {
    for (const auto& p : pts)
        if (p.location == loc) return p;
    throw std::runtime_error("crossing not found");
}

// Arc-condition bigon: x = (0,0), y = (2,0), boundary along the axis and the
// upper wave arc.
Trace wave_trace(const Surface& s) {
    PLPath alpha = wave_alpha(), beta = wave_beta();
    auto pts = intersect_curves(alpha, beta);
    const auto& x = find_at(pts, point(0, 0));
    const auto& y = find_at(pts, point(2, 0));
    BoundaryPathSpec ga{x, y, Direction::Forward, 0};
    BoundaryPathSpec gb{x, y, Direction::Forward, 0};
    return make_trace(s, alpha, beta, x, y, ga, gb);
}

// x = y = (0,0) with both boundary paths running once around the quotient.
Trace loop_trace(const Surface& s) {
    PLPath alpha = wave_alpha(), beta = wave_beta();
    auto pts = intersect_curves(alpha, beta);
    const auto& x = find_at(pts, point(0, 0));
    BoundaryPathSpec ga{x, x, Direction::Forward, 1};
    BoundaryPathSpec gb{x, x, Direction::Forward, 1};
    return make_trace(s, alpha, beta, x, x, ga, gb);
}

Surface ann() { return Surface::annulus(point(4, 0)); }
Surface tor() { return Surface::torus(point(4, 0), point(0, 4)); }

}  // namespace

TEST_CASE("lift endpoints") {
    LiftedTrace arc = lift_trace(wave_trace(ann()));
    CHECK(arc.x_lift == point(0, 0));
    CHECK(arc.y_lift == point(2, 0));
    CHECK(arc.deck.generators.size() == 1);

    LiftedTrace loop = lift_trace(wave_trace(ann()).surface == ann()
                                      ? loop_trace(ann())
                                      : loop_trace(ann()));
    CHECK(loop.x_lift == point(0, 0));
    CHECK(loop.y_lift == point(4, 0));  // one full deck translation along alpha

    CHECK_THROWS_AS(lift_trace(half_disc_trace()), UnsupportedSurface);
}

TEST_CASE("quotient index matches the quotient trace formula") {
    for (const Surface& s : {ann(), tor()}) {
        Trace arc = wave_trace(s);
        CHECK(maslov_quotient(arc) == 1);
        CHECK(maslov_via_trace_formula(arc) == 1);
        CHECK(m_value(arc, arc.x) == 1);
        CHECK(m_value(arc, arc.y) == 1);

        Trace loop = loop_trace(s);
        CHECK(maslov_quotient(loop) == 0);
        CHECK(maslov_via_trace_formula(loop) == 0);
    }
}

TEST_CASE("pairing identity holds for every deck translate") {
    for (const Surface& s : {ann(), tor()}) {
        for (const Trace& t : {wave_trace(s), loop_trace(s)}) {
            GmReport r = verify_gm(lift_trace(t));
            CHECK(r.all_pass);
            CHECK(!r.checks.empty());
        }
    }
}

TEST_CASE("x = y lift vanishes away from the loop translation") {
    LiftedTrace lt = lift_trace(loop_trace(ann()));
    Point g0 = point(4, 0);
    CHECK(lifted_m(lt, lt.x_lift) == 1);
    CHECK(lifted_m(lt, lt.x_lift + g0) == -1);  // this is the lifted y
    for (long long k = -3; k <= 3; ++k) {
        if (k == 0 || k == 1) continue;
        CHECK(lifted_m(lt, lt.x_lift + g0 * Rational(k)) == 0);
    }
}

TEST_CASE("quotient w sums the planar two-chain over translates") {
    Trace t = wave_trace(ann());
    LiftedTrace lt = lift_trace(t);
    TwoChainEval qw = degree_two_chain(t);
    CHECK(quotient_w(lt, Point{Rational(1), q(1, 2)}) == 1);
    CHECK(quotient_w(lt, Point{Rational(5), q(1, 2)}) == 1);  // same quotient point
    CHECK(quotient_w(lt, point(1, 3)) == 0);
    for (const Point& z : {Point{Rational(1), q(1, 2)}, Point{Rational(3), q(-1, 2)}, point(1, 3),
                           Point{Rational(-3), q(1, 2)}}) {
        CHECK(quotient_w(lt, z) == qw(z));
    }
    CHECK_THROWS_AS(quotient_w(lt, point(1, 0)), OnCurve);
}

TEST_CASE("translate m-values add up to the quotient m-value") {
    for (const Surface& s : {ann(), tor()}) {
        Trace t = wave_trace(s);
        LiftedTrace lt = lift_trace(t);
        long long total_x = lifted_m(lt, lt.x_lift);
        long long total_y = lifted_m(lt, lt.y_lift);
        for (const auto& v : lt.deck.translates(lt.deck.truncation)) {
            total_x += lifted_m(lt, lt.x_lift + v);
            total_y += lifted_m(lt, lt.y_lift + v);
        }
        CHECK(total_x == m_value(t, t.x));
        CHECK(total_y == m_value(t, t.y));
    }
}

TEST_CASE("truncation is stable") {
    CHECK(truncation_stable(lift_trace(wave_trace(ann()))));
    CHECK(truncation_stable(lift_trace(loop_trace(ann()))));
    CHECK(truncation_stable(lift_trace(wave_trace(tor()))));
}

TEST_CASE("arc and deck translates are compatibly incident") {
    for (const Trace& t : {wave_trace(ann()), loop_trace(ann()), wave_trace(tor())}) {
        for (const auto& c : verify_incidence(lift_trace(t))) CHECK(c.pass);
    }
}

TEST_CASE("fundamental-domain trace equals its planar model") {
    // The same bigon drawn with non-periodic curves in the plane.
    PLPath alpha = x_axis();
    PLPath beta = make_arc({point(-1, -1), point(1, 1), point(3, -1)});
    auto pts = intersect_curves(alpha, beta);
    BoundaryPathSpec ga{pts[0], pts[1], Direction::Forward, 0};
    BoundaryPathSpec gb{pts[0], pts[1], Direction::Forward, 0};
    Trace planar = make_trace(Surface::plane(), alpha, beta, pts[0], pts[1], ga, gb);
    CHECK(maslov_via_trace_formula(planar) == maslov_quotient(wave_trace(ann())));
}
