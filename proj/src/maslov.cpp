#include "maslov/maslov.hpp"

#include "maslov/chains.hpp"
#include "maslov/reduction.hpp"

#include <algorithm>

namespace maslov {

long long maslov_via_trace_formula(const Trace& t) {
    auto lifts = curve_lifts(t);
    TwoChainEval w = degree_two_chain(t);
    long long mx = m_value(t, t.x, lifts, w);
    long long my = m_value(t, t.y, lifts, w);
    if ((mx + my) % 2 != 0)
        throw ParityViolation("m_x + m_y is odd");
    return (mx + my) / 2;
}

void require_normalized(const Trace& t) {
    if (t.surface.tag != SurfaceTag::Plane)
        throw NotNormalized("normalized traces live on the plane");
    if (t.alpha.kind != PathKind::InfiniteLine || t.alpha.direction.y != 0 ||
        t.alpha.direction.x <= 0 || t.alpha.base.y != 0)
        throw NotNormalized("alpha must be the x-axis oriented rightward");
    if (!(t.x.location.x < t.y.location.x))
        throw NotNormalized("endpoints must satisfy x < y on the axis");
}

namespace {

// Directions of the realized boundary path in traversal order.
std::vector<Point> traversal_dirs(const PLPath& curve, const std::vector<Leg>& legs) {
    std::vector<Point> pts;
    for (const auto& leg : legs)
        for (auto& p : points_along(curve, leg.from, leg.to)) {
            if (!pts.empty() && pts.back() == p) continue;
            pts.push_back(std::move(p));
        }
    std::vector<Point> dirs;
    for (size_t i = 0; i + 1 < pts.size(); ++i) dirs.push_back(pts[i + 1] - pts[i]);
    return dirs;
}

struct Sweep {
    Point from;
    Point to;
    int dir;  // +1 ccw, -1 cw
};

// Corner sweeps of a tangent-line path along consecutive directions;
// reversals keep the line class fixed and contribute nothing.
void append_corner_sweeps(const std::vector<Point>& dirs, std::vector<Sweep>& out) {
    for (size_t i = 0; i + 1 < dirs.size(); ++i) {
        Rational c = cross(dirs[i], dirs[i + 1]);
        if (c == 0) continue;
        out.push_back({dirs[i], dirs[i + 1], sgn(c)});
    }
}

long long sweep_degree(const std::vector<Sweep>& sweeps) {
    // Reference class not parallel to any sweep endpoint.
    Point r;
    for (long long k = 0;; ++k) {
        Point cand = (k % 2 == 0) ? Point{Rational(1), Rational(k / 2)}
                                  : Point{Rational(1), Rational(-(k / 2 + 1))};
        bool ok = true;
        for (const auto& s : sweeps)
            if (cross(s.from, cand) == 0 || cross(s.to, cand) == 0) {
                ok = false;
                break;
            }
        if (ok) {
            r = cand;
            break;
        }
    }
    long long total = 0;
    for (const auto& s : sweeps) {
        for (int m = -1; m <= 1; m += 2) {
            Point u = r * Rational(m);
            if (s.dir > 0) {
                if (cross(s.from, u) > 0 && cross(u, s.to) > 0) total += 1;
            } else {
                if (cross(s.from, u) < 0 && cross(u, s.to) < 0) total -= 1;
            }
        }
    }
    return total;
}

}  // namespace

long long maslov_direct(const Trace& t) {
    if (t.surface.is_quotient())
        throw UnsupportedSurface("direct index needs a planar trace; lift first");

    std::vector<Point> adirs = traversal_dirs(t.alpha, t.alpha_legs);
    PLPath bl = beta_lift(t);
    std::vector<Point> bdirs = traversal_dirs(bl, t.beta_legs);

    Point a_first = adirs.empty() ? tangent_at(t.alpha, t.x.location) : adirs.front();
    Point a_last = adirs.empty() ? tangent_at(t.alpha, t.y.location) : adirs.back();
    Point b_first = bdirs.empty() ? tangent_at(bl, t.x.location) : bdirs.front();
    Point b_last = bdirs.empty() ? tangent_at(bl, t.y.location) : bdirs.back();

    std::vector<Sweep> sweeps;
    append_corner_sweeps(adirs, sweeps);

    // Counterclockwise endpoint turn at y from the alpha class to the beta class.
    Rational cy = cross(a_last, b_last);
    if (cy == 0) throw EndpointNotTransverse("tangent classes coincide at y");
    Point b_turn = (cy > 0) ? b_last : -b_last;
    sweeps.push_back({a_last, b_turn, +1});

    // The beta tangent path traversed in reverse.
    std::vector<Point> rdirs;
    for (auto it = bdirs.rbegin(); it != bdirs.rend(); ++it) rdirs.push_back(-*it);
    append_corner_sweeps(rdirs, sweeps);

    // Clockwise turn at x from the beta class back to the alpha class.
    Point b_back = rdirs.empty() ? -b_first : rdirs.back();
    Rational cx = cross(b_back, a_first);
    if (cx == 0) throw EndpointNotTransverse("tangent classes coincide at x");
    Point a_turn = (cx < 0) ? a_first : -a_first;
    sweeps.push_back({b_back, a_turn, -1});

    if (cross(a_turn, a_first) != 0)
        throw NonIntegerDegree("tangent loop failed to close");

    return sweep_degree(sweeps) + 4 * t.sphere_offset;
}

ArcFormulaData arc_formula_data(const Trace& t) {
    require_normalized(t);
    OneChain nu = boundary_one_chain(t);
    ArcCondition ac = arc_condition(t, nu);
    if (!ac.satisfied) throw ArcConditionViolated(ac.reason);

    TwoChainEval w = degree_two_chain(t);
    auto lifts = curve_lifts(t);

    // w just outside the boundary arc near each endpoint: the value above and
    // below the axis agree there since nu vanishes off the arc.
    auto outside_value = [&](const Rational& endpoint_param, bool left_side) -> long long {
        for (const auto& cell : nu.alpha_cells) {
            bool match = left_side ? (!cell.hi_unbounded && cell.hi == endpoint_param)
                                   : (!cell.lo_unbounded && cell.lo == endpoint_param);
            if (!match) continue;
            Point tan = point(1, 0);
            long long up = w_beside(lifts, w, cell.sample_point, tan, +1);
            long long down = w_beside(lifts, w, cell.sample_point, tan, -1);
            if (up != down)
                throw Degenerate("two-chain not single-valued off the boundary arc");
            return up;
        }
        throw Degenerate("no axis cell beside the endpoint");
    };

    ArcFormulaData out;
    out.k_x = outside_value(t.x.alpha_position, true);
    out.k_y = outside_value(t.y.alpha_position, false);

    PLPath bl = beta_lift(t);
    auto bpts = points_along(bl, ac.arc_b.from, ac.arc_b.to);
    if (bpts.size() < 2) throw Degenerate("degenerate boundary arc");
    Point d_first = bpts[1] - bpts[0];
    Point d_last = bpts[bpts.size() - 1] - bpts[bpts.size() - 2];
    out.eps_x = sgn(d_first.y);
    out.eps_y = sgn(d_last.y);
    if (out.eps_x == 0 || out.eps_y == 0)
        throw EndpointNotTransverse("boundary arc tangent to the axis");

    out.mu = 2 * out.k_x + 2 * out.k_y + (out.eps_x - out.eps_y) / 2;
    return out;
}

long long maslov_via_arc_formula(const Trace& t) { return arc_formula_data(t).mu; }

namespace {

CrossingWord conjugate_word(CrossingWord w) {
    for (auto& c : w.crossings) {
        c.sign = -c.sign;
        c.dir = c.dir == Vertical::Up ? Vertical::Down : Vertical::Up;
    }
    return w;
}

CrossingWord drop_first(const CrossingWord& w) {
    CrossingWord out;
    std::vector<int> remap(w.crossings.size(), -1);
    for (size_t i = 0; i < w.crossings.size(); ++i) {
        if (int(i) == w.x_index) continue;
        remap[i] = int(out.crossings.size());
        out.crossings.push_back(w.crossings[i]);
    }
    for (size_t k = 1; k < w.traversal.size(); ++k)
        out.traversal.push_back(remap[w.traversal[k]]);
    out.x_index = out.traversal.front();
    out.y_index = remap[w.y_index];
    return out;
}

long long mu_of_word(const CrossingWord& w, int budget) {
    if (budget <= 0) throw NonTermination("crossing word recursion exceeded its budget");
    if (w.crossings[w.x_index].sign < 0)
        return -mu_of_word(conjugate_word(w), budget - 1);
    if (w.crossings.size() == 2) return 1;

    int nxt = w.traversal[1];
    const Rational& p = w.crossings[nxt].position;
    if (p < w.y_pos()) {
        // The arc from x' to y; the index drops or grows by one depending on
        // which side of x the first crossing lands.
        long long shift = p < w.x_pos() ? -1 : 1;
        return mu_of_word(drop_first(w), budget - 1) + shift;
    }
    // First crossing beyond y: pass to the arc from y to y' traversed
    // backwards, which flips every crossing.
    CrossingWord rest = drop_first(w);
    std::reverse(rest.traversal.begin(), rest.traversal.end());
    rest = conjugate_word(rest);
    rest.x_index = rest.traversal.front();
    rest.y_index = rest.traversal.back();
    return 1 - mu_of_word(rest, budget - 1);
}

}  // namespace

long long maslov_recursive(const Trace& t) {
    CrossingWord w = crossing_profile(t);
    return mu_of_word(w, int(4 * w.crossings.size()) + 8);
}

}  // namespace maslov
