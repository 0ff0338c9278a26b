#include "maslov/chains.hpp"

#include <algorithm>

namespace maslov {

namespace {

Integer floor_div(const Integer& num, const Integer& den) {
    Integer q = num / den;
    if ((num % den) != 0 && ((num < 0) != (den < 0))) --q;
    return q;
}

Integer floor_ratio(const Rational& t, const Rational& L) {
    Rational q = t / L;
    return floor_div(numerator(q), denominator(q));
}

Rational mod_positive(const Rational& t, const Rational& L) {
    return t - Rational(floor_ratio(t, L)) * L;
}

}  // namespace

bool probe_clear(const std::vector<PLPath>& lifts, const Point& z, const Point& p) {
    Box w{min_r(z.x, p.x), max_r(z.x, p.x), min_r(z.y, p.y), max_r(z.y, p.y)};
    w.pad(1);
    for (const auto& c : lifts) {
        for (const auto& s : segments_in_window(c, w)) {
            if (point_on_segment(s.a, s.b, z)) {
                if (cross(s.dir(), p - z) == 0) return false;
                continue;
            }
            if (segment_cross(z, p, s.a, s.b) != SegCross::None) return false;
        }
    }
    return true;
}

namespace {

Point unit_l1(const Point& v) { return v * (Rational(1) / l1(v)); }

// Crossing locations plus their nearby deck translates; used as extra feature
// points when picking sampling radii.
std::vector<Point> crossing_feature_points(const Trace& t) {
    std::vector<Point> pts;
    std::vector<Point> shifts = {Point{}};
    auto gens = t.surface.deck_generators();
    if (gens.size() >= 1) {
        shifts.push_back(gens[0]);
        shifts.push_back(-gens[0]);
    }
    if (gens.size() == 2) {
        shifts.push_back(gens[1]);
        shifts.push_back(-gens[1]);
        shifts.push_back(gens[0] + gens[1]);
        shifts.push_back(-(gens[0] + gens[1]));
        shifts.push_back(gens[0] - gens[1]);
        shifts.push_back(gens[1] - gens[0]);
    }
    for (const auto& ip : t.crossings)
        for (const auto& v : shifts) pts.push_back(ip.location + v);
    return pts;
}

}  // namespace

long long TwoChainEval::operator()(const Point& z) const {
    if (loop.size() < 2) return offset;
    if (!surface.is_quotient()) return winding_number(loop, z) + offset;
    Box w = loop_box;
    w.pad(1);
    Box zbox{z.x, z.x, z.y, z.y};
    long long total = offset;
    for (const auto& v : lattice_offsets(surface.deck_generators(), zbox, w))
        total += winding_number(loop, z + v);
    return total;
}

TwoChainEval degree_two_chain(const Trace& t) {
    TwoChainEval w;
    w.loop = gamma_loop(t);
    w.surface = t.surface;
    w.offset = t.sphere_offset;
    w.loop_box = box_of(w.loop);
    return w;
}

namespace {

// Signed number of passes of the legs over sample parameter s (mod M when
// the carrier is cyclic).
long long passes_over(const std::vector<Leg>& legs, const Rational& s, const Rational& M) {
    long long total = 0;
    for (const auto& leg : legs) {
        if (leg.from == leg.to) continue;
        Rational f = leg.from, g = leg.to;
        int sign = 1;
        if (g < f) {
            std::swap(f, g);
            sign = -1;
        }
        if (M > 0) {
            Integer n = floor_ratio(g - s, M) - floor_ratio(f - s, M);
            total += sign * n.convert_to<long long>();
        } else if (f < s && s < g) {
            total += sign;
        }
    }
    return total;
}

// Parameter strictly inside (lo, hi) avoiding curve vertices, so the sample
// point lies in a segment interior.
Rational interior_sample(const PLPath& curve, const std::vector<Rational>& base_params,
                         const Rational& lo, const Rational& hi,
                         bool lo_unbounded, bool hi_unbounded) {
    if (lo_unbounded && hi_unbounded) return 0;
    if (lo_unbounded) return hi - 1;
    if (hi_unbounded) return lo + 1;
    std::vector<Rational> cuts = {lo};
    if (curve.kind != PathKind::InfiniteLine) {
        if (curve.is_closed_or_periodic()) {
            const Rational& L = base_params.back();
            Integer kmin = floor_ratio(lo, L) - 1;
            Integer kmax = floor_ratio(hi, L) + 1;
            for (Integer k = kmin; k <= kmax; ++k)
                for (const auto& p : base_params) {
                    Rational v = p + Rational(k) * L;
                    if (lo < v && v < hi) cuts.push_back(v);
                }
        } else {
            for (const auto& p : base_params)
                if (lo < p && p < hi) cuts.push_back(p);
        }
        std::sort(cuts.begin(), cuts.end());
        cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    }
    cuts.push_back(hi);
    return (cuts[0] + cuts[1]) / 2;
}

std::vector<Cell> build_cells(const PLPath& curve, std::vector<Rational> params,
                              const Rational& modulus, const std::vector<Leg>& legs,
                              bool negate) {
    std::sort(params.begin(), params.end());
    params.erase(std::unique(params.begin(), params.end()), params.end());
    std::vector<Cell> cells;
    std::vector<Rational> base_params = vertex_params(curve);
    auto push = [&](Rational lo, Rational hi, bool lo_unb, bool hi_unb) {
        Cell c;
        c.lo = lo;
        c.hi = hi;
        c.lo_unbounded = lo_unb;
        c.hi_unbounded = hi_unb;
        c.sample_param = interior_sample(curve, base_params, lo, hi, lo_unb, hi_unb);
        c.sample_point = point_at(curve, base_params, c.sample_param);
        c.value = passes_over(legs, c.sample_param, modulus);
        if (negate) c.value = -c.value;
        cells.push_back(std::move(c));
    };
    if (modulus > 0) {
        size_t n = params.size();
        for (size_t i = 0; i < n; ++i) {
            Rational lo = params[i];
            Rational hi = (i + 1 < n) ? params[i + 1] : params[0] + modulus;
            if (lo == hi) continue;
            push(lo, hi, false, false);
        }
        if (n == 0) push(0, modulus, false, false);
    } else if (curve.kind == PathKind::InfiniteLine) {
        if (params.empty()) {
            push(0, 0, true, true);
        } else {
            push(params.front(), params.front(), true, false);
            for (size_t i = 0; i + 1 < params.size(); ++i)
                push(params[i], params[i + 1], false, false);
            push(params.back(), params.back(), false, true);
        }
    } else {
        // Open arc: cells bounded by the arc ends.
        Rational len = curve_length(curve);
        std::vector<Rational> cuts = {0};
        for (const auto& p : params)
            if (p > 0 && p < len) cuts.push_back(p);
        cuts.push_back(len);
        for (size_t i = 0; i + 1 < cuts.size(); ++i)
            if (cuts[i] != cuts[i + 1]) push(cuts[i], cuts[i + 1], false, false);
    }
    return cells;
}

const Cell* find_cell(const std::vector<Cell>& cells, const Rational& modulus,
                      const Rational& t) {
    for (const auto& c : cells) {
        if (c.lo_unbounded && c.hi_unbounded) return &c;
        if (c.lo_unbounded) {
            if (t < c.hi) return &c;
            continue;
        }
        if (c.hi_unbounded) {
            if (t > c.lo) return &c;
            continue;
        }
        if (modulus > 0) {
            Rational r = c.lo + mod_positive(t - c.lo, modulus);
            if (c.lo < r && r < c.hi) return &c;
            if (r == c.lo || r == c.hi) return nullptr;  // on a crossing
        } else {
            if (c.lo < t && t < c.hi) return &c;
            if (t == c.lo || t == c.hi) return nullptr;
        }
    }
    return nullptr;
}

long long cell_value_or_throw(const std::vector<Cell>& cells, const Rational& modulus,
                              const Rational& t) {
    const Cell* c = find_cell(cells, modulus, t);
    if (!c) throw Degenerate("parameter lies on a cell boundary");
    return c->value;
}

}  // namespace

long long OneChain::min_abs_alpha() const {
    long long m = -1;
    for (const auto& c : alpha_cells) {
        long long v = c.value < 0 ? -c.value : c.value;
        if (m < 0 || v < m) m = v;
    }
    return m < 0 ? 0 : m;
}

long long OneChain::min_abs_beta() const {
    long long m = -1;
    for (const auto& c : beta_cells) {
        long long v = c.value < 0 ? -c.value : c.value;
        if (m < 0 || v < m) m = v;
    }
    return m < 0 ? 0 : m;
}

long long OneChain::alpha_value(const Rational& t) const {
    return cell_value_or_throw(alpha_cells, alpha_modulus, t);
}

long long OneChain::beta_value(const Rational& t) const {
    return cell_value_or_throw(beta_cells, beta_modulus, t);
}

OneChain boundary_one_chain(const Trace& t) {
    OneChain nu;
    nu.alpha = t.alpha;
    nu.beta = beta_lift(t);
    nu.beta_offsets = t.beta_offsets;
    nu.alpha_modulus = t.alpha.is_closed_or_periodic() ? curve_length(t.alpha) : Rational(0);
    nu.beta_modulus = t.beta.is_closed_or_periodic() ? curve_length(t.beta) : Rational(0);

    std::vector<Rational> aps, bps;
    for (const auto& ip : t.crossings) {
        aps.push_back(ip.alpha_position);
        Rational bp = ip.beta_position;
        if (nu.beta_modulus > 0) bp = mod_positive(bp, nu.beta_modulus);
        bps.push_back(bp);
    }
    {
        auto check = bps;
        std::sort(check.begin(), check.end());
        if (std::adjacent_find(check.begin(), check.end()) != check.end())
            throw NonTransverse("two crossings at one quotient point of beta");
    }
    nu.alpha_cells = build_cells(t.alpha, aps, nu.alpha_modulus, t.alpha_legs, false);
    nu.beta_cells = build_cells(nu.beta, bps, nu.beta_modulus, t.beta_legs, true);
    return nu;
}

BoundaryReport verify_boundary(const Trace& t) {
    return verify_boundary(t, boundary_one_chain(t));
}

BoundaryReport verify_boundary(const Trace& t, const OneChain& nu) {
    BoundaryReport report;
    TwoChainEval w = degree_two_chain(t);
    auto lifts = curve_lifts(t);
    std::vector<const PLPath*> lift_ptrs;
    for (const auto& c : lifts) lift_ptrs.push_back(&c);
    auto features = crossing_feature_points(t);

    auto check_cell = [&](const Cell& cell, const PLPath& carrier, bool on_alpha) {
        BoundaryCellCheck cc;
        cc.on_alpha = on_alpha;
        cc.sample_param = cell.sample_param;
        cc.sample_point = cell.sample_point;
        cc.expected = cell.value;
        Point d = tangent_at(carrier, cell.sample_point);
        Point n = unit_l1({-d.y, d.x});  // leftward normal
        Rational eps = min_feature_distance(cell.sample_point, lift_ptrs, features) / 2;
        for (int iter = 0; iter < 64; ++iter) {
            Point left = cell.sample_point + n * eps;
            Point right = cell.sample_point - n * eps;
            if (probe_clear(lifts, cell.sample_point, left) &&
                probe_clear(lifts, cell.sample_point, right)) {
                cc.observed = w(left) - w(right);
                cc.pass = (cc.observed == cc.expected);
                report.cells.push_back(cc);
                if (!cc.pass) report.all_pass = false;
                return;
            }
            eps /= 2;
        }
        throw Degenerate("verify_boundary: could not establish sampling radius");
    };

    PLPath bl = beta_lift(t);
    for (const auto& cell : nu.alpha_cells) check_cell(cell, t.alpha, true);
    for (const auto& cell : nu.beta_cells) check_cell(cell, bl, false);
    return report;
}

ReconstructedW reconstruct_w_from_nu(OneChain nu, Point base, long long base_value) {
    ReconstructedW r;
    r.nu = std::move(nu);
    r.base = std::move(base);
    r.base_value = base_value;
    std::vector<PLPath> lifts = {r.nu.alpha};
    for (const auto& v : r.nu.beta_offsets) lifts.push_back(translated(r.nu.beta, v));
    for (const auto& c : lifts)
        if (point_on_path(c, r.base))
            throw OnCurve("reconstruction anchor lies on a curve");
    return r;
}

long long ReconstructedW::operator()(const Point& z) const {
    std::vector<PLPath> alpha_lifts = {nu.alpha};
    std::vector<PLPath> beta_lifts;
    for (const auto& v : nu.beta_offsets) beta_lifts.push_back(translated(nu.beta, v));

    // Signed nu-crossing total along a polyline, or no value when the path
    // hits a vertex, a crossing point, or runs along a curve.
    auto walk = [&](const std::vector<Point>& path) -> std::optional<long long> {
        long long total = base_value;
        for (size_t i = 0; i + 1 < path.size(); ++i) {
            const Point& p = path[i];
            const Point& q = path[i + 1];
            if (p == q) continue;
            Box w{min_r(p.x, q.x), max_r(p.x, q.x), min_r(p.y, q.y), max_r(p.y, q.y)};
            w.pad(1);
            auto accumulate = [&](const std::vector<PLPath>& curves,
                                  bool on_alpha) -> bool {
                for (const auto& c : curves) {
                    for (const auto& s : segments_in_window(c, w)) {
                        SegCross sc = segment_cross(p, q, s.a, s.b);
                        if (sc == SegCross::Touch) return false;
                        if (sc != SegCross::Proper) continue;
                        Point hit = line_intersection(p, q, s.a, s.b);
                        Rational param = s.param_of(hit);
                        long long value;
                        try {
                            value = on_alpha ? nu.alpha_value(param) : nu.beta_value(param);
                        } catch (const Degenerate&) {
                            return false;  // crossed exactly at a cell boundary
                        }
                        int toward_left = sgn(cross(s.dir(), q - p));
                        total += toward_left * value;
                    }
                }
                return true;
            };
            if (!accumulate(alpha_lifts, true)) return std::nullopt;
            if (!accumulate(beta_lifts, false)) return std::nullopt;
        }
        return total;
    };

    // Try the straight path plus perturbed detours; require two agreeing
    // successful evaluations as a path-independence witness.
    Point delta = z - base;
    Point perp{-delta.y, delta.x};
    if (perp == Point{}) perp = point(0, 1);
    Point mid = (base + z) * Rational(1, 2);
    std::vector<std::vector<Point>> candidates;
    candidates.push_back({base, z});
    const long long nums[] = {1, -1, 2, -2, 1, -1, 3, -3, 1, -1};
    const long long dens[] = {3, 3, 5, 5, 7, 7, 4, 4, 11, 11};
    for (int i = 0; i < 10; ++i)
        candidates.push_back({base, mid + perp * Rational(nums[i], dens[i]), z});

    std::vector<long long> results;
    for (const auto& path : candidates) {
        auto v = walk(path);
        if (!v) continue;
        results.push_back(*v);
        if (results.size() == 2) break;
    }
    if (results.size() < 2)
        throw PathDegenerate("no two crossing-transverse paths found");
    if (results[0] != results[1])
        throw PathDegenerate("reconstruction is path-dependent");
    return results[0];
}

long long w_beside(const Trace& t, const TwoChainEval& w, const Point& z,
                   const Point& tangent, int side) {
    return w_beside(curve_lifts(t), w, z, tangent, side);
}

long long w_beside(const std::vector<PLPath>& lifts, const TwoChainEval& w,
                   const Point& z, const Point& tangent, int side) {
    Point n = unit_l1({-tangent.y, tangent.x}) * Rational(side);
    // probe_clear certifies p shares a face with points just off z, so any
    // dyadic starting radius is sound; halve until the probe lands clear.
    Rational eps(1, 4);
    for (int iter = 0; iter < 64; ++iter) {
        Point p = z + n * eps;
        if (probe_clear(lifts, z, p)) return w(p);
        eps /= 2;
    }
    throw Degenerate("w_beside: could not establish sampling radius");
}

ArcCondition arc_condition(const Trace& t) {
    if (t.x.location == t.y.location) {
        ArcCondition out;
        out.reason = "x = y";
        return out;
    }
    return arc_condition(t, boundary_one_chain(t));
}

ArcCondition arc_condition(const Trace& t, const OneChain& nu) {
    ArcCondition out;
    if (t.x.location == t.y.location) {
        out.reason = "x = y";
        return out;
    }
    if (nu.min_abs_alpha() != 0) {
        out.reason = "min|nu_alpha| >= 1";
        return out;
    }
    if (nu.min_abs_beta() != 0) {
        out.reason = "min|nu_beta| >= 1";
        return out;
    }

    // The nonzero cells of each chain must all carry the same value +-1 and
    // form one contiguous run whose endpoints are x and y.
    auto extract_arc = [](const std::vector<Cell>& cells, const Rational& modulus,
                          const Rational& px, const Rational& py, Leg& arc,
                          int& sign) -> std::string {
        std::vector<size_t> nz;
        for (size_t i = 0; i < cells.size(); ++i)
            if (cells[i].value != 0) nz.push_back(i);
        if (nz.empty()) return "boundary arc is empty";
        long long v = cells[nz[0]].value;
        if (v != 1 && v != -1) return "|nu| > 1 on a cell";
        for (size_t i : nz)
            if (cells[i].value != v) return "|nu| > 1 or mixed signs on the arc";
        // Contiguity: consecutive nonzero cells must share a boundary.
        std::vector<size_t> run = nz;
        if (modulus > 0) {
            // Rotate so the run does not wrap inside the nz list.
            size_t n = cells.size();
            if (nz.size() < n) {
                size_t start = 0;
                for (size_t k = 0; k < nz.size(); ++k) {
                    size_t prev = (nz[k] + n - 1) % n;
                    if (cells[prev].value == 0) {
                        start = k;
                        break;
                    }
                }
                std::rotate(run.begin(), run.begin() + start, run.end());
            }
            for (size_t k = 0; k + 1 < run.size(); ++k)
                if ((run[k] + 1) % n != run[k + 1]) return "boundary arc is disconnected";
        } else {
            for (size_t k = 0; k + 1 < run.size(); ++k)
                if (run[k] + 1 != run[k + 1]) return "boundary arc is disconnected";
        }
        Rational lo = cells[run.front()].lo;
        Rational hi = cells[run.back()].hi;
        // Endpoints must be x and y (mod the cyclic parameter).
        auto same = [&](const Rational& a, const Rational& b) {
            if (modulus > 0) return mod_positive(a - b, modulus) == 0;
            return a == b;
        };
        bool direct = same(lo, px) && same(hi, py);
        bool reversed = same(lo, py) && same(hi, px);
        if (!direct && !reversed) return "boundary arc does not join x and y";
        if (direct) {
            arc = {lo, hi};
        } else {
            arc = {hi, lo};
        }
        sign = static_cast<int>(v);
        return "";
    };

    Rational bx = t.x.beta_position, by = t.y.beta_position;
    if (nu.beta_modulus > 0) {
        bx = mod_positive(bx, nu.beta_modulus);
        by = mod_positive(by, nu.beta_modulus);
    }
    std::string err = extract_arc(nu.alpha_cells, nu.alpha_modulus, t.x.alpha_position,
                                  t.y.alpha_position, out.arc_a, out.sign_a);
    if (err.empty())
        err = extract_arc(nu.beta_cells, nu.beta_modulus, bx, by, out.arc_b, out.sign_b);
    if (!err.empty()) {
        out.reason = err;
        return out;
    }
    // Stored beta values are the negated traversal degree; flip to report
    // orientation agreement of B with beta.
    out.sign_b = -out.sign_b;
    out.satisfied = true;
    return out;
}

long long m_value(const Trace& t, const IntersectionPoint& z) {
    return m_value(t, z, curve_lifts(t), degree_two_chain(t));
}

long long m_value(const Trace& t, const IntersectionPoint& z,
                  const std::vector<PLPath>& lifts, const TwoChainEval& w) {
    const IntersectionPoint* found = nullptr;
    for (const auto& ip : t.crossings)
        if (ip.location == z.location) {
            found = &ip;
            break;
        }
    if (!found) throw EndpointNotIntersection("m_value: point is not a crossing");

    Point a = unit_l1(tangent_at(t.alpha, found->location));
    Point b;
    {
        bool got = false;
        for (size_t i = 1; i < lifts.size(); ++i) {
            try {
                b = unit_l1(tangent_at(lifts[i], found->location));
                got = true;
                break;
            } catch (const Degenerate&) {
            }
        }
        if (!got) throw Degenerate("m_value: crossing not on any beta lift");
    }
    // As in w_beside, probe_clear makes any dyadic radius sound; collect all
    // four clear quadrant probes before paying for the winding evaluations.
    Rational eps(1, 2);
    for (int iter = 0; iter < 64; ++iter) {
        Point probes[4];
        int k = 0;
        bool ok = true;
        for (int sa = -1; sa <= 1 && ok; sa += 2)
            for (int sb = -1; sb <= 1 && ok; sb += 2) {
                Point p = found->location +
                          (a * Rational(sa) + b * Rational(sb)) * (eps / 4);
                if (!probe_clear(lifts, found->location, p)) {
                    ok = false;
                    break;
                }
                probes[k++] = p;
            }
        if (ok) {
            long long total = 0;
            for (const auto& p : probes) total += w(p);
            return total;
        }
        eps /= 2;
    }
    throw Degenerate("m_value: could not establish sampling radius");
}

}  // namespace maslov
