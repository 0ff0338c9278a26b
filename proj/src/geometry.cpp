#include "maslov/geometry.hpp"

#include <algorithm>

namespace maslov {

int orient2d(const Point& a, const Point& b, const Point& c) {
    // Sign of cross(b - a, c - a), computed on cross-multiplied integers so
    // no intermediate rational normalization (gcd) happens.
    const Integer axn = numerator(a.x), axd = denominator(a.x);
    const Integer ayn = numerator(a.y), ayd = denominator(a.y);
    const Integer bxn = numerator(b.x), bxd = denominator(b.x);
    const Integer byn = numerator(b.y), byd = denominator(b.y);
    const Integer cxn = numerator(c.x), cxd = denominator(c.x);
    const Integer cyn = numerator(c.y), cyd = denominator(c.y);
    Integer uxn = bxn * axd - axn * bxd;
    Integer uyn = byn * ayd - ayn * byd;
    Integer vxn = cxn * axd - axn * cxd;
    Integer vyn = cyn * ayd - ayn * cyd;
    // All denominators are positive; after dropping the shared axd * ayd
    // factor the sign is that of the cross-multiplied numerators.
    Integer det = uxn * vyn * (byd * cxd) - uyn * vxn * (bxd * cyd);
    return det.sign();
}

void Box::expand(const Point& p) {
    xmin = min_r(xmin, p.x);
    xmax = max_r(xmax, p.x);
    ymin = min_r(ymin, p.y);
    ymax = max_r(ymax, p.y);
}

void Box::expand(const Box& b) {
    xmin = min_r(xmin, b.xmin);
    xmax = max_r(xmax, b.xmax);
    ymin = min_r(ymin, b.ymin);
    ymax = max_r(ymax, b.ymax);
}

void Box::pad(const Rational& margin) {
    xmin -= margin;
    xmax += margin;
    ymin -= margin;
    ymax += margin;
}

bool Box::contains(const Point& p) const {
    return xmin <= p.x && p.x <= xmax && ymin <= p.y && p.y <= ymax;
}

bool Box::intersects(const Box& b) const {
    return xmin <= b.xmax && b.xmin <= xmax && ymin <= b.ymax && b.ymin <= ymax;
}

Box box_of(const std::vector<Point>& pts) {
    if (pts.empty()) throw Degenerate("box_of: empty point list");
    Box b{pts[0].x, pts[0].x, pts[0].y, pts[0].y};
    for (const auto& p : pts) b.expand(p);
    return b;
}

namespace {

Integer floor_div(const Integer& num, const Integer& den) {
    Integer q = num / den;
    if ((num % den) != 0 && ((num < 0) != (den < 0))) --q;
    return q;
}

long long floor_r(const Rational& q) {
    Integer f = floor_div(numerator(q), denominator(q));
    return f.convert_to<long long>();
}

}  // namespace

void PLPath::validate_structure() const {
    switch (kind) {
        case PathKind::InfiniteLine:
            if (direction == Point{}) throw Degenerate("infinite line with zero direction");
            return;
        case PathKind::OpenArc:
            if (vertices.size() < 2) throw Degenerate("open arc needs >= 2 vertices");
            break;
        case PathKind::ClosedLoop:
            if (vertices.size() < 3) throw Degenerate("closed loop needs >= 3 vertices");
            if (vertices.front() == vertices.back())
                throw Degenerate("closed loop must not repeat the first vertex");
            break;
        case PathKind::PeriodicLift:
            if (vertices.size() < 2) throw Degenerate("periodic lift needs >= 2 vertices");
            if (period == Point{}) throw Degenerate("periodic lift with zero period");
            if (!(vertices.back() == vertices.front() + period))
                throw Degenerate("periodic lift chain does not tile: last != first + period");
            break;
    }
    for (size_t i = 0; i + 1 < vertices.size(); ++i)
        if (vertices[i] == vertices[i + 1])
            throw Degenerate("repeated consecutive vertex");
}

PLPath make_loop(std::vector<Point> vertices) {
    PLPath p;
    p.kind = PathKind::ClosedLoop;
    p.vertices = std::move(vertices);
    p.validate_structure();
    return p;
}

PLPath make_arc(std::vector<Point> vertices) {
    PLPath p;
    p.kind = PathKind::OpenArc;
    p.vertices = std::move(vertices);
    p.validate_structure();
    return p;
}

PLPath make_line(Point base, Point direction) {
    PLPath p;
    p.kind = PathKind::InfiniteLine;
    p.base = base;
    p.direction = direction;
    p.validate_structure();
    return p;
}

PLPath make_periodic(std::vector<Point> fundamental, Point period) {
    PLPath p;
    p.kind = PathKind::PeriodicLift;
    p.vertices = std::move(fundamental);
    p.period = period;
    p.validate_structure();
    return p;
}

Rational curve_length(const PLPath& path) {
    switch (path.kind) {
        case PathKind::InfiniteLine:
            return l1(path.direction);
        case PathKind::ClosedLoop: {
            Rational total = 0;
            size_t n = path.vertices.size();
            for (size_t i = 0; i < n; ++i)
                total += l1(path.vertices[(i + 1) % n] - path.vertices[i]);
            return total;
        }
        default: {
            Rational total = 0;
            for (size_t i = 0; i + 1 < path.vertices.size(); ++i)
                total += l1(path.vertices[i + 1] - path.vertices[i]);
            return total;
        }
    }
}

std::vector<Segment> segments(const PLPath& path) {
    std::vector<Segment> out;
    switch (path.kind) {
        case PathKind::InfiniteLine:
        case PathKind::PeriodicLift:
            throw Degenerate("segments(): infinite path, use segments_in_window");
        case PathKind::ClosedLoop: {
            size_t n = path.vertices.size();
            Rational param = 0;
            for (size_t i = 0; i < n; ++i) {
                const Point& a = path.vertices[i];
                const Point& b = path.vertices[(i + 1) % n];
                out.push_back({a, b, param});
                param += l1(b - a);
            }
            break;
        }
        case PathKind::OpenArc: {
            Rational param = 0;
            for (size_t i = 0; i + 1 < path.vertices.size(); ++i) {
                const Point& a = path.vertices[i];
                const Point& b = path.vertices[i + 1];
                out.push_back({a, b, param});
                param += l1(b - a);
            }
            break;
        }
    }
    return out;
}

std::vector<Segment> segments_in_window(const PLPath& path, const Box& window) {
    switch (path.kind) {
        case PathKind::ClosedLoop:
        case PathKind::OpenArc:
            return segments(path);
        case PathKind::InfiniteLine: {
            // Parameter span covering the window, padded by one unit.
            Rational tmin = 0, tmax = 0;
            bool seeded = false;
            auto consider = [&](const Rational& t) {
                if (!seeded) { tmin = tmax = t; seeded = true; return; }
                tmin = min_r(tmin, t);
                tmax = max_r(tmax, t);
            };
            if (path.direction.x != 0) {
                consider((window.xmin - path.base.x) / path.direction.x);
                consider((window.xmax - path.base.x) / path.direction.x);
            }
            if (path.direction.y != 0) {
                consider((window.ymin - path.base.y) / path.direction.y);
                consider((window.ymax - path.base.y) / path.direction.y);
            }
            tmin -= 1;
            tmax += 1;
            Point a = path.base + path.direction * tmin;
            Point b = path.base + path.direction * tmax;
            return {{a, b, tmin * l1(path.direction)}};
        }
        case PathKind::PeriodicLift: {
            Box chain_box = box_of(path.vertices);
            Rational len = curve_length(path);
            // Translate index range along the dominant period component.
            long long kmin, kmax;
            if (path.period.x != 0) {
                Rational lo = (window.xmin - chain_box.xmax) / path.period.x;
                Rational hi = (window.xmax - chain_box.xmin) / path.period.x;
                if (path.period.x < 0) std::swap(lo, hi);
                kmin = floor_r(lo) - 1;
                kmax = floor_r(hi) + 1;
            } else {
                Rational lo = (window.ymin - chain_box.ymax) / path.period.y;
                Rational hi = (window.ymax - chain_box.ymin) / path.period.y;
                if (path.period.y < 0) std::swap(lo, hi);
                kmin = floor_r(lo) - 1;
                kmax = floor_r(hi) + 1;
            }
            std::vector<Segment> out;
            for (long long k = kmin; k <= kmax; ++k) {
                Point shift = path.period * Rational(k);
                Box tbox = chain_box;
                tbox.xmin += shift.x; tbox.xmax += shift.x;
                tbox.ymin += shift.y; tbox.ymax += shift.y;
                if (!tbox.intersects(window)) continue;
                Rational param = Rational(k) * len;
                for (size_t i = 0; i + 1 < path.vertices.size(); ++i) {
                    Point a = path.vertices[i] + shift;
                    Point b = path.vertices[i + 1] + shift;
                    out.push_back({a, b, param});
                    param += l1(b - a);
                }
            }
            return out;
        }
    }
    throw Degenerate("unreachable path kind");
}

bool point_on_segment(const Point& a, const Point& b, const Point& p) {
    // Cheap bounding-box reject before the collinearity test.
    if (p.x < min_r(a.x, b.x) || max_r(a.x, b.x) < p.x ||
        p.y < min_r(a.y, b.y) || max_r(a.y, b.y) < p.y)
        return false;
    return orient2d(a, b, p) == 0;
}

bool point_on_path(const PLPath& path, const Point& p) {
    Box w{p.x, p.x, p.y, p.y};
    w.pad(1);
    for (const auto& s : segments_in_window(path, w))
        if (point_on_segment(s.a, s.b, p)) return true;
    return false;
}

Rational param_of_point(const PLPath& path, const Point& p) {
    Box w{p.x, p.x, p.y, p.y};
    w.pad(1);
    for (const auto& s : segments_in_window(path, w))
        if (point_on_segment(s.a, s.b, p)) return s.param_of(p);
    throw Degenerate("param_of_point: point not on curve");
}

namespace {

Integer floor_ratio(const Rational& t, const Rational& L) {
    Rational q = t / L;
    return floor_div(numerator(q), denominator(q));
}

}  // namespace

std::vector<Rational> vertex_params(const PLPath& path) {
    if (path.kind == PathKind::InfiniteLine) return {};
    std::vector<Rational> params;
    Rational param = 0;
    size_t n = path.vertices.size();
    size_t chain = (path.kind == PathKind::ClosedLoop) ? n : n - 1;
    params.push_back(0);
    for (size_t i = 0; i < chain; ++i) {
        param += l1(path.vertices[(i + 1) % n] - path.vertices[i]);
        params.push_back(param);
    }
    return params;
}

Point point_at(const PLPath& path, const std::vector<Rational>& params,
               const Rational& t) {
    if (path.kind == PathKind::InfiniteLine)
        return path.base + path.direction * (t / l1(path.direction));
    Rational r = t;
    Point shift{};
    if (path.is_closed_or_periodic()) {
        const Rational& L = params.back();
        Integer k = floor_ratio(t, L);
        r = t - Rational(k) * L;
        if (path.kind == PathKind::PeriodicLift) shift = path.period * Rational(k);
    } else if (t < 0 || params.back() < t) {
        throw Degenerate("point_at: parameter outside curve");
    }
    size_t i = std::upper_bound(params.begin(), params.end(), r) - params.begin();
    if (i > 0) --i;
    if (i + 1 >= params.size()) i = params.size() - 2;
    size_t n = path.vertices.size();
    Point a = path.vertices[i % n];
    Point d = path.vertices[(i + 1) % n] - a;
    return a + shift + d * ((r - params[i]) / (params[i + 1] - params[i]));
}

Point point_at(const PLPath& path, const Rational& t) {
    return point_at(path, vertex_params(path), t);
}

std::vector<Point> points_along(const PLPath& path, const Rational& a, const Rational& b) {
    if (a == b) return {point_at(path, a)};
    Rational lo = min_r(a, b), hi = max_r(a, b);
    std::vector<Rational> interior;
    std::vector<Rational> base_params = vertex_params(path);
    if (path.kind != PathKind::InfiniteLine) {
        if (path.is_closed_or_periodic()) {
            const Rational& L = base_params.back();
            Integer kmin = floor_ratio(lo, L) - 1;
            Integer kmax = floor_ratio(hi, L) + 1;
            for (Integer k = kmin; k <= kmax; ++k)
                for (const auto& p : base_params) {
                    Rational t = p + Rational(k) * L;
                    if (lo < t && t < hi) interior.push_back(t);
                }
        } else {
            for (const auto& p : base_params)
                if (lo < p && p < hi) interior.push_back(p);
        }
        std::sort(interior.begin(), interior.end());
        interior.erase(std::unique(interior.begin(), interior.end()), interior.end());
        if (a > b) std::reverse(interior.begin(), interior.end());
    }
    std::vector<Point> out;
    out.push_back(point_at(path, base_params, a));
    for (const auto& t : interior) out.push_back(point_at(path, base_params, t));
    out.push_back(point_at(path, base_params, b));
    return out;
}

PLPath translated(const PLPath& path, const Point& v) {
    PLPath out = path;
    for (auto& p : out.vertices) p = p + v;
    out.base = out.base + v;
    return out;
}

Point tangent_at(const PLPath& path, const Point& p) {
    Box w{p.x, p.x, p.y, p.y};
    w.pad(1);
    for (const auto& s : segments_in_window(path, w))
        if (point_on_segment(s.a, s.b, p)) return s.dir();
    throw Degenerate("tangent_at: point not on curve");
}

SegCross segment_cross(const Point& p1, const Point& p2,
                       const Point& q1, const Point& q2) {
    int d1 = orient2d(q1, q2, p1);
    int d2 = orient2d(q1, q2, p2);
    int d3 = orient2d(p1, p2, q1);
    int d4 = orient2d(p1, p2, q2);
    if (d1 * d2 < 0 && d3 * d4 < 0) return SegCross::Proper;
    if (d1 == 0 && d2 == 0) {
        // Collinear: touch iff the 1D spans overlap.
        bool overlap =
            min_r(p1.x, p2.x) <= max_r(q1.x, q2.x) && min_r(q1.x, q2.x) <= max_r(p1.x, p2.x) &&
            min_r(p1.y, p2.y) <= max_r(q1.y, q2.y) && min_r(q1.y, q2.y) <= max_r(p1.y, p2.y);
        return overlap ? SegCross::Touch : SegCross::None;
    }
    if (d1 == 0 && point_on_segment(q1, q2, p1)) return SegCross::Touch;
    if (d2 == 0 && point_on_segment(q1, q2, p2)) return SegCross::Touch;
    if (d3 == 0 && point_on_segment(p1, p2, q1)) return SegCross::Touch;
    if (d4 == 0 && point_on_segment(p1, p2, q2)) return SegCross::Touch;
    return SegCross::None;
}

Point line_intersection(const Point& p1, const Point& p2,
                        const Point& q1, const Point& q2) {
    Point dp = p2 - p1;
    Point dq = q2 - q1;
    Rational denom = cross(dp, dq);
    if (denom == 0) throw Degenerate("line_intersection: parallel lines");
    Rational t = cross(q1 - p1, dq) / denom;
    return p1 + dp * t;
}

Rational segment_dist2(const Point& a, const Point& b, const Point& p) {
    Point d = b - a;
    Rational len2 = dot(d, d);
    Rational t = dot(p - a, d) / len2;
    if (t < 0) t = 0;
    if (t > 1) t = 1;
    Point closest = a + d * t;
    Point diff = p - closest;
    return dot(diff, diff);
}

void PLPath::validate_embedded() const {
    validate_structure();
    if (kind == PathKind::InfiniteLine) return;

    auto check_pair = [](const Segment& s, const Segment& t, bool adjacent, bool shares_vertex) {
        if (adjacent) {
            // Shared vertex only; reject a collinear fold-back.
            Point d1 = s.dir(), d2 = t.dir();
            if (cross(d1, d2) == 0 && sgn(dot(d1, d2)) < 0)
                throw NonTransverse("adjacent segments fold back collinearly");
            return;
        }
        SegCross c = segment_cross(s.a, s.b, t.a, t.b);
        if (c != SegCross::None && !shares_vertex)
            throw NonTransverse("curve not embedded: segments intersect");
        if (shares_vertex && c == SegCross::Proper)
            throw NonTransverse("curve not embedded: segments cross");
    };

    if (kind == PathKind::ClosedLoop || kind == PathKind::OpenArc) {
        auto segs = segments(*this);
        size_t n = segs.size();
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = i + 1; j < n; ++j) {
                bool adjacent = (j == i + 1) ||
                                (kind == PathKind::ClosedLoop && i == 0 && j == n - 1);
                if (adjacent) {
                    check_pair(segs[i], segs[j], true, true);
                } else {
                    SegCross c = segment_cross(segs[i].a, segs[i].b, segs[j].a, segs[j].b);
                    if (c != SegCross::None)
                        throw NonTransverse("curve not embedded: segments intersect");
                }
            }
        }
        return;
    }

    // PeriodicLift: fundamental chain against itself and its near translates.
    std::vector<Segment> chain;
    {
        Rational param = 0;
        for (size_t i = 0; i + 1 < vertices.size(); ++i) {
            chain.push_back({vertices[i], vertices[i + 1], param});
            param += l1(vertices[i + 1] - vertices[i]);
        }
    }
    size_t n = chain.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            bool adjacent = (j == i + 1);
            if (adjacent) {
                check_pair(chain[i], chain[j], true, true);
            } else {
                SegCross c = segment_cross(chain[i].a, chain[i].b, chain[j].a, chain[j].b);
                if (c != SegCross::None)
                    throw NonTransverse("periodic chain not embedded");
            }
        }
    // Chain vs translate by +k period, for all k where boxes can touch.
    Box b0 = box_of(vertices);
    for (long long k = 1;; ++k) {
        Point shift = period * Rational(k);
        Box bk = b0;
        bk.xmin += shift.x; bk.xmax += shift.x;
        bk.ymin += shift.y; bk.ymax += shift.y;
        if (!bk.intersects(b0)) break;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                Point ta = chain[j].a + shift;
                Point tb = chain[j].b + shift;
                // The chain end meets the start of the +1 translate at one vertex.
                bool adjacent = (k == 1 && i == n - 1 && j == 0);
                if (adjacent) {
                    check_pair(chain[i], {ta, tb, 0}, true, true);
                    continue;
                }
                SegCross c = segment_cross(chain[i].a, chain[i].b, ta, tb);
                if (c != SegCross::None)
                    throw NonTransverse("periodic lift intersects its own translate");
            }
    }
}

std::vector<IntersectionPoint> intersect_curves(const PLPath& alpha, const PLPath& beta) {
    // Pick working segment sets. Periodic alpha restricts to its fundamental
    // window; otherwise each infinite curve is windowed by the other.
    std::vector<Segment> asegs, bsegs;
    Rational alpha_window_len = -1;  // >= 0 when alpha positions are restricted

    auto finite_box = [](const PLPath& p) { return box_of(p.vertices); };

    if (alpha.kind == PathKind::PeriodicLift) {
        Rational param = 0;
        for (size_t i = 0; i + 1 < alpha.vertices.size(); ++i) {
            asegs.push_back({alpha.vertices[i], alpha.vertices[i + 1], param});
            param += l1(alpha.vertices[i + 1] - alpha.vertices[i]);
        }
        alpha_window_len = param;
        Box w = box_of(alpha.vertices);
        w.pad(1);
        bsegs = segments_in_window(beta, w);
    } else if (alpha.kind == PathKind::InfiniteLine && beta.kind == PathKind::InfiniteLine) {
        Box w{alpha.base.x, alpha.base.x, alpha.base.y, alpha.base.y};
        w.expand(beta.base);
        w.pad(1);
        // Make sure the clipped spans cover the actual crossing.
        if (cross(alpha.direction, beta.direction) != 0) {
            Point z = line_intersection(alpha.base, alpha.base + alpha.direction,
                                        beta.base, beta.base + beta.direction);
            w.expand(z);
            w.pad(1);
        }
        asegs = segments_in_window(alpha, w);
        bsegs = segments_in_window(beta, w);
    } else if (alpha.kind == PathKind::InfiniteLine) {
        Box w = (beta.kind == PathKind::PeriodicLift) ? box_of(beta.vertices) : finite_box(beta);
        if (beta.kind == PathKind::PeriodicLift)
            throw NonTransverse("line vs periodic lift unsupported: use periodic alpha");
        w.pad(1);
        asegs = segments_in_window(alpha, w);
        bsegs = segments(beta);
    } else if (beta.kind == PathKind::InfiniteLine || beta.kind == PathKind::PeriodicLift) {
        Box w = finite_box(alpha);
        w.pad(1);
        asegs = segments(alpha);
        bsegs = segments_in_window(beta, w);
    } else {
        asegs = segments(alpha);
        bsegs = segments(beta);
    }

    std::vector<IntersectionPoint> out;
    for (const auto& sa : asegs) {
        for (const auto& sb : bsegs) {
            SegCross c = segment_cross(sa.a, sa.b, sb.a, sb.b);
            if (c == SegCross::None) continue;
            if (c == SegCross::Touch)
                throw NonTransverse("curves touch at a vertex, tangency or overlap");
            Point z = line_intersection(sa.a, sa.b, sb.a, sb.b);
            IntersectionPoint ip;
            ip.location = z;
            ip.sign = sgn(cross(sa.dir(), sb.dir()));
            ip.alpha_position = sa.param_of(z);
            ip.beta_position = sb.param_of(z);
            if (alpha_window_len >= 0 &&
                (ip.alpha_position < 0 || ip.alpha_position >= alpha_window_len))
                continue;
            out.push_back(std::move(ip));
        }
    }
    std::sort(out.begin(), out.end(), [](const IntersectionPoint& a, const IntersectionPoint& b) {
        return a.alpha_position < b.alpha_position;
    });
    return out;
}

long long winding_number(const std::vector<Point>& loop, const Point& z) {
    size_t n = loop.size();
    long long w = 0;
    for (size_t i = 0; i < n; ++i) {
        const Point& a = loop[i];
        const Point& b = loop[(i + 1) % n];
        if (a == b) continue;
        if (point_on_segment(a, b, z)) throw OnCurve("winding_number: point on loop");
        if (a.y <= z.y && z.y < b.y) {
            if (orient2d(a, b, z) > 0) ++w;
        } else if (b.y <= z.y && z.y < a.y) {
            if (orient2d(a, b, z) < 0) --w;
        }
    }
    return w;
}

long long winding_number(const PLPath& loop, const Point& z) {
    if (loop.kind != PathKind::ClosedLoop)
        throw Degenerate("winding_number: path is not a closed loop");
    return winding_number(loop.vertices, z);
}

Rational min_feature_distance(const Point& z,
                              const std::vector<Segment>& features,
                              const std::vector<Point>& other_points) {
    Rational best = -1;
    bool any = false;
    for (const auto& s : features) {
        if (point_on_segment(s.a, s.b, z)) continue;  // incident
        Rational d2 = segment_dist2(s.a, s.b, z);
        if (d2 == 0) throw Degenerate("min_feature_distance: zero distance feature");
        if (!any || d2 < best) { best = d2; any = true; }
    }
    for (const auto& p : other_points) {
        if (p == z) continue;
        Point diff = p - z;
        Rational d2 = dot(diff, diff);
        if (!any || d2 < best) { best = d2; any = true; }
    }
    if (!any) return 1;
    // min(d2,1)/2 is a positive rational lower bound on sqrt(d2). Round it
    // down to a power of two so sample points built from it stay compact.
    Rational bound = min_r(best, Rational(1)) / 2;
    Rational dyadic(1);
    while (dyadic > bound) dyadic /= 2;
    return dyadic;
}

Rational min_feature_distance(const Point& z,
                              const std::vector<const PLPath*>& curves,
                              const std::vector<Point>& other_points) {
    Box w{z.x, z.x, z.y, z.y};
    w.pad(2);
    std::vector<Segment> features;
    for (const PLPath* c : curves) {
        auto segs = segments_in_window(*c, w);
        features.insert(features.end(), segs.begin(), segs.end());
    }
    return min_feature_distance(z, features, other_points);
}

}  // namespace maslov
