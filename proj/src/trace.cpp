#include "maslov/trace.hpp"

#include <algorithm>

namespace maslov {

Surface Surface::annulus(Point p) {
    if (p == Point{}) throw Degenerate("annulus period must be nonzero");
    Surface s;
    s.tag = SurfaceTag::Annulus;
    s.period1 = p;
    return s;
}

Surface Surface::torus(Point p1, Point p2) {
    if (cross(p1, p2) == 0) throw Degenerate("torus periods must be independent");
    Surface s;
    s.tag = SurfaceTag::Torus;
    s.period1 = p1;
    s.period2 = p2;
    return s;
}

std::vector<Point> Surface::deck_generators() const {
    switch (tag) {
        case SurfaceTag::Annulus: return {period1};
        case SurfaceTag::Torus: return {period1, period2};
        default: return {};
    }
}

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

Box chain_box(const PLPath& p) {
    if (p.kind == PathKind::InfiniteLine) {
        Box b{p.base.x, p.base.x, p.base.y, p.base.y};
        b.expand(p.base + p.direction);
        return b;
    }
    return box_of(p.vertices);
}

// Lattice coordinates of v in the basis (g1, g2); throws if not integral.
std::pair<Integer, Integer> lattice_coords(const Point& v, const Point& g1, const Point& g2) {
    Rational det = cross(g1, g2);
    Rational a = cross(v, g2) / det;
    Rational b = cross(g1, v) / det;
    if (denominator(a) != 1 || denominator(b) != 1)
        throw InconsistentPeriodicity("vector is not a deck lattice element");
    return {numerator(a), numerator(b)};
}

}  // namespace

std::vector<Point> lattice_offsets(const std::vector<Point>& gens,
                                   const Box& beta_box, const Box& window) {
    std::vector<Point> out;
    if (gens.size() == 1) {
        const Point& g = gens[0];
        Rational lo_t, hi_t;
        if (abs_r(g.x) >= abs_r(g.y) && g.x != 0) {
            lo_t = (window.xmin - beta_box.xmax) / g.x;
            hi_t = (window.xmax - beta_box.xmin) / g.x;
        } else {
            lo_t = (window.ymin - beta_box.ymax) / g.y;
            hi_t = (window.ymax - beta_box.ymin) / g.y;
        }
        if (lo_t > hi_t) std::swap(lo_t, hi_t);
        Integer kmin = floor_ratio(lo_t, 1) - 1;
        Integer kmax = floor_ratio(hi_t, 1) + 2;
        for (Integer k = kmin; k <= kmax; ++k) {
            Point v = g * Rational(k);
            Box shifted = beta_box;
            shifted.xmin += v.x; shifted.xmax += v.x;
            shifted.ymin += v.y; shifted.ymax += v.y;
            if (shifted.intersects(window)) out.push_back(v);
        }
        return out;
    }
    // Two generators: map window-minus-beta_box corners through the inverse
    // basis to bound the integer coordinates.
    const Point& g1 = gens[0];
    const Point& g2 = gens[1];
    Rational det = cross(g1, g2);
    Box diff{window.xmin - beta_box.xmax, window.xmax - beta_box.xmin,
             window.ymin - beta_box.ymax, window.ymax - beta_box.ymin};
    std::vector<Point> corners = {{diff.xmin, diff.ymin}, {diff.xmin, diff.ymax},
                                  {diff.xmax, diff.ymin}, {diff.xmax, diff.ymax}};
    Integer imin, imax, jmin, jmax;
    bool first = true;
    for (const auto& c : corners) {
        Rational a = cross(c, g2) / det;
        Rational b = cross(g1, c) / det;
        Integer af = floor_ratio(a, 1), bf = floor_ratio(b, 1);
        if (first) {
            imin = imax = af;
            jmin = jmax = bf;
            first = false;
        } else {
            imin = std::min(imin, af); imax = std::max(imax, af);
            jmin = std::min(jmin, bf); jmax = std::max(jmax, bf);
        }
    }
    for (Integer i = imin - 1; i <= imax + 1; ++i)
        for (Integer j = jmin - 1; j <= jmax + 1; ++j) {
            Point v = g1 * Rational(i) + g2 * Rational(j);
            Box shifted = beta_box;
            shifted.xmin += v.x; shifted.xmax += v.x;
            shifted.ymin += v.y; shifted.ymax += v.y;
            if (shifted.intersects(window)) out.push_back(v);
        }
    return out;
}

namespace {

// Representatives of the coset directions along which distinct lifts of the
// quotient beta differ.
std::vector<Point> beta_offset_directions(const Surface& surface, const PLPath& beta,
                                          const Box& alpha_window, const Box& beta_box) {
    if (!surface.is_quotient()) return {Point{}};
    auto gens = surface.deck_generators();
    if (beta.kind != PathKind::PeriodicLift)
        return lattice_offsets(gens, beta_box, alpha_window);
    if (surface.tag == SurfaceTag::Annulus) {
        auto [a, b] = lattice_coords(beta.period, gens[0], Point{gens[0].y, -gens[0].x});
        if (b != 0 || (a != 1 && a != -1))
            throw InconsistentPeriodicity("annulus curve period must equal the deck generator");
        return {Point{}};
    }
    // Torus: beta.period = a*g1 + b*g2 with gcd(a,b) = 1; pick u completing a
    // lattice basis, then distinct lifts are beta + j*u.
    auto [a, b] = lattice_coords(beta.period, gens[0], gens[1]);
    Integer g = boost::multiprecision::gcd(boost::multiprecision::abs(a),
                                           boost::multiprecision::abs(b));
    if (g != 1)
        throw InconsistentPeriodicity("torus curve period must be primitive in the deck lattice");
    // Extended gcd: find c, d with a*d - b*c = 1.
    Integer old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        Integer q = old_r / r;
        Integer tmp = old_r - q * r; old_r = r; r = tmp;
        tmp = old_s - q * s; old_s = s; s = tmp;
        tmp = old_t - q * t; old_t = t; t = tmp;
    }
    // old_s*a + old_t*b = old_r = +-gcd = +-1
    Integer sign = old_r;  // +1 or -1
    Point u = gens[0] * Rational(-old_t * sign) + gens[1] * Rational(old_s * sign);
    // u satisfies det(period, u) = covolume: a*(old_s*sign) - b*(-old_t*sign) = 1 scaled.
    return lattice_offsets({u}, beta_box, alpha_window);
}

void validate_quotient_period(const Surface& surface, const Point& period) {
    auto gens = surface.deck_generators();
    if (surface.tag == SurfaceTag::Annulus) {
        auto [a, b] = lattice_coords(period, gens[0], Point{gens[0].y, -gens[0].x});
        if (b != 0 || (a != 1 && a != -1))
            throw InconsistentPeriodicity("annulus curve period must equal the deck generator");
        return;
    }
    auto [a, b] = lattice_coords(period, gens[0], gens[1]);
    Integer g = boost::multiprecision::gcd(boost::multiprecision::abs(a),
                                           boost::multiprecision::abs(b));
    if (g != 1)
        throw InconsistentPeriodicity("torus curve period must be primitive in the deck lattice");
}

Leg realize_spec(const PLPath& curve, Direction dir, long long loops,
                 const Rational& p0, const Rational& p1) {
    if (!curve.is_closed_or_periodic()) {
        if (loops != 0)
            throw IllegalLoopSpec("extra loops require a closed or periodic carrier");
        if (dir == Direction::None && p0 != p1)
            throw IllegalLoopSpec("direction none with distinct endpoints");
        return {p0, p1};
    }
    Rational L = curve_length(curve);
    Rational target;
    switch (dir) {
        case Direction::Forward:
            target = p0 + mod_positive(p1 - p0, L) + Rational(loops) * L;
            break;
        case Direction::Backward:
            target = p0 - mod_positive(p0 - p1, L) - Rational(loops) * L;
            break;
        case Direction::None:
            if (mod_positive(p1 - p0, L) != 0)
                throw IllegalLoopSpec("direction none with distinct endpoints");
            target = p0 + Rational(loops) * L;
            break;
    }
    return {p0, target};
}

}  // namespace

PLPath beta_lift(const Trace& t) { return translated(t.beta, t.beta_shift); }

std::vector<PLPath> curve_lifts(const Trace& t) {
    std::vector<PLPath> out;
    out.push_back(t.alpha);
    for (const auto& v : t.beta_offsets) out.push_back(translated(t.beta, v));
    return out;
}

Trace make_trace(const Surface& surface, PLPath alpha, PLPath beta,
                 const IntersectionPoint& x, const IntersectionPoint& y,
                 const BoundaryPathSpec& gamma_alpha, const BoundaryPathSpec& gamma_beta,
                 long long sphere_offset) {
    alpha.validate_embedded();
    beta.validate_embedded();
    if (!surface.is_quotient()) {
        if (alpha.kind == PathKind::PeriodicLift || beta.kind == PathKind::PeriodicLift)
            throw UnsupportedSurface("periodic lifts require a quotient surface");
    }
    if (sphere_offset != 0 && surface.tag != SurfaceTag::SpherePlane)
        throw UnsupportedSurface("sphere offset requires the sphere surface");

    Trace t;
    t.surface = surface;
    t.alpha = std::move(alpha);
    t.beta = std::move(beta);
    t.gamma_alpha = gamma_alpha;
    t.gamma_beta = gamma_beta;
    t.sphere_offset = sphere_offset;

    if (surface.is_quotient()) {
        if (t.alpha.kind == PathKind::PeriodicLift)
            validate_quotient_period(surface, t.alpha.period);
        if (t.beta.kind == PathKind::PeriodicLift)
            validate_quotient_period(surface, t.beta.period);
    }

    Box awin = chain_box(t.alpha);
    awin.pad(1);
    Box bbox = chain_box(t.beta);
    t.beta_offsets = beta_offset_directions(surface, t.beta, awin, bbox);

    // Quotient crossing set: the fundamental alpha chain against every lift
    // of beta; on the plane this is just the one pair.
    struct Tagged {
        IntersectionPoint ip;
        Point offset;
    };
    std::vector<Tagged> tagged;
    for (const auto& v : t.beta_offsets) {
        auto pts = intersect_curves(t.alpha, translated(t.beta, v));
        for (auto& ip : pts) tagged.push_back({std::move(ip), v});
    }
    std::sort(tagged.begin(), tagged.end(), [](const Tagged& a, const Tagged& b) {
        return a.ip.alpha_position < b.ip.alpha_position;
    });
    for (size_t i = 0; i + 1 < tagged.size(); ++i)
        if (tagged[i].ip.alpha_position == tagged[i + 1].ip.alpha_position)
            throw NonTransverse("two curve lifts pass through one point");
    for (const auto& tg : tagged) t.crossings.push_back(tg.ip);

    auto find = [&](const IntersectionPoint& p) -> const Tagged& {
        for (const auto& tg : tagged)
            if (tg.ip.location == p.location) return tg;
        throw EndpointNotIntersection("trace endpoint is not a crossing");
    };
    const Tagged& tx = find(x);
    const Tagged& ty = find(y);
    t.x = tx.ip;
    t.y = ty.ip;
    t.beta_shift = tx.offset;

    Leg aleg = realize_spec(t.alpha, gamma_alpha.direction, gamma_alpha.extra_loops,
                            tx.ip.alpha_position, ty.ip.alpha_position);
    t.alpha_legs = {aleg};
    Point end_point = point_at(t.alpha, aleg.to);

    if (t.beta.kind == PathKind::PeriodicLift) {
        // On a line-like lift the boundary path is determined by its endpoints.
        PLPath bl = translated(t.beta, t.beta_shift);
        Rational q_end;
        try {
            q_end = param_of_point(bl, end_point);
        } catch (const Degenerate&) {
            throw InconsistentPeriodicity("boundary paths end on different lifts");
        }
        t.beta_legs = {{tx.ip.beta_position, q_end}};
    } else {
        Leg bleg = realize_spec(t.beta, gamma_beta.direction, gamma_beta.extra_loops,
                                tx.ip.beta_position, ty.ip.beta_position);
        t.beta_legs = {bleg};
        if (!(point_at(t.beta, bleg.to) + t.beta_shift == end_point))
            throw EndpointMismatch("boundary paths end at different points");
    }
    return t;
}

std::vector<Point> gamma_loop(const Trace& t) {
    std::vector<Point> loop;
    auto append = [&loop](std::vector<Point> pts) {
        for (auto& p : pts) {
            if (!loop.empty() && loop.back() == p) continue;
            loop.push_back(std::move(p));
        }
    };
    for (const auto& leg : t.alpha_legs)
        append(points_along(t.alpha, leg.from, leg.to));
    PLPath bl = beta_lift(t);
    for (auto it = t.beta_legs.rbegin(); it != t.beta_legs.rend(); ++it)
        append(points_along(bl, it->to, it->from));
    while (loop.size() > 1 && loop.back() == loop.front()) loop.pop_back();
    return loop;
}

Trace catenate(const Trace& t1, const Trace& t2) {
    if (!(t1.surface == t2.surface) || !(t1.alpha == t2.alpha) || !(t1.beta == t2.beta))
        throw EndpointMismatch("catenation requires identical surface and curves");
    if (!(t1.y.location == t2.x.location))
        throw EndpointMismatch("catenation endpoints do not match");

    Trace t = t1;
    t.y = t2.y;
    t.gamma_alpha.end = t2.gamma_alpha.end;
    t.gamma_beta.end = t2.gamma_beta.end;
    t.sphere_offset = t1.sphere_offset + t2.sphere_offset;

    // Shift t2's parameter runs so they chain continuously in the lift.
    Rational end_a = t1.alpha_legs.back().to;
    Rational start_a = t2.alpha_legs.front().from;
    Rational da = end_a - start_a;
    bool a_ok = t.alpha.is_closed_or_periodic()
                    ? mod_positive(da, curve_length(t.alpha)) == 0
                    : da == 0;
    if (!a_ok) throw EndpointMismatch("alpha paths do not chain");
    for (const auto& leg : t2.alpha_legs)
        t.alpha_legs.push_back({leg.from + da, leg.to + da});

    // The composed beta path stays on t1's lift; re-anchor t2's run there.
    Point p_join = point_at(t.alpha, end_a);
    PLPath bl = translated(t.beta, t1.beta_shift);
    Rational r1;
    try {
        r1 = param_of_point(bl, p_join);
    } catch (const Degenerate&) {
        throw EndpointMismatch("beta paths do not chain");
    }
    Rational end_b = t1.beta_legs.back().to;
    if (t.beta.is_closed_or_periodic()) {
        Rational L = curve_length(t.beta);
        if (mod_positive(end_b - r1, L) != 0)
            throw EndpointMismatch("beta paths do not chain");
    } else if (end_b != r1) {
        throw EndpointMismatch("beta paths do not chain");
    }
    Rational db = end_b - t2.beta_legs.front().from;
    for (const auto& leg : t2.beta_legs)
        t.beta_legs.push_back({leg.from + db, leg.to + db});
    return t;
}

namespace {

Point reflect(const Point& p) { return {p.x, -p.y}; }

PLPath reflect(const PLPath& c) {
    PLPath out = c;
    for (auto& v : out.vertices) v = reflect(v);
    out.base = reflect(out.base);
    out.direction = reflect(out.direction);
    out.period = reflect(out.period);
    return out;
}

IntersectionPoint reflect(const IntersectionPoint& ip) {
    IntersectionPoint out = ip;
    out.location = reflect(ip.location);
    out.sign = -ip.sign;
    return out;
}

}  // namespace

Trace conjugate(const Trace& t) {
    if (t.surface.is_quotient())
        throw UnsupportedSurface("conjugation is defined on the plane only");
    Trace out = t;
    out.alpha = reflect(t.alpha);
    out.beta = reflect(t.beta);
    out.x = reflect(t.x);
    out.y = reflect(t.y);
    out.gamma_alpha.start = reflect(t.gamma_alpha.start);
    out.gamma_alpha.end = reflect(t.gamma_alpha.end);
    out.gamma_beta.start = reflect(t.gamma_beta.start);
    out.gamma_beta.end = reflect(t.gamma_beta.end);
    for (auto& ip : out.crossings) ip = reflect(ip);
    out.sphere_offset = -t.sphere_offset;
    return out;
}

Trace sphere_shift(const Trace& t, long long d) {
    if (t.surface.tag != SurfaceTag::SpherePlane)
        throw UnsupportedSurface("sphere shift requires the sphere surface");
    Trace out = t;
    out.sphere_offset += d;
    return out;
}

}  // namespace maslov
