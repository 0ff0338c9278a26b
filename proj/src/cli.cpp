#include "maslov/cli.hpp"

#include "maslov/chains.hpp"
#include "maslov/cover.hpp"
#include "maslov/maslov.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <functional>
#include <future>
#include <random>
#include <sstream>
#include <thread>

namespace maslov {

namespace {

// ---------------------------------------------------------------- parsing ---

struct Tok {
    std::string text;
    int line = 0;
    int column = 0;
};

[[noreturn]] void parse_fail(int line, int column, const std::string& what) {
    throw ParseError("line " + std::to_string(line) + ", column " +
                     std::to_string(column) + ": " + what);
}

std::vector<std::vector<Tok>> tokenize(const std::string& text) {
    std::vector<std::vector<Tok>> lines;
    int line_no = 0;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        std::vector<Tok> toks;
        size_t i = 0;
        while (i < line.size()) {
            if (isspace(static_cast<unsigned char>(line[i]))) { ++i; continue; }
            if (line[i] == '#') break;
            size_t j = i;
            while (j < line.size() && !isspace(static_cast<unsigned char>(line[j]))) ++j;
            toks.push_back({line.substr(i, j - i), line_no, int(i) + 1});
            i = j;
        }
        if (!toks.empty()) lines.push_back(std::move(toks));
    }
    return lines;
}

Rational tok_rational(const Tok& t) {
    try {
        return parse_rational(t.text);
    } catch (const std::invalid_argument&) {
        parse_fail(t.line, t.column, "expected a rational, got '" + t.text + "'");
    }
}

long long tok_int(const Tok& t) {
    try {
        size_t used = 0;
        long long v = std::stoll(t.text, &used);
        if (used != t.text.size()) throw std::invalid_argument(t.text);
        return v;
    } catch (const std::exception&) {
        parse_fail(t.line, t.column, "expected an integer, got '" + t.text + "'");
    }
}

void need(const std::vector<Tok>& toks, size_t count) {
    if (toks.size() != count)
        parse_fail(toks[0].line, 1,
                   "expected " + std::to_string(count) + " fields on '" +
                       toks[0].text + "' line");
}

Point tok_point(const Tok& a, const Tok& b) { return {tok_rational(a), tok_rational(b)}; }

Direction parse_direction(const Tok& t) {
    if (t.text == "forward") return Direction::Forward;
    if (t.text == "backward") return Direction::Backward;
    if (t.text == "none") return Direction::None;
    parse_fail(t.line, t.column, "unknown direction '" + t.text + "'");
}

const char* direction_name(Direction d) {
    switch (d) {
        case Direction::Forward: return "forward";
        case Direction::Backward: return "backward";
        default: return "none";
    }
}

}  // namespace

TraceDocument parse_document(const std::string& text) {
    TraceDocument doc;
    bool have_surface = false, have_trace = false, have_x = false, have_y = false;
    PLPath* curve = nullptr;
    bool have_alpha = false, have_beta = false;

    for (const auto& toks : tokenize(text)) {
        const Tok& head = toks[0];
        if (head.text == "SURFACE") {
            if (toks.size() < 2) parse_fail(head.line, head.column, "missing surface kind");
            const std::string& kind = toks[1].text;
            if (kind == "plane") { need(toks, 2); doc.surface = Surface::plane(); }
            else if (kind == "sphere") { need(toks, 2); doc.surface = Surface::sphere_plane(); }
            else if (kind == "annulus") {
                need(toks, 4);
                doc.surface = Surface::annulus(tok_point(toks[2], toks[3]));
            } else if (kind == "torus") {
                need(toks, 6);
                doc.surface = Surface::torus(tok_point(toks[2], toks[3]),
                                             tok_point(toks[4], toks[5]));
            } else parse_fail(toks[1].line, toks[1].column, "unknown surface '" + kind + "'");
            have_surface = true;
        } else if (head.text == "CURVE") {
            if (toks.size() < 3) parse_fail(head.line, head.column, "CURVE needs a name and kind");
            if (toks[1].text == "ALPHA") { curve = &doc.alpha; have_alpha = true; }
            else if (toks[1].text == "BETA") { curve = &doc.beta; have_beta = true; }
            else parse_fail(toks[1].line, toks[1].column, "curve must be ALPHA or BETA");
            *curve = PLPath{};
            const std::string& kind = toks[2].text;
            if (kind == "loop") { need(toks, 3); curve->kind = PathKind::ClosedLoop; }
            else if (kind == "arc") { need(toks, 3); curve->kind = PathKind::OpenArc; }
            else if (kind == "line") {
                need(toks, 7);
                curve->kind = PathKind::InfiniteLine;
                curve->base = tok_point(toks[3], toks[4]);
                curve->direction = tok_point(toks[5], toks[6]);
            } else if (kind == "periodic") {
                need(toks, 5);
                curve->kind = PathKind::PeriodicLift;
                curve->period = tok_point(toks[3], toks[4]);
            } else parse_fail(toks[2].line, toks[2].column, "unknown curve kind '" + kind + "'");
        } else if (head.text == "V") {
            if (!curve) parse_fail(head.line, head.column, "vertex outside a CURVE block");
            need(toks, 3);
            curve->vertices.push_back(tok_point(toks[1], toks[2]));
        } else if (head.text == "TRACE") {
            need(toks, 1);
            have_trace = true;
            curve = nullptr;
        } else if (head.text == "X" || head.text == "Y") {
            if (!have_trace) parse_fail(head.line, head.column, "endpoint outside the TRACE block");
            need(toks, 3);
            (head.text == "X" ? doc.x_loc : doc.y_loc) = tok_point(toks[1], toks[2]);
            (head.text == "X" ? have_x : have_y) = true;
        } else if (head.text == "GAMMA") {
            if (!have_trace) parse_fail(head.line, head.column, "GAMMA outside the TRACE block");
            need(toks, 4);
            Direction d = parse_direction(toks[2]);
            long long loops = tok_int(toks[3]);
            if (toks[1].text == "ALPHA") { doc.ga_dir = d; doc.ga_loops = loops; }
            else if (toks[1].text == "BETA") { doc.gb_dir = d; doc.gb_loops = loops; }
            else parse_fail(toks[1].line, toks[1].column, "GAMMA must name ALPHA or BETA");
        } else if (head.text == "OFFSET") {
            need(toks, 2);
            doc.offset = tok_int(toks[1]);
        } else {
            parse_fail(head.line, head.column, "unknown directive '" + head.text + "'");
        }
    }

    if (!have_surface) parse_fail(1, 1, "missing SURFACE line");
    if (!have_alpha) parse_fail(1, 1, "missing CURVE ALPHA block");
    if (!have_beta) parse_fail(1, 1, "missing CURVE BETA block");
    if (!have_trace) parse_fail(1, 1, "missing TRACE block");
    if (!have_x || !have_y) parse_fail(1, 1, "TRACE block needs X and Y lines");
    return doc;
}

std::string serialize_document(const TraceDocument& doc) {
    std::ostringstream out;
    out << "SURFACE ";
    switch (doc.surface.tag) {
        case SurfaceTag::Plane: out << "plane"; break;
        case SurfaceTag::SpherePlane: out << "sphere"; break;
        case SurfaceTag::Annulus:
            out << "annulus " << to_string(doc.surface.period1.x) << ' '
                << to_string(doc.surface.period1.y);
            break;
        case SurfaceTag::Torus:
            out << "torus " << to_string(doc.surface.period1.x) << ' '
                << to_string(doc.surface.period1.y) << ' '
                << to_string(doc.surface.period2.x) << ' '
                << to_string(doc.surface.period2.y);
            break;
    }
    out << '\n';
    auto curve = [&out](const char* name, const PLPath& p) {
        out << "CURVE " << name << ' ';
        switch (p.kind) {
            case PathKind::ClosedLoop: out << "loop"; break;
            case PathKind::OpenArc: out << "arc"; break;
            case PathKind::InfiniteLine:
                out << "line " << to_string(p.base.x) << ' ' << to_string(p.base.y)
                    << ' ' << to_string(p.direction.x) << ' ' << to_string(p.direction.y);
                break;
            case PathKind::PeriodicLift:
                out << "periodic " << to_string(p.period.x) << ' ' << to_string(p.period.y);
                break;
        }
        out << '\n';
        for (const auto& v : p.vertices)
            out << "V " << to_string(v.x) << ' ' << to_string(v.y) << '\n';
    };
    curve("ALPHA", doc.alpha);
    curve("BETA", doc.beta);
    out << "TRACE\n";
    out << "X " << to_string(doc.x_loc.x) << ' ' << to_string(doc.x_loc.y) << '\n';
    out << "Y " << to_string(doc.y_loc.x) << ' ' << to_string(doc.y_loc.y) << '\n';
    out << "GAMMA ALPHA " << direction_name(doc.ga_dir) << ' ' << doc.ga_loops << '\n';
    out << "GAMMA BETA " << direction_name(doc.gb_dir) << ' ' << doc.gb_loops << '\n';
    out << "OFFSET " << doc.offset << '\n';
    return out.str();
}

Trace to_trace(const TraceDocument& doc) {
    doc.alpha.validate_structure();
    doc.beta.validate_structure();
    auto crossings = intersect_curves(doc.alpha, doc.beta);
    const IntersectionPoint* x = nullptr;
    const IntersectionPoint* y = nullptr;
    for (const auto& c : crossings) {
        if (c.location == doc.x_loc) x = &c;
        if (c.location == doc.y_loc) y = &c;
    }
    if (!x) throw EndpointNotIntersection("X is not a crossing of the curves");
    if (!y) throw EndpointNotIntersection("Y is not a crossing of the curves");
    BoundaryPathSpec ga{*x, *y, doc.ga_dir, doc.ga_loops};
    BoundaryPathSpec gb{*x, *y, doc.gb_dir, doc.gb_loops};
    return make_trace(doc.surface, doc.alpha, doc.beta, *x, *y, ga, gb, doc.offset);
}

TraceDocument document_of(const Trace& t) {
    TraceDocument doc;
    doc.surface = t.surface;
    doc.alpha = t.alpha;
    doc.beta = t.beta;
    doc.x_loc = t.x.location;
    doc.y_loc = t.y.location;
    doc.ga_dir = t.gamma_alpha.direction;
    doc.ga_loops = t.gamma_alpha.extra_loops;
    doc.gb_dir = t.gamma_beta.direction;
    doc.gb_loops = t.gamma_beta.extra_loops;
    doc.offset = t.sphere_offset;
    return doc;
}

// ------------------------------------------------------------------ words ---

CrossingWord parse_word(const std::string& text) {
    CrossingWord w;
    bool have_traversal = false;
    for (const auto& toks : tokenize(text)) {
        const Tok& head = toks[0];
        if (head.text == "C") {
            need(toks, 3);
            WordCrossing c;
            c.position = tok_rational(toks[1]);
            if (toks[2].text == "up") { c.dir = Vertical::Up; c.sign = 1; }
            else if (toks[2].text == "down") { c.dir = Vertical::Down; c.sign = -1; }
            else parse_fail(toks[2].line, toks[2].column, "expected up or down");
            w.crossings.push_back(std::move(c));
        } else if (head.text == "TRAVERSAL") {
            for (size_t i = 1; i < toks.size(); ++i)
                w.traversal.push_back(int(tok_int(toks[i])));
            have_traversal = true;
        } else {
            parse_fail(head.line, head.column, "unknown directive '" + head.text + "'");
        }
    }
    if (!have_traversal || w.crossings.empty())
        parse_fail(1, 1, "a word needs C lines and a TRAVERSAL line");
    for (int i : w.traversal)
        if (i < 0 || size_t(i) >= w.crossings.size())
            parse_fail(1, 1, "traversal index " + std::to_string(i) + " out of range");
    w.x_index = w.traversal.front();
    w.y_index = w.traversal.back();
    w.validate();
    return w;
}

std::string serialize_word(const CrossingWord& word) {
    std::ostringstream out;
    for (const auto& c : word.crossings)
        out << "C " << to_string(c.position) << ' '
            << (c.dir == Vertical::Up ? "up" : "down") << '\n';
    out << "TRAVERSAL";
    for (int i : word.traversal) out << ' ' << i;
    out << '\n';
    return out.str();
}

// -------------------------------------------------------------- generation ---

namespace {

using Rng = std::mt19937_64;

long long draw(Rng& rng, long long lo, long long hi) {
    return lo + static_cast<long long>(rng() % std::uint64_t(hi - lo + 1));
}

// Chords are stored as crossing-index pairs so the periodic position
// renumbering keeps them valid; positions stay small even integers.
struct Chord {
    int i, j;
};

// One drawing attempt; the arc is grown crossing by crossing, always choosing
// the next crossing inside an axis gap on the boundary of the current face, so
// the result is legal by construction.
CrossingWord draw_word(Rng& rng, int n) {
    std::vector<long long> pos{0};
    std::vector<Chord> upper, lower;
    bool above = true;  // side just entered; the first crossing goes up
    for (int k = 1; k < n; ++k) {
        const std::vector<Chord>& chords = above ? upper : lower;
        // Innermost chord strictly covering q, or -1 for the outer face.
        auto innermost = [&](long long q) {
            int best = -1;
            long long best_width = 0;
            for (size_t c = 0; c < chords.size(); ++c) {
                long long lo = std::min(pos[size_t(chords[c].i)], pos[size_t(chords[c].j)]);
                long long hi = std::max(pos[size_t(chords[c].i)], pos[size_t(chords[c].j)]);
                if (!(lo < q && q < hi)) continue;
                if (best < 0 || hi - lo < best_width) {
                    best = int(c);
                    best_width = hi - lo;
                }
            }
            return best;
        };
        int face = innermost(pos[size_t(k - 1)]);
        std::vector<long long> sorted = pos;
        std::sort(sorted.begin(), sorted.end());
        // Candidate positions: one representative per accessible gap. Stored
        // positions are even, so adjacent midpoints are fresh odd integers.
        std::vector<long long> reachable;
        for (size_t i = 0; i + 1 < sorted.size(); ++i) {
            long long mid = (sorted[i] + sorted[i + 1]) / 2;
            if (innermost(mid) == face) reachable.push_back(mid);
        }
        if (innermost(sorted.front() - 1) == face) reachable.push_back(sorted.front() - 1);
        if (innermost(sorted.back() + 1) == face) reachable.push_back(sorted.back() + 1);
        long long next = reachable[std::size_t(rng() % reachable.size())];
        (above ? upper : lower).push_back({k - 1, k});
        pos.push_back(next);
        above = !above;
        // Renumber to even ranks 0, 2, 4, ... keeping the order.
        sorted = pos;
        std::sort(sorted.begin(), sorted.end());
        for (auto& q : pos)
            q = 2 * (std::lower_bound(sorted.begin(), sorted.end(), q) - sorted.begin());
    }

    // Rank-remap positions to 0..n-1 and assemble the word.
    CrossingWord w;
    w.crossings.resize(size_t(n));
    for (int k = 0; k < n; ++k) {
        int r = int(pos[size_t(k)] / 2);
        w.crossings[size_t(r)] = {Rational(r), k % 2 == 0 ? 1 : -1,
                                  k % 2 == 0 ? Vertical::Up : Vertical::Down};
        w.traversal.push_back(r);
    }
    w.x_index = w.traversal.front();
    w.y_index = w.traversal.back();
    return w;
}

}  // namespace

CrossingWord generate_word(std::uint64_t seed, int crossings) {
    if (crossings < 2) throw GenerationExhausted("need at least two crossings");
    Rng rng(seed);
    for (int attempt = 0; attempt < 256; ++attempt) {
        CrossingWord w = draw_word(rng, crossings);
        if (!(w.x_pos() < w.y_pos())) continue;  // x must be left of y
        w.validate();
        return w;
    }
    throw GenerationExhausted("no normalized word after bounded attempts");
}

namespace {

// Simple star-shaped polygon: distinct directions sorted by angle.
PLPath star_polygon(Rng& rng, const Point& center) {
    long long m = draw(rng, 4, 8);
    std::vector<Point> dirs;
    for (int tries = 0; tries < 200 && static_cast<long long>(dirs.size()) < m; ++tries) {
        Point d = point(draw(rng, -5, 5), draw(rng, -5, 5));
        if (d == Point{}) continue;
        bool dup = false;
        for (const auto& e : dirs)
            if (cross(d, e) == 0 && dot(d, e) > 0) { dup = true; break; }
        if (!dup) dirs.push_back(d);
    }
    if (dirs.size() < 3) throw Degenerate("not enough directions");
    auto half = [](const Point& d) { return d.y > 0 || (d.y == 0 && d.x > 0) ? 0 : 1; };
    std::sort(dirs.begin(), dirs.end(), [&half](const Point& a, const Point& b) {
        if (half(a) != half(b)) return half(a) < half(b);
        return cross(a, b) > 0;
    });
    std::vector<Point> verts;
    for (const auto& d : dirs) verts.push_back(center + d * Rational(draw(rng, 2, 4)));
    return make_loop(std::move(verts));
}

TraceDocument generate_plane_arc(Rng& rng, int max_crossings) {
    int n = int(draw(rng, 2, max_crossings));
    CrossingWord w = generate_word(rng(), n);
    return document_of(realize_word(w));
}

TraceDocument generate_plane_general(Rng& rng) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        try {
            PLPath alpha = star_polygon(rng, point(0, 0));
            PLPath beta = star_polygon(
                rng, Point{Rational(draw(rng, -4, 4), 3), Rational(draw(rng, -4, 4), 3)});
            auto crossings = intersect_curves(alpha, beta);
            if (crossings.empty()) continue;
            const auto& x = crossings[std::size_t(rng() % crossings.size())];
            BoundaryPathSpec ga{x, x, Direction::None, draw(rng, -2, 2)};
            BoundaryPathSpec gb{x, x, Direction::None, draw(rng, -2, 2)};
            Surface s = Surface::plane();
            long long d = 0;
            if (rng() % 3 == 0) { s = Surface::sphere_plane(); d = draw(rng, -2, 2); }
            return document_of(make_trace(s, alpha, beta, x, x, ga, gb, d));
        } catch (const Error&) {
            continue;
        }
    }
    throw GenerationExhausted("no transversal loop pair after bounded attempts");
}

TraceDocument generate_quotient(Rng& rng, bool torus) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        try {
            // x-monotone periodic wave against the axis.
            long long pairs = draw(rng, 1, 3);
            std::vector<Point> verts;
            Rational X = 0;
            for (long long i = 0; i < 2 * pairs; ++i) {
                Rational h(draw(rng, 1, 2));
                verts.push_back({X, i % 2 == 0 ? -h : h});
                X += draw(rng, 1, 3);
            }
            Point period{X, 0};
            verts.push_back(verts.front() + period);
            PLPath beta = make_periodic(std::move(verts), period);
            Point a0{Rational(-1, 7), 0};
            PLPath alpha = make_periodic({a0, a0 + period}, period);
            Surface s = torus ? Surface::torus(period, point(0, 6))
                              : Surface::annulus(period);
            auto crossings = intersect_curves(alpha, beta);
            if (crossings.size() < 2) continue;
            std::size_t xi = std::size_t(rng() % crossings.size());
            if (rng() % 8 == 0) {
                const auto& x = crossings[xi];
                BoundaryPathSpec g{x, x, Direction::Forward, 1};
                return document_of(make_trace(s, alpha, beta, x, x, g, g));
            }
            std::size_t yi = std::size_t(rng() % crossings.size());
            if (yi == xi) yi = (xi + 1) % crossings.size();
            const auto& x = crossings[xi];
            const auto& y = crossings[yi];
            long long loops = rng() % 5 == 0 ? 1 : 0;
            BoundaryPathSpec ga{x, y, Direction::Forward, loops};
            BoundaryPathSpec gb{x, y, Direction::Forward, 0};
            return document_of(make_trace(s, alpha, beta, x, y, ga, gb));
        } catch (const Error&) {
            continue;
        }
    }
    throw GenerationExhausted("no quotient wave trace after bounded attempts");
}

}  // namespace

TraceDocument generate(std::uint64_t seed, Profile profile) {
    Rng rng(seed * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL);
    switch (profile) {
        case Profile::PlaneArc: return generate_plane_arc(rng, 60);
        case Profile::Word: return generate_plane_arc(rng, 16);
        case Profile::PlaneGeneral: return generate_plane_general(rng);
        case Profile::Annulus: return generate_quotient(rng, false);
        case Profile::Torus: return generate_quotient(rng, true);
    }
    throw GenerationExhausted("unknown profile");
}

Profile profile_from_name(const std::string& name) {
    if (name == "plane-arc") return Profile::PlaneArc;
    if (name == "plane-general") return Profile::PlaneGeneral;
    if (name == "annulus") return Profile::Annulus;
    if (name == "torus") return Profile::Torus;
    if (name == "word") return Profile::Word;
    throw ParseError("unknown profile '" + name + "'");
}

std::string to_string(Profile p) {
    switch (p) {
        case Profile::PlaneArc: return "plane-arc";
        case Profile::PlaneGeneral: return "plane-general";
        case Profile::Annulus: return "annulus";
        case Profile::Torus: return "torus";
        case Profile::Word: return "word";
    }
    return "?";
}

// ------------------------------------------------------------------ verify ---

namespace {

struct CaseOutcome {
    std::vector<CheckResult> failures;
    long long checks = 0;
};

void run_check(CaseOutcome& out, Profile profile, std::uint64_t seed,
               const TraceDocument& doc, const std::string& name,
               const std::function<bool(std::string&)>& body) {
    ++out.checks;
    CheckResult r;
    r.name = name;
    r.profile = profile;
    r.seed = seed;
    try {
        r.pass = body(r.detail);
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = std::string("exception: ") + e.what();
    }
    if (!r.pass) {
        r.counterexample = serialize_document(doc);
        out.failures.push_back(std::move(r));
    }
}

std::vector<Point> off_curve_samples(const Trace& t, int want) {
    TwoChainEval w = degree_two_chain(t);
    Box box = w.loop_box;
    box.pad(1);
    std::vector<Point> pts;
    Rational dx = (box.xmax - box.xmin) / want;
    Rational dy = (box.ymax - box.ymin) / 7;
    if (dx == 0 || dy == 0) return pts;
    for (int i = 0; i < want && static_cast<long long>(pts.size()) < want; ++i)
        for (int j = 0; j < 7 && static_cast<long long>(pts.size()) < want; ++j) {
            Point z{box.xmin + dx * i + dx / 3, box.ymin + dy * j + dy * Rational(1, 5)};
            bool clear = true;
            for (const auto& c : curve_lifts(t))
                if (point_on_path(c, z)) { clear = false; break; }
            if (clear) pts.push_back(z);
        }
    return pts;
}

CaseOutcome run_case(Profile profile, std::uint64_t seed) {
    CaseOutcome out;
    TraceDocument doc;
    try {
        doc = generate(seed, profile);
    } catch (const std::exception& e) {
        CheckResult r;
        r.name = "generate";
        r.profile = profile;
        r.seed = seed;
        r.pass = false;
        r.detail = e.what();
        out.failures.push_back(std::move(r));
        ++out.checks;
        return out;
    }
    auto check = [&](const std::string& name, const std::function<bool(std::string&)>& body) {
        run_check(out, profile, seed, doc, name, body);
    };

    check("document-roundtrip", [&](std::string& detail) {
        TraceDocument back = parse_document(serialize_document(doc));
        if (back == doc) return true;
        detail = "reparsed document differs";
        return false;
    });

    Trace t;
    try {
        t = to_trace(doc);
    } catch (const std::exception& e) {
        CheckResult r;
        r.name = "to-trace";
        r.profile = profile;
        r.seed = seed;
        r.pass = false;
        r.detail = e.what();
        r.counterexample = serialize_document(doc);
        out.failures.push_back(std::move(r));
        ++out.checks;
        return out;
    }

    long long mx = m_value(t, t.x), my = m_value(t, t.y);
    check("parity", [&](std::string& detail) {
        if ((mx + my) % 2 == 0) return true;
        detail = "m_x + m_y odd: " + std::to_string(mx) + " + " + std::to_string(my);
        return false;
    });

    bool quotient = t.surface.is_quotient();
    long long mu_formula = 0;
    check("trace-formula", [&](std::string&) {
        mu_formula = maslov_via_trace_formula(t);
        return true;
    });

    check(quotient ? "quotient-vs-formula" : "direct-vs-formula", [&](std::string& detail) {
        long long mu_geom = quotient ? maslov_quotient(t) : maslov_direct(t);
        if (mu_geom == mu_formula) return true;
        detail = "formula " + std::to_string(mu_formula) + " vs geometric " +
                 std::to_string(mu_geom);
        return false;
    });

    check("boundary-relation", [&](std::string& detail) {
        BoundaryReport r = verify_boundary(t);
        if (r.all_pass) return true;
        detail = "a one-cell fails the boundary relation";
        return false;
    });

    if (!quotient) {
        check("reconstruction", [&](std::string& detail) {
            auto pts = off_curve_samples(t, 50);
            if (pts.empty()) return true;
            TwoChainEval w = degree_two_chain(t);
            ReconstructedW rec =
                reconstruct_w_from_nu(boundary_one_chain(t), pts[0], w(pts[0]));
            for (const auto& z : pts)
                if (rec(z) != w(z)) {
                    detail = "reconstructed w differs at " + to_string(z);
                    return false;
                }
            return true;
        });
    }

    if (profile == Profile::PlaneArc || profile == Profile::Word) {
        check("four-methods", [&](std::string& detail) {
            long long arc = maslov_via_arc_formula(t);
            long long rec = maslov_recursive(t);
            if (arc == mu_formula && rec == mu_formula) return true;
            detail = "formula " + std::to_string(mu_formula) + ", arc " +
                     std::to_string(arc) + ", recursive " + std::to_string(rec);
            return false;
        });
        check("word-roundtrip", [&](std::string& detail) {
            CrossingWord w = crossing_profile(t);
            if (crossing_profile(realize_word(w)) == w) return true;
            detail = "crossing word does not survive realization";
            return false;
        });
        check("reduction-invariance", [&](std::string& detail) {
            CrossingWord r = reduce(crossing_profile(t));
            ArcFormulaData full = arc_formula_data(t);
            ArcFormulaData red = arc_formula_data(realize_word(r));
            if (full.mu == red.mu && full.k_x == red.k_x && full.k_y == red.k_y &&
                full.eps_x == red.eps_x && full.eps_y == red.eps_y)
                return true;
            detail = "reduced realization changes the arc invariants";
            return false;
        });
        check("reduced-case", [&](std::string& detail) {
            if (!classify(reduce(crossing_profile(t))).empty()) return true;
            detail = "reduced word satisfies none of the four cases";
            return false;
        });
        check("sign-sum", [&](std::string& detail) {
            CrossingWord w = crossing_profile(t);
            long long total = 0;
            for (const auto& c : w.crossings) total += c.sign;
            ArcFormulaData d = arc_formula_data(t);
            if (2 * total == d.eps_x + d.eps_y) return true;
            detail = "sign sum does not match the endpoint indices";
            return false;
        });
    }

    if (quotient) {
        LiftedTrace lt = lift_trace(t);
        check("deck-pairing", [&](std::string& detail) {
            GmReport r = verify_gm(lt);
            if (r.all_pass) return true;
            detail = "a deck translate violates the pairing identity";
            return false;
        });
        check("truncation", [&](std::string& detail) {
            if (truncation_stable(lt)) return true;
            detail = "translate sums change when the radius grows";
            return false;
        });
        check("quotient-m-split", [&](std::string& detail) {
            long long total = lifted_m(lt, lt.x_lift);
            for (const auto& v : lt.deck.translates(lt.deck.truncation))
                total += lifted_m(lt, lt.x_lift + v);
            if (total == mx) return true;
            detail = "translate m-values do not add up to the quotient m_x";
            return false;
        });
    }
    return out;
}

}  // namespace

VerifyReport run_verify(const std::vector<Profile>& profiles, int n,
                        std::uint64_t seed) {
    struct Job {
        Profile profile;
        std::uint64_t seed;
    };
    std::vector<Job> jobs;
    for (Profile p : profiles)
        for (int i = 0; i < n; ++i)
            jobs.push_back({p, seed + std::uint64_t(i) * 2654435761ULL +
                                   std::uint64_t(p) * 40503ULL});

    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::future<std::vector<CaseOutcome>>> futures;
    size_t chunk = (jobs.size() + workers - 1) / std::max<size_t>(1, workers);
    for (size_t start = 0; start < jobs.size(); start += chunk) {
        size_t stop = std::min(jobs.size(), start + chunk);
        futures.push_back(std::async(std::launch::async, [&jobs, start, stop]() {
            std::vector<CaseOutcome> outs;
            for (size_t i = start; i < stop; ++i)
                outs.push_back(run_case(jobs[i].profile, jobs[i].seed));
            return outs;
        }));
    }

    VerifyReport report;
    for (auto& f : futures)
        for (auto& out : f.get()) {
            ++report.cases_run;
            report.checks_run += out.checks;
            for (auto& fail : out.failures) report.failures.push_back(std::move(fail));
        }
    return report;
}

std::string format_report(const VerifyReport& report) {
    std::ostringstream out;
    out << "cases: " << report.cases_run << ", checks: " << report.checks_run
        << ", failures: " << report.failures.size() << '\n';
    for (const auto& f : report.failures) {
        out << "FAIL " << f.name << " [" << to_string(f.profile) << ", seed "
            << f.seed << "]: " << f.detail << '\n';
        if (!f.counterexample.empty())
            out << "--- counterexample ---\n" << f.counterexample << "---\n";
    }
    return out.str();
}

// ------------------------------------------------------------------ render ---

namespace {

double approx(const Rational& q) {
    return double(numerator(q)) / double(denominator(q));
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

}  // namespace

std::string render_svg(const Trace& t) {
    TwoChainEval w = degree_two_chain(t);
    Box window = w.loop_box;
    window.expand(t.x.location);
    window.expand(t.y.location);
    if (t.surface.is_quotient())
        for (const auto& g : t.surface.deck_generators()) window.pad(l1(g));
    window.pad(2);

    double xmin = approx(window.xmin), xmax = approx(window.xmax);
    double ymin = approx(window.ymin), ymax = approx(window.ymax);
    double scale = std::min(720.0 / (xmax - xmin), 480.0 / (ymax - ymin));
    double width = (xmax - xmin) * scale + 80, height = (ymax - ymin) * scale + 110;
    auto X = [&](const Rational& q) { return (approx(q) - xmin) * scale + 40; };
    auto Y = [&](const Rational& q) { return (ymax - approx(q)) * scale + 40; };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
        << fmt(width) << "\" height=\"" << fmt(height) << "\">\n";

    auto stroke = [&](const PLPath& path, const char* color, const char* dash) {
        for (const auto& s : segments_in_window(path, window)) {
            svg << "<line x1=\"" << fmt(X(s.a.x)) << "\" y1=\"" << fmt(Y(s.a.y))
                << "\" x2=\"" << fmt(X(s.b.x)) << "\" y2=\"" << fmt(Y(s.b.y))
                << "\" stroke=\"" << color << "\" stroke-width=\"1.5\"";
            if (dash[0]) svg << " stroke-dasharray=\"" << dash << "\"";
            svg << "/>\n";
        }
    };
    auto arrow = [&](const PLPath& path, const char* color) {
        auto segs = segments_in_window(path, window);
        if (segs.empty()) return;
        const Segment& s = segs[segs.size() / 2];
        Point mid = {(s.a.x + s.b.x) / 2, (s.a.y + s.b.y) / 2};
        Point d = s.dir();
        Rational n = l1(d);
        if (n == 0) return;
        Point u = d * (Rational(1) / n);
        Point left = mid - u * Rational(1, 4) + Point{-u.y, u.x} * Rational(1, 8);
        Point right = mid - u * Rational(1, 4) - Point{-u.y, u.x} * Rational(1, 8);
        svg << "<polyline fill=\"none\" stroke=\"" << color << "\" points=\""
            << fmt(X(left.x)) << ',' << fmt(Y(left.y)) << ' ' << fmt(X(mid.x)) << ','
            << fmt(Y(mid.y)) << ' ' << fmt(X(right.x)) << ',' << fmt(Y(right.y))
            << "\"/>\n";
    };

    auto lifts = curve_lifts(t);
    stroke(lifts[0], "#1f4e9c", "");
    for (size_t i = 1; i < lifts.size(); ++i)
        stroke(lifts[i], "#b02020", i == 1 ? "" : "4,3");
    arrow(lifts[0], "#1f4e9c");
    if (lifts.size() > 1) arrow(lifts[1], "#b02020");

    auto label = [&](const Point& p, const std::string& text, const char* color) {
        svg << "<text x=\"" << fmt(X(p.x) + 4) << "\" y=\"" << fmt(Y(p.y) - 4)
            << "\" font-size=\"12\" fill=\"" << color << "\">" << text << "</text>\n";
    };
    label(t.x.location, "x", "#000");
    if (!(t.y.location == t.x.location)) label(t.y.location, "y", "#000");

    // One w label on each side of every alpha cell sample.
    OneChain nu = boundary_one_chain(t);
    for (const auto& cell : nu.alpha_cells) {
        Point tan = tangent_at(t.alpha, cell.sample_point);
        Rational n = l1(tan);
        if (n == 0) continue;
        Point u = tan * (Rational(1) / n);
        Point normal{-u.y, u.x};
        std::vector<const PLPath*> curves;
        for (const auto& c : lifts) curves.push_back(&c);
        Rational eps = min_feature_distance(cell.sample_point, curves) / 2;
        for (int side = -1; side <= 1; side += 2) {
            Point z = cell.sample_point + normal * (eps * side);
            bool clear = true;
            for (const auto& c : lifts)
                if (point_on_path(c, z)) { clear = false; break; }
            if (!clear) continue;
            label(z, "w=" + std::to_string(w(z)), "#555");
        }
    }

    long long mx = m_value(t, t.x), my = m_value(t, t.y);
    svg << "<text x=\"40\" y=\"" << fmt(height - 20)
        << "\" font-size=\"14\" fill=\"#000\">m_x=" << mx << "  m_y=" << my
        << "  \xce\xbc=" << (mx + my) / 2 << "</text>\n";
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace maslov
