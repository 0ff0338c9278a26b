// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Criteria 1 and 6 carry wall-clock budgets.
#include "maslov/chains.hpp"
#include "maslov/cli.hpp"
#include "maslov/cover.hpp"
#include "maslov/maslov.hpp"
#include "maslov/reduction.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace maslov;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

int failures = 0;

void report(int id, bool pass, const std::string& what, const std::string& detail = "") {
    std::printf("criterion %d: %s - %s%s%s\n", id, pass ? "PASS" : "FAIL", what.c_str(),
                detail.empty() ? "" : ": ", detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

Rational q(long long n, long long d = 1) { return Rational(n, d); }

PLPath circle16() {
    std::vector<Point> v = {
        {q(1), q(1, 5)},   {q(9, 10), q(3, 5)},   {q(3, 5), q(9, 10)},
        {q(1, 5), q(1)},   {q(-1, 5), q(1)},      {q(-3, 5), q(9, 10)},
        {q(-9, 10), q(3, 5)}, {q(-1), q(1, 5)},   {q(-1), q(-1, 5)},
        {q(-9, 10), q(-3, 5)}, {q(-3, 5), q(-9, 10)}, {q(-1, 5), q(-1)},
        {q(1, 5), q(-1)},  {q(3, 5), q(-9, 10)},  {q(9, 10), q(-3, 5)},
        {q(1), q(-1, 5)}};
    return make_loop(v);
}

Trace half_disc(const Surface& surface) {
    PLPath alpha = make_line(point(0, 0), point(1, 0));
    PLPath beta = circle16();
    auto pts = intersect_curves(alpha, beta);
    BoundaryPathSpec ga{pts[0], pts[1], Direction::Forward, 0};
    BoundaryPathSpec gb{pts[0], pts[1], Direction::Backward, 0};
    return make_trace(surface, alpha, beta, pts[0], pts[1], ga, gb);
}

Trace constant_trace() {
    PLPath alpha = make_line(point(0, 0), point(1, 0));
    PLPath beta = circle16();
    auto pts = intersect_curves(alpha, beta);
    BoundaryPathSpec g{pts[0], pts[0], Direction::None, 0};
    return make_trace(Surface::plane(), alpha, beta, pts[0], pts[0], g, g);
}

Trace rect_pair_trace(long long na, long long nb) {
    PLPath alpha = make_loop({point(0, 0), point(4, 0), point(4, 4), point(0, 4)});
    PLPath beta = make_loop({point(2, 2), point(6, 2), point(6, 6), point(2, 6)});
    auto pts = intersect_curves(alpha, beta);
    const IntersectionPoint* z = nullptr;
    for (const auto& p : pts)
        if (p.location == point(4, 2)) z = &p;
    BoundaryPathSpec ga{*z, *z, Direction::None, na};
    BoundaryPathSpec gb{*z, *z, Direction::None, nb};
    return make_trace(Surface::plane(), alpha, beta, *z, *z, ga, gb);
}

// Deterministic points off both curves, inside a padded window of the trace.
std::vector<Point> off_curve_points(const Trace& t, size_t want) {
    Box b = box_of(gamma_loop(t));
    b.expand(t.x.location);
    b.expand(t.y.location);
    b.pad(1);
    std::vector<Point> out;
    std::vector<PLPath> lifts = curve_lifts(t);
    long long x0 = 0, y0 = 0;  // integer walk over the window
    Rational w = b.xmax - b.xmin, h = b.ymax - b.ymin;
    for (long long j = 0; j < 40 && out.size() < want; ++j)
        for (long long i = 0; i < 40 && out.size() < want; ++i) {
            Point p{b.xmin + w * q(2 * i + 1, 80) + q(1, 17),
                    b.ymin + h * q(2 * j + 1, 80) + q(1, 23)};
            bool on = false;
            for (const auto& c : lifts)
                if (point_on_path(c, p)) on = true;
            if (!on) out.push_back(p);
            (void)x0;
            (void)y0;
        }
    return out;
}

bool four_methods_agree(const Trace& t, std::string& detail) {
    long long tf = maslov_via_trace_formula(t);
    long long arc = maslov_via_arc_formula(t);
    long long dir = maslov_direct(t);
    long long rec = maslov_recursive(t);
    if (tf == arc && arc == dir && dir == rec) return true;
    detail = "tf=" + std::to_string(tf) + " arc=" + std::to_string(arc) +
             " direct=" + std::to_string(dir) + " recursive=" + std::to_string(rec);
    return false;
}

}  // namespace

static void criterion1() {
    auto start = Clock::now();
    std::string detail;
    bool pass = true;
    for (std::uint64_t i = 0; i < 500 && pass; ++i) {
        try {
            Trace t = to_trace(generate(1000 + i, Profile::PlaneArc));
            if (!four_methods_agree(t, detail)) {
                detail = "seed " + std::to_string(1000 + i) + " " + detail;
                pass = false;
            }
        } catch (const Error& e) {
            detail = "seed " + std::to_string(1000 + i) + " threw: " + e.what();
            pass = false;
        }
    }
    double secs = seconds_since(start);
    if (pass && secs >= 30.0) {
        pass = false;
        detail = "exceeded the 30 second budget";
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "four-method agreement on 500 plane arc traces (%.1fs)",
                  secs);
    report(1, pass, buf, detail);
}

static void criterion2() {
    std::string detail;
    bool pass = true;
    for (std::uint64_t i = 0; i < 500 && pass; ++i) {
        try {
            Trace t = to_trace(generate(2000 + i, Profile::PlaneGeneral));
            long long tf = maslov_via_trace_formula(t);
            long long dir = maslov_direct(t);
            if (tf != dir) {
                detail = "seed " + std::to_string(2000 + i) + " tf=" + std::to_string(tf) +
                         " direct=" + std::to_string(dir);
                pass = false;
            }
        } catch (const Error& e) {
            detail = "seed " + std::to_string(2000 + i) + " threw: " + e.what();
            pass = false;
        }
    }
    report(2, pass, "trace formula equals direct sweep on 500 plane loop traces", detail);
}

static void criterion3() {
    std::string detail;
    bool pass = true;
    try {
        Trace hd = half_disc(Surface::plane());
        ArcFormulaData d = arc_formula_data(hd);
        if (d.eps_x != 1 || d.eps_y != -1 || d.k_x != 0 || d.k_y != 0 || d.mu != 1) {
            pass = false;
            detail = "half-disc constants off";
        }
        Trace c = constant_trace();
        if (m_value(c, c.x) != 0 || maslov_via_trace_formula(c) != 0) {
            pass = false;
            detail = "constant trace not zero";
        }
        for (long long na = -2; na <= 2 && pass; ++na)
            for (long long nb = -2; nb <= 2 && pass; ++nb) {
                Trace t = rect_pair_trace(na, nb);
                long long mu = 2 * na - 2 * nb;
                if (maslov_via_trace_formula(t) != mu || maslov_direct(t) != mu) {
                    pass = false;
                    detail = "loop-pair closed form failed at na=" + std::to_string(na) +
                             " nb=" + std::to_string(nb);
                }
            }
    } catch (const Error& e) {
        pass = false;
        detail = e.what();
    }
    report(3, pass, "worked constants (half-disc, constant trace, loop-pair grid)", detail);
}

static void criterion4() {
    std::string detail;
    bool pass = true;
    std::vector<Trace> traces;
    try {
        for (std::uint64_t i = 0; i < 20; ++i)
            traces.push_back(to_trace(generate(4000 + i, Profile::Word)));
        for (std::uint64_t i = 0; i < 20; ++i)
            traces.push_back(to_trace(generate(4100 + i, Profile::PlaneGeneral)));
    } catch (const Error& e) {
        pass = false;
        detail = std::string("generation threw: ") + e.what();
    }
    for (size_t k = 0; k < traces.size() && pass; ++k) {
        const Trace& t = traces[k];
        try {
            BoundaryReport br = verify_boundary(t);
            if (!br.all_pass) {
                pass = false;
                detail = "boundary relation failed on trace " + std::to_string(k);
                break;
            }
            auto pts = off_curve_points(t, 51);
            if (pts.size() < 2) continue;
            TwoChainEval w = degree_two_chain(t);
            ReconstructedW r =
                reconstruct_w_from_nu(boundary_one_chain(t), pts[0], w(pts[0]));
            for (size_t j = 1; j < pts.size(); ++j)
                if (r(pts[j]) != w(pts[j])) {
                    pass = false;
                    detail = "reconstruction mismatch on trace " + std::to_string(k);
                    break;
                }
        } catch (const Error& e) {
            pass = false;
            detail = "trace " + std::to_string(k) + " threw: " + e.what();
        }
    }
    report(4, pass, "boundary relation and reconstruction from the one-chain", detail);
}

static void criterion5() {
    std::string detail;
    bool pass = true;
    for (std::uint64_t i = 0; i < 200 && pass; ++i) {
        try {
            Trace t1 = to_trace(generate(5000 + i, Profile::Word));
            BoundaryPathSpec ga{t1.y, t1.x, Direction::Backward, 0};
            BoundaryPathSpec gb{t1.y, t1.x, Direction::Backward, 0};
            Trace t2 = make_trace(t1.surface, t1.alpha, t1.beta, t1.y, t1.x, ga, gb,
                                  t1.sphere_offset);
            Trace cat = catenate(t1, t2);
            if (maslov_via_trace_formula(cat) !=
                maslov_via_trace_formula(t1) + maslov_via_trace_formula(t2)) {
                pass = false;
                detail = "index not additive at seed " + std::to_string(5000 + i);
                break;
            }
            TwoChainEval w1 = degree_two_chain(t1);
            TwoChainEval w2 = degree_two_chain(t2);
            TwoChainEval wc = degree_two_chain(cat);
            auto pts = off_curve_points(t1, 10);
            for (const auto& p : pts)
                if (wc(p) != w1(p) + w2(p)) {
                    pass = false;
                    detail = "two-chain not additive at seed " + std::to_string(5000 + i);
                    break;
                }
            for (const IntersectionPoint* z : {&t1.x, &t1.y})
                if (pass && m_value(cat, *z) != m_value(t1, *z) + m_value(t2, *z)) {
                    pass = false;
                    detail = "m value not additive at seed " + std::to_string(5000 + i);
                }
        } catch (const Error& e) {
            pass = false;
            detail = "seed " + std::to_string(5000 + i) + " threw: " + e.what();
        }
    }
    report(5, pass, "catenation additivity of index, two-chain and m values (200 pairs)",
           detail);
}

static void criterion6() {
    auto start = Clock::now();
    std::string detail;
    bool pass = true;
    auto run = [&](Profile profile, std::uint64_t base, int n) {
        for (std::uint64_t i = 0; i < std::uint64_t(n) && pass; ++i) {
            try {
                Trace t = to_trace(generate(base + i, profile));
                LiftedTrace lt = lift_trace(t);
                GmReport gm = verify_gm(lt);
                if (!gm.all_pass) {
                    pass = false;
                    detail = "pairing identity failed at seed " + std::to_string(base + i);
                    return;
                }
                if (!truncation_stable(lt)) {
                    pass = false;
                    detail = "truncation unstable at seed " + std::to_string(base + i);
                    return;
                }
                if (maslov_quotient(t) != maslov_via_trace_formula(t)) {
                    pass = false;
                    detail = "quotient index disagreement at seed " + std::to_string(base + i);
                    return;
                }
            } catch (const Error& e) {
                pass = false;
                detail = "seed " + std::to_string(base + i) + " threw: " + e.what();
                return;
            }
        }
    };
    run(Profile::Annulus, 6000, 100);
    run(Profile::Torus, 6500, 50);
    // Fixed annulus bigon: lifted m values pair to zero off the endpoints and
    // m_x = m_y = mu.
    if (pass) {
        try {
            Trace t = to_trace(parse_document(
                [] {
                    std::string path = std::string(FIXTURES_DIR) + "/annulus_bigon.trace";
                    FILE* f = std::fopen(path.c_str(), "rb");
                    if (!f) throw ParseError("missing fixture " + path);
                    std::string text;
                    char buf[512];
                    size_t got;
                    while ((got = std::fread(buf, 1, sizeof buf, f)) > 0)
                        text.append(buf, got);
                    std::fclose(f);
                    return text;
                }()));
            long long mx = m_value(t, t.x);
            long long my = m_value(t, t.y);
            long long mu = maslov_quotient(t);
            LiftedTrace lt = lift_trace(t);
            GmReport gm = verify_gm(lt);
            if (!(mx == my && my == mu && mu == 1 && gm.all_pass)) {
                pass = false;
                detail = "annulus bigon fixture arithmetic off";
            }
        } catch (const Error& e) {
            pass = false;
            detail = std::string("fixture threw: ") + e.what();
        }
    }
    double secs = seconds_since(start);
    if (pass && secs >= 60.0) {
        pass = false;
        detail = "exceeded the 60 second budget";
    }
    char buf[112];
    std::snprintf(buf, sizeof buf,
                  "covering identities on 100 annulus and 50 torus traces (%.1fs)", secs);
    report(6, pass, buf, detail);
}

static void criterion7() {
    std::string detail;
    bool pass = true;
    try {
        Trace base = half_disc(Surface::sphere_plane());
        for (long long d = -2; d <= 2 && pass; ++d) {
            Trace s = sphere_shift(base, d);
            if (maslov_via_trace_formula(s) != 1 + 4 * d || maslov_direct(s) != 1 + 4 * d ||
                m_value(s, s.x) != 1 + 4 * d || m_value(s, s.y) != 1 + 4 * d) {
                pass = false;
                detail = "shift by d=" + std::to_string(d) + " off";
            }
        }
    } catch (const Error& e) {
        pass = false;
        detail = e.what();
    }
    report(7, pass, "sphere offset shifts index and m values by 4d, d in -2..2", detail);
}

static void criterion8() {
    std::string detail;
    bool pass = true;
    for (std::uint64_t i = 0; i < 200 && pass; ++i) {
        try {
            CrossingWord w = generate_word(8000 + i, 2 + int(i % 23));
            CrossingWord r = reduce(w);
            if (!(reduce(r) == r)) {
                pass = false;
                detail = "reduce not idempotent at seed " + std::to_string(8000 + i);
                break;
            }
            if (classify(r).empty()) {
                pass = false;
                detail = "reduced word matches no case at seed " + std::to_string(8000 + i);
                break;
            }
            ArcFormulaData full = arc_formula_data(realize_word(w));
            ArcFormulaData red = arc_formula_data(realize_word(r));
            if (full.mu != red.mu || full.k_x != red.k_x || full.k_y != red.k_y ||
                full.eps_x != red.eps_x || full.eps_y != red.eps_y) {
                pass = false;
                detail = "reduction changed the invariants at seed " + std::to_string(8000 + i);
            }
        } catch (const Error& e) {
            pass = false;
            detail = "seed " + std::to_string(8000 + i) + " threw: " + e.what();
        }
    }
    report(8, pass, "reduction calculus on 200 random words", detail);
}

static void criterion9() {
    std::string detail;
    bool pass = true;
    auto check = [&](Profile profile, std::uint64_t base, int n) {
        for (std::uint64_t i = 0; i < std::uint64_t(n) && pass; ++i) {
            try {
                Trace t = to_trace(generate(base + i, profile));
                long long mx = m_value(t, t.x);
                long long my = m_value(t, t.y);
                if ((mx + my) % 2 != 0) {
                    pass = false;
                    detail = "odd m_x + m_y at seed " + std::to_string(base + i);
                }
            } catch (const Error& e) {
                pass = false;
                detail = "seed " + std::to_string(base + i) + " threw: " + e.what();
            }
        }
    };
    check(Profile::Word, 9000, 50);
    check(Profile::PlaneGeneral, 9100, 50);
    check(Profile::Annulus, 9200, 25);
    check(Profile::Torus, 9300, 25);
    report(9, pass, "m_x + m_y is even on every sampled trace", detail);
}

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    return failures == 0 ? 0 : 1;
}
