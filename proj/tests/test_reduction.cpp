#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "maslov/chains.hpp"
#include "maslov/maslov.hpp"
#include "maslov/reduction.hpp"
#include "fixtures.hpp"

#include <algorithm>

using namespace maslov;
using namespace fixtures;

namespace {

WordCrossing wc(Rational pos, Vertical d) {
    return {pos, d == Vertical::Up ? 1 : -1, d};
}

// x at 0 (up), then 3 (down), back to 1 (up), ending at y = 2 (down).
CrossingWord four_word() {
    CrossingWord w;
    w.crossings = {wc(q(0), Vertical::Up), wc(q(1), Vertical::Up),
                   wc(q(2), Vertical::Down), wc(q(3), Vertical::Down)};
    w.traversal = {0, 3, 1, 2};
    w.x_index = 0;
    w.y_index = 2;
    w.validate();
    return w;
}

// four_word with an extra back-and-forth pair at 5/2, 11/4 inside (y, inf).
CrossingWord four_word_padded() {
    CrossingWord w;
    w.crossings = {wc(q(0), Vertical::Up),      wc(q(1), Vertical::Up),
                   wc(q(2), Vertical::Down),    wc(q(5, 2), Vertical::Down),
                   wc(q(11, 4), Vertical::Up),  wc(q(3), Vertical::Down)};
    w.traversal = {0, 3, 4, 5, 1, 2};
    w.x_index = 0;
    w.y_index = 2;
    w.validate();
    return w;
}

}  // namespace

TEST_CASE("half-disc crossing profile") {
    CrossingWord w = crossing_profile(half_disc_trace());
    REQUIRE(w.crossings.size() == 2);
    CHECK(w.crossings[w.x_index].dir == Vertical::Up);
    CHECK(w.crossings[w.y_index].dir == Vertical::Down);
    CHECK(w.next_along(w.x_index) == w.y_index);
    CHECK(w.next_along(w.y_index) == -1);
    CHECK(is_reduced(w));
}

TEST_CASE("profile requires normalization") {
    CHECK_THROWS_AS(crossing_profile(lower_half_disc_trace()), NotNormalized);
    CHECK_THROWS_AS(crossing_profile(rect_half_disc_trace(0)), NotNormalized);
}

TEST_CASE("realized word reproduces its profile") {
    for (const CrossingWord& w : {four_word(), four_word_padded()}) {
        Trace t = realize_word(w);
        CHECK(crossing_profile(t) == w);
    }
}

TEST_CASE("walking f from x reaches y in n-1 steps") {
    CrossingWord w = four_word_padded();
    int z = w.x_index;
    for (size_t k = 0; k + 1 < w.crossings.size(); ++k) z = w.next_along(z);
    CHECK(z == w.y_index);
}

TEST_CASE("reduce removes same-interval pairs") {
    CrossingWord padded = four_word_padded();
    CHECK(!is_reduced(padded));
    CrossingWord r = reduce(padded);
    CHECK(r == four_word());
    CHECK(reduce(r) == r);
    CHECK(reduce(four_word()) == four_word());
}

TEST_CASE("classification of small words") {
    auto cases = classify(crossing_profile(half_disc_trace()));
    CHECK(std::count(cases.begin(), cases.end(), WordCase::Case1) == 1);
    CHECK(cases.size() == 4);  // the others hold vacuously

    auto c4 = classify(four_word());
    CHECK(c4 == std::vector<WordCase>{WordCase::Case1, WordCase::Case4});

    CHECK_THROWS_AS(classify(four_word_padded()), NotReduced);
}

TEST_CASE("interleaved words are rejected") {
    CrossingWord w;
    w.crossings = {wc(q(0), Vertical::Up), wc(q(1), Vertical::Up),
                   wc(q(2), Vertical::Down), wc(q(3), Vertical::Down)};
    w.traversal = {0, 2, 1, 3};
    w.x_index = 0;
    w.y_index = 3;
    w.validate();
    CHECK(!is_realizable(w));
    CHECK_THROWS_AS(realize_word(w), SemanticError);
}

TEST_CASE("four methods agree on realized words") {
    for (const CrossingWord& w : {four_word(), four_word_padded()}) {
        Trace t = realize_word(w);
        long long mu = maslov_via_trace_formula(t);
        CHECK(maslov_via_arc_formula(t) == mu);
        CHECK(maslov_direct(t) == mu);
        CHECK(maslov_recursive(t) == mu);
    }
    CHECK(maslov_via_trace_formula(realize_word(four_word())) == 3);
}

TEST_CASE("reduction preserves the arc formula data") {
    Trace t1 = realize_word(four_word_padded());
    Trace t2 = realize_word(reduce(four_word_padded()));
    ArcFormulaData d1 = arc_formula_data(t1);
    ArcFormulaData d2 = arc_formula_data(t2);
    CHECK(d1.mu == d2.mu);
    CHECK(d1.k_x == d2.k_x);
    CHECK(d1.k_y == d2.k_y);
    CHECK(d1.eps_x == d2.eps_x);
    CHECK(d1.eps_y == d2.eps_y);
}

TEST_CASE("sign sum identity") {
    for (const CrossingWord& w : {crossing_profile(half_disc_trace()),
                                  four_word(), four_word_padded()}) {
        Trace t = realize_word(w);
        ArcFormulaData d = arc_formula_data(t);
        long long total = 0;
        for (const auto& c : w.crossings) total += c.sign;
        CHECK(2 * total == d.eps_x + d.eps_y);
    }
}

TEST_CASE("recursive method on fixtures") {
    CHECK(maslov_recursive(half_disc_trace()) == 1);
    CHECK_THROWS_AS(maslov_recursive(constant_trace()), NotNormalized);
}
