#pragma once

#include "maslov/trace.hpp"

namespace maslov {

enum class Vertical { Up, Down };

/// One crossing of the boundary arc B with the x-axis.
struct WordCrossing {
    Rational position;        // x-coordinate on the axis
    int sign = 0;             // intersection index of the axis and B
    Vertical dir = Vertical::Up;  // B's forward tangent points up

    bool operator==(const WordCrossing&) const = default;
};

/// Combinatorial record of B against the axis: crossings ordered by position
/// plus the order in which B visits them from x to y.
struct CrossingWord {
    std::vector<WordCrossing> crossings;  // strictly increasing positions
    std::vector<int> traversal;           // indices in B order, x first, y last
    int x_index = 0;
    int y_index = 0;

    bool operator==(const CrossingWord&) const = default;

    /// Structural checks: ordering, permutation, endpoints, alternation of
    /// direction classes along B, sign consistency. Throws SemanticError.
    void validate() const;

    /// The next crossing along B after crossing i (the map f); -1 for y.
    int next_along(int i) const;

    const Rational& x_pos() const { return crossings[x_index].position; }
    const Rational& y_pos() const { return crossings[y_index].position; }
};

/// Reads the word off a normalized planar arc-condition trace.
CrossingWord crossing_profile(const Trace& t);

/// Deletes pairs (z, f(z)) lying in the same open interval among (-inf,x),
/// (x,y), (y,inf) until none remain.
CrossingWord reduce(CrossingWord word);

bool is_reduced(const CrossingWord& word);

enum class WordCase { Case1, Case2, Case3, Case4 };

/// All cases the reduced word satisfies:
///   Case1: every up-crossing except y maps forward under f;
///   Case2: all down-crossings lie in [x,y];
///   Case3: every down-crossing except y maps forward under f;
///   Case4: all up-crossings lie in [x,y].
/// Throws NotReduced on an unreduced word.
std::vector<WordCase> classify(const CrossingWord& word);

/// Realizes the word as a normalized planar trace: alpha is the x-axis and
/// beta a staircase arc whose chords nest by depth, with short dangling ends
/// past the axis at x and y. Requires the chords of each half plane to be
/// non-interleaved; throws SemanticError otherwise.
Trace realize_word(const CrossingWord& word);

/// True if the chords of each half plane are pairwise nested or disjoint,
/// i.e. the word is realizable by an embedded arc.
bool is_realizable(const CrossingWord& word);

}  // namespace maslov
