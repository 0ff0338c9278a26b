#pragma once

#include "maslov/chains.hpp"

namespace maslov {

/// Translation deck group of an annulus (one generator) or torus (two).
/// The truncation radius bounds the translate coefficients that can touch the
/// lifted boundary loop; everything beyond contributes zero to every sum.
struct DeckGroup {
    std::vector<Point> generators;
    long long truncation = 0;

    /// All nonzero lattice vectors with coefficients up to the radius.
    std::vector<Point> translates(long long radius) const;
};

/// A quotient trace together with its planar lift through x.
struct LiftedTrace {
    Trace base;          // the quotient trace; its legs live on the lifts
    Point x_lift;        // left endpoint of the lifted boundary paths
    Point y_lift;        // their common endpoint in the plane
    DeckGroup deck;

    /// Planar two-chain of the lift (no translate sums).
    TwoChainEval w_tilde() const;
};

/// Lifts an annulus or torus trace to the plane.
LiftedTrace lift_trace(const Trace& t);

/// m-value of the lift at an arbitrary point p: quadrant sum at a crossing of
/// the lifted curves, twice the two side values on a single curve, and four
/// times the planar two-chain off both.
long long lifted_m(const LiftedTrace& lt, const Point& p);

/// Sum of the planar two-chain over the deck translates of z; z must avoid the
/// quotient curves. Throws TruncationTooSmall if the translate shell at the
/// truncation radius still carries a nonzero value.
long long quotient_w(const LiftedTrace& lt, const Point& z);

struct GmCheck {
    Point g;             // the deck translation vector
    long long m_gx = 0;  // m at x + g
    long long m_giy = 0; // m at y - g
    long long m_gy = 0;  // m at y + g
    long long m_gix = 0; // m at x - g
    bool gm_pass = false;   // m_gx + m_giy == 0
    bool comparison_applies = false;  // all four translated endpoints off the arcs
    bool comparison_pass = false;     // m_gx - m_gy == m_giy - m_gix when it applies
};

struct GmReport {
    std::vector<GmCheck> checks;
    bool all_pass = true;
};

/// Checks, for every non-identity translate within the truncation radius, the
/// pairing identity m(x+g) + m(y-g) = 0, and the comparison identity
/// m(x+g) - m(y+g) = m(y-g) - m(x-g) whenever the translated endpoints stay
/// off the boundary arcs.
GmReport verify_gm(const LiftedTrace& lt);

struct IncidenceCheck {
    Point g;
    bool pass = false;
};

/// Arc/deck incidence on arc-condition lifts, per curve arc: x+g on the arc
/// iff y-g is; x+g and y+g both off the arc iff the translated arc misses it;
/// both on it only for the identity.
std::vector<IncidenceCheck> verify_incidence(const LiftedTrace& lt);

/// True if every translate-sum is unchanged when the truncation radius grows
/// by one (the shell check).
bool truncation_stable(const LiftedTrace& lt);

/// Viterbo-Maslov index of a quotient trace, computed on the lift.
long long maslov_quotient(const Trace& t);

}  // namespace maslov
