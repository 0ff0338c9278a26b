#pragma once

#include "maslov/trace.hpp"

namespace maslov {

/// Evaluator for the degree two-chain w. On the plane w(z) is the winding
/// number of the boundary loop around z plus the sphere offset; on quotient
/// surfaces it sums the winding over all deck translates of z.
struct TwoChainEval {
    std::vector<Point> loop;
    Surface surface;
    long long offset = 0;
    Box loop_box{};

    long long operator()(const Point& z) const;
};

TwoChainEval degree_two_chain(const Trace& t);

/// One cell of alpha minus beta (or beta minus alpha): a parameter interval
/// between consecutive crossings, with the chain value carried on it.
struct Cell {
    Rational lo;
    Rational hi;
    bool lo_unbounded = false;
    bool hi_unbounded = false;
    Rational sample_param;
    Point sample_point;
    long long value = 0;
};

struct OneChain {
    PLPath alpha;
    PLPath beta;                 // the lift carrying the boundary path
    std::vector<Point> beta_offsets;
    std::vector<Cell> alpha_cells;
    std::vector<Cell> beta_cells;
    Rational alpha_modulus;      // cyclic parameter modulus, or 0 if none
    Rational beta_modulus;

    long long min_abs_alpha() const;
    long long min_abs_beta() const;
    /// Value at a curve parameter (0 on untouched or unbounded-default cells).
    long long alpha_value(const Rational& t) const;
    long long beta_value(const Rational& t) const;
};

OneChain boundary_one_chain(const Trace& t);

/// arc_condition against an already-built boundary one-chain, saving the
/// rebuild when the caller needs the chain anyway.
ArcCondition arc_condition(const Trace& t, const OneChain& nu);

struct BoundaryCellCheck {
    bool on_alpha = true;
    Rational sample_param;
    Point sample_point;
    long long expected = 0;   // stored one-chain value
    long long observed = 0;   // two-chain difference across the cell
    bool pass = false;
};

struct BoundaryReport {
    std::vector<BoundaryCellCheck> cells;
    bool all_pass = true;
};

/// Checks the boundary relation on every cell: the chain value equals the
/// two-chain just left of the cell minus the two-chain just right of it,
/// sides taken relative to the carrying curve's orientation.
BoundaryReport verify_boundary(const Trace& t);

/// Same check against a caller-supplied one-chain (e.g. a corrupted copy).
BoundaryReport verify_boundary(const Trace& t, const OneChain& nu);

/// Evaluator reconstructing w from the one-chain by integrating signed cell
/// crossings along a path from the anchor point.
struct ReconstructedW {
    OneChain nu;
    Point base;
    long long base_value = 0;

    long long operator()(const Point& z) const;
};

ReconstructedW reconstruct_w_from_nu(OneChain nu, Point base, long long base_value);

/// True when the probe segment [z, p] meets the curves only at z, so p lies in
/// a face adjacent to z's cell.
bool probe_clear(const std::vector<PLPath>& lifts, const Point& z, const Point& p);

/// m_value against caller-supplied lifts and two-chain, saving the rebuild
/// when evaluating at several crossings of the same trace.
long long m_value(const Trace& t, const IntersectionPoint& z,
                  const std::vector<PLPath>& lifts, const TwoChainEval& w);

/// Two-chain value in the face beside a curve point z: side +1 samples just
/// left of the tangent direction, -1 just right.
long long w_beside(const Trace& t, const TwoChainEval& w, const Point& z,
                   const Point& tangent, int side);
long long w_beside(const std::vector<PLPath>& lifts, const TwoChainEval& w,
                   const Point& z, const Point& tangent, int side);

}  // namespace maslov
