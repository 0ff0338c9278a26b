#pragma once

#include "maslov/trace.hpp"

namespace maslov {

/// Throws NotNormalized unless the trace lives on the plane with alpha the
/// x-axis oriented rightward and x strictly left of y.
void require_normalized(const Trace& t);

/// mu = (m_x + m_y) / 2; the division must be exact.
long long maslov_via_trace_formula(const Trace& t);

/// mu = 2 k_x + 2 k_y + (eps_x - eps_y) / 2 on a normalized planar trace
/// (alpha is the x-axis, the boundary arc runs left to right) satisfying the
/// arc condition.
long long maslov_via_arc_formula(const Trace& t);

/// Degree of the composite tangent-line loop: tangent classes along
/// gamma_alpha, a counterclockwise endpoint turn at y, the gamma_beta classes
/// in reverse, and a clockwise turn at x; plus 4 d for the sphere offset.
long long maslov_direct(const Trace& t);

/// Recursive evaluation on the crossing word of a normalized planar
/// arc-condition trace.
long long maslov_recursive(const Trace& t);

/// Data entering the arc formula.
struct ArcFormulaData {
    long long k_x = 0;
    long long k_y = 0;
    int eps_x = 0;
    int eps_y = 0;
    long long mu = 0;
};

ArcFormulaData arc_formula_data(const Trace& t);

}  // namespace maslov
