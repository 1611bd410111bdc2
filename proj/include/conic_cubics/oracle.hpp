#pragma once

#include "conic_cubics/poly.hpp"
#include "conic_cubics/root_report.hpp"

namespace conic_cubics {

/// Closed-form real-root solvers used as ground truth. Deliberately
/// self-contained: no code shared with the conic-intersection path.
RootReport solve_cubic_oracle(const Cubic& cubic);
RootReport solve_quartic_oracle(const Quartic& quartic);

/// Keep roots strictly greater than tol (segment-length admissibility).
RootReport positive_roots(const RootReport& report, double tol = 1e-10);

} // namespace conic_cubics
