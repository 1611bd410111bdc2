#pragma once

#include "conic_cubics/conic.hpp"

#include <vector>

namespace conic_cubics {

/// Real intersection point with a contact-order estimate.
struct Point2 {
    double x;
    double y;
    int multiplicity = 1;
};

/// Resultant of the two conics with respect to y: a univariate polynomial
/// of degree <= 4 in x (coefficients highest first, leading zeros trimmed)
/// whose real roots are the x-coordinates of the intersection points.
/// Throws ProportionalConics when the coefficient vectors are parallel.
std::vector<double> eliminate_to_quartic(const Conic& c1, const Conic& c2);

/// All real intersection points of two non-degenerate, non-proportional
/// conics, Newton-refined, validated on both curves, sorted by x then y.
/// An empty result means no real intersection.
std::vector<Point2> intersect_conics(const Conic& c1, const Conic& c2, double tol = 1e-10);

/// Best-effort refinement of a seed on the two-residual system; falls back
/// to damped least-squares steps when the Jacobian is singular (tangency).
Point2 newton_refine(const Conic& c1, const Conic& c2, Point2 seed);

} // namespace conic_cubics
