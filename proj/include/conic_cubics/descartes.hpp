#pragma once

#include "conic_cubics/conic.hpp"
#include "conic_cubics/poly.hpp"
#include "conic_cubics/root_report.hpp"

namespace conic_cubics {

/// Fixed parabola y = z^2 plus the completed-square circle whose
/// intersections with it carry the roots of a depressed cubic or quartic.
struct DescartesConstruction {
    Conic parabola;       // y - z^2 = 0, the same for every case
    double center_z;      // -q / 2
    double center_y;      // -(p - 1) / 2
    double radius_sq;     // (p-1)^2/4 + q^2/4 - r
    bool valid;           // radius_sq > 0
    DepressedForm source;

    Conic circle() const {
        return Conic(1.0, 0.0, 1.0, -2.0 * center_z, -2.0 * center_y,
                     center_z * center_z + center_y * center_y - radius_sq);
    }
};

/// Degree-3 inputs are embedded as quartics with r = 0.
DescartesConstruction descartes_construction(const DepressedForm& form);

/// All real roots (negative included) recovered from the parabola-circle
/// intersections; candidates are validated against the polynomial.
RootReport solve_descartes(const DepressedForm& form, double tol = 1e-10);

} // namespace conic_cubics
