#pragma once

#include "conic_cubics/errors.hpp"

#include <stdexcept>

namespace conic_cubics {

enum class ConicClass {
    Parabola,
    Circle,
    RectangularHyperbola,
    Ellipse,
    GeneralHyperbola,
    Degenerate,
};

const char* to_string(ConicClass cls);

/// Discriminant classification of A x^2 + B xy + C y^2 + D x + E y + F.
/// Requires (A, B, C) != (0, 0, 0).
ConicClass conic_classify(double A, double B, double C, double D, double E, double F);

/// Bivariate quadratic locus A x^2 + B xy + C y^2 + D x + E y + F = 0.
/// The class tag is fixed at construction from the coefficients.
struct Conic {
    double A, B, C, D, E, F;
    ConicClass cls;

    Conic(double A_, double B_, double C_, double D_, double E_, double F_)
        : A(A_), B(B_), C(C_), D(D_), E(E_), F(F_),
          cls(conic_classify(A_, B_, C_, D_, E_, F_)) {}

    double value_at(double x, double y) const {
        return (A * x + B * y + D) * x + (C * y + E) * y + F;
    }
    double dx_at(double x, double y) const { return 2.0 * A * x + B * y + D; }
    double dy_at(double x, double y) const { return B * x + 2.0 * C * y + E; }
};

bool on_curve(const Conic& conic, double x, double y, double tol);

} // namespace conic_cubics
