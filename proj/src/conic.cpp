#include "conic_cubics/conic.hpp"

#include <algorithm>
#include <cmath>

namespace conic_cubics {

namespace {
constexpr double kClassTol = 1e-10;
}

const char* to_string(ConicClass cls) {
    switch (cls) {
        case ConicClass::Parabola: return "parabola";
        case ConicClass::Circle: return "circle";
        case ConicClass::RectangularHyperbola: return "rectangular hyperbola";
        case ConicClass::Ellipse: return "ellipse";
        case ConicClass::GeneralHyperbola: return "hyperbola";
        case ConicClass::Degenerate: return "degenerate";
    }
    return "?";
}

ConicClass conic_classify(double A, double B, double C, double D, double E, double F) {
    const double t = std::max({std::abs(A), std::abs(B), std::abs(C)});
    if (t == 0.0)
        throw std::invalid_argument("not a second-degree curve");

    // Determinant of the symmetric 3x3 matrix of the quadratic form.
    const double b = B / 2.0, d = D / 2.0, e = E / 2.0;
    const double det3 = A * (C * F - e * e) - b * (b * F - e * d) + d * (b * e - C * d);
    const double m = std::max({t, std::abs(D), std::abs(E), std::abs(F)});
    if (std::abs(det3) <= kClassTol * m * m * m) return ConicClass::Degenerate;

    const double disc = B * B - 4.0 * A * C;
    if (std::abs(disc) <= kClassTol * t * t) return ConicClass::Parabola;
    if (disc < 0.0) {
        if (std::abs(A - C) <= kClassTol * t && std::abs(B) <= kClassTol * t)
            return ConicClass::Circle;
        return ConicClass::Ellipse;
    }
    if (std::abs(A + C) <= kClassTol * t) return ConicClass::RectangularHyperbola;
    return ConicClass::GeneralHyperbola;
}

bool on_curve(const Conic& conic, double x, double y, double tol) {
    const double coeff = std::max({std::abs(conic.A), std::abs(conic.B), std::abs(conic.C),
                                   std::abs(conic.D), std::abs(conic.E), std::abs(conic.F)});
    const double span = std::max({1.0, std::abs(x), std::abs(y)});
    return std::abs(conic.value_at(x, y)) <= tol * coeff * span * span;
}

} // namespace conic_cubics
