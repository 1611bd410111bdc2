#include "conic_cubics/poly.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace conic_cubics {

namespace {

// Zero coefficients below this fraction of the largest coefficient are
// treated as structurally zero when matching sign patterns.
constexpr double kStructuralZero = 1e-12;

int sign_of(double v, double scale) {
    if (std::abs(v) <= kStructuralZero * scale) return 0;
    return v > 0.0 ? 1 : -1;
}

} // namespace

bool type_has_a(int type_id) { return type_id >= 16; }

bool type_has_b(int type_id) {
    return (type_id >= 13 && type_id <= 15) || type_id >= 19;
}

const char* type_pattern(int type_id) {
    switch (type_id) {
        case 3:  return "x^3 = c";
        case 13: return "x^3 + bx = c";
        case 14: return "x^3 + c = bx";
        case 15: return "x^3 = bx + c";
        case 16: return "x^3 + ax^2 = c";
        case 17: return "x^3 + c = ax^2";
        case 18: return "x^3 = ax^2 + c";
        case 19: return "x^3 + ax^2 + bx = c";
        case 20: return "x^3 + ax^2 + c = bx";
        case 21: return "x^3 + bx + c = ax^2";
        case 22: return "x^3 = ax^2 + bx + c";
        case 23: return "x^3 + ax^2 = bx + c";
        case 24: return "x^3 + bx = ax^2 + c";
        case 25: return "x^3 + c = ax^2 + bx";
        default: return "?";
    }
}

KhayyamForm classify(double c3, double c2, double c1, double c0) {
    if (c3 == 0.0 || !std::isfinite(c3))
        throw NotClassifiable("leading coefficient is zero");

    // Monic form x^3 + A x^2 + B x + C = 0.
    const double A = c2 / c3;
    const double B = c1 / c3;
    const double C = c0 / c3;
    const double scale = std::max({1.0, std::abs(A), std::abs(B), std::abs(C)});

    const int sa = sign_of(A, scale);
    const int sb = sign_of(B, scale);
    const int sc = sign_of(C, scale);

    // Move terms across the equality so every magnitude is positive; the
    // x^3 term stays on the left. Each admissible sign triple of (A, B, C)
    // lands on exactly one of the fourteen catalog entries.
    int type = 0;
    if (sa == 0 && sb == 0 && sc < 0) type = 3;
    else if (sa == 0 && sb > 0 && sc < 0) type = 13;
    else if (sa == 0 && sb < 0 && sc > 0) type = 14;
    else if (sa == 0 && sb < 0 && sc < 0) type = 15;
    else if (sa > 0 && sb == 0 && sc < 0) type = 16;
    else if (sa < 0 && sb == 0 && sc > 0) type = 17;
    else if (sa < 0 && sb == 0 && sc < 0) type = 18;
    else if (sa > 0 && sb > 0 && sc < 0) type = 19;
    else if (sa > 0 && sb < 0 && sc > 0) type = 20;
    else if (sa < 0 && sb > 0 && sc > 0) type = 21;
    else if (sa < 0 && sb < 0 && sc < 0) type = 22;
    else if (sa > 0 && sb < 0 && sc < 0) type = 23;
    else if (sa < 0 && sb > 0 && sc < 0) type = 24;
    else if (sa < 0 && sb < 0 && sc > 0) type = 25;

    if (type == 0)
        throw NotClassifiable("sign pattern outside the fourteen types");

    KhayyamForm form;
    form.type_id = type;
    if (type_has_a(type)) form.a = std::abs(A);
    if (type_has_b(type)) form.b = std::abs(B);
    form.c = std::abs(C);
    return form;
}

Cubic to_general(const KhayyamForm& form) {
    // Signs of the monic coefficients by type, matching classify().
    double A = 0.0, B = 0.0, C = -form.c;
    switch (form.type_id) {
        case 3:  break;
        case 13: B = form.b; break;
        case 14: B = -form.b; C = form.c; break;
        case 15: B = -form.b; break;
        case 16: A = form.a; break;
        case 17: A = -form.a; C = form.c; break;
        case 18: A = -form.a; break;
        case 19: A = form.a; B = form.b; break;
        case 20: A = form.a; B = -form.b; C = form.c; break;
        case 21: A = -form.a; B = form.b; C = form.c; break;
        case 22: A = -form.a; B = -form.b; break;
        case 23: A = form.a; B = -form.b; break;
        case 24: A = -form.a; B = form.b; break;
        case 25: A = -form.a; B = -form.b; C = form.c; break;
    }
    return Cubic{1.0, A, B, C};
}

DepressedForm depress(const Cubic& cubic) {
    const double A = cubic.c2 / cubic.c3;
    const double B = cubic.c1 / cubic.c3;
    const double C = cubic.c0 / cubic.c3;
    const double s = A / 3.0; // z = x + s
    DepressedForm d;
    d.degree = 3;
    d.shift = s;
    d.p = B - A * A / 3.0;
    d.q = 2.0 * s * s * s - B * s + C;
    return d;
}

DepressedForm depress_quartic(const Quartic& quartic) {
    const double A = quartic.q3 / quartic.q4;
    const double B = quartic.q2 / quartic.q4;
    const double C = quartic.q1 / quartic.q4;
    const double D = quartic.q0 / quartic.q4;
    const double s = A / 4.0; // z = x + s
    DepressedForm d;
    d.degree = 4;
    d.shift = s;
    d.p = B - 6.0 * s * s;
    d.q = 8.0 * s * s * s - 2.0 * B * s + C;
    d.r = -3.0 * s * s * s * s + B * s * s - C * s + D;
    return d;
}

double eval(const Cubic& c, double x) {
    return ((c.c3 * x + c.c2) * x + c.c1) * x + c.c0;
}

double eval(const Quartic& q, double x) {
    return (((q.q4 * x + q.q3) * x + q.q2) * x + q.q1) * x + q.q0;
}

double eval(const DepressedForm& f, double z) {
    if (f.degree == 3) return (z * z + f.p) * z + f.q;
    return ((z * z + f.p) * z + f.q) * z + f.r;
}

} // namespace conic_cubics
