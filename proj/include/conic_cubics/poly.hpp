#pragma once

#include "conic_cubics/errors.hpp"

namespace conic_cubics {

/// Dense cubic c3*x^3 + c2*x^2 + c1*x + c0, c3 != 0.
struct Cubic {
    double c3, c2, c1, c0;
};

/// Dense quartic q4*x^4 + ... + q0, q4 != 0.
struct Quartic {
    double q4, q3, q2, q1, q0;
};

/// One of the fourteen positive-coefficient canonical cubic types
/// (numbered 3 and 13..25). Magnitudes not used by a type are zero.
struct KhayyamForm {
    int type_id;
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
};

/// z^3 + p z + q (degree 3) or z^4 + p z^2 + q z + r (degree 4),
/// with z = x + shift, so an original root is z - shift.
struct DepressedForm {
    int degree; // 3 or 4
    double p, q;
    double r = 0.0; // degree 4 only
    double shift;
};

bool type_has_a(int type_id);
bool type_has_b(int type_id);

/// Equation pattern of a type in display form, e.g. "x^3 + bx = c".
const char* type_pattern(int type_id);

/// Match a general cubic against the fourteen sign patterns.
/// Throws NotClassifiable for degenerate or out-of-catalog inputs.
KhayyamForm classify(double c3, double c2, double c1, double c0);

/// Monic cubic with all terms moved to the left-hand side.
Cubic to_general(const KhayyamForm& form);

DepressedForm depress(const Cubic& cubic);
DepressedForm depress_quartic(const Quartic& quartic);

double eval(const Cubic& cubic, double x);
double eval(const Quartic& quartic, double x);
double eval(const DepressedForm& form, double z);

} // namespace conic_cubics
