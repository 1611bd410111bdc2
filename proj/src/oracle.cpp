#include "conic_cubics/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

namespace conic_cubics {

namespace {

// Coefficients low-order first, fixed degree 4 (unused entries zero).
using Coeffs = std::array<double, 5>;

double horner(const Coeffs& c, int deg, double x) {
    double v = 0.0;
    for (int i = deg; i >= 0; --i) v = v * x + c[i];
    return v;
}

Coeffs derivative(const Coeffs& c, int deg) {
    Coeffs d{};
    for (int i = 1; i <= deg; ++i) d[i - 1] = c[i] * i;
    return d;
}

double polish(const Coeffs& c, int deg, double x) {
    const Coeffs d = derivative(c, deg);
    double best = x;
    double best_f = std::abs(horner(c, deg, x));
    for (int it = 0; it < 40; ++it) {
        const double fp = horner(d, deg - 1, x);
        if (fp == 0.0) break;
        const double step = horner(c, deg, x) / fp;
        x -= step;
        const double f = std::abs(horner(c, deg, x));
        if (f < best_f) {
            best_f = f;
            best = x;
        }
        if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(x))) break;
    }
    return best;
}

// Cluster polished roots into multiplicities; a repeated root is then
// re-polished on the appropriate derivative to recover full precision.
std::vector<RootEntry> assemble(std::vector<double> vals, const Coeffs& c, int deg) {
    std::sort(vals.begin(), vals.end());
    std::vector<RootEntry> out;
    std::size_t i = 0;
    while (i < vals.size()) {
        std::size_t j = i + 1;
        double sum = vals[i];
        while (j < vals.size() &&
               std::abs(vals[j] - vals[j - 1]) <= 1e-7 * std::max(1.0, std::abs(vals[j]))) {
            sum += vals[j];
            ++j;
        }
        const int m = static_cast<int>(j - i);
        double x = sum / m;
        if (m > 1) {
            Coeffs g = c;
            int gdeg = deg;
            for (int k = 1; k < m; ++k) {
                g = derivative(g, gdeg);
                --gdeg;
            }
            x = polish(g, gdeg, x);
        }
        out.push_back(RootEntry{x, m});
        i = j;
    }
    return out;
}

// Real roots of the depressed cubic z^3 + p z + q.
std::vector<double> cubic_real_roots(double p, double q) {
    std::vector<double> roots;
    const double p3 = p * p * p;
    const double disc = -4.0 * p3 - 27.0 * q * q;
    const double dscale = std::max({4.0 * std::abs(p3), 27.0 * q * q, 1e-300});

    if (std::abs(disc) <= 1e-12 * dscale) {
        if (std::abs(p) <= 1e-100) {
            roots.assign(3, -std::cbrt(q));
        } else {
            const double dbl = -1.5 * q / p;
            roots = {dbl, dbl, -2.0 * dbl};
        }
    } else if (disc > 0.0) {
        // Casus irreducibilis: three real roots via the trigonometric form.
        const double rho = 2.0 * std::sqrt(-p / 3.0);
        const double cosarg = std::clamp(3.0 * q / (p * rho), -1.0, 1.0);
        const double theta = std::acos(cosarg);
        for (int k = 0; k < 3; ++k)
            roots.push_back(rho * std::cos((theta - 2.0 * std::numbers::pi * k) / 3.0));
    } else {
        const double w = std::sqrt(q * q / 4.0 + p3 / 27.0);
        roots.push_back(std::cbrt(-q / 2.0 + w) + std::cbrt(-q / 2.0 - w));
    }
    return roots;
}

std::vector<double> quadratic_real_roots(double b, double c, double band) {
    // Monic z^2 + b z + c; `band` tolerates a marginally negative
    // discriminant as a double root.
    std::vector<double> roots;
    const double disc = b * b - 4.0 * c;
    const double dscale = std::max({b * b, 4.0 * std::abs(c), 1e-300});
    if (disc < 0.0) {
        if (disc >= -band * dscale) roots.assign(2, -b / 2.0);
        return roots;
    }
    const double sq = std::sqrt(disc);
    const double t = -(b + std::copysign(sq, b)) / 2.0;
    if (t == 0.0) {
        roots.assign(2, 0.0);
    } else {
        roots = {t, c / t};
    }
    return roots;
}

} // namespace

RootReport solve_cubic_oracle(const Cubic& cubic) {
    const double a = cubic.c2 / cubic.c3;
    const double b = cubic.c1 / cubic.c3;
    const double c = cubic.c0 / cubic.c3;
    const double shift = a / 3.0;
    const double p = b - a * a / 3.0;
    const double q = 2.0 * shift * shift * shift - b * shift + c;

    const Coeffs mono{c, b, a, 1.0, 0.0};
    std::vector<double> vals;
    for (double z : cubic_real_roots(p, q)) vals.push_back(polish(mono, 3, z - shift));

    RootReport report;
    report.method = Method::oracle;
    report.roots = assemble(std::move(vals), mono, 3);
    const double cscale = std::max({1.0, std::abs(a), std::abs(b), std::abs(c)});
    std::erase_if(report.roots, [&](const RootEntry& e) {
        const double span = std::max(1.0, std::abs(e.value));
        return std::abs(eval(cubic, e.value) / cubic.c3) >
               1e-8 * cscale * span * span * span;
    });
    for (const RootEntry& e : report.roots)
        report.residual_max = std::max(report.residual_max, std::abs(eval(cubic, e.value)));
    return report;
}

RootReport solve_quartic_oracle(const Quartic& quartic) {
    const double a = quartic.q3 / quartic.q4;
    const double b = quartic.q2 / quartic.q4;
    const double c = quartic.q1 / quartic.q4;
    const double d = quartic.q0 / quartic.q4;
    const double shift = a / 4.0;
    const double p = b - 6.0 * shift * shift;
    const double q = 8.0 * shift * shift * shift - 2.0 * b * shift + c;
    const double r = -3.0 * shift * shift * shift * shift + b * shift * shift - c * shift + d;

    std::vector<double> zroots;
    if (std::abs(q) <= 1e-12 * std::max({1.0, std::abs(p), std::abs(r)})) {
        // Biquadratic: w = z^2.
        for (double w : quadratic_real_roots(p, r, 1e-9)) {
            if (w > 0.0) {
                zroots.push_back(std::sqrt(w));
                zroots.push_back(-std::sqrt(w));
            } else if (w >= -1e-12 * std::max(1.0, std::abs(p))) {
                zroots.push_back(0.0);
                zroots.push_back(0.0);
            }
        }
    } else {
        // Resolvent cubic in t = u^2 for the split
        // z^4 + p z^2 + q z + r = (z^2 + u z + v)(z^2 - u z + w).
        const double ra = 2.0 * p;
        const double rb = p * p - 4.0 * r;
        const double rc = -q * q;
        const double rshift = ra / 3.0;
        double t = 0.0;
        for (double tz : cubic_real_roots(rb - ra * ra / 3.0,
                                          2.0 * rshift * rshift * rshift - rb * rshift + rc))
            t = std::max(t, tz - rshift);
        const Coeffs res{rc, rb, ra, 1.0, 0.0};
        t = std::max(polish(res, 3, t), 0.0);
        const double u = std::sqrt(t);
        if (u > 0.0) {
            const double v = (p + t - q / u) / 2.0;
            const double w = (p + t + q / u) / 2.0;
            for (double z : quadratic_real_roots(u, v, 1e-9)) zroots.push_back(z);
            for (double z : quadratic_real_roots(-u, w, 1e-9)) zroots.push_back(z);
        }
    }

    const Coeffs mono{d, c, b, a, 1.0};
    std::vector<double> vals;
    for (double z : zroots) vals.push_back(polish(mono, 4, z - shift));

    RootReport report;
    report.method = Method::oracle;
    report.roots = assemble(std::move(vals), mono, 4);

    // Candidates from a tolerated near-negative discriminant must actually
    // be roots; drop the ones that are not.
    const double cscale = std::max({1.0, std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
    std::erase_if(report.roots, [&](const RootEntry& e) {
        const double span = std::max(1.0, std::abs(e.value));
        return std::abs(eval(quartic, e.value) / quartic.q4) >
               1e-8 * cscale * span * span * span * span;
    });
    for (const RootEntry& e : report.roots)
        report.residual_max = std::max(report.residual_max, std::abs(eval(quartic, e.value)));
    return report;
}

RootReport positive_roots(const RootReport& report, double tol) {
    RootReport out = report;
    std::erase_if(out.roots, [tol](const RootEntry& e) { return e.value <= tol; });
    return out;
}

} // namespace conic_cubics
