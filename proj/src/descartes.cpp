#include "conic_cubics/descartes.hpp"

#include "conic_cubics/intersect.hpp"

#include <algorithm>
#include <cmath>

namespace conic_cubics {

DescartesConstruction descartes_construction(const DepressedForm& form) {
    const double p = form.p;
    const double q = form.q;
    const double r = form.degree == 3 ? 0.0 : form.r;
    const double radius_sq = (p - 1.0) * (p - 1.0) / 4.0 + q * q / 4.0 - r;
    return DescartesConstruction{
        Conic(1.0, 0.0, 0.0, 0.0, -1.0, 0.0),
        -q / 2.0,
        -(p - 1.0) / 2.0,
        radius_sq,
        radius_sq > 0.0,
        form};
}

RootReport solve_descartes(const DepressedForm& form, double tol) {
    const DescartesConstruction cons = descartes_construction(form);
    const double p = form.p, q = form.q;
    const double r = form.degree == 3 ? 0.0 : form.r;
    const double mags = std::max({1.0, std::abs(p), std::abs(q), std::abs(r)});

    const auto accept = [&](double z) {
        const double span = std::max(1.0, std::abs(z));
        double bound = tol * mags * span * span * span;
        if (form.degree == 4) bound *= span;
        return std::abs(eval(form, z)) <= bound;
    };

    std::vector<RootEntry> entries;
    if (cons.radius_sq > 0.0) {
        for (const Point2& pt : intersect_conics(cons.parabola, cons.circle(), tol)) {
            if (!accept(pt.x)) continue;
            int mult = pt.multiplicity;
            // With r = 0 the origin lies on both curves regardless of the
            // cubic: its intersection order carries one spurious unit.
            if (form.degree == 3 && std::abs(pt.x) <= 1e-7) mult -= 1;
            if (mult > 0) entries.push_back(RootEntry{pt.x, mult});
        }
    } else if (cons.radius_sq >= -tol * mags) {
        // Point circle: the single tangential candidate is the center.
        const double z = cons.center_z;
        if (accept(z)) {
            // Contact order from the vanishing leading derivatives.
            int mult = 1;
            double d1, d2, d3;
            if (form.degree == 3) {
                d1 = 3.0 * z * z + p;
                d2 = 6.0 * z;
                d3 = 6.0;
            } else {
                d1 = (4.0 * z * z + 2.0 * p) * z + q;
                d2 = 12.0 * z * z + 2.0 * p;
                d3 = 24.0 * z;
            }
            const double dtol = tol * mags * std::max(1.0, std::abs(z));
            if (std::abs(d1) <= dtol) {
                mult = 2;
                if (std::abs(d2) <= dtol) mult = std::abs(d3) <= dtol ? 4 : 3;
            }
            entries.push_back(RootEntry{z, mult});
        }
    }
    // radius_sq < 0: empty circle, hence no real roots.

    merge_close_roots(entries);
    const int degree = form.degree;
    int total = 0;
    for (RootEntry& e : entries) {
        e.multiplicity = std::min(e.multiplicity, degree - total);
        total += e.multiplicity;
    }
    std::erase_if(entries, [](const RootEntry& e) { return e.multiplicity <= 0; });

    RootReport report;
    report.method = Method::descartes;
    report.roots = std::move(entries);
    for (const RootEntry& e : report.roots)
        report.residual_max = std::max(report.residual_max, std::abs(eval(form, e.value)));
    return report;
}

} // namespace conic_cubics
