#include "conic_cubics/khayyam.hpp"

#include "conic_cubics/intersect.hpp"

#include <algorithm>
#include <cmath>

namespace conic_cubics {

namespace {

char class_code(ConicClass cls) {
    switch (cls) {
        case ConicClass::Parabola: return 'p';
        case ConicClass::Circle: return 'c';
        case ConicClass::RectangularHyperbola:
        case ConicClass::GeneralHyperbola: return 'h';
        default: return '?';
    }
}

int code_rank(char c) { return c == 'p' ? 0 : (c == 'c' ? 1 : 2); }

std::string make_pair_code(const Conic& u, const Conic& v) {
    char a = class_code(u.cls), b = class_code(v.cls);
    if (code_rank(b) < code_rank(a)) std::swap(a, b);
    return std::string{a, b};
}

} // namespace

ConstructionPlan construction_plan(const KhayyamForm& form, bool alternate_decomposition) {
    const double a = form.a, b = form.b, c = form.c;
    double s = 0.0;
    LinearExpr n1{0.0, 1.0}, n2{0.0, 0.0};

    switch (form.type_id) {
        case 3:  s = 1.0;          n1 = {0.0, 1.0};  n2 = {c, 0.0};       break;
        case 13: s = std::sqrt(b); n1 = {0.0, 1.0};  n2 = {c / b, -1.0};  break;
        case 14: s = std::sqrt(b); n1 = {0.0, 1.0};  n2 = {-c / b, 1.0};  break;
        case 15: s = std::sqrt(b); n1 = {0.0, 1.0};  n2 = {c / b, 1.0};   break;
        case 16:
            n1 = {a, 1.0};
            if (alternate_decomposition) { s = std::sqrt(c / a); n2 = {a, 0.0}; }
            else                         { s = std::cbrt(c);     n2 = {std::cbrt(c), 0.0}; }
            break;
        case 17:
            n1 = {a, -1.0};
            if (alternate_decomposition) { s = std::sqrt(c / a); n2 = {a, 0.0}; }
            else                         { s = std::cbrt(c);     n2 = {std::cbrt(c), 0.0}; }
            break;
        case 18:
            n1 = {-a, 1.0};
            if (alternate_decomposition) { s = std::cbrt(c);     n2 = {std::cbrt(c), 0.0}; }
            else                         { s = std::sqrt(c / a); n2 = {a, 0.0}; }
            break;
        case 19: s = std::sqrt(b); n1 = {a, 1.0};   n2 = {c / b, -1.0};  break;
        case 20: s = std::sqrt(b); n1 = {a, 1.0};   n2 = {-c / b, 1.0};  break;
        case 21: s = std::sqrt(b); n1 = {a, -1.0};  n2 = {c / b, 1.0};   break;
        case 22: s = std::sqrt(b); n1 = {-a, 1.0};  n2 = {c / b, 1.0};   break;
        case 23: s = std::sqrt(b); n1 = {a, 1.0};   n2 = {c / b, 1.0};   break;
        case 24: s = std::sqrt(b); n1 = {a, -1.0};  n2 = {-c / b, 1.0};  break;
        case 25: s = std::sqrt(b); n1 = {-a, 1.0};  n2 = {-c / b, 1.0};  break;
        default:
            throw NotClassifiable("unknown type id");
    }

    const bool n1_is_x = (form.type_id == 3 || (form.type_id >= 13 && form.type_id <= 15));
    const Conic hyperbola_13(0.0, 1.0, 0.0, -s * n2.beta, 0.0, -s * n2.alpha); // x y = s N2

    ConstructionPlan plan = n1_is_x
        // (1) s y = x^2, (2) y^2 = x N2, (3) x y = s N2.
        ? ConstructionPlan{form, s, n1, n2,
                           {Conic(1.0, 0.0, 0.0, 0.0, -s, 0.0),
                            Conic(-n2.beta, 0.0, 1.0, -n2.alpha, 0.0, 0.0),
                            hyperbola_13},
                           {0, 1},
                           ""}
        // (1) x y = s N2, (2) y^2 = N1 N2, (3) s y = x N1.
        : ConstructionPlan{form, s, n1, n2,
                           {hyperbola_13,
                            Conic(-n1.beta * n2.beta, 0.0, 1.0,
                                  -(n1.alpha * n2.beta + n2.alpha * n1.beta), 0.0,
                                  -n1.alpha * n2.alpha),
                            Conic(n1.beta, 0.0, 0.0, n1.alpha, -s, 0.0)},
                           {0, 1},
                           ""};
    plan.pair_code = make_pair_code(plan.curves[0], plan.curves[1]);
    return plan;
}

std::array<double, 3> chain_ratios(const ConstructionPlan& plan, double x, double y) {
    const double d2 = plan.n2(x);
    if (x == 0.0 || y == 0.0 || d2 == 0.0)
        throw DivisionByZero("chain ratio denominator is zero");
    return {plan.scale_s / x, plan.n1(x) / y, y / d2};
}

RootReport solve_khayyam_plan(const ConstructionPlan& plan, PairChoice pair, double tol) {
    int i = 0, j = 1;
    if (pair == PairChoice::p13) j = 2;
    if (pair == PairChoice::p23) { i = 1; j = 2; }

    const auto points = intersect_conics(plan.curves[i], plan.curves[j], tol);

    const Cubic cubic = to_general(plan.form);
    const double mags = std::max({1.0, plan.form.a, plan.form.b, plan.form.c});

    RootReport report;
    report.method = Method::khayyam;
    std::vector<RootEntry> roots;
    for (const Point2& pt : points) {
        if (pt.x <= tol) continue; // all fourteen types have positive roots only
        const double span = std::max(1.0, pt.x);
        const double residual = std::abs(eval(cubic, pt.x));
        if (residual > tol * mags * span * span * span) continue;
        roots.push_back(RootEntry{pt.x, pt.multiplicity});
        report.residual_max = std::max(report.residual_max, residual);
    }
    merge_close_roots(roots);
    // A cubic admits at most three roots counted with multiplicity.
    int total = 0;
    for (RootEntry& e : roots) {
        e.multiplicity = std::min(e.multiplicity, 3 - total);
        total += e.multiplicity;
    }
    std::erase_if(roots, [](const RootEntry& e) { return e.multiplicity <= 0; });
    report.roots = std::move(roots);
    report.impossible = report.roots.empty();
    return report;
}

RootReport solve_khayyam(const KhayyamForm& form, PairChoice pair, double tol) {
    return solve_khayyam_plan(construction_plan(form), pair, tol);
}

std::pair<double, double> double_mean_proportionals(double a, double c) {
    const Conic p1(1.0, 0.0, 0.0, 0.0, -a, 0.0); // x^2 = a y
    const Conic p2(0.0, 0.0, 1.0, -c, 0.0, 0.0); // y^2 = c x
    const auto points = intersect_conics(p1, p2);
    for (const Point2& pt : points)
        if (pt.x > 0.0 && pt.y > 0.0) return {pt.x, pt.y};
    return {0.0, 0.0}; // unreachable for a, c > 0
}

} // namespace conic_cubics
