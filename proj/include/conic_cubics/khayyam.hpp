#pragma once

#include "conic_cubics/conic.hpp"
#include "conic_cubics/poly.hpp"
#include "conic_cubics/root_report.hpp"

#include <array>
#include <string>
#include <utility>

namespace conic_cubics {

/// Segment expression alpha + beta * x with beta in {-1, 0, +1}.
struct LinearExpr {
    double alpha;
    double beta;
    double operator()(double x) const { return alpha + beta * x; }
};

enum class PairChoice { p12, p13, p23 };

/// Per-type chain data s / x = N1 / y = y / N2 and the three candidate
/// conics derived from its pairwise equalities. The historically chosen
/// pair is always (curve 1, curve 2).
struct ConstructionPlan {
    KhayyamForm form;
    double scale_s;
    LinearExpr n1;
    LinearExpr n2;
    std::array<Conic, 3> curves;
    std::pair<int, int> chosen{0, 1};
    std::string pair_code; // pp, pc, ph, ch or hh
};

ConstructionPlan construction_plan(const KhayyamForm& form,
                                   bool alternate_decomposition = false);

/// The three ratios (s/x, N1(x)/y, y/N2(x)); equal iff (x, y) satisfies
/// the chain relation. Throws DivisionByZero on a vanishing denominator.
std::array<double, 3> chain_ratios(const ConstructionPlan& plan, double x, double y);

/// Geometric solution: intersect the selected curve pair of the plan,
/// keep positive abscissas that satisfy the cubic. An empty report with
/// impossible=true means the curves admit no valid intersection.
RootReport solve_khayyam_plan(const ConstructionPlan& plan,
                              PairChoice pair = PairChoice::p12,
                              double tol = 1e-10);

RootReport solve_khayyam(const KhayyamForm& form,
                         PairChoice pair = PairChoice::p12,
                         double tol = 1e-10);

/// The two mean proportionals x, y between a and c (a/x = x/y = y/c),
/// found by intersecting the parabolas x^2 = a y and y^2 = c x.
std::pair<double, double> double_mean_proportionals(double a, double c);

} // namespace conic_cubics
