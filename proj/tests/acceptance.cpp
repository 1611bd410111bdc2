// Acceptance suite: one pass/fail line per criterion, exit 0 only if all pass.

#include "conic_cubics/cli.hpp"
#include "conic_cubics/descartes.hpp"
#include "conic_cubics/khayyam.hpp"
#include "conic_cubics/oracle.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace conic_cubics;

namespace {

const int kTypes[] = {3, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25};
constexpr int kInstancesPerType = 100;

std::vector<double> expanded(const RootReport& r) {
    std::vector<double> out;
    for (const RootEntry& e : r.roots)
        out.insert(out.end(), static_cast<std::size_t>(e.multiplicity), e.value);
    std::sort(out.begin(), out.end());
    return out;
}

KhayyamForm make_form(int type, double a, double b, double c) {
    KhayyamForm f{type, 0, 0, 0};
    if (type_has_a(type)) f.a = a;
    if (type_has_b(type)) f.b = b;
    f.c = c;
    return f;
}

bool multisets_match(const std::vector<double>& got, const std::vector<double>& want,
                     double tol) {
    if (got.size() != want.size()) return false;
    for (std::size_t i = 0; i < got.size(); ++i)
        if (std::abs(got[i] - want[i]) > tol * std::max(1.0, std::abs(want[i]))) return false;
    return true;
}

// One fixed-seed instance set, shared by the criteria that quantify over it:
// 100 per type, magnitudes log-uniform in [0.1, 10].
std::vector<KhayyamForm> instance_set() {
    std::mt19937_64 rng(20260823);
    std::uniform_real_distribution<double> dist(std::log(0.1), std::log(10.0));
    auto mag = [&] { return std::exp(dist(rng)); };
    std::vector<KhayyamForm> forms;
    forms.reserve(14 * kInstancesPerType);
    for (int type : kTypes)
        for (int k = 0; k < kInstancesPerType; ++k)
            forms.push_back(make_form(type, mag(), mag(), mag()));
    return forms;
}

// --- criterion 1: the catalog command lists the exact pair codes -----------

bool criterion_pair_codes() {
    const std::map<int, std::string> expect = {
        {3, "pp"},  {13, "pc"}, {14, "ph"}, {15, "ph"}, {16, "ph"}, {17, "ph"}, {18, "ph"},
        {19, "ch"}, {20, "hh"}, {21, "ch"}, {22, "hh"}, {23, "hh"}, {24, "ch"}, {25, "hh"}};
    cli::Options opts;
    opts.format = cli::Format::json;
    std::ostringstream out;
    if (cli::run_table(opts, out) != 0) return false;
    const auto rows = nlohmann::json::parse(out.str());
    if (rows.size() != expect.size()) return false;
    std::size_t i = 0;
    for (int type : kTypes) {
        if (rows[i]["type_id"] != type) return false;
        if (rows[i]["pair_code"] != expect.at(type)) return false;
        ++i;
    }
    return true;
}

// --- criterion 2: random instances against the closed-form oracle ----------

bool criterion_random_instances(const std::vector<KhayyamForm>& forms, double* seconds) {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    for (const KhayyamForm& form : forms) {
        const auto truth = expanded(positive_roots(solve_cubic_oracle(to_general(form))));
        const auto got = expanded(solve_khayyam(form));
        if (!multisets_match(got, truth, 1e-9)) {
            std::printf("    type %d (a=%g b=%g c=%g): root-multiset mismatch\n",
                        form.type_id, form.a, form.b, form.c);
            ok = false;
        }
    }
    *seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return ok && *seconds < 30.0;
}

// --- criterion 3: the three curve pairs agree on the same instances --------

bool criterion_pair_agreement(const std::vector<KhayyamForm>& forms) {
    for (const KhayyamForm& form : forms) {
        const auto plan = construction_plan(form);
        const auto r12 = expanded(solve_khayyam_plan(plan, PairChoice::p12));
        const auto r13 = expanded(solve_khayyam_plan(plan, PairChoice::p13));
        const auto r23 = expanded(solve_khayyam_plan(plan, PairChoice::p23));
        if (!multisets_match(r13, r12, 1e-9) || !multisets_match(r23, r12, 1e-9))
            return false;
    }
    return true;
}

// --- criterion 4: chain ratios at every returned root point ----------------

bool criterion_chain_ratios(const std::vector<KhayyamForm>& forms) {
    for (const KhayyamForm& form : forms) {
        const auto plan = construction_plan(form);
        const Cubic cubic = to_general(form);
        for (const RootEntry& e : solve_khayyam_plan(plan).roots) {
            // A short segment N1 or N2 amplifies even the last-bit rounding
            // of a correctly rounded double root beyond 1e-9, so polish the
            // abscissa and evaluate the ratios in extended precision.
            long double x = e.value;
            for (int it = 0; it < 3; ++it) {
                const long double f =
                    ((cubic.c3 * x + cubic.c2) * x + cubic.c1) * x + cubic.c0;
                const long double df =
                    (3.0L * cubic.c3 * x + 2.0L * cubic.c2) * x + cubic.c1;
                if (df != 0.0L) x -= f / df;
            }
            const int type = form.type_id;
            const bool group_a = type == 3 || (type >= 13 && type <= 15);
            const long double n1 = plan.n1.alpha + plan.n1.beta * x;
            const long double n2 = plan.n2.alpha + plan.n2.beta * x;
            const long double y =
                group_a ? x * x / plan.scale_s : plan.scale_s * n2 / x;
            const long double r[3] = {plan.scale_s / x, n1 / y, y / n2};
            const long double lo = std::min({r[0], r[1], r[2]});
            const long double hi = std::max({r[0], r[1], r[2]});
            if ((hi - lo) > 1e-9L * std::max(std::abs(hi), std::abs(lo))) return false;
        }
    }
    return true;
}

// --- criterion 5: alternate decompositions of types 16, 17, 18 -------------

bool criterion_alternates(const std::vector<KhayyamForm>& forms) {
    for (const KhayyamForm& form : forms) {
        if (form.type_id != 16 && form.type_id != 17 && form.type_id != 18) continue;
        const auto main_roots = expanded(solve_khayyam(form));
        const auto alt_roots = expanded(solve_khayyam_plan(construction_plan(form, true)));
        if (!multisets_match(alt_roots, main_roots, 1e-9)) return false;
    }
    return true;
}

// --- criterion 6: parabola-circle roots of depressed cubics and quartics ---

bool criterion_descartes() {
    std::mt19937_64 rng(20260824);
    std::uniform_real_distribution<double> dist(-10.0, 10.0);
    for (int k = 0; k < 1000; ++k) {
        const DepressedForm form{3, dist(rng), dist(rng), 0.0, 0.0};
        const auto cons = descartes_construction(form);
        // Circle parameters must follow the completed square exactly.
        if (cons.center_z != -form.q / 2.0) return false;
        if (cons.center_y != -(form.p - 1.0) / 2.0) return false;
        const double r2 = (form.p - 1.0) * (form.p - 1.0) / 4.0 + form.q * form.q / 4.0;
        if (std::abs(cons.radius_sq - r2) > 1e-15 * std::max(1.0, std::abs(r2))) return false;
        const auto got = expanded(solve_descartes(form));
        const auto want = expanded(solve_cubic_oracle(Cubic{1.0, 0.0, form.p, form.q}));
        if (!multisets_match(got, want, 1e-9)) return false;
    }
    for (int k = 0; k < 1000; ++k) {
        const DepressedForm form{4, dist(rng), dist(rng), dist(rng), 0.0};
        const auto cons = descartes_construction(form);
        const double r2 = (form.p - 1.0) * (form.p - 1.0) / 4.0 + form.q * form.q / 4.0 - form.r;
        if (std::abs(cons.radius_sq - r2) > 1e-15 * std::max(1.0, std::abs(r2))) return false;
        const auto got = expanded(solve_descartes(form));
        const auto want =
            expanded(solve_quartic_oracle(Quartic{1.0, 0.0, form.p, form.q, form.r}));
        if (!multisets_match(got, want, 1e-9)) return false;
    }
    return true;
}

// --- criterion 7: the named worked instances --------------------------------

bool criterion_named_cases() {
    bool ok = true;

    const auto r13 = solve_khayyam(make_form(13, 0, 1, 10));
    ok &= r13.roots.size() == 1 && std::abs(r13.roots[0].value - 2.0) < 1e-9 &&
          r13.roots[0].multiplicity == 1;

    const auto r14 = expanded(solve_khayyam(make_form(14, 0, 7, 6)));
    ok &= r14.size() == 2 && std::abs(r14[0] - 1.0) < 1e-9 && std::abs(r14[1] - 2.0) < 1e-9;

    const auto tang = solve_khayyam(make_form(14, 0, 3, 2));
    ok &= tang.roots.size() == 1 && std::abs(tang.roots[0].value - 1.0) < 1e-9 &&
          tang.roots[0].multiplicity == 2;

    const auto imp = solve_khayyam(make_form(14, 0, 1, 1));
    ok &= imp.roots.empty() && imp.impossible;

    const auto cube = solve_khayyam(make_form(3, 0, 0, 27));
    ok &= cube.roots.size() == 1 && std::abs(cube.roots[0].value - 3.0) < 1e-9;

    // z^3 - 3z - 2 = (z - 2)(z + 1)^2 with circle center (1, 2), R^2 = 5.
    const DepressedForm dep{3, -3.0, -2.0, 0.0, 0.0};
    const auto cons = descartes_construction(dep);
    ok &= std::abs(cons.center_z - 1.0) < 1e-15 && std::abs(cons.center_y - 2.0) < 1e-15 &&
          std::abs(cons.radius_sq - 5.0) < 1e-14;
    const auto dr = solve_descartes(dep);
    ok &= dr.roots.size() == 2;
    if (dr.roots.size() == 2) {
        ok &= std::abs(dr.roots[0].value + 1.0) < 1e-9 && dr.roots[0].multiplicity == 2;
        ok &= std::abs(dr.roots[1].value - 2.0) < 1e-9 && dr.roots[1].multiplicity == 1;
    }
    return ok;
}

// --- criterion 8: structural classes of all constructed conics -------------

bool criterion_conic_classes(const std::vector<KhayyamForm>& forms) {
    for (const KhayyamForm& form : forms) {
        const auto plan = construction_plan(form);
        for (const Conic& c : plan.curves) {
            switch (c.cls) {
                case ConicClass::Parabola:
                    if (c.B * c.B - 4.0 * c.A * c.C != 0.0) return false;
                    break;
                case ConicClass::Circle:
                    if (c.A != c.C || c.B != 0.0) return false;
                    break;
                case ConicClass::RectangularHyperbola:
                case ConicClass::GeneralHyperbola:
                    if (c.A + c.C != 0.0) return false;
                    break;
                default:
                    return false; // no ellipse or degenerate conic may appear
            }
        }
    }
    return true;
}

// --- criterion 9: the verification command is reproducible -----------------

bool criterion_verify_reproducible() {
    cli::Options opts;
    opts.seed = 9001;
    std::ostringstream a, b, c;
    const int ra = cli::run_verify(20, opts, a);
    const int rb = cli::run_verify(20, opts, b);
    opts.seed = 9002;
    const int rc = cli::run_verify(20, opts, c);
    return ra == 0 && rb == 0 && rc == 0 && a.str() == b.str() && a.str() != c.str();
}

int report(const char* name, bool ok) {
    std::printf("[%s] %s\n", ok ? "PASS" : "FAIL", name);
    return ok ? 0 : 1;
}

} // namespace

int main() {
    const std::vector<KhayyamForm> forms = instance_set();
    int failures = 0;

    failures += report("catalog pair codes", criterion_pair_codes());

    double seconds = 0.0;
    const bool c2 = criterion_random_instances(forms, &seconds);
    std::printf("[%s] random instances vs oracle (%zu cubics, %.2fs)\n", c2 ? "PASS" : "FAIL",
                forms.size(), seconds);
    failures += c2 ? 0 : 1;

    failures += report("three curve pairs agree", criterion_pair_agreement(forms));
    failures += report("chain ratios hold at roots", criterion_chain_ratios(forms));
    failures += report("alternate decompositions", criterion_alternates(forms));
    failures += report("parabola-circle roots and parameters", criterion_descartes());
    failures += report("named worked instances", criterion_named_cases());
    failures += report("conic class audit", criterion_conic_classes(forms));
    failures += report("verification reproducibility", criterion_verify_reproducible());

    if (failures) std::printf("%d criterion(s) failed\n", failures);
    else std::printf("all acceptance criteria passed\n");
    return failures ? 1 : 0;
}
