#include "conic_cubics/cli.hpp"

#include "conic_cubics/descartes.hpp"
#include "conic_cubics/oracle.hpp"
#include "conic_cubics/render.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <random>
#include <vector>

namespace conic_cubics::cli {

namespace {

using nlohmann::json;

std::string num(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

json report_to_json(const RootReport& report, int type_id = 0) {
    json j;
    j["method"] = to_string(report.method);
    if (type_id != 0) j["type_id"] = type_id;
    j["roots"] = json::array();
    for (const RootEntry& e : report.roots)
        j["roots"].push_back({{"value", e.value}, {"multiplicity", e.multiplicity}});
    j["residual_max"] = report.residual_max;
    j["impossible"] = report.impossible;
    return j;
}

void print_report_text(const RootReport& report, std::ostream& out) {
    out << "method: " << to_string(report.method) << "\n";
    out << "roots:";
    if (report.roots.empty()) out << " (none)";
    for (const RootEntry& e : report.roots) {
        out << " " << num(e.value);
        if (e.multiplicity > 1) out << " (x" << e.multiplicity << ")";
    }
    out << "\n";
    out << "residual_max: " << num(report.residual_max) << "\n";
    if (report.impossible) out << "impossible: true\n";
}

struct TableRow {
    int type_id;
    const char* s;
    const char* n1;
    const char* n2;
};

constexpr TableRow kTableRows[] = {
    {3, "1", "x", "c"},
    {13, "sqrt(b)", "x", "c/b - x"},
    {14, "sqrt(b)", "x", "x - c/b"},
    {15, "sqrt(b)", "x", "x + c/b"},
    {16, "c^(1/3)", "x + a", "c^(1/3)"},
    {17, "c^(1/3)", "a - x", "c^(1/3)"},
    {18, "sqrt(c/a)", "x - a", "a"},
    {19, "sqrt(b)", "x + a", "c/b - x"},
    {20, "sqrt(b)", "x + a", "x - c/b"},
    {21, "sqrt(b)", "a - x", "x + c/b"},
    {22, "sqrt(b)", "x - a", "x + c/b"},
    {23, "sqrt(b)", "x + a", "x + c/b"},
    {24, "sqrt(b)", "a - x", "x - c/b"},
    {25, "sqrt(b)", "x - a", "x - c/b"},
};

char class_letter(ConicClass cls) {
    switch (cls) {
        case ConicClass::Parabola: return 'p';
        case ConicClass::Circle: return 'c';
        default: return 'h';
    }
}

// Log-uniform draw in [0.1, 10], reproducible across platforms.
double draw_magnitude(std::mt19937_64& rng) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return 0.1 * std::pow(100.0, u);
}

std::vector<double> expand(const std::vector<RootEntry>& roots) {
    std::vector<double> out;
    for (const RootEntry& e : roots)
        out.insert(out.end(), static_cast<std::size_t>(e.multiplicity), e.value);
    std::sort(out.begin(), out.end());
    return out;
}

// Largest relative gap between matched sorted multisets; infinity when the
// counts disagree.
double multiset_deviation(const std::vector<RootEntry>& lhs, const std::vector<RootEntry>& rhs) {
    const auto a = expand(lhs);
    const auto b = expand(rhs);
    if (a.size() != b.size()) return INFINITY;
    double dev = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        dev = std::max(dev, std::abs(a[i] - b[i]) / std::max(1.0, std::abs(b[i])));
    return dev;
}

double chain_deviation(const ConstructionPlan& plan, const RootReport& report) {
    const Cubic cubic = to_general(plan.form);
    double dev = 0.0;
    for (const RootEntry& e : report.roots) {
        // The segment ratios can magnify the last-bit error of the root when
        // one segment is short, so polish the abscissa in extended precision
        // and evaluate the chain there.
        long double x = e.value;
        for (int it = 0; it < 3; ++it) {
            const long double f =
                ((cubic.c3 * x + cubic.c2) * x + cubic.c1) * x + cubic.c0;
            const long double df = (3.0L * cubic.c3 * x + 2.0L * cubic.c2) * x + cubic.c1;
            if (df != 0.0L) x -= f / df;
        }
        const long double n1 = plan.n1.alpha + plan.n1.beta * x;
        const long double n2 = plan.n2.alpha + plan.n2.beta * x;
        // Ordinate recovered from curve (1) of the plan.
        const long double y = (plan.form.type_id == 3 ||
                               (plan.form.type_id >= 13 && plan.form.type_id <= 15))
                                  ? x * x / plan.scale_s
                                  : plan.scale_s * n2 / x;
        const long double r[3] = {plan.scale_s / x, n1 / y, y / n2};
        const long double hi = std::max({r[0], r[1], r[2]});
        const long double lo = std::min({r[0], r[1], r[2]});
        const long double scale = std::max({std::abs(r[0]), std::abs(r[1]), std::abs(r[2])});
        dev = std::max(dev, static_cast<double>((hi - lo) / scale));
    }
    return dev;
}

} // namespace

int run_classify(const std::array<double, 4>& coeffs, const Options& opts,
                 std::ostream& out, std::ostream& err) {
    try {
        const KhayyamForm form = classify(coeffs[0], coeffs[1], coeffs[2], coeffs[3]);
        const ConstructionPlan plan = construction_plan(form);
        if (opts.format == Format::json) {
            json j;
            j["type_id"] = form.type_id;
            j["pattern"] = type_pattern(form.type_id);
            j["pair_code"] = plan.pair_code;
            if (type_has_a(form.type_id)) j["a"] = form.a;
            if (type_has_b(form.type_id)) j["b"] = form.b;
            j["c"] = form.c;
            out << j.dump() << "\n";
        } else {
            out << "type " << form.type_id << " (" << type_pattern(form.type_id) << ")";
            if (type_has_a(form.type_id)) out << ", a=" << num(form.a);
            if (type_has_b(form.type_id)) out << ", b=" << num(form.b);
            out << ", c=" << num(form.c) << ", pair " << plan.pair_code << "\n";
        }
        return 0;
    } catch (const NotClassifiable& e) {
        err << "not classifiable: " << e.what() << "\n";
        return 2;
    }
}

int run_solve(const std::array<double, 4>& coeffs, const std::string& method,
              const Options& opts, std::ostream& out, std::ostream& err) {
    const Cubic cubic{coeffs[0], coeffs[1], coeffs[2], coeffs[3]};
    if (cubic.c3 == 0.0) {
        err << "not a cubic: leading coefficient is zero\n";
        return 1;
    }
    RootReport report;
    int type_id = 0;
    if (method == "khayyam") {
        try {
            const KhayyamForm form = classify(coeffs[0], coeffs[1], coeffs[2], coeffs[3]);
            type_id = form.type_id;
            report = solve_khayyam(form, opts.pair, opts.tolerance);
        } catch (const NotClassifiable& e) {
            err << "not classifiable: " << e.what() << "\n";
            return 2;
        }
    } else if (method == "descartes") {
        const DepressedForm dep = depress(cubic);
        report = solve_descartes(dep, opts.tolerance);
        for (RootEntry& e : report.roots) e.value -= dep.shift;
        report.residual_max = 0.0;
        for (const RootEntry& e : report.roots)
            report.residual_max = std::max(report.residual_max, std::abs(eval(cubic, e.value)));
    } else if (method == "oracle") {
        report = solve_cubic_oracle(cubic);
    } else {
        err << "unknown method: " << method << "\n";
        return 1;
    }
    if (opts.format == Format::json) {
        out << report_to_json(report, type_id).dump() << "\n";
    } else {
        if (type_id != 0) out << "type: " << type_id << " (" << type_pattern(type_id) << ")\n";
        print_report_text(report, out);
    }
    return 0;
}

int run_table(const Options& opts, std::ostream& out) {
    json rows = json::array();
    for (const TableRow& row : kTableRows) {
        // Representative magnitudes; classes are magnitude-independent.
        KhayyamForm form{row.type_id, 1.0, 2.0, 3.0};
        if (!type_has_a(row.type_id)) form.a = 0.0;
        if (!type_has_b(row.type_id)) form.b = 0.0;
        const ConstructionPlan plan = construction_plan(form);
        const char c1 = class_letter(plan.curves[0].cls);
        const char c2 = class_letter(plan.curves[1].cls);
        const char c3 = class_letter(plan.curves[2].cls);
        if (opts.format == Format::json) {
            rows.push_back({{"type_id", row.type_id},
                            {"pattern", type_pattern(row.type_id)},
                            {"s", row.s},
                            {"n1", row.n1},
                            {"n2", row.n2},
                            {"curves", std::string{c1, c2, c3}},
                            {"pair_code", plan.pair_code}});
        } else {
            char line[160];
            std::snprintf(line, sizeof(line),
                          "type %-2d  %-24s s=%-9s N1=%-6s N2=%-9s curves=%c%c%c  pair %s",
                          row.type_id, type_pattern(row.type_id), row.s, row.n1, row.n2,
                          c1, c2, c3, plan.pair_code.c_str());
            out << line << "\n";
        }
    }
    if (opts.format == Format::json) out << rows.dump() << "\n";
    return 0;
}

int run_verify(int n_per_type, const Options& opts, std::ostream& out, bool inject_fault) {
    std::mt19937_64 rng(opts.seed);
    bool all_ok = true;
    char line[256];
    std::snprintf(line, sizeof(line), "verify  n_per_type=%d  seed=%llu  tol=%.3e",
                  n_per_type, static_cast<unsigned long long>(opts.seed), 1e-9);
    out << line << "\n";

    for (const TableRow& row : kTableRows) {
        const int type = row.type_id;
        double dev_oracle = 0.0, dev_pair = 0.0, dev_chain = 0.0, dev_alt = 0.0, dev_desc = 0.0;
        for (int k = 0; k < n_per_type; ++k) {
            KhayyamForm form{type, 0.0, 0.0, 0.0};
            const double m1 = draw_magnitude(rng);
            const double m2 = draw_magnitude(rng);
            const double m3 = draw_magnitude(rng);
            if (type_has_a(type)) form.a = m1;
            if (type_has_b(type)) form.b = m2;
            form.c = m3;

            const Cubic cubic = to_general(form);
            const RootReport truth = positive_roots(solve_cubic_oracle(cubic), opts.tolerance);

            const ConstructionPlan plan = construction_plan(form);
            RootReport r12 = solve_khayyam_plan(plan, PairChoice::p12, opts.tolerance);
            const RootReport r13 = solve_khayyam_plan(plan, PairChoice::p13, opts.tolerance);
            const RootReport r23 = solve_khayyam_plan(plan, PairChoice::p23, opts.tolerance);
            if (inject_fault && !r12.roots.empty()) r12.roots.front().value *= 1.0 + 1e-3;

            dev_oracle = std::max(dev_oracle, multiset_deviation(r12.roots, truth.roots));
            dev_pair = std::max({dev_pair, multiset_deviation(r13.roots, r12.roots),
                                 multiset_deviation(r23.roots, r12.roots)});
            dev_chain = std::max(dev_chain, chain_deviation(plan, r12));
            if (type == 16 || type == 17 || type == 18) {
                const auto alt = solve_khayyam_plan(construction_plan(form, true),
                                                    PairChoice::p12, opts.tolerance);
                dev_alt = std::max(dev_alt, multiset_deviation(alt.roots, r12.roots));
            }

            const DepressedForm dep = depress(cubic);
            RootReport desc = solve_descartes(dep, opts.tolerance);
            for (RootEntry& e : desc.roots) e.value -= dep.shift;
            merge_close_roots(desc.roots);
            dev_desc = std::max(dev_desc,
                                multiset_deviation(desc.roots, solve_cubic_oracle(cubic).roots));
        }
        const bool ok = dev_oracle < 1e-9 && dev_pair < 1e-9 && dev_chain < 1e-9 &&
                        dev_alt < 1e-9 && dev_desc < 1e-9;
        all_ok = all_ok && ok;
        std::snprintf(line, sizeof(line),
                      "type %-2d  n=%-4d oracle=%.3e  pair=%.3e  chain=%.3e  alt=%.3e  "
                      "descartes=%.3e  %s",
                      type, n_per_type, dev_oracle, dev_pair, dev_chain, dev_alt, dev_desc,
                      ok ? "ok" : "FAIL");
        out << line << "\n";
    }
    out << (all_ok ? "verify: all checks passed" : "verify: FAILURES detected") << "\n";
    return all_ok ? 0 : 3;
}

int run_figure(const std::array<double, 4>& coeffs, const std::string& method,
               const std::string& output_path, const Options& opts,
               std::ostream& out, std::ostream& err) {
    if (output_path.empty()) {
        err << "missing output path\n";
        return 1;
    }
    const Cubic cubic{coeffs[0], coeffs[1], coeffs[2], coeffs[3]};
    if (cubic.c3 == 0.0) {
        err << "not a cubic: leading coefficient is zero\n";
        return 1;
    }

    FigureSpec spec{};
    std::vector<Point2> marks;
    if (method == "khayyam") {
        KhayyamForm form;
        try {
            form = classify(coeffs[0], coeffs[1], coeffs[2], coeffs[3]);
        } catch (const NotClassifiable& e) {
            err << "not classifiable: " << e.what() << "\n";
            return 2;
        }
        const ConstructionPlan plan = construction_plan(form);
        const Conic& u = plan.curves[plan.chosen.first];
        const Conic& v = plan.curves[plan.chosen.second];
        spec.curves.push_back({u, "(1)", "#1f4f9f"});
        spec.curves.push_back({v, "(2)", "#b03030"});
        marks = intersect_conics(u, v, opts.tolerance);
    } else if (method == "descartes") {
        const DepressedForm dep = depress(cubic);
        const DescartesConstruction cons = descartes_construction(dep);
        spec.curves.push_back({cons.parabola, "(P)", "#1f4f9f"});
        if (cons.radius_sq > 0.0) {
            spec.curves.push_back({cons.circle(), "(C)", "#b03030"});
            marks = intersect_conics(cons.parabola, cons.circle(), opts.tolerance);
        }
    } else {
        err << "unknown method: " << method << "\n";
        return 1;
    }

    double xmin = -1.0, xmax = 1.0, ymin = -1.0, ymax = 1.0;
    for (const Point2& pt : marks) {
        xmin = std::min(xmin, pt.x);
        xmax = std::max(xmax, pt.x);
        ymin = std::min(ymin, pt.y);
        ymax = std::max(ymax, pt.y);
    }
    const double pad = 0.35 * std::max(xmax - xmin, ymax - ymin);
    spec.xmin = xmin - pad;
    spec.xmax = xmax + pad;
    spec.ymin = ymin - pad;
    spec.ymax = ymax + pad;
    spec.show_axes = true;

    const char* labels[] = {"D", "E", "G", "H", "I"};
    int li = 0;
    for (const Point2& pt : marks)
        spec.points.push_back({pt, li < 5 ? labels[li++] : ""});

    std::ofstream file(output_path);
    if (!file) {
        err << "cannot open output file: " << output_path << "\n";
        return 1;
    }
    file << render_figure(spec);
    out << "wrote " << output_path << "\n";
    return 0;
}

} // namespace conic_cubics::cli
