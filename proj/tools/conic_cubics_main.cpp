#include "conic_cubics/cli.hpp"

#include <CLI11.hpp>

#include <array>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

using conic_cubics::PairChoice;
using conic_cubics::cli::Format;
using conic_cubics::cli::Options;

namespace {

std::array<double, 4> to_coeffs(const std::vector<double>& v) {
    return {v[0], v[1], v[2], v[3]};
}

PairChoice to_pair(int code) {
    if (code == 13) return PairChoice::p13;
    if (code == 23) return PairChoice::p23;
    return PairChoice::p12;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cubic equations by conic intersections: the fourteen classical "
                 "constructions, the parabola-circle method, and a closed-form oracle"};
    app.require_subcommand(1);
    app.fallthrough(); // allow --format / --tol after the subcommand too

    Options opts;
    if (const char* env_seed = std::getenv("CONIC_CUBICS_SEED"))
        opts.seed = std::strtoull(env_seed, nullptr, 10);

    std::string format = "text";
    app.add_option("--format", format, "Output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--tol", opts.tolerance, "Residual tolerance")->check(CLI::PositiveNumber);

    std::vector<double> coeffs;
    std::string method = "khayyam";
    int pair_code = 12;
    std::string output_path;
    int n_per_type = 100;
    bool inject_fault = false;

    auto* cmd_classify = app.add_subcommand("classify", "Classify a cubic into its canonical type");
    cmd_classify->add_option("coeffs", coeffs, "c3 c2 c1 c0")->expected(4)->required();

    auto* cmd_solve = app.add_subcommand("solve", "Solve a cubic");
    cmd_solve->add_option("coeffs", coeffs, "c3 c2 c1 c0")->expected(4)->required();
    cmd_solve->add_option("--method", method, "khayyam, descartes or oracle")
        ->check(CLI::IsMember({"khayyam", "descartes", "oracle"}));
    cmd_solve->add_option("--pair", pair_code, "Curve pair: 12, 13 or 23")
        ->check(CLI::IsMember({12, 13, 23}));

    auto* cmd_table = app.add_subcommand("table", "Print the fourteen-type catalog");

    auto* cmd_verify = app.add_subcommand("verify", "Randomized cross-validation of all solvers");
    cmd_verify->add_option("--n", n_per_type, "Instances per type")->check(CLI::PositiveNumber);
    cmd_verify->add_option("--seed", opts.seed, "Random seed");
    cmd_verify->add_flag("--inject-fault", inject_fault)->group(""); // harness self-test

    auto* cmd_figure = app.add_subcommand("figure", "Render a construction as SVG");
    cmd_figure->add_option("coeffs", coeffs, "c3 c2 c1 c0")->expected(4)->required();
    cmd_figure->add_option("--method", method, "khayyam or descartes")
        ->check(CLI::IsMember({"khayyam", "descartes"}));
    cmd_figure->add_option("-o,--output", output_path, "Output SVG path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 1;
    }

    opts.format = format == "json" ? Format::json : Format::text;
    opts.pair = to_pair(pair_code);

    if (cmd_classify->parsed())
        return conic_cubics::cli::run_classify(to_coeffs(coeffs), opts, std::cout, std::cerr);
    if (cmd_solve->parsed())
        return conic_cubics::cli::run_solve(to_coeffs(coeffs), method, opts, std::cout, std::cerr);
    if (cmd_table->parsed())
        return conic_cubics::cli::run_table(opts, std::cout);
    if (cmd_verify->parsed())
        return conic_cubics::cli::run_verify(n_per_type, opts, std::cout, inject_fault);
    if (cmd_figure->parsed())
        return conic_cubics::cli::run_figure(to_coeffs(coeffs), method, output_path, opts,
                                             std::cout, std::cerr);
    return 1;
}
