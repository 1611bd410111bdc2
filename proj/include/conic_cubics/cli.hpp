#pragma once

#include "conic_cubics/khayyam.hpp"

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace conic_cubics::cli {

enum class Format { text, json };

struct Options {
    double tolerance = 1e-10;
    Format format = Format::text;
    std::uint64_t seed = 12345;
    PairChoice pair = PairChoice::p12;
};

// Exit codes: 0 success, 1 usage, 2 classification failure, 3 verification failure.

int run_classify(const std::array<double, 4>& coeffs, const Options& opts,
                 std::ostream& out, std::ostream& err);

int run_solve(const std::array<double, 4>& coeffs, const std::string& method,
              const Options& opts, std::ostream& out, std::ostream& err);

int run_table(const Options& opts, std::ostream& out);

int run_verify(int n_per_type, const Options& opts, std::ostream& out,
               bool inject_fault = false);

int run_figure(const std::array<double, 4>& coeffs, const std::string& method,
               const std::string& output_path, const Options& opts,
               std::ostream& out, std::ostream& err);

} // namespace conic_cubics::cli
