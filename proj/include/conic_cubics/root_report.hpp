#pragma once

#include <vector>

namespace conic_cubics {

enum class Method { khayyam, descartes, oracle };

const char* to_string(Method method);

struct RootEntry {
    double value;
    int multiplicity;
};

/// Validated real roots with residuals and method provenance.
struct RootReport {
    std::vector<RootEntry> roots; // sorted ascending by value
    double residual_max = 0.0;
    Method method = Method::oracle;
    bool impossible = false;
};

/// Merge sorted root entries whose values differ by less than
/// rel_tol * max(1, |value|), summing multiplicities. All reporting paths
/// use the same rule so multiplicity semantics agree across methods.
void merge_close_roots(std::vector<RootEntry>& roots, double rel_tol = 1e-7);

} // namespace conic_cubics
