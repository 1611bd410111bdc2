#include "conic_cubics/root_report.hpp"

#include <algorithm>
#include <cmath>

namespace conic_cubics {

const char* to_string(Method method) {
    switch (method) {
        case Method::khayyam: return "khayyam";
        case Method::descartes: return "descartes";
        case Method::oracle: return "oracle";
    }
    return "?";
}

void merge_close_roots(std::vector<RootEntry>& roots, double rel_tol) {
    std::sort(roots.begin(), roots.end(),
              [](const RootEntry& a, const RootEntry& b) { return a.value < b.value; });
    std::vector<RootEntry> merged;
    for (const RootEntry& e : roots) {
        if (!merged.empty()) {
            RootEntry& last = merged.back();
            const double scale = std::max(1.0, std::abs(last.value));
            if (std::abs(e.value - last.value) <= rel_tol * scale) {
                // Weighted mean keeps a merged double root centered.
                const int m = last.multiplicity + e.multiplicity;
                last.value = (last.value * last.multiplicity + e.value * e.multiplicity) / m;
                last.multiplicity = m;
                continue;
            }
        }
        merged.push_back(e);
    }
    roots = std::move(merged);
}

} // namespace conic_cubics
