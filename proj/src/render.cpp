#include "conic_cubics/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>

namespace conic_cubics {

namespace {

constexpr int kCoarseSamples = 2048;
constexpr int kBranchSamples = 512;

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

struct Mapper {
    double scale, cx, cy, w, h;

    static Mapper fit(const FigureSpec& s) {
        const double margin = 24.0;
        const double sx = (s.width_px - 2.0 * margin) / (s.xmax - s.xmin);
        const double sy = (s.height_px - 2.0 * margin) / (s.ymax - s.ymin);
        // Uniform scale keeps circles round.
        return Mapper{std::min(sx, sy), (s.xmin + s.xmax) / 2.0, (s.ymin + s.ymax) / 2.0,
                      static_cast<double>(s.width_px), static_cast<double>(s.height_px)};
    }
    double px(double x) const { return w / 2.0 + (x - cx) * scale; }
    double py(double y) const { return h / 2.0 - (y - cy) * scale; }
};

using WorldPath = std::vector<std::pair<double, double>>;

// y on the requested branch of the conic at abscissa x, if real.
std::optional<double> branch_y(const Conic& c, double x, int branch, double eps) {
    const double qa = c.C;
    const double qb = c.B * x + c.E;
    const double qc = (c.A * x + c.D) * x + c.F;
    if (std::abs(qa) > eps) {
        const double disc = qb * qb - 4.0 * qa * qc;
        if (disc < 0.0) return std::nullopt;
        const double sq = std::sqrt(disc);
        return (-qb + (branch == 0 ? sq : -sq)) / (2.0 * qa);
    }
    if (branch != 0) return std::nullopt;
    if (std::abs(qb) <= eps * 1e-3) return std::nullopt; // pole / asymptote
    return -qc / qb;
}

// Sample one conic into polyline branches whose vertices all satisfy the
// curve equation; paths break at asymptotes and viewport exits.
std::vector<WorldPath> sample_conic(const Conic& c, const FigureSpec& s) {
    const double coeff = std::max({std::abs(c.A), std::abs(c.B), std::abs(c.C),
                                   std::abs(c.D), std::abs(c.E), std::abs(c.F)});
    const double eps = 1e-13 * coeff;
    std::vector<WorldPath> paths;

    const bool has_y2 = std::abs(c.C) > eps;
    const bool has_y = has_y2 || std::abs(c.B) > eps || std::abs(c.E) > eps;

    if (!has_y) {
        // Vertical line pair A x^2 + D x + F = 0.
        const double disc = c.D * c.D - 4.0 * c.A * c.F;
        std::vector<double> xs;
        if (std::abs(c.A) > eps) {
            if (disc >= 0.0) {
                xs.push_back((-c.D + std::sqrt(disc)) / (2.0 * c.A));
                xs.push_back((-c.D - std::sqrt(disc)) / (2.0 * c.A));
            }
        } else if (std::abs(c.D) > eps) {
            xs.push_back(-c.F / c.D);
        }
        for (double x : xs) {
            if (x < s.xmin || x > s.xmax) continue;
            WorldPath path;
            for (int i = 0; i <= kBranchSamples; ++i)
                path.emplace_back(x, s.ymin + (s.ymax - s.ymin) * i / kBranchSamples);
            paths.push_back(std::move(path));
        }
        return paths;
    }

    const double step = (s.xmax - s.xmin) / kCoarseSamples;
    const int nbranches = has_y2 ? 2 : 1;
    for (int branch = 0; branch < nbranches; ++branch) {
        // Coarse visibility scan, then dense resampling per visible run.
        int run_start = -1;
        for (int i = 0; i <= kCoarseSamples + 1; ++i) {
            bool visible = false;
            if (i <= kCoarseSamples) {
                const double x = s.xmin + step * i;
                if (auto y = branch_y(c, x, branch, eps))
                    visible = *y >= s.ymin && *y <= s.ymax;
            }
            if (visible && run_start < 0) run_start = i;
            if (!visible && run_start >= 0) {
                const double x0 = std::max(s.xmin, s.xmin + step * (run_start - 1));
                const double x1 = std::min(s.xmax, s.xmin + step * i);
                WorldPath path;
                for (int k = 0; k <= kBranchSamples; ++k) {
                    const double x = x0 + (x1 - x0) * k / kBranchSamples;
                    if (auto y = branch_y(c, x, branch, eps)) {
                        if (*y >= s.ymin && *y <= s.ymax) {
                            path.emplace_back(x, *y);
                            continue;
                        }
                    }
                    if (path.size() >= 2) paths.push_back(path);
                    path.clear();
                }
                if (path.size() >= 2) paths.push_back(std::move(path));
                run_start = -1;
            }
        }
    }
    return paths;
}

} // namespace

std::string render_figure(const FigureSpec& spec) {
    if (!(spec.xmax > spec.xmin) || !(spec.ymax > spec.ymin))
        throw std::invalid_argument("empty viewport rectangle");
    if (spec.width_px <= 0 || spec.height_px <= 0)
        throw std::invalid_argument("non-positive figure dimensions");

    const Mapper map = Mapper::fit(spec);
    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           std::to_string(spec.width_px) + "\" height=\"" + std::to_string(spec.height_px) +
           "\" viewBox=\"0 0 " + std::to_string(spec.width_px) + " " +
           std::to_string(spec.height_px) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    if (spec.show_axes) {
        if (spec.ymin <= 0.0 && spec.ymax >= 0.0)
            svg += "<line class=\"axis\" x1=\"" + fmt(map.px(spec.xmin)) + "\" y1=\"" +
                   fmt(map.py(0.0)) + "\" x2=\"" + fmt(map.px(spec.xmax)) + "\" y2=\"" +
                   fmt(map.py(0.0)) + "\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
        if (spec.xmin <= 0.0 && spec.xmax >= 0.0)
            svg += "<line class=\"axis\" x1=\"" + fmt(map.px(0.0)) + "\" y1=\"" +
                   fmt(map.py(spec.ymin)) + "\" x2=\"" + fmt(map.px(0.0)) + "\" y2=\"" +
                   fmt(map.py(spec.ymax)) + "\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
    }

    std::size_t visible_points = 0;
    for (const CurveEntry& entry : spec.curves) {
        const auto paths = sample_conic(entry.conic, spec);
        const std::string stroke = entry.style.empty() ? "black" : entry.style;
        bool labeled = entry.label.empty();
        for (const WorldPath& path : paths) {
            visible_points += path.size();
            svg += "<polyline fill=\"none\" stroke=\"" + stroke + "\" stroke-width=\"1.5\" points=\"";
            for (const auto& [x, y] : path)
                svg += fmt(map.px(x)) + "," + fmt(map.py(y)) + " ";
            svg += "\"/>\n";
            if (!labeled) {
                const auto& [lx, ly] = path[path.size() / 2];
                svg += "<text x=\"" + fmt(map.px(lx) + 6.0) + "\" y=\"" + fmt(map.py(ly) - 6.0) +
                       "\" font-size=\"13\" fill=\"" + stroke + "\">" + entry.label + "</text>\n";
                labeled = true;
            }
        }
    }
    if (!spec.curves.empty() && visible_points == 0)
        throw EmptyViewport("no curve point inside the viewport");

    for (const PointEntry& entry : spec.points) {
        const double x = map.px(entry.point.x), y = map.py(entry.point.y);
        svg += "<circle cx=\"" + fmt(x) + "\" cy=\"" + fmt(y) + "\" r=\"3\" fill=\"black\"/>\n";
        if (!entry.label.empty())
            svg += "<text x=\"" + fmt(x + 6.0) + "\" y=\"" + fmt(y - 6.0) +
                   "\" font-size=\"13\">" + entry.label + "</text>\n";
    }

    svg += "</svg>\n";
    return svg;
}

} // namespace conic_cubics
