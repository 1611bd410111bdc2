#include "conic_cubics/render.hpp"

#include "conic_cubics/errors.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <string>
#include <vector>

using namespace conic_cubics;

namespace {

FigureSpec basic_spec() {
    FigureSpec spec;
    spec.curves.push_back({Conic(1, 0, 0, 0, -1, 0), "P", "#1f77b4"}); // y = x^2
    spec.curves.push_back({Conic(1, 0, 1, 0, 0, -1), "C", "#d62728"}); // unit circle
    spec.points.push_back({Point2{0.7861513777574233, 0.6180339887498949, 1}, "G"});
    spec.xmin = -2;
    spec.xmax = 2;
    spec.ymin = -1.5;
    spec.ymax = 1.5;
    return spec;
}

int count_occurrences(const std::string& hay, const std::string& needle) {
    int n = 0;
    for (std::size_t pos = hay.find(needle); pos != std::string::npos;
         pos = hay.find(needle, pos + needle.size()))
        ++n;
    return n;
}

// All "x,y" vertex pairs of every polyline in the document.
std::vector<std::pair<double, double>> polyline_vertices(const std::string& svg) {
    std::vector<std::pair<double, double>> out;
    std::size_t pos = 0;
    while ((pos = svg.find("points=\"", pos)) != std::string::npos) {
        pos += 8;
        const std::size_t end = svg.find('"', pos);
        std::string body = svg.substr(pos, end - pos);
        const char* s = body.c_str();
        char* next = nullptr;
        while (*s) {
            const double x = std::strtod(s, &next);
            if (next == s) break;
            s = next + 1; // skip comma
            const double y = std::strtod(s, &next);
            if (next == s) break;
            s = next;
            while (*s == ' ') ++s;
            out.emplace_back(x, y);
        }
        pos = end;
    }
    return out;
}

} // namespace

TEST_CASE("document structure") {
    const std::string svg = render_figure(basic_spec());
    CHECK(svg.find("<?xml version=\"1.0\"") == 0);
    CHECK(svg.find("<svg xmlns=\"http://www.w3.org/2000/svg\"") != std::string::npos);
    CHECK(svg.find("width=\"800\"") != std::string::npos);
    CHECK(svg.find("height=\"600\"") != std::string::npos);
    CHECK(count_occurrences(svg, "<polyline") >= 3); // parabola + two circle branches
    CHECK(count_occurrences(svg, "class=\"axis\"") == 2);
    CHECK(svg.find(">P</text>") != std::string::npos);
    CHECK(svg.find(">C</text>") != std::string::npos);
    CHECK(svg.find(">G</text>") != std::string::npos);
    CHECK(svg.find("<circle") != std::string::npos);
    CHECK(svg.rfind("</svg>\n") == svg.size() - 7);
}

TEST_CASE("output is byte-identical across calls") {
    const std::string a = render_figure(basic_spec());
    const std::string b = render_figure(basic_spec());
    CHECK(a == b);
}

TEST_CASE("every emitted vertex lies on one of the curves") {
    FigureSpec spec = basic_spec();
    spec.points.clear();
    const std::string svg = render_figure(spec);
    const auto vertices = polyline_vertices(svg);
    REQUIRE(vertices.size() > 100);

    // Invert the uniform pixel mapping used by the renderer.
    const double margin = 24.0;
    const double scale = std::min((spec.width_px - 2 * margin) / (spec.xmax - spec.xmin),
                                  (spec.height_px - 2 * margin) / (spec.ymax - spec.ymin));
    const double cx = (spec.xmin + spec.xmax) / 2, cy = (spec.ymin + spec.ymax) / 2;
    for (const auto& [px, py] : vertices) {
        const double x = cx + (px - spec.width_px / 2.0) / scale;
        const double y = cy - (py - spec.height_px / 2.0) / scale;
        const bool on_some = on_curve(spec.curves[0].conic, x, y, 1e-6) ||
                             on_curve(spec.curves[1].conic, x, y, 1e-6);
        CHECK(on_some);
    }
}

TEST_CASE("hyperbola branches break at the asymptote") {
    FigureSpec spec;
    spec.curves.push_back({Conic(0, 1, 0, 0, 0, -1), "H", ""}); // xy = 1
    spec.xmin = -3;
    spec.xmax = 3;
    spec.ymin = -3;
    spec.ymax = 3;
    const std::string svg = render_figure(spec);
    CHECK(count_occurrences(svg, "<polyline") >= 2);
    // No vertex may sit near the pole at x = 0.
    for (const auto& [px, py] : polyline_vertices(svg)) {
        (void)py;
        CHECK(std::abs(px - spec.width_px / 2.0) > 1.0);
    }
}

TEST_CASE("invisible curves raise EmptyViewport") {
    FigureSpec spec;
    spec.curves.push_back({Conic(1, 0, 1, 0, 0, -1), "", ""}); // unit circle
    spec.xmin = 10;
    spec.xmax = 12;
    spec.ymin = 10;
    spec.ymax = 12;
    CHECK_THROWS_AS(render_figure(spec), EmptyViewport);
}

TEST_CASE("figure without curves renders points and axes only") {
    FigureSpec spec;
    spec.points.push_back({Point2{0.5, 0.5, 1}, "D"});
    spec.xmin = -1;
    spec.xmax = 1;
    spec.ymin = -1;
    spec.ymax = 1;
    const std::string svg = render_figure(spec);
    CHECK(svg.find("<circle") != std::string::npos);
    CHECK(count_occurrences(svg, "class=\"axis\"") == 2);
}

TEST_CASE("bad viewports and dimensions are rejected") {
    FigureSpec spec = basic_spec();
    spec.xmax = spec.xmin;
    CHECK_THROWS_AS(render_figure(spec), std::invalid_argument);
    spec = basic_spec();
    spec.width_px = 0;
    CHECK_THROWS_AS(render_figure(spec), std::invalid_argument);
}
