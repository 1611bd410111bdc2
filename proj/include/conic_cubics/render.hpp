#pragma once

#include "conic_cubics/conic.hpp"
#include "conic_cubics/intersect.hpp"

#include <string>
#include <vector>

namespace conic_cubics {

struct CurveEntry {
    Conic conic;
    std::string label;
    std::string style; // SVG stroke color
};

struct PointEntry {
    Point2 point;
    std::string label;
};

struct FigureSpec {
    std::vector<CurveEntry> curves;
    std::vector<PointEntry> points;
    double xmin, xmax, ymin, ymax;
    int width_px = 800;
    int height_px = 600;
    bool show_axes = true;
};

/// Deterministic SVG 1.1 document: conics sampled branch by branch (every
/// emitted vertex lies exactly on its curve), labeled points, optional
/// axes. Throws EmptyViewport when curves are given but none is visible.
std::string render_figure(const FigureSpec& spec);

} // namespace conic_cubics
