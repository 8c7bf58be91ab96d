#pragma once

#include <string>

#include "maxcov/model.hpp"
#include "maxcov/tsplib.hpp"

namespace maxcov {

// Uniform-scale affine map from instance coordinates onto the SVG canvas
// (y flipped, content centered inside the margin).
struct CanvasMap {
    double scale = 1;
    double offset_x = 0;
    double offset_y = 0;
    double canvas_height = 0;

    Point to_canvas(Point p) const {
        return {offset_x + scale * p.x, canvas_height - (offset_y + scale * p.y)};
    }
    Point to_instance(Point q) const {
        return {(q.x - offset_x) / scale, (canvas_height - q.y - offset_y) / scale};
    }
};

inline constexpr double kPlotWidth = 800;
inline constexpr double kPlotHeight = 800;
inline constexpr double kPlotMargin = 40;

CanvasMap make_canvas_map(const Instance& inst, double width = kPlotWidth,
                          double height = kPlotHeight, double margin = kPlotMargin);

// SVG document: targets as dots, the base highlighted, one polyline per
// non-empty route. Deterministic byte-for-byte for a given input.
std::string emit_route_plot(const Instance& inst, const RoutePlan& plan);

} // namespace maxcov
