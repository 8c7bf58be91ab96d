#include "maxcov/plot.hpp"

#include <algorithm>

#include "maxcov/format.hpp"

namespace maxcov {

namespace {

const char* kRouteColors[] = {
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
};

} // namespace

CanvasMap make_canvas_map(const Instance& inst, double width, double height, double margin) {
    double min_x = inst.coords[0].x, max_x = min_x;
    double min_y = inst.coords[0].y, max_y = min_y;
    for (const auto& p : inst.coords) {
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
    }

    const double span_x = max_x - min_x;
    const double span_y = max_y - min_y;
    const double avail_w = width - 2 * margin;
    const double avail_h = height - 2 * margin;

    double scale = 1.0;
    if (span_x > 0 && span_y > 0) {
        scale = std::min(avail_w / span_x, avail_h / span_y);
    } else if (span_x > 0) {
        scale = avail_w / span_x;
    } else if (span_y > 0) {
        scale = avail_h / span_y;
    }

    CanvasMap map;
    map.scale = scale;
    map.canvas_height = height;
    map.offset_x = margin + (avail_w - scale * span_x) / 2 - scale * min_x;
    map.offset_y = margin + (avail_h - scale * span_y) / 2 - scale * min_y;
    return map;
}

std::string emit_route_plot(const Instance& inst, const RoutePlan& plan) {
    const CanvasMap map = make_canvas_map(inst);

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + double_to_string(kPlotWidth) +
           "\" height=\"" + double_to_string(kPlotHeight) + "\" viewBox=\"0 0 " +
           double_to_string(kPlotWidth) + " " + double_to_string(kPlotHeight) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    std::size_t color_index = 0;
    for (const auto& route : plan.routes) {
        if (route.nodes.size() < 3) continue; // base->base, nothing to draw
        svg += "<polyline fill=\"none\" stroke=\"";
        svg += kRouteColors[color_index % std::size(kRouteColors)];
        svg += "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t k = 0; k < route.nodes.size(); ++k) {
            Point q = map.to_canvas(inst.coords[route.nodes[k]]);
            if (k > 0) svg += ' ';
            svg += double_to_string(q.x) + "," + double_to_string(q.y);
        }
        svg += "\"/>\n";
        ++color_index;
    }

    for (std::uint32_t i = 0; i < inst.num_nodes(); ++i) {
        if (i == inst.base_index) continue;
        Point q = map.to_canvas(inst.coords[i]);
        svg += "<circle cx=\"" + double_to_string(q.x) + "\" cy=\"" + double_to_string(q.y) +
               "\" r=\"2.5\" fill=\"#333333\"/>\n";
    }
    Point b = map.to_canvas(inst.coords[inst.base_index]);
    svg += "<circle cx=\"" + double_to_string(b.x) + "\" cy=\"" + double_to_string(b.y) +
           "\" r=\"5\" fill=\"#d62728\" stroke=\"black\"/>\n";
    svg += "</svg>\n";
    return svg;
}

} // namespace maxcov
