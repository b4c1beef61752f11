#pragma once

#include <string>
#include <vector>

#include "sketchlayout/geometry.hpp"
#include "sketchlayout/graph.hpp"

namespace sketchlayout {

struct SvgOptions {
    double node_radius = 8.0;
    double margin_fraction = 0.05;
    bool labels = true;
};

/// Node-link drawing: edges as lines, nodes as labelled circles; the viewBox
/// is the bounding box plus a margin.
std::string render_svg(const Graph& graph, const std::vector<Point>& positions, const SvgOptions& options = {});

} // namespace sketchlayout
