#include "sketchlayout/svg.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "sketchlayout/error.hpp"

namespace sketchlayout {

namespace {

std::string escape(const std::string& text)
{
    std::string out;
    for (char c : text) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

} // namespace

std::string render_svg(const Graph& graph, const std::vector<Point>& positions, const SvgOptions& options)
{
    if (positions.size() != graph.node_count())
        throw Error(ErrorKind::Validation, "SVG export needs a position for every node");

    double min_x = 0.0, min_y = 0.0, max_x = 0.0, max_y = 0.0;
    if (!positions.empty()) {
        min_x = min_y = std::numeric_limits<double>::max();
        max_x = max_y = std::numeric_limits<double>::lowest();
        for (const Point& p : positions) {
            min_x = std::min(min_x, p.x - options.node_radius);
            min_y = std::min(min_y, p.y - options.node_radius);
            max_x = std::max(max_x, p.x + options.node_radius);
            max_y = std::max(max_y, p.y + options.node_radius);
        }
    }
    const double w = std::max(max_x - min_x, 1.0);
    const double h = std::max(max_y - min_y, 1.0);
    const double mx = w * options.margin_fraction;
    const double my = h * options.margin_fraction;

    std::ostringstream svg;
    svg.precision(6);
    svg << std::fixed;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << min_x - mx << ' ' << min_y - my << ' '
        << w + 2 * mx << ' ' << h + 2 * my << "\">\n";
    svg << "<g stroke=\"#888\" stroke-width=\"1.5\">\n";
    for (const auto& [a, b] : graph.edges())
        svg << "<line x1=\"" << positions[a].x << "\" y1=\"" << positions[a].y << "\" x2=\"" << positions[b].x
            << "\" y2=\"" << positions[b].y << "\"/>\n";
    svg << "</g>\n<g fill=\"#4a90d9\" stroke=\"#1d4f8a\">\n";
    for (NodeIndex v = 0; v < graph.node_count(); ++v) {
        svg << "<circle cx=\"" << positions[v].x << "\" cy=\"" << positions[v].y << "\" r=\"" << options.node_radius
            << "\"><title>" << escape(graph.id(v)) << "</title></circle>\n";
    }
    svg << "</g>\n";
    if (options.labels) {
        svg << "<g font-family=\"sans-serif\" font-size=\"" << options.node_radius << "\" text-anchor=\"middle\">\n";
        for (NodeIndex v = 0; v < graph.node_count(); ++v)
            svg << "<text x=\"" << positions[v].x << "\" y=\"" << positions[v].y - options.node_radius * 1.4 << "\">"
                << escape(graph.id(v)) << "</text>\n";
        svg << "</g>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

} // namespace sketchlayout
