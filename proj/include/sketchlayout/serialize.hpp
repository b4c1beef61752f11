#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "sketchlayout/constraints.hpp"
#include "sketchlayout/graph.hpp"
#include "sketchlayout/layout.hpp"
#include "sketchlayout/mapping.hpp"
#include "sketchlayout/polyline.hpp"

namespace sketchlayout {

using Json = nlohmann::ordered_json;

/// `{"closed": bool, "points": [[x,y],...]}`
Json chain_to_json(const SegmentChain& chain);
SegmentChain chain_from_json(const Json& j);

/// `{"relativePlacement": [{"left": a, "right": b}, {"top": a, "bottom": b}],
///   "alignment": {"horizontal": [[...]], "vertical": [[...]]}}`
Json constraints_to_json(const ConstraintSet& cs, const Graph& graph);
ConstraintSet constraints_from_json(const Json& j, const Graph& graph);

Json mapping_to_json(const NodeLineMapping& mapping, const Graph& graph);

Json report_to_json(const SatisfactionReport& report);

/// `{"positions": {"id": [x,y], ...}, "report": {...}}`
Json layout_to_json(const LayoutResult& result, const Graph& graph);

/// Accepts either a full layout document or a bare `{"id": [x,y]}` map.
/// Every graph node must be present.
std::vector<Point> positions_from_json(const Json& j, const Graph& graph);

Json graph_to_json(const Graph& graph);
Graph graph_from_json(const Json& j);

} // namespace sketchlayout
