#include "sketchlayout/serialize.hpp"

#include "sketchlayout/error.hpp"

namespace sketchlayout {

namespace {

NodeIndex lookup(const Graph& graph, const Json& id)
{
    if (!id.is_string())
        throw Error(ErrorKind::InvalidInput, "constraint node ids must be strings");
    const auto v = graph.find(id.get<std::string>());
    if (!v)
        throw Error(ErrorKind::Validation, "unknown node '" + id.get<std::string>() + "'");
    return *v;
}

Json point_json(Point p) { return Json::array({p.x, p.y}); }

Point point_from(const Json& j)
{
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw Error(ErrorKind::InvalidInput, "points must be [x, y] number pairs");
    return {j[0].get<double>(), j[1].get<double>()};
}

Json groups_json(const std::vector<std::vector<NodeIndex>>& groups, const Graph& graph)
{
    Json out = Json::array();
    for (const auto& g : groups) {
        Json ids = Json::array();
        for (NodeIndex v : g)
            ids.push_back(graph.id(v));
        out.push_back(std::move(ids));
    }
    return out;
}

} // namespace

Json chain_to_json(const SegmentChain& chain)
{
    Json points = Json::array();
    for (const Point& p : chain.points)
        points.push_back(point_json(p));
    return Json{{"closed", chain.closed}, {"points", std::move(points)}};
}

SegmentChain chain_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("points") || !j.at("points").is_array())
        throw Error(ErrorKind::InvalidInput, "chain JSON needs a \"points\" array");
    SegmentChain chain;
    chain.closed = j.value("closed", false);
    for (const auto& p : j.at("points"))
        chain.points.push_back(point_from(p));
    if (chain.points.size() < 2)
        throw Error(ErrorKind::InvalidInput, "chain needs at least one segment");
    for (std::size_t i = 1; i < chain.points.size(); ++i)
        if (chain.points[i] == chain.points[i - 1])
            throw Error(ErrorKind::InvalidInput, "chain has repeated consecutive points");
    if (chain.closed && chain.points.front() != chain.points.back())
        throw Error(ErrorKind::InvalidInput, "closed chain must end at its first point");
    return chain;
}

Json constraints_to_json(const ConstraintSet& cs, const Graph& graph)
{
    Json relative = Json::array();
    for (const auto& c : cs.relative) {
        if (c.axis == Axis::Horizontal)
            relative.push_back(Json{{"left", graph.id(c.first)}, {"right", graph.id(c.second)}});
        else
            relative.push_back(Json{{"top", graph.id(c.first)}, {"bottom", graph.id(c.second)}});
    }
    return Json{{"relativePlacement", std::move(relative)},
                {"alignment",
                 Json{{"horizontal", groups_json(cs.horizontal_alignments, graph)},
                      {"vertical", groups_json(cs.vertical_alignments, graph)}}}};
}

ConstraintSet constraints_from_json(const Json& j, const Graph& graph)
{
    if (!j.is_object())
        throw Error(ErrorKind::InvalidInput, "constraint JSON must be an object");
    ConstraintSet cs;
    if (j.contains("relativePlacement")) {
        for (const auto& r : j.at("relativePlacement")) {
            if (r.contains("left") && r.contains("right"))
                cs.relative.push_back({lookup(graph, r.at("left")), lookup(graph, r.at("right")), Axis::Horizontal});
            else if (r.contains("top") && r.contains("bottom"))
                cs.relative.push_back({lookup(graph, r.at("top")), lookup(graph, r.at("bottom")), Axis::Vertical});
            else
                throw Error(ErrorKind::InvalidInput, "relative constraint needs left/right or top/bottom");
        }
    }
    if (j.contains("alignment")) {
        const Json& a = j.at("alignment");
        auto read = [&](const char* key, std::vector<std::vector<NodeIndex>>& into) {
            if (!a.contains(key))
                return;
            for (const auto& group : a.at(key)) {
                std::vector<NodeIndex> members;
                for (const auto& id : group)
                    members.push_back(lookup(graph, id));
                if (members.size() >= 2)
                    into.push_back(std::move(members));
            }
        };
        read("horizontal", cs.horizontal_alignments);
        read("vertical", cs.vertical_alignments);
    }
    return cs;
}

Json mapping_to_json(const NodeLineMapping& mapping, const Graph& graph)
{
    Json segments = Json::array();
    for (const auto& a : mapping.assignments) {
        Json nodes = Json::array();
        for (NodeIndex v : a.nodes)
            nodes.push_back(graph.id(v));
        segments.push_back(Json{{"segment", a.segment}, {"nodes", std::move(nodes)}});
    }
    Json parent = Json::object();
    for (NodeIndex v = 0; v < mapping.parent.size(); ++v)
        if (mapping.parent[v])
            parent[graph.id(v)] = graph.id(*mapping.parent[v]);
    return Json{{"segments", std::move(segments)}, {"parent", std::move(parent)}};
}

Json report_to_json(const SatisfactionReport& r)
{
    return Json{{"relative_satisfied", r.relative_satisfied},
                {"relative_ordered", r.relative_ordered},
                {"relative_total", r.relative_total},
                {"alignment_max_deviation", r.alignment_max_deviation},
                {"dropped_constraints", r.dropped_constraints}};
}

Json layout_to_json(const LayoutResult& result, const Graph& graph)
{
    Json positions = Json::object();
    for (NodeIndex v = 0; v < graph.node_count(); ++v)
        positions[graph.id(v)] = point_json(result.positions.at(v));
    return Json{{"positions", std::move(positions)}, {"report", report_to_json(result.report)}};
}

std::vector<Point> positions_from_json(const Json& j, const Graph& graph)
{
    const Json& map = j.is_object() && j.contains("positions") ? j.at("positions") : j;
    if (!map.is_object())
        throw Error(ErrorKind::InvalidInput, "positions must be an object of id -> [x, y]");
    std::vector<Point> out(graph.node_count());
    std::vector<bool> seen(graph.node_count(), false);
    for (const auto& [id, p] : map.items()) {
        const auto v = graph.find(id);
        if (!v)
            throw Error(ErrorKind::Validation, "positions mention unknown node '" + id + "'");
        out[*v] = point_from(p);
        seen[*v] = true;
    }
    for (NodeIndex v = 0; v < graph.node_count(); ++v)
        if (!seen[v])
            throw Error(ErrorKind::Validation, "no position for node '" + graph.id(v) + "'");
    return out;
}

Json graph_to_json(const Graph& graph)
{
    Json edges = Json::array();
    for (const auto& [a, b] : graph.edges())
        edges.push_back(Json::array({graph.id(a), graph.id(b)}));
    return Json{{"nodes", graph.ids()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const Json& j)
{
    return parse_graph_json(j.dump());
}

} // namespace sketchlayout
