#include "sketchlayout/graph.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "sketchlayout/error.hpp"

namespace sketchlayout {

NodeIndex Graph::add_node(std::string id)
{
    if (auto it = index_.find(id); it != index_.end())
        return it->second;
    const NodeIndex v = ids_.size();
    index_.emplace(id, v);
    ids_.push_back(std::move(id));
    adjacency_.emplace_back();
    return v;
}

void Graph::add_edge(std::string_view a, std::string_view b)
{
    const NodeIndex u = add_node(std::string(a));
    const NodeIndex v = add_node(std::string(b));
    add_edge(u, v);
}

void Graph::add_edge(NodeIndex a, NodeIndex b)
{
    if (a >= ids_.size() || b >= ids_.size())
        throw Error(ErrorKind::InvalidInput, "edge endpoint out of range");
    if (a == b || adjacent(a, b))
        return;
    auto insert_sorted = [](std::vector<NodeIndex>& list, NodeIndex v) {
        list.insert(std::lower_bound(list.begin(), list.end(), v), v);
    };
    insert_sorted(adjacency_[a], b);
    insert_sorted(adjacency_[b], a);
    edges_.emplace_back(std::min(a, b), std::max(a, b));
}

std::optional<NodeIndex> Graph::find(std::string_view id) const
{
    if (auto it = index_.find(std::string(id)); it != index_.end())
        return it->second;
    return std::nullopt;
}

bool Graph::adjacent(NodeIndex a, NodeIndex b) const
{
    const auto& list = adjacency_[a];
    return std::binary_search(list.begin(), list.end(), b);
}

Graph Graph::induced(const std::vector<NodeIndex>& nodes) const
{
    Graph sub;
    std::vector<bool> inside(ids_.size(), false);
    for (NodeIndex v : nodes) {
        sub.add_node(ids_[v]);
        inside[v] = true;
    }
    for (const auto& [a, b] : edges_)
        if (inside[a] && inside[b])
            sub.add_edge(ids_[a], ids_[b]);
    return sub;
}

namespace {

std::string node_name(const nlohmann::json& v)
{
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_number_integer())
        return std::to_string(v.get<long long>());
    if (v.is_object() && v.contains("id"))
        return node_name(v.at("id"));
    throw Error(ErrorKind::InvalidInput, "node ids must be strings or integers");
}

} // namespace

Graph parse_graph_json(std::string_view text)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorKind::InvalidInput, std::string("graph JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("nodes") || !doc.at("nodes").is_array())
        throw Error(ErrorKind::InvalidInput, "graph JSON needs a \"nodes\" array");

    Graph g;
    for (const auto& n : doc.at("nodes"))
        g.add_node(node_name(n));
    if (!doc.contains("edges"))
        return g;
    if (!doc.at("edges").is_array())
        throw Error(ErrorKind::InvalidInput, "graph JSON \"edges\" must be an array");
    for (const auto& e : doc.at("edges")) {
        std::string a, b;
        if (e.is_array() && e.size() == 2) {
            a = node_name(e[0]);
            b = node_name(e[1]);
        } else if (e.is_object() && e.contains("source") && e.contains("target")) {
            a = node_name(e.at("source"));
            b = node_name(e.at("target"));
        } else {
            throw Error(ErrorKind::InvalidInput, "edges must be [a, b] pairs");
        }
        const auto u = g.find(a);
        const auto v = g.find(b);
        if (!u || !v)
            throw Error(ErrorKind::InvalidInput, "edge (" + a + ", " + b + ") references an unknown node");
        g.add_edge(*u, *v);
    }
    return g;
}

Graph parse_edge_list(std::string_view text)
{
    Graph g;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (const auto cut = line.find_first_of("#%"); cut != std::string::npos)
            line.erase(cut);
        std::istringstream fields(line);
        std::string a, b;
        if (!(fields >> a))
            continue;
        if (!(fields >> b)) {
            g.add_node(a); // isolated node
            continue;
        }
        g.add_edge(a, b);
    }
    return g;
}

Graph parse_graph(std::string_view text)
{
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{')
        return parse_graph_json(text);
    return parse_edge_list(text);
}

} // namespace sketchlayout
