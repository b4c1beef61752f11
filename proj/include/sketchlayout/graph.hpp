#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace sketchlayout {

using NodeIndex = std::size_t;

/// Simple undirected graph over string ids. Node indices follow insertion
/// order, and that order is the "id order" used for every tie-break.
class Graph {
public:
    Graph() = default;

    NodeIndex add_node(std::string id);
    /// Adds both endpoints if missing. Self-loops and repeated edges are
    /// ignored; direction is discarded.
    void add_edge(std::string_view a, std::string_view b);
    void add_edge(NodeIndex a, NodeIndex b);

    std::size_t node_count() const { return ids_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    bool empty() const { return ids_.empty(); }

    const std::string& id(NodeIndex v) const { return ids_[v]; }
    const std::vector<std::string>& ids() const { return ids_; }
    std::optional<NodeIndex> find(std::string_view id) const;

    /// Neighbors in ascending index order.
    const std::vector<NodeIndex>& neighbors(NodeIndex v) const { return adjacency_[v]; }
    std::size_t degree(NodeIndex v) const { return adjacency_[v].size(); }
    bool adjacent(NodeIndex a, NodeIndex b) const;

    /// Edges as (smaller index, larger index), in insertion order.
    const std::vector<std::pair<NodeIndex, NodeIndex>>& edges() const { return edges_; }

    /// Subgraph induced by `nodes`, keeping the given order of node ids.
    Graph induced(const std::vector<NodeIndex>& nodes) const;

private:
    std::vector<std::string> ids_;
    std::unordered_map<std::string, NodeIndex> index_;
    std::vector<std::vector<NodeIndex>> adjacency_;
    std::vector<std::pair<NodeIndex, NodeIndex>> edges_;
};

/// `{"nodes": [...], "edges": [["a","b"], ...]}`. Edge endpoints must be
/// listed nodes.
Graph parse_graph_json(std::string_view text);
/// One whitespace-separated `a b` pair per line; `#` and `%` start comments.
Graph parse_edge_list(std::string_view text);
/// JSON when the first non-blank character is `{`, edge list otherwise.
Graph parse_graph(std::string_view text);

} // namespace sketchlayout
