#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sketchlayout/graph.hpp"
#include "sketchlayout/polyline.hpp"

namespace sketchlayout {

/// Nodes of degree > 1 in the original graph together with the edges they
/// induce. Indices refer to the original graph.
struct CoreSubgraph {
    std::vector<NodeIndex> nodes;                 // ascending
    std::vector<std::vector<NodeIndex>> adjacency; // sized like the original graph; empty outside the core
    std::vector<bool> member;

    std::size_t size() const { return nodes.size(); }
    bool contains(NodeIndex v) const { return v < member.size() && member[v]; }
    std::size_t edge_count() const;
};

/// Single filtering pass (not a k-core peel). Throws
/// Error(DegenerateGraph) if nothing survives.
CoreSubgraph core_subgraph(const Graph& graph);

/// DFS from every not-yet-visited node in ascending order; each back edge to
/// a node on the current stack yields a candidate cycle and the longest
/// candidate wins (first found on ties). Returns nullopt for forests.
std::optional<std::vector<NodeIndex>> longest_cycle_approx(const CoreSubgraph& core);

/// |cycle| >= tau_factor * sqrt(core_size).
bool accept_cycle(std::size_t cycle_length, std::size_t core_size, double tau_factor = 2.0);

struct BfsOrder {
    std::vector<NodeIndex> order;
    // Breadth-first tree predecessor; nullopt for the root and for nodes
    // outside the largest component.
    std::vector<std::optional<NodeIndex>> parent;
};

/// Double sweep over the largest connected component of the core: a seeded
/// random start finds the farthest node, which roots the second BFS.
BfsOrder two_pass_bfs(const CoreSubgraph& core, std::uint64_t seed);

struct SegmentAssignment {
    std::size_t segment = 0;
    std::vector<NodeIndex> nodes;
};

struct NodeLineMapping {
    std::vector<SegmentAssignment> assignments; // one per chain segment, in order
    std::vector<std::optional<NodeIndex>> parent; // indexed by graph node

    std::vector<NodeIndex> mapped_nodes() const;
};

/// Node counts per segment: floor(d_i / D * count) plus the largest-remainder
/// top-up (ties to the lower segment index).
std::vector<std::size_t> apportion(const std::vector<double>& lengths, std::size_t count);

/// Splits `order` over the chain segments proportionally to their lengths.
/// The parent of each node is its predecessor in `order`; on a closed chain
/// the first node's parent wraps to the last. `node_count` sizes the parent
/// map (number of nodes in the graph).
NodeLineMapping distribute(const std::vector<NodeIndex>& order, const SegmentChain& chain, std::size_t node_count);

} // namespace sketchlayout
