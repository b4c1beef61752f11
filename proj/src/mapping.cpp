#include "sketchlayout/mapping.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <random>

#include "sketchlayout/error.hpp"

namespace sketchlayout {

std::size_t CoreSubgraph::edge_count() const
{
    std::size_t twice = 0;
    for (NodeIndex v : nodes)
        twice += adjacency[v].size();
    return twice / 2;
}

CoreSubgraph core_subgraph(const Graph& graph)
{
    if (graph.empty())
        throw Error(ErrorKind::DegenerateGraph, "graph has no nodes");
    CoreSubgraph core;
    core.member.assign(graph.node_count(), false);
    core.adjacency.resize(graph.node_count());
    for (NodeIndex v = 0; v < graph.node_count(); ++v) {
        if (graph.degree(v) > 1) {
            core.member[v] = true;
            core.nodes.push_back(v);
        }
    }
    if (core.nodes.empty())
        throw Error(ErrorKind::DegenerateGraph, "no node has degree greater than one");
    for (NodeIndex v : core.nodes)
        for (NodeIndex w : graph.neighbors(v))
            if (core.member[w])
                core.adjacency[v].push_back(w);
    return core;
}

std::optional<std::vector<NodeIndex>> longest_cycle_approx(const CoreSubgraph& core)
{
    const std::size_t n = core.adjacency.size();
    constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    std::vector<bool> visited(n, false);
    std::vector<std::size_t> stack_pos(n, kNone);
    std::vector<NodeIndex> parent(n, kNone);

    struct Frame {
        NodeIndex node;
        std::size_t next;
    };
    std::vector<Frame> stack;
    std::vector<NodeIndex> best;
    std::size_t candidates = 0;
    const std::size_t candidate_cap = 10 * std::max<std::size_t>(core.size(), 1);

    for (NodeIndex start : core.nodes) {
        if (visited[start])
            continue;
        visited[start] = true;
        stack_pos[start] = 0;
        stack.push_back({start, 0});
        while (!stack.empty()) {
            Frame& top = stack.back();
            const auto& adj = core.adjacency[top.node];
            if (top.next == adj.size()) {
                stack_pos[top.node] = kNone;
                stack.pop_back();
                continue;
            }
            const NodeIndex w = adj[top.next++];
            if (w == parent[top.node])
                continue;
            if (stack_pos[w] != kNone) {
                // Back edge: the stack from w to the top is a cycle.
                if (candidates < candidate_cap) {
                    ++candidates;
                    const std::size_t len = stack.size() - stack_pos[w];
                    if (len > best.size()) {
                        best.clear();
                        for (std::size_t k = stack_pos[w]; k < stack.size(); ++k)
                            best.push_back(stack[k].node);
                    }
                }
            } else if (!visited[w]) {
                visited[w] = true;
                parent[w] = top.node;
                stack_pos[w] = stack.size();
                stack.push_back({w, 0}); // invalidates `top`
            }
        }
    }
    if (best.size() < 3)
        return std::nullopt;
    return best;
}

bool accept_cycle(std::size_t cycle_length, std::size_t core_size, double tau_factor)
{
    return static_cast<double>(cycle_length) >= tau_factor * std::sqrt(static_cast<double>(core_size));
}

namespace {

struct BfsRun {
    std::vector<NodeIndex> order;
    std::vector<long> dist;
    std::vector<std::optional<NodeIndex>> parent;
};

BfsRun bfs(const CoreSubgraph& core, NodeIndex root)
{
    BfsRun run;
    run.dist.assign(core.adjacency.size(), -1);
    run.parent.assign(core.adjacency.size(), std::nullopt);
    std::queue<NodeIndex> queue;
    run.dist[root] = 0;
    queue.push(root);
    while (!queue.empty()) {
        const NodeIndex v = queue.front();
        queue.pop();
        run.order.push_back(v);
        for (NodeIndex w : core.adjacency[v]) {
            if (run.dist[w] >= 0)
                continue;
            run.dist[w] = run.dist[v] + 1;
            run.parent[w] = v;
            queue.push(w);
        }
    }
    return run;
}

} // namespace

BfsOrder two_pass_bfs(const CoreSubgraph& core, std::uint64_t seed)
{
    if (core.nodes.empty())
        throw Error(ErrorKind::DegenerateGraph, "empty core subgraph");

    // Largest connected component; the earliest one wins ties.
    std::vector<NodeIndex> largest;
    std::vector<bool> seen(core.adjacency.size(), false);
    for (NodeIndex v : core.nodes) {
        if (seen[v])
            continue;
        BfsRun comp = bfs(core, v);
        for (NodeIndex w : comp.order)
            seen[w] = true;
        if (comp.order.size() > largest.size())
            largest = std::move(comp.order);
    }
    std::sort(largest.begin(), largest.end());

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, largest.size() - 1);
    const NodeIndex start = largest[pick(rng)];

    const BfsRun first = bfs(core, start);
    NodeIndex far = start;
    for (NodeIndex v : largest)
        if (first.dist[v] > first.dist[far] || (first.dist[v] == first.dist[far] && v < far))
            far = v;

    BfsRun second = bfs(core, far);
    return {std::move(second.order), std::move(second.parent)};
}

std::vector<NodeIndex> NodeLineMapping::mapped_nodes() const
{
    std::vector<NodeIndex> out;
    for (const auto& a : assignments)
        out.insert(out.end(), a.nodes.begin(), a.nodes.end());
    return out;
}

std::vector<std::size_t> apportion(const std::vector<double>& lengths, std::size_t count)
{
    const double total = std::accumulate(lengths.begin(), lengths.end(), 0.0);
    if (lengths.empty() || !(total > 0.0))
        throw Error(ErrorKind::InvalidInput, "segment lengths must have a positive sum");

    // Quotients that are integers or ties in exact arithmetic can come out a
    // few ulps apart; fractions are compared on a fixed 1e-9 grid instead.
    constexpr double kGrid = 1e9;
    std::vector<std::size_t> k(lengths.size());
    std::vector<long long> fraction(lengths.size());
    std::size_t assigned = 0;
    for (std::size_t i = 0; i < lengths.size(); ++i) {
        const double exact = lengths[i] * static_cast<double>(count) / total;
        double base = std::floor(exact);
        long long frac = std::llround((exact - base) * kGrid);
        if (frac >= static_cast<long long>(kGrid)) {
            base += 1.0;
            frac = 0;
        }
        k[i] = static_cast<std::size_t>(base);
        fraction[i] = frac;
        assigned += k[i];
    }

    std::vector<std::size_t> rank(lengths.size());
    std::iota(rank.begin(), rank.end(), std::size_t{0});
    std::stable_sort(rank.begin(), rank.end(), [&](std::size_t a, std::size_t b) { return fraction[a] > fraction[b]; });

    // Rounding noise can push the floors past `count`; take back from the
    // smallest fractions first.
    for (auto it = rank.rbegin(); assigned > count && it != rank.rend(); ++it) {
        if (k[*it] > 0) {
            --k[*it];
            --assigned;
        }
    }
    for (std::size_t j = 0; assigned < count; j = (j + 1) % rank.size()) {
        ++k[rank[j]];
        ++assigned;
    }
    return k;
}

NodeLineMapping distribute(const std::vector<NodeIndex>& order, const SegmentChain& chain, std::size_t node_count)
{
    if (order.empty())
        throw Error(ErrorKind::InvalidInput, "cannot distribute an empty node order");
    if (chain.segment_count() == 0)
        throw Error(ErrorKind::InvalidInput, "chain has no segments");

    std::vector<double> lengths;
    for (std::size_t i = 0; i < chain.segment_count(); ++i)
        lengths.push_back(chain.segment_length(i));
    const auto counts = apportion(lengths, order.size());

    NodeLineMapping mapping;
    std::size_t next = 0;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        SegmentAssignment a;
        a.segment = i;
        a.nodes.assign(order.begin() + static_cast<std::ptrdiff_t>(next),
                       order.begin() + static_cast<std::ptrdiff_t>(next + counts[i]));
        next += counts[i];
        mapping.assignments.push_back(std::move(a));
    }

    mapping.parent.assign(node_count, std::nullopt);
    for (std::size_t k = 1; k < order.size(); ++k)
        mapping.parent[order[k]] = order[k - 1];
    if (chain.closed && order.size() >= 2)
        mapping.parent[order.front()] = order.back();
    return mapping;
}

} // namespace sketchlayout
