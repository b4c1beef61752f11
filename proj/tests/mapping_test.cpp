#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "sketchlayout/error.hpp"
#include "sketchlayout/mapping.hpp"
#include "sketchlayout/samples.hpp"

using namespace sketchlayout;

namespace {

Graph from_edges(std::initializer_list<std::pair<const char*, const char*>> edges)
{
    Graph g;
    for (auto [a, b] : edges)
        g.add_edge(a, b);
    return g;
}

std::vector<std::vector<int>> adjacency_of(const CoreSubgraph& core)
{
    std::vector<std::vector<int>> adj(core.adjacency.size());
    for (std::size_t v = 0; v < adj.size(); ++v)
        for (NodeIndex w : core.adjacency[v])
            adj[v].push_back(static_cast<int>(w));
    return adj;
}

void expect_valid_cycle(const CoreSubgraph& core, const std::vector<NodeIndex>& c)
{
    ASSERT_GE(c.size(), 3u);
    EXPECT_EQ(std::set<NodeIndex>(c.begin(), c.end()).size(), c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        const NodeIndex a = c[i], b = c[(i + 1) % c.size()];
        const auto& nb = core.adjacency[a];
        EXPECT_TRUE(std::find(nb.begin(), nb.end(), b) != nb.end()) << a << "-" << b;
    }
}

SegmentChain chain_with_lengths(const std::vector<double>& lengths, bool closed = false)
{
    SegmentChain c;
    c.points.push_back({0, 0});
    for (double l : lengths) {
        // Alternate axes so consecutive points never coincide.
        const Point last = c.points.back();
        c.points.push_back(c.points.size() % 2 ? Point{last.x + l, last.y} : Point{last.x, last.y + l});
    }
    c.closed = closed;
    return c;
}

std::vector<std::size_t> sizes(const NodeLineMapping& m)
{
    std::vector<std::size_t> out;
    for (const auto& a : m.assignments)
        out.push_back(a.nodes.size());
    return out;
}

Graph random_graph(std::mt19937_64& rng, int n, double p)
{
    Graph g;
    for (int v = 0; v < n; ++v)
        g.add_node("v" + std::to_string(v));
    std::bernoulli_distribution edge(p);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (edge(rng))
                g.add_edge(static_cast<NodeIndex>(a), static_cast<NodeIndex>(b));
    return g;
}

} // namespace

TEST(Core, Triangle)
{
    const auto core = core_subgraph(from_edges({{"a", "b"}, {"b", "c"}, {"c", "a"}}));
    EXPECT_EQ(core.nodes, (std::vector<NodeIndex>{0, 1, 2}));
    EXPECT_EQ(core.edge_count(), 3u);
}

TEST(Core, PathKeepsMiddle)
{
    const auto core = core_subgraph(from_edges({{"a", "b"}, {"b", "c"}}));
    EXPECT_EQ(core.nodes, (std::vector<NodeIndex>{1}));
    EXPECT_EQ(core.edge_count(), 0u);
}

TEST(Core, StarKeepsCenter)
{
    Graph g;
    for (int i = 0; i < 5; ++i)
        g.add_edge("hub", "leaf" + std::to_string(i));
    const auto core = core_subgraph(g);
    EXPECT_EQ(core.nodes, (std::vector<NodeIndex>{0}));
    EXPECT_EQ(core.edge_count(), 0u);
}

TEST(Core, SinglePassNotPeeled)
{
    // b and c keep degree 2 in the original graph even though peeling would
    // eventually strip the whole path.
    const auto core = core_subgraph(from_edges({{"a", "b"}, {"b", "c"}, {"c", "d"}}));
    EXPECT_EQ(core.nodes, (std::vector<NodeIndex>{1, 2}));
    EXPECT_EQ(core.edge_count(), 1u);
}

TEST(Core, SingleEdgeIsDegenerate)
{
    try {
        core_subgraph(from_edges({{"a", "b"}}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::DegenerateGraph);
    }
}

TEST(Core, NoLowDegreeNodes)
{
    std::mt19937_64 rng(4);
    for (int i = 0; i < 20; ++i) {
        const Graph g = random_graph(rng, 30, 0.07);
        try {
            const auto core = core_subgraph(g);
            for (NodeIndex v : core.nodes)
                EXPECT_GT(g.degree(v), 1u);
            for (NodeIndex v = 0; v < g.node_count(); ++v)
                EXPECT_EQ(core.contains(v), g.degree(v) > 1);
        } catch (const Error& e) {
            EXPECT_EQ(e.kind(), ErrorKind::DegenerateGraph);
        }
    }
}

TEST(Cycle, WholeCycleGraph)
{
    const auto core = core_subgraph(samples::cycle(6));
    const auto c = longest_cycle_approx(core);
    ASSERT_TRUE(c);
    EXPECT_EQ(c->size(), 6u);
    expect_valid_cycle(core, *c);
}

TEST(Cycle, TreeHasNone)
{
    const Graph t = samples::tree(40, 3);
    EXPECT_FALSE(longest_cycle_approx(core_subgraph(t)));
}

TEST(Cycle, BowTie)
{
    const auto core =
        core_subgraph(from_edges({{"a", "b"}, {"b", "c"}, {"c", "a"}, {"c", "d"}, {"d", "e"}, {"e", "c"}}));
    EXPECT_EQ(oracle::longest_cycle(adjacency_of(core)), 3u);
    const auto c = longest_cycle_approx(core);
    ASSERT_TRUE(c);
    EXPECT_EQ(c->size(), 3u);
    expect_valid_cycle(core, *c);
}

TEST(Cycle, LargeCycleWithChords)
{
    Graph g = samples::cycle(24);
    g.add_edge(0, 12);
    g.add_edge(5, 17);
    const auto core = core_subgraph(g);
    const auto c = longest_cycle_approx(core);
    ASSERT_TRUE(c);
    expect_valid_cycle(core, *c);
    EXPECT_EQ(c->size(), 24u);
}

TEST(Cycle, RandomGraphsAgainstBruteForce)
{
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<int> size(3, 11);
    std::uniform_real_distribution<double> density(0.15, 0.6);
    for (int i = 0; i < 60; ++i) {
        const Graph g = random_graph(rng, size(rng), density(rng));
        CoreSubgraph core;
        try {
            core = core_subgraph(g);
        } catch (const Error&) {
            continue;
        }
        const std::size_t best = oracle::longest_cycle(adjacency_of(core));
        const auto c = longest_cycle_approx(core);
        EXPECT_EQ(c.has_value(), best > 0);
        if (c) {
            expect_valid_cycle(core, *c);
            EXPECT_LE(c->size(), best);
        }
    }
}

TEST(AcceptCycle, Examples)
{
    EXPECT_TRUE(accept_cycle(10, 25));
    EXPECT_FALSE(accept_cycle(3, 100));
    EXPECT_TRUE(accept_cycle(16, 16));
    EXPECT_FALSE(accept_cycle(9, 25));
    EXPECT_TRUE(accept_cycle(5, 25, 1.0));
}

TEST(Bfs, PathStartsAtAnEnd)
{
    // Core of a-b-c-d-e is the path b-c-d.
    const Graph g = from_edges({{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "e"}});
    const auto core = core_subgraph(g);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const auto bfs = two_pass_bfs(core, seed);
        ASSERT_EQ(bfs.order.size(), 3u);
        EXPECT_TRUE(bfs.order == (std::vector<NodeIndex>{1, 2, 3}) || bfs.order == (std::vector<NodeIndex>{3, 2, 1}));
        EXPECT_FALSE(bfs.parent[bfs.order[0]]);
        EXPECT_EQ(bfs.parent[bfs.order[1]], bfs.order[0]);
        EXPECT_EQ(bfs.parent[bfs.order[2]], bfs.order[1]);
    }
}

TEST(Bfs, SingleNode)
{
    const auto core = core_subgraph(from_edges({{"a", "b"}, {"b", "c"}}));
    const auto bfs = two_pass_bfs(core, 0);
    EXPECT_EQ(bfs.order, (std::vector<NodeIndex>{1}));
    for (const auto& p : bfs.parent)
        EXPECT_FALSE(p);
}

TEST(Bfs, GridStartsAtCorner)
{
    const Graph g = samples::grid(5, 5);
    const auto core = core_subgraph(g);
    const auto hops = oracle::all_pairs_hops(g);
    int diameter = 0;
    for (const auto& row : hops)
        diameter = std::max(diameter, *std::max_element(row.begin(), row.end()));
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        const auto bfs = two_pass_bfs(core, seed);
        ASSERT_EQ(bfs.order.size(), 25u);
        const NodeIndex root = bfs.order[0];
        EXPECT_EQ(*std::max_element(hops[root].begin(), hops[root].end()), diameter);
        EXPECT_EQ(g.degree(root), 2u);
        std::vector<std::size_t> pos(g.node_count());
        for (std::size_t i = 0; i < bfs.order.size(); ++i)
            pos[bfs.order[i]] = i;
        EXPECT_FALSE(bfs.parent[root]);
        for (std::size_t i = 1; i < bfs.order.size(); ++i) {
            const NodeIndex v = bfs.order[i];
            ASSERT_TRUE(bfs.parent[v]);
            EXPECT_TRUE(g.adjacent(v, *bfs.parent[v]));
            EXPECT_LT(pos[*bfs.parent[v]], i);
            EXPECT_EQ(hops[root][v], hops[root][*bfs.parent[v]] + 1);
        }
    }
}

TEST(Bfs, LargestComponentOnly)
{
    Graph g = samples::cycle(8);
    // A separate triangle.
    g.add_edge("x", "y");
    g.add_edge("y", "z");
    g.add_edge("z", "x");
    const auto bfs = two_pass_bfs(core_subgraph(g), 3);
    EXPECT_EQ(bfs.order.size(), 8u);
    for (NodeIndex v : bfs.order)
        EXPECT_LT(v, 8u);
}

TEST(Bfs, DeterministicPerSeed)
{
    const auto core = core_subgraph(samples::random_connected(80, 120, 5));
    EXPECT_EQ(two_pass_bfs(core, 9).order, two_pass_bfs(core, 9).order);
}

TEST(Distribute, ExactFloors)
{
    std::vector<NodeIndex> order(10);
    std::iota(order.begin(), order.end(), 0);
    EXPECT_EQ(sizes(distribute(order, chain_with_lengths({30, 70}), 10)), (std::vector<std::size_t>{3, 7}));
}

TEST(Distribute, RemainderToLargestFraction)
{
    std::vector<NodeIndex> order(10);
    std::iota(order.begin(), order.end(), 0);
    EXPECT_EQ(sizes(distribute(order, chain_with_lengths({33, 67}), 10)), (std::vector<std::size_t>{3, 7}));
}

TEST(Distribute, TiesGoToLowerIndex)
{
    std::vector<NodeIndex> order(7);
    std::iota(order.begin(), order.end(), 0);
    EXPECT_EQ(sizes(distribute(order, chain_with_lengths({10, 10, 10}), 7)), (std::vector<std::size_t>{3, 2, 2}));
}

TEST(Distribute, MoreSegmentsThanNodes)
{
    const auto m = distribute({4, 2}, chain_with_lengths({10, 10, 10, 10, 10}), 5);
    EXPECT_EQ(sizes(m), (std::vector<std::size_t>{1, 1, 0, 0, 0}));
}

TEST(Distribute, EmptyOrderThrows)
{
    EXPECT_THROW(distribute({}, chain_with_lengths({10}), 3), Error);
}

TEST(Distribute, ParentsFollowOrder)
{
    const std::vector<NodeIndex> order{5, 2, 7, 1};
    const auto open = distribute(order, chain_with_lengths({10, 20}), 8);
    EXPECT_FALSE(open.parent[5]);
    EXPECT_EQ(open.parent[2], 5u);
    EXPECT_EQ(open.parent[7], 2u);
    EXPECT_EQ(open.parent[1], 7u);
    EXPECT_FALSE(open.parent[0]);

    auto closed_chain = chain_with_lengths({10, 10, 10});
    closed_chain.points.push_back(closed_chain.points.front());
    closed_chain.closed = true;
    const auto closed = distribute(order, closed_chain, 8);
    EXPECT_EQ(closed.parent[5], 1u);
}

TEST(Distribute, MatchesIntegerLargestRemainder)
{
    std::mt19937_64 rng(31337);
    std::uniform_int_distribution<int> segs(1, 12);
    std::uniform_int_distribution<std::uint64_t> len(1, 400);
    std::uniform_int_distribution<std::size_t> count(1, 300);
    for (int i = 0; i < 300; ++i) {
        std::vector<std::uint64_t> lengths(segs(rng));
        for (auto& l : lengths)
            l = len(rng);
        const std::size_t n = count(rng);
        std::vector<NodeIndex> order(n);
        std::iota(order.begin(), order.end(), 0);
        const auto m = distribute(order, chain_with_lengths({lengths.begin(), lengths.end()}), n);
        const auto got = sizes(m);
        EXPECT_EQ(got, oracle::largest_remainder(lengths, n));

        std::vector<NodeIndex> concat;
        for (const auto& a : m.assignments)
            concat.insert(concat.end(), a.nodes.begin(), a.nodes.end());
        EXPECT_EQ(concat, order);
        const double total = std::accumulate(lengths.begin(), lengths.end(), 0.0);
        for (std::size_t s = 0; s < lengths.size(); ++s)
            EXPECT_LT(std::abs(static_cast<double>(got[s]) - lengths[s] / total * n), 1.0);
    }
}
