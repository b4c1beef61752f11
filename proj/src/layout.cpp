#include "sketchlayout/layout.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <unordered_map>

#include "sketchlayout/error.hpp"

namespace sketchlayout {

void LayoutConfig::validate() const
{
    auto fail = [](const char* what) { throw Error(ErrorKind::Validation, what); };
    if (iterations < 0 || polish_iterations < 0)
        fail("iteration counts must be non-negative");
    if (!(ideal_edge_length > 0.0))
        fail("ideal_edge_length must be positive");
    if (!(min_gap > 0.0))
        fail("min_gap must be positive");
    if (!(repulsion_strength >= 0.0) || !(gravity_strength >= 0.0) || !(spring_strength >= 0.0))
        fail("force strengths must be non-negative");
    if (!(cooling > 0.0 && cooling <= 1.0))
        fail("cooling must lie in (0, 1]");
    if (max_step < 0.0 || !std::isfinite(max_step))
        fail("max_step must be non-negative");
}

std::vector<Point> initial_positions(std::size_t node_count, const LayoutConfig& cfg)
{
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double radius = std::sqrt(static_cast<double>(node_count)) * cfg.ideal_edge_length;
    std::vector<Point> out(node_count);
    for (auto& p : out) {
        const double r = radius * std::sqrt(unit(rng));
        const double a = 2.0 * std::numbers::pi * unit(rng);
        p = {r * std::cos(a), r * std::sin(a)};
    }
    return out;
}

SatisfactionReport measure(const std::vector<Point>& positions, const ConstraintSet& cs, double min_gap)
{
    SatisfactionReport report;
    report.dropped_constraints = cs.dropped;
    report.relative_total = cs.relative.size();
    for (const auto& c : cs.relative) {
        const double gap = c.axis == Axis::Horizontal ? positions[c.second].x - positions[c.first].x
                                                      : positions[c.second].y - positions[c.first].y;
        if (gap >= min_gap - 1.0)
            ++report.relative_satisfied;
        if (gap >= 0.0)
            ++report.relative_ordered;
    }
    auto spread = [&](const std::vector<std::vector<NodeIndex>>& groups, bool use_y) {
        for (const auto& g : groups) {
            double mean = 0.0;
            for (NodeIndex v : g)
                mean += use_y ? positions[v].y : positions[v].x;
            mean /= static_cast<double>(g.size());
            for (NodeIndex v : g)
                report.alignment_max_deviation =
                    std::max(report.alignment_max_deviation, std::abs((use_y ? positions[v].y : positions[v].x) - mean));
        }
    };
    spread(cs.horizontal_alignments, true);
    spread(cs.vertical_alignments, false);
    return report;
}

namespace {

constexpr int kProjectionSweeps = 10;
constexpr double kAlignmentRelaxation = 0.5;
constexpr double kAlignmentSlack = 0.01;

// Per-axis view of the constraint set. Nodes that share this axis coordinate
// through alignment groups are merged into blocks, and constraints are kept
// in topological order of their blocks so a single forward walk restores
// every gap.
struct AxisConstraints {
    std::vector<RelativeConstraint> forward;
    std::vector<std::size_t> block_of;
    std::vector<std::vector<NodeIndex>> blocks;
};

AxisConstraints order_axis(const ConstraintSet& cs, Axis axis, std::size_t n)
{
    AxisConstraints result;
    std::vector<std::size_t> parent(n);
    for (std::size_t v = 0; v < n; ++v)
        parent[v] = v;
    auto find = [&](std::size_t v) {
        while (parent[v] != v)
            v = parent[v] = parent[parent[v]];
        return v;
    };
    // Vertical alignment groups share x, horizontal ones share y.
    const auto& groups = axis == Axis::Horizontal ? cs.vertical_alignments : cs.horizontal_alignments;
    for (const auto& g : groups)
        for (std::size_t k = 1; k < g.size(); ++k)
            parent[find(g[k])] = find(g[0]);
    result.block_of.assign(n, 0);
    std::vector<std::size_t> id(n, n);
    for (std::size_t v = 0; v < n; ++v) {
        const std::size_t root = find(v);
        if (id[root] == n) {
            id[root] = result.blocks.size();
            result.blocks.emplace_back();
        }
        result.block_of[v] = id[root];
        result.blocks[id[root]].push_back(v);
    }

    const std::size_t m = result.blocks.size();
    std::vector<std::vector<std::size_t>> out(m);
    std::vector<int> indegree(m, 0);
    for (const auto& c : cs.relative) {
        if (c.axis != axis)
            continue;
        result.forward.push_back(c);
        const std::size_t from = result.block_of[c.first], to = result.block_of[c.second];
        out[from].push_back(to);
        ++indegree[to];
    }
    // Kahn's algorithm; blocks left on a cycle keep the last rank.
    std::vector<std::size_t> rank(m, m);
    std::vector<std::size_t> ready;
    for (std::size_t b = m; b-- > 0;)
        if (indegree[b] == 0)
            ready.push_back(b);
    std::size_t next = 0;
    while (!ready.empty()) {
        const std::size_t b = ready.back();
        ready.pop_back();
        rank[b] = next++;
        for (std::size_t w : out[b])
            if (--indegree[w] == 0)
                ready.push_back(w);
    }
    std::stable_sort(result.forward.begin(), result.forward.end(),
                     [&](const RelativeConstraint& x, const RelativeConstraint& y) {
                         return rank[result.block_of[x.first]] < rank[result.block_of[y.first]];
                     });
    return result;
}

class Embedder {
public:
    Embedder(const Graph& graph, const LayoutConfig& cfg, std::vector<Point> positions, std::vector<bool> pinned)
        : graph_(graph), cfg_(cfg), pos_(std::move(positions)), pinned_(std::move(pinned)), disp_(pos_.size())
    {
    }

    void set_constraints(const ConstraintSet* cs)
    {
        cs_ = cs;
        if (!cs)
            return;
        horizontal_ = order_axis(*cs, Axis::Horizontal, pos_.size());
        vertical_ = order_axis(*cs, Axis::Vertical, pos_.size());
    }

    // Runs `iterations` force steps; the step cap starts at `cap` and decays
    // by the cooling factor every iteration.
    void run(int iterations, double cap)
    {
        for (int t = 0; t < iterations; ++t) {
            step(cap);
            if (cs_)
                project();
            check_finite();
            cap *= cfg_.cooling;
        }
    }

    std::vector<Point>& positions() { return pos_; }

private:
    bool movable(NodeIndex v) const { return pinned_.empty() || !pinned_[v]; }

    static Point push_apart(NodeIndex i, NodeIndex j, Point delta, double strength)
    {
        double d2 = delta.x * delta.x + delta.y * delta.y;
        if (d2 < 1e-12) {
            // Coincident nodes: separate along a direction derived from the pair.
            const double a = static_cast<double>((i * 73856093u) ^ (j * 19349663u)) * 0.618033988749895;
            delta = {std::cos(a), std::sin(a)};
            d2 = 1e-4;
            return delta * (strength / d2);
        }
        const double d = std::sqrt(d2);
        return delta * (strength / (d2 * d));
    }

    void repulsion()
    {
        const std::size_t n = pos_.size();
        const double strength = cfg_.repulsion_strength;
        if (strength == 0.0)
            return;
        if (n <= cfg_.grid_threshold) {
            for (NodeIndex i = 0; i < n; ++i) {
                for (NodeIndex j = i + 1; j < n; ++j) {
                    const Point f = push_apart(i, j, pos_[i] - pos_[j], strength);
                    disp_[i] = disp_[i] + f;
                    disp_[j] = disp_[j] - f;
                }
            }
            return;
        }
        // Uniform grid: only pairs in the same or adjacent cells interact.
        const double cell = 2.0 * cfg_.ideal_edge_length;
        auto key = [](long cx, long cy) { return (static_cast<long long>(cx) << 32) ^ static_cast<unsigned long>(cy); };
        std::unordered_map<long long, std::vector<NodeIndex>> buckets;
        buckets.reserve(n);
        std::vector<std::pair<long, long>> where(n);
        for (NodeIndex v = 0; v < n; ++v) {
            where[v] = {static_cast<long>(std::floor(pos_[v].x / cell)), static_cast<long>(std::floor(pos_[v].y / cell))};
            buckets[key(where[v].first, where[v].second)].push_back(v);
        }
        for (NodeIndex i = 0; i < n; ++i) {
            const auto [cx, cy] = where[i];
            for (long dy = -1; dy <= 1; ++dy) {
                for (long dx = -1; dx <= 1; ++dx) {
                    const auto it = buckets.find(key(cx + dx, cy + dy));
                    if (it == buckets.end())
                        continue;
                    for (NodeIndex j : it->second) {
                        if (j == i)
                            continue;
                        const Point f = push_apart(std::min(i, j), std::max(i, j), pos_[i] - pos_[j], strength);
                        disp_[i] = disp_[i] + (i < j ? f : f * -1.0);
                    }
                }
            }
        }
    }

    void step(double cap)
    {
        std::fill(disp_.begin(), disp_.end(), Point{});
        repulsion();

        for (const auto& [a, b] : graph_.edges()) {
            const Point delta = pos_[b] - pos_[a];
            const double d = std::sqrt(delta.x * delta.x + delta.y * delta.y);
            if (d <= 0.0)
                continue;
            const Point f = delta * (cfg_.spring_strength * (d - cfg_.ideal_edge_length) / d);
            disp_[a] = disp_[a] + f;
            disp_[b] = disp_[b] - f;
        }

        if (cfg_.gravity_strength > 0.0 && !pos_.empty()) {
            Point center;
            for (const Point& p : pos_)
                center = center + p;
            center = center * (1.0 / static_cast<double>(pos_.size()));
            for (NodeIndex v = 0; v < pos_.size(); ++v) {
                const Point toward = center - pos_[v];
                const double d = std::sqrt(toward.x * toward.x + toward.y * toward.y);
                if (d <= 0.0)
                    continue;
                const double magnitude = cfg_.gravity_strength * std::min(1.0, d / cfg_.ideal_edge_length);
                disp_[v] = disp_[v] + toward * (magnitude / d);
            }
        }

        for (NodeIndex v = 0; v < pos_.size(); ++v) {
            if (!movable(v))
                continue;
            Point d = disp_[v];
            const double len = std::sqrt(d.x * d.x + d.y * d.y);
            if (len > cap)
                d = d * (cap / len);
            pos_[v] = pos_[v] + d;
        }
    }

    double& coord(NodeIndex v, Axis axis) { return axis == Axis::Horizontal ? pos_[v].x : pos_[v].y; }

    bool project_relative(const std::vector<RelativeConstraint>& list, bool backwards)
    {
        bool violated = false;
        const std::size_t n = list.size();
        for (std::size_t k = 0; k < n; ++k) {
            const RelativeConstraint& c = list[backwards ? n - 1 - k : k];
            double& lo = coord(c.first, c.axis);
            double& hi = coord(c.second, c.axis);
            const double deficit = cfg_.min_gap - (hi - lo);
            if (deficit <= 0.0)
                continue;
            violated = true;
            const bool move_lo = movable(c.first);
            const bool move_hi = movable(c.second);
            if (move_lo && move_hi) {
                lo -= deficit / 2.0;
                hi += deficit / 2.0;
            } else if (move_lo) {
                lo -= deficit;
            } else if (move_hi) {
                hi += deficit;
            }
        }
        return violated;
    }

    bool project_alignment(const std::vector<std::vector<NodeIndex>>& groups, Axis cross)
    {
        bool violated = false;
        for (const auto& g : groups) {
            double sum = 0.0, pinned_sum = 0.0;
            std::size_t pinned_count = 0;
            for (NodeIndex v : g) {
                sum += coord(v, cross);
                if (!movable(v)) {
                    pinned_sum += coord(v, cross);
                    ++pinned_count;
                }
            }
            const double target = pinned_count ? pinned_sum / static_cast<double>(pinned_count)
                                               : sum / static_cast<double>(g.size());
            for (NodeIndex v : g) {
                if (!movable(v))
                    continue;
                double& c = coord(v, cross);
                if (std::abs(target - c) > kAlignmentSlack)
                    violated = true;
                c += kAlignmentRelaxation * (target - c);
            }
        }
        return violated;
    }

    // One-sided pass over blocks: each block takes the mean of its members
    // (or of its pinned members), then walking constraints in topological
    // order and pushing only the later block restores every gap at once.
    void push_blocks(const AxisConstraints& ax, Axis axis)
    {
        const std::size_t m = ax.blocks.size();
        std::vector<double> value(m, 0.0);
        std::vector<bool> fixed(m, false);
        for (std::size_t b = 0; b < m; ++b) {
            double sum = 0.0, pinned_sum = 0.0;
            std::size_t pinned_count = 0;
            for (NodeIndex v : ax.blocks[b]) {
                sum += coord(v, axis);
                if (!movable(v)) {
                    pinned_sum += coord(v, axis);
                    ++pinned_count;
                }
            }
            fixed[b] = pinned_count > 0;
            value[b] = fixed[b] ? pinned_sum / static_cast<double>(pinned_count)
                                : sum / static_cast<double>(ax.blocks[b].size());
        }
        auto deficit = [&](const RelativeConstraint& c) {
            return cfg_.min_gap - (value[ax.block_of[c.second]] - value[ax.block_of[c.first]]);
        };
        for (const auto& c : ax.forward) {
            const double d = deficit(c);
            const std::size_t hi = ax.block_of[c.second];
            if (d > 0.0 && !fixed[hi] && hi != ax.block_of[c.first])
                value[hi] += d;
        }
        // Constraints whose later block is pinned pull the earlier one back.
        for (auto it = ax.forward.rbegin(); it != ax.forward.rend(); ++it) {
            const double d = deficit(*it);
            const std::size_t lo = ax.block_of[it->first];
            if (d > 0.0 && !fixed[lo] && lo != ax.block_of[it->second])
                value[lo] -= d;
        }
        for (std::size_t b = 0; b < m; ++b)
            for (NodeIndex v : ax.blocks[b])
                if (movable(v))
                    coord(v, axis) = value[b];
    }

    void project()
    {
        bool violated = true;
        for (int sweep = 0; sweep < kProjectionSweeps && violated; ++sweep) {
            const bool backwards = sweep % 2 == 1;
            violated = project_relative(horizontal_.forward, backwards);
            violated = project_relative(vertical_.forward, backwards) || violated;
            // Horizontal alignment shares y, vertical alignment shares x.
            violated = project_alignment(cs_->horizontal_alignments, Axis::Vertical) || violated;
            violated = project_alignment(cs_->vertical_alignments, Axis::Horizontal) || violated;
        }
        // Symmetric sweeps converge slowly on long chains; finish exactly.
        if (violated) {
            push_blocks(horizontal_, Axis::Horizontal);
            push_blocks(vertical_, Axis::Vertical);
        }
    }

    void check_finite() const
    {
        for (const Point& p : pos_)
            if (!std::isfinite(p.x) || !std::isfinite(p.y))
                throw Error(ErrorKind::NumericFailure, "layout produced a non-finite coordinate");
    }

    const Graph& graph_;
    const LayoutConfig& cfg_;
    std::vector<Point> pos_;
    std::vector<bool> pinned_;
    std::vector<Point> disp_;
    const ConstraintSet* cs_ = nullptr;
    AxisConstraints horizontal_;
    AxisConstraints vertical_;
};

void check_constraint_nodes(const ConstraintSet& cs, std::size_t n)
{
    auto bad = [n](NodeIndex v) { return v >= n; };
    for (const auto& c : cs.relative)
        if (bad(c.first) || bad(c.second))
            throw Error(ErrorKind::Validation, "constraint references a node outside the graph");
    for (const auto* groups : {&cs.horizontal_alignments, &cs.vertical_alignments})
        for (const auto& g : *groups)
            if (std::any_of(g.begin(), g.end(), bad))
                throw Error(ErrorKind::Validation, "alignment references a node outside the graph");
}

LayoutResult run_constrained(const Graph& graph, const ConstraintSet& cs, const LayoutConfig& cfg,
                             std::vector<Point> start, std::vector<bool> pinned)
{
    cfg.validate();
    check_constraint_nodes(cs, graph.node_count());
    Embedder engine(graph, cfg, std::move(start), std::move(pinned));
    engine.set_constraints(&cs);
    engine.run(cfg.iterations, cfg.effective_max_step());
    LayoutResult result;
    result.positions = std::move(engine.positions());
    result.report = measure(result.positions, cs, cfg.min_gap);
    return result;
}

LayoutResult run_polish(const Graph& graph, const LayoutResult& start, const ConstraintSet& cs, const LayoutConfig& cfg,
                        std::vector<bool> pinned)
{
    cfg.validate();
    if (start.positions.size() != graph.node_count())
        throw Error(ErrorKind::Validation, "polish needs a position for every node");
    Embedder engine(graph, cfg, start.positions, std::move(pinned));
    engine.run(cfg.polish_iterations, std::min(cfg.effective_max_step(), cfg.ideal_edge_length / 4.0));
    LayoutResult result;
    result.positions = std::move(engine.positions());
    result.report = measure(result.positions, cs, cfg.min_gap);
    return result;
}

} // namespace

LayoutResult constrained_layout(const Graph& graph, const ConstraintSet& cs, const LayoutConfig& cfg,
                                const std::optional<std::vector<Point>>& initial)
{
    std::vector<Point> start;
    if (initial) {
        if (initial->size() != graph.node_count())
            throw Error(ErrorKind::Validation, "initial positions must cover every node");
        start = *initial;
    } else {
        start = initial_positions(graph.node_count(), cfg);
    }
    return run_constrained(graph, cs, cfg, std::move(start), {});
}

LayoutResult polish(const Graph& graph, const LayoutResult& start, const ConstraintSet& cs, const LayoutConfig& cfg)
{
    return run_polish(graph, start, cs, cfg, {});
}

LayoutResult incremental_layout(const Graph& graph, const std::vector<NodeIndex>& selection, const ConstraintSet& cs,
                                const std::vector<Point>& prior, const LayoutConfig& cfg)
{
    if (prior.size() != graph.node_count())
        throw Error(ErrorKind::Validation, "prior positions must cover every node");
    std::vector<bool> selected(graph.node_count(), false);
    for (NodeIndex v : selection) {
        if (v >= graph.node_count())
            throw Error(ErrorKind::Validation, "selection references a node outside the graph");
        selected[v] = true;
    }
    const ConstraintSet restricted = restrict_constraints(cs, selected);
    if (selection.empty()) {
        cfg.validate();
        return {prior, measure(prior, restricted, cfg.min_gap)};
    }
    std::vector<bool> pinned(graph.node_count());
    for (std::size_t v = 0; v < pinned.size(); ++v)
        pinned[v] = !selected[v];

    const LayoutResult constrained = run_constrained(graph, restricted, cfg, prior, pinned);
    return run_polish(graph, constrained, restricted, cfg, pinned);
}

} // namespace sketchlayout
