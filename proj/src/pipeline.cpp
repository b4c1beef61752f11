#include "sketchlayout/pipeline.hpp"

#include <algorithm>
#include <cmath>

#include "sketchlayout/error.hpp"

namespace sketchlayout {

const char* to_string(MappingStrategy s)
{
    switch (s) {
    case MappingStrategy::None: return "none";
    case MappingStrategy::Cycle: return "cycle";
    case MappingStrategy::Bfs: return "bfs";
    }
    return "none";
}

void PipelineConfig::validate() const
{
    auto fail = [](const char* what) { throw Error(ErrorKind::Validation, what); };
    if (binarize.threshold < 0 || binarize.threshold > 256)
        fail("threshold must lie in [0, 256]");
    if (trace.chunk_size < 3)
        fail("chunk size must be at least 3");
    if (!(tolerance_pct > 0.0))
        fail("tolerance percentage must be positive");
    if (!(chain.offset_threshold >= 0.0))
        fail("offset threshold must be non-negative");
    if (!(tau_factor > 0.0))
        fail("tau factor must be positive");
    if (!(epsilon > 0.0))
        fail("epsilon must be positive");
    layout.validate();
}

SegmentChain extract_chain(const Image& sketch, const PipelineConfig& cfg)
{
    const BinaryImage skeleton = thin(binarize(sketch, cfg.binarize));
    const std::vector<Polyline> traced = trace_skeleton(skeleton, cfg.trace);
    const double diagonal = std::hypot(static_cast<double>(sketch.width), static_cast<double>(sketch.height));
    const double tolerance = cfg.tolerance_pct / 100.0 * diagonal;

    std::vector<Polyline> simplified;
    simplified.reserve(traced.size());
    for (const Polyline& line : traced)
        simplified.push_back(simplify(line, tolerance));
    return simplify_chain(assemble_chain(simplified, cfg.chain), tolerance);
}

Guidance derive_guidance(const Graph& graph, const SegmentChain& chain, const PipelineConfig& cfg)
{
    const CoreSubgraph core = core_subgraph(graph);
    Guidance g;
    std::vector<NodeIndex> order;
    if (chain.closed) {
        if (auto cycle = longest_cycle_approx(core); cycle && accept_cycle(cycle->size(), core.size(), cfg.tau_factor)) {
            order = std::move(*cycle);
            g.strategy = MappingStrategy::Cycle;
        }
    }
    if (g.strategy != MappingStrategy::Cycle) {
        order = two_pass_bfs(core, cfg.seed()).order;
        g.strategy = MappingStrategy::Bfs;
    }
    g.mapping = distribute(order, chain, graph.node_count());
    g.constraints = generate_constraints(g.mapping, chain, cfg.epsilon);
    return g;
}

namespace {

std::string warning(const Error& e) { return std::string(to_string(e.kind())) + ": " + e.what(); }

// Sketch and graph stages; degenerate input leaves the guidance empty and
// records a warning instead of failing.
std::optional<Guidance> guide(const Graph& graph, const Image& sketch, const PipelineConfig& cfg, PipelineResult& result)
{
    try {
        result.chain = extract_chain(sketch, cfg);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::SketchNotChainable)
            throw;
        result.warnings.push_back(warning(e));
        return std::nullopt;
    }
    try {
        return derive_guidance(graph, *result.chain, cfg);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::DegenerateGraph)
            throw;
        result.warnings.push_back(warning(e));
        return std::nullopt;
    }
}

} // namespace

PipelineResult run_pipeline(const Graph& graph, const Image& sketch, const PipelineConfig& cfg)
{
    cfg.validate();
    PipelineResult result;
    if (auto g = guide(graph, sketch, cfg, result)) {
        result.mapping = std::move(g->mapping);
        result.constraints = std::move(g->constraints);
        result.strategy = g->strategy;
    }
    const LayoutResult constrained = constrained_layout(graph, result.constraints, cfg.layout);
    result.constrained_report = constrained.report;
    result.layout = polish(graph, constrained, result.constraints, cfg.layout);
    return result;
}

PipelineResult run_incremental(const Graph& graph, const Image& sketch, const std::vector<NodeIndex>& selection,
                               const std::vector<Point>& prior, const PipelineConfig& cfg)
{
    cfg.validate();
    if (prior.size() != graph.node_count())
        throw Error(ErrorKind::Validation, "prior positions must cover every node");
    std::vector<NodeIndex> chosen;
    std::vector<bool> seen(graph.node_count(), false);
    for (NodeIndex v : selection) {
        if (v >= graph.node_count())
            throw Error(ErrorKind::Validation, "selection references a node outside the graph");
        if (!seen[v]) {
            seen[v] = true;
            chosen.push_back(v);
        }
    }

    PipelineResult result;
    if (chosen.empty()) {
        result.layout = incremental_layout(graph, chosen, {}, prior, cfg.layout);
        result.constrained_report = result.layout.report;
        return result;
    }

    // The sketch guides the selected subgraph only; indices are mapped back
    // to the full graph afterwards.
    const Graph sub = graph.induced(chosen);
    if (auto g = guide(sub, sketch, cfg, result)) {
        auto lift = [&](NodeIndex v) { return chosen[v]; };
        NodeLineMapping mapping;
        mapping.parent.assign(graph.node_count(), std::nullopt);
        for (const auto& a : g->mapping.assignments) {
            SegmentAssignment lifted{a.segment, {}};
            std::transform(a.nodes.begin(), a.nodes.end(), std::back_inserter(lifted.nodes), lift);
            mapping.assignments.push_back(std::move(lifted));
        }
        for (NodeIndex v = 0; v < g->mapping.parent.size(); ++v)
            if (g->mapping.parent[v])
                mapping.parent[lift(v)] = lift(*g->mapping.parent[v]);

        ConstraintSet cs;
        cs.dropped = g->constraints.dropped;
        for (const auto& c : g->constraints.relative)
            cs.relative.push_back({lift(c.first), lift(c.second), c.axis});
        auto lift_groups = [&](const auto& groups, auto& into) {
            for (const auto& group : groups) {
                std::vector<NodeIndex> members;
                std::transform(group.begin(), group.end(), std::back_inserter(members), lift);
                into.push_back(std::move(members));
            }
        };
        lift_groups(g->constraints.horizontal_alignments, cs.horizontal_alignments);
        lift_groups(g->constraints.vertical_alignments, cs.vertical_alignments);

        result.mapping = std::move(mapping);
        result.constraints = std::move(cs);
        result.strategy = g->strategy;
    }
    result.layout = incremental_layout(graph, chosen, result.constraints, prior, cfg.layout);
    result.constrained_report = result.layout.report;
    return result;
}

} // namespace sketchlayout
