#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sketchlayout/constraints.hpp"
#include "sketchlayout/graph.hpp"
#include "sketchlayout/layout.hpp"
#include "sketchlayout/mapping.hpp"
#include "sketchlayout/polyline.hpp"
#include "sketchlayout/raster.hpp"

namespace sketchlayout {

struct PipelineConfig {
    BinarizeOptions binarize;
    TraceOptions trace;
    // Simplification tolerance as a percentage of the sketch diagonal.
    double tolerance_pct = 2.0;
    ChainOptions chain;
    double tau_factor = 2.0;
    double epsilon = kDefaultEpsilon;
    LayoutConfig layout;

    std::uint64_t seed() const { return layout.seed; }
    void validate() const;
};

enum class MappingStrategy { None, Cycle, Bfs };
const char* to_string(MappingStrategy s);

struct PipelineResult {
    LayoutResult layout;
    // Constrained phase only, before polish.
    SatisfactionReport constrained_report;
    std::optional<SegmentChain> chain;
    std::optional<NodeLineMapping> mapping;
    ConstraintSet constraints;
    MappingStrategy strategy = MappingStrategy::None;
    std::vector<std::string> warnings;
};

/// Sketch stages only: binarize, thin, trace, simplify, assemble.
SegmentChain extract_chain(const Image& sketch, const PipelineConfig& cfg);

/// Mapping and constraint generation for `graph` against a chain.
struct Guidance {
    NodeLineMapping mapping;
    ConstraintSet constraints;
    MappingStrategy strategy = MappingStrategy::None;
};
Guidance derive_guidance(const Graph& graph, const SegmentChain& chain, const PipelineConfig& cfg);

/// From-scratch layout guided by the sketch. Degenerate graphs and sketches
/// that cannot be chained fall back to an unconstrained layout with a warning.
PipelineResult run_pipeline(const Graph& graph, const Image& sketch, const PipelineConfig& cfg);

/// Re-lays out `selection` guided by the sketch; all other nodes keep their
/// prior positions.
PipelineResult run_incremental(const Graph& graph, const Image& sketch, const std::vector<NodeIndex>& selection,
                               const std::vector<Point>& prior, const PipelineConfig& cfg);

} // namespace sketchlayout
