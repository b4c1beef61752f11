#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "sketchlayout/constraints.hpp"
#include "sketchlayout/geometry.hpp"
#include "sketchlayout/graph.hpp"

namespace sketchlayout {

struct LayoutConfig {
    int iterations = 500;
    double ideal_edge_length = 50.0;
    double spring_strength = 0.1;
    double repulsion_strength = 4500.0;
    double gravity_strength = 0.25;
    double min_gap = 40.0;
    int polish_iterations = 30;
    // Non-positive means ideal_edge_length / 2.
    double max_step = 0.0;
    double cooling = 0.99;
    std::uint64_t seed = 0;
    // Above this many nodes repulsion is evaluated on a uniform grid.
    std::size_t grid_threshold = 500;

    double effective_max_step() const { return max_step > 0.0 ? max_step : ideal_edge_length / 2.0; }
    /// Throws Error(Validation) when a field is out of range.
    void validate() const;
};

struct SatisfactionReport {
    std::size_t relative_total = 0;
    // gap >= min_gap - 1
    std::size_t relative_satisfied = 0;
    // gap >= 0: the ordering holds even if the spacing does not
    std::size_t relative_ordered = 0;
    double alignment_max_deviation = 0.0;
    std::size_t dropped_constraints = 0;
};

struct LayoutResult {
    std::vector<Point> positions; // indexed by graph node
    SatisfactionReport report;
};

SatisfactionReport measure(const std::vector<Point>& positions, const ConstraintSet& cs, double min_gap);

/// Spring embedder with per-iteration projection onto the constraint set.
/// `initial`, when given, must hold one position per node.
LayoutResult constrained_layout(const Graph& graph, const ConstraintSet& cs, const LayoutConfig& cfg,
                                const std::optional<std::vector<Point>>& initial = std::nullopt);

/// Short unconstrained run from `start` with the step capped at a quarter of
/// the ideal edge length. The report is recomputed against `cs`.
LayoutResult polish(const Graph& graph, const LayoutResult& start, const ConstraintSet& cs, const LayoutConfig& cfg);

/// Lays out `selection` with every other node pinned at its prior position,
/// then polishes the selection only.
LayoutResult incremental_layout(const Graph& graph, const std::vector<NodeIndex>& selection, const ConstraintSet& cs,
                                const std::vector<Point>& prior, const LayoutConfig& cfg);

/// Deterministic scatter in a disk of radius sqrt(n) * ideal_edge_length.
std::vector<Point> initial_positions(std::size_t node_count, const LayoutConfig& cfg);

} // namespace sketchlayout
