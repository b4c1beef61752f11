#pragma once

#include <cstddef>
#include <vector>

#include "sketchlayout/geometry.hpp"

namespace sketchlayout {

/// Ordered line segments l_i = (points[i], points[i+1]) sharing endpoints.
/// When closed, the last point equals the first exactly.
struct SegmentChain {
    std::vector<Point> points;
    bool closed = false;

    std::size_t segment_count() const { return points.size() < 2 ? 0 : points.size() - 1; }
    Point segment_start(std::size_t i) const { return points[i]; }
    Point segment_end(std::size_t i) const { return points[i + 1]; }
    double segment_length(std::size_t i) const { return distance(points[i], points[i + 1]); }
    double length() const { return polyline_length(points); }
};

/// Radial-distance pre-pass followed by Ramer-Douglas-Peucker with the same
/// tolerance. The result is a subsequence of `line` keeping both endpoints,
/// and every dropped input point lies within `tolerance` of the result.
Polyline simplify(const Polyline& line, double tolerance);

struct ChainOptions {
    double offset_threshold = 5.0;
    // Minimum share of the total input length the chain must cover.
    double min_coverage = 0.6;
};

/// Greedily joins polylines into one chain starting from the longest one.
/// Throws Error(SketchNotChainable) when the chain covers too little of the
/// input (branching or disconnected sketches).
SegmentChain assemble_chain(const std::vector<Polyline>& lines, const ChainOptions& options = {});

/// Re-simplifies an assembled chain so that joints between separately traced
/// pieces do not leave collinear extra segments. Closed chains are rotated
/// so the seam sits on a real corner.
SegmentChain simplify_chain(const SegmentChain& chain, double tolerance);

} // namespace sketchlayout
