#pragma once

#include <array>
#include <cstddef>
#include <string_view>
#include <vector>

#include "sketchlayout/geometry.hpp"
#include "sketchlayout/graph.hpp"
#include "sketchlayout/mapping.hpp"
#include "sketchlayout/polyline.hpp"

namespace sketchlayout {

enum class Direction { LeftRight, RightLeft, TopBottom, BottomTop, TopLeftBottomRight, BottomRightTopLeft, TopRightBottomLeft, BottomLeftTopRight };

// "l-r", "tl-br", ...
std::string_view to_string(Direction d);
Direction reversed(Direction d);
bool is_horizontal(Direction d);
bool is_vertical(Direction d);
inline bool is_diagonal(Direction d) { return !is_horizontal(d) && !is_vertical(d); }

inline constexpr double kDefaultEpsilon = 0.2;

/// Screen coordinates (y down). Throws Error(InvalidInput) for a zero-length
/// segment.
Direction classify_direction(Point from, Point to, double epsilon = kDefaultEpsilon);

enum class Axis { Horizontal, Vertical };

/// `first` must be left of (horizontal) or above (vertical) `second`.
struct RelativeConstraint {
    NodeIndex first = 0;
    NodeIndex second = 0;
    Axis axis = Axis::Horizontal;

    friend bool operator==(const RelativeConstraint&, const RelativeConstraint&) = default;
};

struct ConstraintSet {
    std::vector<RelativeConstraint> relative;
    std::vector<std::vector<NodeIndex>> horizontal_alignments; // equal y
    std::vector<std::vector<NodeIndex>> vertical_alignments;   // equal x
    // Constraints discarded because they would close a directed cycle on one axis.
    std::size_t dropped = 0;

    bool empty() const { return relative.empty() && horizontal_alignments.empty() && vertical_alignments.empty(); }
};

ConstraintSet generate_constraints(const NodeLineMapping& mapping, const SegmentChain& chain,
                                   double epsilon = kDefaultEpsilon);

/// Keeps only constraints whose nodes all lie in `keep`; alignment groups are
/// filtered and dropped below two members.
ConstraintSet restrict_constraints(const ConstraintSet& cs, const std::vector<bool>& keep);

} // namespace sketchlayout
