#include "sketchlayout/constraints.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <tuple>

#include "sketchlayout/error.hpp"

namespace sketchlayout {

std::string_view to_string(Direction d)
{
    switch (d) {
    case Direction::LeftRight: return "l-r";
    case Direction::RightLeft: return "r-l";
    case Direction::TopBottom: return "t-b";
    case Direction::BottomTop: return "b-t";
    case Direction::TopLeftBottomRight: return "tl-br";
    case Direction::BottomRightTopLeft: return "br-tl";
    case Direction::TopRightBottomLeft: return "tr-bl";
    case Direction::BottomLeftTopRight: return "bl-tr";
    }
    return "?";
}

Direction reversed(Direction d)
{
    switch (d) {
    case Direction::LeftRight: return Direction::RightLeft;
    case Direction::RightLeft: return Direction::LeftRight;
    case Direction::TopBottom: return Direction::BottomTop;
    case Direction::BottomTop: return Direction::TopBottom;
    case Direction::TopLeftBottomRight: return Direction::BottomRightTopLeft;
    case Direction::BottomRightTopLeft: return Direction::TopLeftBottomRight;
    case Direction::TopRightBottomLeft: return Direction::BottomLeftTopRight;
    case Direction::BottomLeftTopRight: return Direction::TopRightBottomLeft;
    }
    return d;
}

bool is_horizontal(Direction d) { return d == Direction::LeftRight || d == Direction::RightLeft; }
bool is_vertical(Direction d) { return d == Direction::TopBottom || d == Direction::BottomTop; }

Direction classify_direction(Point from, Point to, double epsilon)
{
    const double dx = to.x - from.x;
    const double dy = to.y - from.y;
    if (dx == 0.0 && dy == 0.0)
        throw Error(ErrorKind::InvalidInput, "zero-length segment has no direction");
    // Division by zero yields infinity, which never passes the test.
    if (std::abs(dy / dx) < epsilon)
        return dx > 0.0 ? Direction::LeftRight : Direction::RightLeft;
    if (std::abs(dx / dy) < epsilon)
        return dy > 0.0 ? Direction::TopBottom : Direction::BottomTop;
    if (dx > 0.0)
        return dy > 0.0 ? Direction::TopLeftBottomRight : Direction::BottomLeftTopRight;
    return dy > 0.0 ? Direction::TopRightBottomLeft : Direction::BottomRightTopLeft;
}

namespace {

// Signs of the horizontal and vertical travel of a direction: +1 means the
// later node lies right of / below its predecessor.
std::pair<int, int> travel(Direction d)
{
    switch (d) {
    case Direction::LeftRight: return {1, 0};
    case Direction::RightLeft: return {-1, 0};
    case Direction::TopBottom: return {0, 1};
    case Direction::BottomTop: return {0, -1};
    case Direction::TopLeftBottomRight: return {1, 1};
    case Direction::BottomRightTopLeft: return {-1, -1};
    case Direction::TopRightBottomLeft: return {-1, 1};
    case Direction::BottomLeftTopRight: return {1, -1};
    }
    return {0, 0};
}

// Per-axis digraph used to reject constraints that would close a cycle.
class OrderGraph {
public:
    explicit OrderGraph(std::size_t n) : out_(n), mark_(n, 0) {}

    bool reaches(NodeIndex from, NodeIndex to)
    {
        ++stamp_;
        std::vector<NodeIndex> stack{from};
        mark_[from] = stamp_;
        while (!stack.empty()) {
            const NodeIndex v = stack.back();
            stack.pop_back();
            if (v == to)
                return true;
            for (NodeIndex w : out_[v]) {
                if (mark_[w] != stamp_) {
                    mark_[w] = stamp_;
                    stack.push_back(w);
                }
            }
        }
        return false;
    }

    void add(NodeIndex from, NodeIndex to) { out_[from].push_back(to); }

private:
    std::vector<std::vector<NodeIndex>> out_;
    std::vector<unsigned> mark_;
    unsigned stamp_ = 0;
};

} // namespace

ConstraintSet generate_constraints(const NodeLineMapping& mapping, const SegmentChain& chain, double epsilon)
{
    if (mapping.assignments.size() != chain.segment_count())
        throw Error(ErrorKind::InvalidInput, "mapping and chain disagree on the number of segments");

    ConstraintSet cs;
    const std::size_t n = mapping.parent.size();
    OrderGraph horizontal(n), vertical(n);
    std::set<std::tuple<NodeIndex, NodeIndex, int>> seen;

    auto emit = [&](NodeIndex first, NodeIndex second, Axis axis) {
        if (first == second)
            return;
        if (!seen.emplace(first, second, static_cast<int>(axis)).second)
            return;
        OrderGraph& g = axis == Axis::Horizontal ? horizontal : vertical;
        if (g.reaches(second, first)) {
            ++cs.dropped;
            return;
        }
        g.add(first, second);
        cs.relative.push_back({first, second, axis});
    };

    for (const SegmentAssignment& a : mapping.assignments) {
        const Direction dir = classify_direction(chain.segment_start(a.segment), chain.segment_end(a.segment), epsilon);
        const auto [sx, sy] = travel(dir);
        for (NodeIndex v : a.nodes) {
            if (v >= n || !mapping.parent[v])
                continue;
            const NodeIndex q = *mapping.parent[v];
            if (sx > 0)
                emit(q, v, Axis::Horizontal);
            else if (sx < 0)
                emit(v, q, Axis::Horizontal);
            if (sy > 0)
                emit(q, v, Axis::Vertical);
            else if (sy < 0)
                emit(v, q, Axis::Vertical);
        }
        if (a.nodes.size() >= 2) {
            if (is_horizontal(dir))
                cs.horizontal_alignments.push_back(a.nodes);
            else if (is_vertical(dir))
                cs.vertical_alignments.push_back(a.nodes);
        }
    }
    return cs;
}

ConstraintSet restrict_constraints(const ConstraintSet& cs, const std::vector<bool>& keep)
{
    auto kept = [&](NodeIndex v) { return v < keep.size() && keep[v]; };
    ConstraintSet out;
    out.dropped = cs.dropped;
    for (const auto& r : cs.relative)
        if (kept(r.first) && kept(r.second))
            out.relative.push_back(r);
    auto filter = [&](const std::vector<std::vector<NodeIndex>>& groups, std::vector<std::vector<NodeIndex>>& into) {
        for (const auto& g : groups) {
            std::vector<NodeIndex> members;
            std::copy_if(g.begin(), g.end(), std::back_inserter(members), kept);
            if (members.size() >= 2)
                into.push_back(std::move(members));
        }
    };
    filter(cs.horizontal_alignments, out.horizontal_alignments);
    filter(cs.vertical_alignments, out.vertical_alignments);
    return out;
}

} // namespace sketchlayout
