#include "sketchlayout/polyline.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <utility>

#include "sketchlayout/error.hpp"

namespace sketchlayout {

namespace {

struct Split {
    std::size_t index = 0;
    double sq_distance = -1.0;
};

Split farthest(const Polyline& line, std::size_t first, std::size_t last, const std::vector<bool>* only)
{
    Split best;
    for (std::size_t i = first + 1; i < last; ++i) {
        if (only && !(*only)[i])
            continue;
        const double d = squared_segment_distance(line[i], line[first], line[last]);
        if (d > best.sq_distance)
            best = {i, d};
    }
    return best;
}

void drop_repeats(std::vector<Point>& points)
{
    points.erase(std::unique(points.begin(), points.end()), points.end());
}

} // namespace

Polyline simplify(const Polyline& line, double tolerance)
{
    if (line.size() <= 2)
        return line;
    if (!(tolerance > 0.0))
        throw Error(ErrorKind::InvalidInput, "simplification tolerance must be positive");
    const double sq_tol = tolerance * tolerance;
    const std::size_t n = line.size();

    // Radial pass: a point survives only if it is farther than the tolerance
    // from the previous survivor.
    std::vector<bool> radial(n, false);
    radial[0] = radial[n - 1] = true;
    std::size_t prev = 0;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (squared_distance(line[i], line[prev]) > sq_tol) {
            radial[i] = true;
            prev = i;
        }
    }

    // Douglas-Peucker over the radial survivors. A point dropped by the radial
    // pass is reinstated only when no survivor can restore the bound, so
    // every input point ends up within the tolerance of the output.
    std::vector<bool> keep(n, false);
    keep[0] = keep[n - 1] = true;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{0, n - 1}};
    while (!stack.empty()) {
        const auto [first, last] = stack.back();
        stack.pop_back();
        if (last - first < 2)
            continue;
        Split split = farthest(line, first, last, &radial);
        if (split.sq_distance <= sq_tol) {
            split = farthest(line, first, last, nullptr);
            if (split.sq_distance <= sq_tol)
                continue;
        }
        keep[split.index] = true;
        stack.emplace_back(first, split.index);
        stack.emplace_back(split.index, last);
    }

    Polyline out;
    for (std::size_t i = 0; i < n; ++i)
        if (keep[i])
            out.push_back(line[i]);
    return out;
}

SegmentChain assemble_chain(const std::vector<Polyline>& input, const ChainOptions& options)
{
    if (options.offset_threshold < 0.0)
        throw Error(ErrorKind::InvalidInput, "offset threshold must be non-negative");

    std::vector<Polyline> lines;
    for (const auto& l : input) {
        Polyline clean = l;
        drop_repeats(clean);
        if (clean.size() >= 2)
            lines.push_back(std::move(clean));
    }
    if (lines.empty())
        throw Error(ErrorKind::SketchNotChainable, "sketch contains no strokes");

    std::vector<double> lengths;
    double total = 0.0;
    for (const auto& l : lines) {
        lengths.push_back(polyline_length(l));
        total += lengths.back();
    }
    const std::size_t start = static_cast<std::size_t>(std::max_element(lengths.begin(), lengths.end()) - lengths.begin());

    std::vector<bool> used(lines.size(), false);
    used[start] = true;
    double covered = lengths[start];
    std::deque<Point> chain(lines[start].begin(), lines[start].end());
    const double limit = options.offset_threshold;

    auto loop_closable = [&]() { return chain.size() >= 4 && distance(chain.front(), chain.back()) <= limit; };

    struct Pick {
        std::size_t line = 0;
        bool reversed = false;
        double gap = 0.0;
    };
    // Nearest attachable endpoint; ties go to the longer polyline.
    auto best_at = [&](Point end) {
        std::optional<Pick> best;
        for (std::size_t j = 0; j < lines.size(); ++j) {
            if (used[j])
                continue;
            for (const bool rev : {false, true}) {
                const double gap = distance(end, rev ? lines[j].back() : lines[j].front());
                if (gap > limit)
                    continue;
                if (!best || gap < best->gap || (gap == best->gap && lengths[j] > lengths[best->line]))
                    best = Pick{j, rev, gap};
            }
        }
        return best;
    };

    const bool born_closed = chain.front() == chain.back();
    if (!born_closed) {
        // Grow the tail first, then the head.
        for (const bool at_tail : {true, false}) {
            for (;;) {
                const Point end = at_tail ? chain.back() : chain.front();
                const auto pick = best_at(end);
                if (!pick)
                    break;
                if (loop_closable() && distance(chain.front(), chain.back()) <= pick->gap)
                    break;
                used[pick->line] = true;
                covered += lengths[pick->line];
                Polyline piece = lines[pick->line];
                // Orient the piece so that its attaching end comes first.
                if (pick->reversed)
                    std::reverse(piece.begin(), piece.end());
                if (at_tail) {
                    for (std::size_t k = 1; k < piece.size(); ++k)
                        if (piece[k] != chain.back())
                            chain.push_back(piece[k]);
                } else {
                    for (std::size_t k = 1; k < piece.size(); ++k)
                        if (piece[k] != chain.front())
                            chain.push_front(piece[k]);
                }
            }
        }
    }

    if (total > 0.0 && covered / total < options.min_coverage)
        throw Error(ErrorKind::SketchNotChainable,
                    "strokes do not form a single chain (branching or disconnected sketch)");

    SegmentChain out;
    out.points.assign(chain.begin(), chain.end());
    if (born_closed || loop_closable()) {
        out.points.back() = out.points.front();
        out.closed = true;
    }
    drop_repeats(out.points);
    if (out.closed && out.points.size() < 4) {
        // Too short to be a loop once snapped.
        out.closed = false;
        if (out.points.size() >= 2 && out.points.back() == out.points.front())
            out.points.pop_back();
    }
    if (out.points.size() < 2)
        throw Error(ErrorKind::SketchNotChainable, "sketch collapses to a point");
    return out;
}

SegmentChain simplify_chain(const SegmentChain& chain, double tolerance)
{
    SegmentChain out;
    out.closed = chain.closed;
    if (!chain.closed || chain.points.size() < 5) {
        out.points = simplify(chain.points, tolerance);
        return out;
    }

    // Rotate the ring so the seam sits on its sharpest corner, then simplify
    // once more from there.
    const Polyline rough = simplify(chain.points, tolerance);
    const std::size_t m = rough.size() - 1; // distinct vertices
    if (m < 3) {
        out.points = rough;
        return out;
    }
    std::size_t corner = 0;
    double sharpest = -1.0;
    for (std::size_t i = 0; i < m; ++i) {
        const Point prev = rough[(i + m - 1) % m];
        const Point next = rough[(i + 1) % m];
        const double d = squared_segment_distance(rough[i], prev, next);
        if (d > sharpest) {
            sharpest = d;
            corner = i;
        }
    }
    const std::size_t ring = chain.points.size() - 1;
    const auto at = std::find(chain.points.begin(), chain.points.end() - 1, rough[corner]);
    const std::size_t offset = static_cast<std::size_t>(at - chain.points.begin());
    Polyline rotated;
    rotated.reserve(ring + 1);
    for (std::size_t k = 0; k <= ring; ++k)
        rotated.push_back(chain.points[(offset + k) % ring]);
    out.points = simplify(rotated, tolerance);
    return out;
}

} // namespace sketchlayout
