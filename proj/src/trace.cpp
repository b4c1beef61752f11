// Divide-and-conquer skeleton tracing: regions larger than the chunk size are
// split along the cheapest seam near their middle; small chunks are turned
// into fragments by connecting the points where strokes cross the chunk
// border; fragments meeting on a seam are joined on the way back up.

#include <algorithm>
#include <array>
#include <cstdlib>
#include <deque>
#include <limits>
#include <optional>
#include <queue>

#include "sketchlayout/error.hpp"
#include "sketchlayout/polyline.hpp"
#include "sketchlayout/raster.hpp"

namespace sketchlayout {

namespace {

struct Rect {
    int x = 0;
    int y = 0;
    int w = 0;
    int h = 0;
};

// 4-neighbours first so BFS paths prefer straight steps.
constexpr std::array<std::array<int, 2>, 8> kSteps = {{{1, 0}, {0, 1}, {-1, 0}, {0, -1}, {1, 1}, {-1, 1}, {-1, -1}, {1, -1}}};

class Integral {
public:
    explicit Integral(const BinaryImage& img)
        : w_(img.width() + 1), sums_(static_cast<std::size_t>(img.width() + 1) * (img.height() + 1), 0)
    {
        for (int y = 0; y < img.height(); ++y)
            for (int x = 0; x < img.width(); ++x)
                at(x + 1, y + 1) = img.get(x, y) + at(x, y + 1) + at(x + 1, y) - at(x, y);
    }

    long count(const Rect& r) const { return at(r.x + r.w, r.y + r.h) - at(r.x, r.y + r.h) - at(r.x + r.w, r.y) + at(r.x, r.y); }

private:
    long& at(int x, int y) { return sums_[static_cast<std::size_t>(y) * w_ + x]; }
    long at(int x, int y) const { return sums_[static_cast<std::size_t>(y) * w_ + x]; }

    int w_;
    std::vector<long> sums_;
};

struct SeamCost {
    int runs = std::numeric_limits<int>::max();
    int pixels = std::numeric_limits<int>::max();
    int offset = std::numeric_limits<int>::max(); // twice the distance to the exact middle

    bool operator<(const SeamCost& o) const
    {
        if (pixels != o.pixels)
            return pixels < o.pixels;
        if (runs != o.runs)
            return runs < o.runs;
        return offset < o.offset;
    }
};

// Cost of cutting between line `i - 1` and line `i` of the region (rows when
// `horizontal`, columns otherwise), measured on the union of both lines.
SeamCost seam_cost(const BinaryImage& img, const Rect& r, int i, bool horizontal)
{
    SeamCost cost{0, 0, 0};
    const int length = horizontal ? r.w : r.h;
    bool previous = false;
    for (int k = 0; k < length; ++k) {
        bool a, b;
        if (horizontal) {
            a = img.get(r.x + k, r.y + i - 1);
            b = img.get(r.x + k, r.y + i);
        } else {
            a = img.get(r.x + i - 1, r.y + k);
            b = img.get(r.x + i, r.y + k);
        }
        cost.pixels += a + b;
        const bool on = a || b;
        if (on && !previous)
            ++cost.runs;
        previous = on;
    }
    const int extent = horizontal ? r.h : r.w;
    cost.offset = std::abs(2 * i - extent);
    return cost;
}

struct Seam {
    bool horizontal = true;
    int index = 0;
};

std::optional<Seam> choose_seam(const BinaryImage& img, const Rect& r, int chunk)
{
    std::optional<Seam> best;
    SeamCost best_cost;
    auto consider = [&](bool horizontal, int extent) {
        const int lo = std::max(1, (extent + 3) / 4);
        const int hi = std::min(extent - 1, (3 * extent) / 4);
        for (int i = lo; i <= hi; ++i) {
            const SeamCost c = seam_cost(img, r, i, horizontal);
            if (!best || c < best_cost) {
                best = Seam{horizontal, i};
                best_cost = c;
            }
        }
    };
    if (r.h > chunk)
        consider(true, r.h);
    if (r.w > chunk)
        consider(false, r.w);
    return best;
}

// ---------------------------------------------------------------------------
// Base case

class Chunk {
public:
    Chunk(const BinaryImage& img, const Rect& r) : img_(img), r_(r), label_(static_cast<std::size_t>(r.w) * r.h, -1) {}

    bool on(int lx, int ly) const
    {
        return lx >= 0 && ly >= 0 && lx < r_.w && ly < r_.h && img_.get(r_.x + lx, r_.y + ly);
    }
    std::size_t idx(int lx, int ly) const { return static_cast<std::size_t>(ly) * r_.w + lx; }
    Pixel local(std::size_t i) const { return {static_cast<int>(i % r_.w), static_cast<int>(i / r_.w)}; }
    Point global(std::size_t i) const
    {
        const Pixel p = local(i);
        return {static_cast<double>(r_.x + p.x), static_cast<double>(r_.y + p.y)};
    }
    std::size_t size() const { return label_.size(); }

    // Breadth-first distances and predecessors inside the chunk foreground.
    void bfs(const std::vector<std::size_t>& sources, std::vector<int>& dist, std::vector<std::size_t>& pred) const
    {
        dist.assign(size(), -1);
        pred.assign(size(), std::numeric_limits<std::size_t>::max());
        std::queue<std::size_t> queue;
        for (std::size_t s : sources) {
            dist[s] = 0;
            queue.push(s);
        }
        while (!queue.empty()) {
            const std::size_t cur = queue.front();
            queue.pop();
            const Pixel p = local(cur);
            for (const auto& step : kSteps) {
                const int nx = p.x + step[0], ny = p.y + step[1];
                if (!on(nx, ny))
                    continue;
                const std::size_t n = idx(nx, ny);
                if (dist[n] >= 0)
                    continue;
                dist[n] = dist[cur] + 1;
                pred[n] = cur;
                queue.push(n);
            }
        }
    }

    std::vector<std::size_t> path(std::size_t to, const std::vector<std::size_t>& pred) const
    {
        std::vector<std::size_t> out{to};
        while (pred[out.back()] != std::numeric_limits<std::size_t>::max())
            out.push_back(pred[out.back()]);
        return out; // from `to` back to the source
    }

    int label_components()
    {
        int next = 0;
        std::vector<int> dist;
        std::vector<std::size_t> pred;
        for (std::size_t i = 0; i < size(); ++i) {
            const Pixel p = local(i);
            if (!on(p.x, p.y) || label_[i] >= 0)
                continue;
            bfs({i}, dist, pred);
            for (std::size_t j = 0; j < size(); ++j)
                if (dist[j] >= 0)
                    label_[j] = next;
            ++next;
        }
        return next;
    }

    int label(std::size_t i) const { return label_[i]; }

    // Perimeter pixels in clockwise order starting at the top-left corner.
    std::vector<std::size_t> perimeter() const
    {
        std::vector<std::size_t> out;
        if (r_.h == 1) {
            for (int x = 0; x < r_.w; ++x)
                out.push_back(idx(x, 0));
            return out;
        }
        if (r_.w == 1) {
            for (int y = 0; y < r_.h; ++y)
                out.push_back(idx(0, y));
            return out;
        }
        for (int x = 0; x < r_.w; ++x)
            out.push_back(idx(x, 0));
        for (int y = 1; y < r_.h; ++y)
            out.push_back(idx(r_.w - 1, y));
        for (int x = r_.w - 2; x >= 0; --x)
            out.push_back(idx(x, r_.h - 1));
        for (int y = r_.h - 2; y >= 1; --y)
            out.push_back(idx(0, y));
        return out;
    }

private:
    const BinaryImage& img_;
    Rect r_;
    std::vector<int> label_;
};

Polyline to_polyline(const Chunk& chunk, const std::vector<std::size_t>& pixels)
{
    Polyline line;
    line.reserve(pixels.size());
    for (std::size_t i : pixels)
        line.push_back(chunk.global(i));
    if (line.size() > 2)
        line = simplify(line, 1.0);
    return line;
}

std::vector<Polyline> chunk_to_fragments(const BinaryImage& img, const Rect& r, int chunk_size)
{
    Chunk chunk(img, r);
    const int components = chunk.label_components();
    if (components == 0)
        return {};

    // Border crossings: runs of foreground along the cyclic perimeter, each
    // represented by its middle pixel.
    const std::vector<std::size_t> ring = chunk.perimeter();
    const std::size_t n = ring.size();
    auto is_on = [&](std::size_t k) {
        const Pixel p = chunk.local(ring[k % n]);
        return chunk.on(p.x, p.y);
    };
    std::vector<std::vector<std::size_t>> keys(static_cast<std::size_t>(components));
    std::size_t start = 0;
    while (start < n && is_on(start))
        ++start;
    if (start == n) {
        keys[static_cast<std::size_t>(chunk.label(ring[0]))].push_back(ring[n / 2]);
    } else {
        // Begin the walk on a background pixel so no run wraps around.
        for (std::size_t k = start; k < start + n;) {
            if (!is_on(k)) {
                ++k;
                continue;
            }
            std::size_t end = k;
            while (end + 1 < start + n && is_on(end + 1))
                ++end;
            const std::size_t mid = ring[((k + end) / 2) % n];
            keys[static_cast<std::size_t>(chunk.label(mid))].push_back(mid);
            k = end + 1;
        }
    }

    std::vector<Polyline> out;
    std::vector<int> dist;
    std::vector<std::size_t> pred;
    const int spur_limit = std::max(2, chunk_size / 2);

    for (int c = 0; c < components; ++c) {
        std::vector<std::size_t>& ends = keys[static_cast<std::size_t>(c)];
        std::vector<std::size_t> members;
        for (std::size_t i = 0; i < chunk.size(); ++i)
            if (chunk.label(i) == c)
                members.push_back(i);
        if (members.size() < 2)
            continue;

        std::vector<std::vector<std::size_t>> paths;
        if (ends.empty()) {
            // Stroke fully inside the chunk: its geodesic diameter.
            chunk.bfs({members.front()}, dist, pred);
            std::size_t a = members.front();
            for (std::size_t m : members)
                if (dist[m] > dist[a])
                    a = m;
            chunk.bfs({a}, dist, pred);
            std::size_t b = a;
            for (std::size_t m : members)
                if (dist[m] > dist[b])
                    b = m;
            paths.push_back(chunk.path(b, pred));
        } else if (ends.size() == 1) {
            // Stroke tip inside the chunk.
            chunk.bfs({ends[0]}, dist, pred);
            std::size_t tip = ends[0];
            for (std::size_t m : members)
                if (dist[m] > dist[tip])
                    tip = m;
            auto p = chunk.path(tip, pred);
            std::reverse(p.begin(), p.end());
            paths.push_back(std::move(p));
        } else if (ends.size() == 2) {
            chunk.bfs({ends[0]}, dist, pred);
            auto p = chunk.path(ends[1], pred);
            std::reverse(p.begin(), p.end());
            paths.push_back(std::move(p));
        } else {
            // Junction: the member minimising the summed distance to all
            // border crossings; every crossing connects to it.
            std::vector<long> total(chunk.size(), 0);
            for (std::size_t e : ends) {
                chunk.bfs({e}, dist, pred);
                for (std::size_t m : members)
                    total[m] += dist[m];
            }
            std::size_t hub = members.front();
            for (std::size_t m : members)
                if (total[m] < total[hub])
                    hub = m;
            chunk.bfs({hub}, dist, pred);
            for (std::size_t e : ends)
                if (e != hub)
                    paths.push_back(chunk.path(e, pred)); // crossing -> hub
        }

        // Spurs: pixels geodesically far from every traced path get their own
        // fragment so nothing of the stroke is lost.
        for (;;) {
            std::vector<std::size_t> sources;
            for (const auto& p : paths)
                sources.insert(sources.end(), p.begin(), p.end());
            chunk.bfs(sources, dist, pred);
            std::size_t far = members.front();
            for (std::size_t m : members)
                if (dist[m] > dist[far])
                    far = m;
            if (dist[far] <= spur_limit)
                break;
            auto p = chunk.path(far, pred);
            std::reverse(p.begin(), p.end());
            paths.push_back(std::move(p));
        }

        for (const auto& p : paths) {
            if (p.size() < 2)
                continue;
            Polyline line = to_polyline(chunk, p);
            if (line.size() >= 2)
                out.push_back(std::move(line));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Seam merging

struct Run {
    int lo = 0;
    int hi = 0;
};

// Foreground run on image line `line` containing position `at`, clipped to
// [lo, hi].
Run run_on_line(const BinaryImage& img, bool horizontal, int line, int at, int lo, int hi)
{
    auto on = [&](int k) { return horizontal ? img.get(k, line) : img.get(line, k); };
    Run run{at, at};
    while (run.lo - 1 >= lo && on(run.lo - 1))
        --run.lo;
    while (run.hi + 1 <= hi && on(run.hi + 1))
        ++run.hi;
    return run;
}

class FragmentPool {
public:
    explicit FragmentPool(std::vector<Polyline> lines)
    {
        for (auto& l : lines)
            lines_.push_back({std::deque<Point>(l.begin(), l.end()), true, false});
        forward_.resize(lines_.size());
        for (std::size_t i = 0; i < forward_.size(); ++i)
            forward_[i] = i;
    }

    std::size_t size() const { return lines_.size(); }
    bool closed(std::size_t i) const { return lines_[i].closed; }
    Point head(std::size_t i) const { return lines_[i].points.front(); }
    Point tail(std::size_t i) const { return lines_[i].points.back(); }

    std::size_t resolve(std::size_t i)
    {
        while (forward_[i] != i) {
            forward_[i] = forward_[forward_[i]];
            i = forward_[i];
        }
        return i;
    }

    // Joins the ends of two fragments located at `pa` and `pb`.
    void join(std::size_t a, Point pa, std::size_t b, Point pb)
    {
        a = resolve(a);
        b = resolve(b);
        auto& la = lines_[a];
        if (la.closed)
            return;
        if (a == b) {
            la.points.push_back(la.points.front());
            la.closed = true;
            return;
        }
        auto& lb = lines_[b];
        if (lb.closed)
            return;
        if (la.points.back() != pa)
            std::reverse(la.points.begin(), la.points.end());
        if (lb.points.front() != pb)
            std::reverse(lb.points.begin(), lb.points.end());
        la.points.insert(la.points.end(), lb.points.begin(), lb.points.end());
        lb.alive = false;
        lb.points.clear();
        forward_[b] = a;
    }

    std::vector<Polyline> take()
    {
        std::vector<Polyline> out;
        for (auto& l : lines_)
            if (l.alive)
                out.emplace_back(l.points.begin(), l.points.end());
        return out;
    }

private:
    struct Entry {
        std::deque<Point> points;
        bool alive = true;
        bool closed = false;
    };
    std::vector<Entry> lines_;
    std::vector<std::size_t> forward_;
};

std::vector<Polyline> merge_across(const BinaryImage& img, const Rect& r, const Seam& seam, std::vector<Polyline> first,
                                   std::vector<Polyline> second)
{
    const std::size_t split = first.size();
    std::vector<Polyline> all = std::move(first);
    for (auto& l : second)
        all.push_back(std::move(l));

    const bool horizontal = seam.horizontal;
    const int near_line = (horizontal ? r.y : r.x) + seam.index - 1;
    const int far_line = near_line + 1;
    const int lo = horizontal ? r.x : r.y;
    const int hi = lo + (horizontal ? r.w : r.h) - 1;

    struct End {
        std::size_t fragment;
        Point at;
        int along;
    };
    auto ends_on = [&](std::size_t from, std::size_t to, int line) {
        std::vector<End> out;
        for (std::size_t i = from; i < to; ++i) {
            const Polyline& l = all[i];
            if (l.front() == l.back())
                continue;
            for (const Point& p : {l.front(), l.back()}) {
                const int across = static_cast<int>(horizontal ? p.y : p.x);
                const int along = static_cast<int>(horizontal ? p.x : p.y);
                if (across == line)
                    out.push_back({i, p, along});
            }
        }
        return out;
    };
    const auto near_ends = ends_on(0, split, near_line);
    const auto far_ends = ends_on(split, all.size(), far_line);

    struct Candidate {
        int gap;
        std::size_t a;
        std::size_t b;
    };
    std::vector<Candidate> candidates;
    for (std::size_t a = 0; a < near_ends.size(); ++a) {
        const Run ra = run_on_line(img, horizontal, near_line, near_ends[a].along, lo, hi);
        for (std::size_t b = 0; b < far_ends.size(); ++b) {
            const Run rb = run_on_line(img, horizontal, far_line, far_ends[b].along, lo, hi);
            if (ra.lo <= rb.hi + 1 && rb.lo <= ra.hi + 1)
                candidates.push_back({std::abs(near_ends[a].along - far_ends[b].along), a, b});
        }
    }
    std::stable_sort(candidates.begin(), candidates.end(), [](const Candidate& x, const Candidate& y) { return x.gap < y.gap; });

    FragmentPool pool(std::move(all));
    std::vector<bool> used_near(near_ends.size(), false), used_far(far_ends.size(), false);
    for (const Candidate& c : candidates) {
        if (used_near[c.a] || used_far[c.b])
            continue;
        used_near[c.a] = used_far[c.b] = true;
        pool.join(near_ends[c.a].fragment, near_ends[c.a].at, far_ends[c.b].fragment, far_ends[c.b].at);
    }
    return pool.take();
}

std::vector<Polyline> trace_region(const BinaryImage& img, const Integral& integral, const Rect& r, int chunk)
{
    if (r.w <= 0 || r.h <= 0 || integral.count(r) == 0)
        return {};
    if (r.w <= chunk && r.h <= chunk)
        return chunk_to_fragments(img, r, chunk);
    const auto seam = choose_seam(img, r, chunk);
    if (!seam)
        return chunk_to_fragments(img, r, chunk);
    Rect a = r, b = r;
    if (seam->horizontal) {
        a.h = seam->index;
        b.y = r.y + seam->index;
        b.h = r.h - seam->index;
    } else {
        a.w = seam->index;
        b.x = r.x + seam->index;
        b.w = r.w - seam->index;
    }
    return merge_across(img, r, *seam, trace_region(img, integral, a, chunk), trace_region(img, integral, b, chunk));
}

} // namespace

std::vector<Polyline> trace_skeleton(const BinaryImage& image, const TraceOptions& options)
{
    if (options.chunk_size < 3)
        throw Error(ErrorKind::InvalidInput, "trace chunk size must be at least 3");
    if (image.empty())
        return {};
    const Integral integral(image);
    auto lines = trace_region(image, integral, Rect{0, 0, image.width(), image.height()}, options.chunk_size);
    std::erase_if(lines, [&](const Polyline& l) { return l.size() < 2 || polyline_length(l) < options.min_length; });
    return lines;
}

} // namespace sketchlayout
