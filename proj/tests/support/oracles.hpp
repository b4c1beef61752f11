#pragma once

// Slow, obviously-correct reference implementations used as test oracles.
// None of them share code with the library.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <vector>

#include "sketchlayout/graph.hpp"
#include "sketchlayout/raster.hpp"

namespace oracle {

using Grid = std::vector<std::vector<int>>; // [y][x], 1 = foreground

inline Grid to_grid(const sketchlayout::BinaryImage& img)
{
    Grid g(img.height(), std::vector<int>(img.width(), 0));
    for (int y = 0; y < img.height(); ++y)
        for (int x = 0; x < img.width(); ++x)
            g[y][x] = img.get(x, y) ? 1 : 0;
    return g;
}

inline sketchlayout::BinaryImage from_grid(const Grid& g)
{
    const int h = static_cast<int>(g.size());
    const int w = h ? static_cast<int>(g[0].size()) : 0;
    sketchlayout::BinaryImage img(w, h);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            img.set(x, y, g[y][x] != 0);
    return img;
}

// Textbook Zhang-Suen: P2..P9 clockwise from north, each sub-iteration
// marks first and deletes afterwards.
inline Grid zhang_suen(Grid g)
{
    const int h = static_cast<int>(g.size());
    const int w = h ? static_cast<int>(g[0].size()) : 0;
    auto at = [&](int x, int y) { return (x < 0 || y < 0 || x >= w || y >= h) ? 0 : g[y][x]; };
    bool changed = true;
    while (changed) {
        changed = false;
        for (int pass = 0; pass < 2; ++pass) {
            std::vector<std::pair<int, int>> kill;
            for (int y = 0; y < h; ++y) {
                for (int x = 0; x < w; ++x) {
                    if (!g[y][x])
                        continue;
                    const int p2 = at(x, y - 1), p3 = at(x + 1, y - 1), p4 = at(x + 1, y), p5 = at(x + 1, y + 1);
                    const int p6 = at(x, y + 1), p7 = at(x - 1, y + 1), p8 = at(x - 1, y), p9 = at(x - 1, y - 1);
                    const int b = p2 + p3 + p4 + p5 + p6 + p7 + p8 + p9;
                    const int seq[9] = {p2, p3, p4, p5, p6, p7, p8, p9, p2};
                    int a = 0;
                    for (int i = 0; i < 8; ++i)
                        if (seq[i] == 0 && seq[i + 1] == 1)
                            ++a;
                    if (b < 2 || b > 6 || a != 1)
                        continue;
                    if (pass == 0 && (p2 * p4 * p6 != 0 || p4 * p6 * p8 != 0))
                        continue;
                    if (pass == 1 && (p2 * p4 * p8 != 0 || p2 * p6 * p8 != 0))
                        continue;
                    kill.emplace_back(x, y);
                }
            }
            for (auto [x, y] : kill)
                g[y][x] = 0;
            if (!kill.empty())
                changed = true;
        }
    }
    return g;
}

inline int components8(const Grid& g)
{
    const int h = static_cast<int>(g.size());
    const int w = h ? static_cast<int>(g[0].size()) : 0;
    std::vector<std::vector<int>> seen(h, std::vector<int>(w, 0));
    int count = 0;
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            if (!g[y][x] || seen[y][x])
                continue;
            ++count;
            std::vector<std::pair<int, int>> stack{{x, y}};
            seen[y][x] = 1;
            while (!stack.empty()) {
                auto [cx, cy] = stack.back();
                stack.pop_back();
                for (int dy = -1; dy <= 1; ++dy)
                    for (int dx = -1; dx <= 1; ++dx) {
                        const int nx = cx + dx, ny = cy + dy;
                        if (nx < 0 || ny < 0 || nx >= w || ny >= h || !g[ny][nx] || seen[ny][nx])
                            continue;
                        seen[ny][nx] = 1;
                        stack.emplace_back(nx, ny);
                    }
            }
        }
    }
    return count;
}

inline double point_segment_distance(double px, double py, double ax, double ay, double bx, double by)
{
    const double vx = bx - ax, vy = by - ay;
    const double len2 = vx * vx + vy * vy;
    double t = len2 == 0.0 ? 0.0 : ((px - ax) * vx + (py - ay) * vy) / len2;
    t = std::clamp(t, 0.0, 1.0);
    const double dx = px - (ax + t * vx), dy = py - (ay + t * vy);
    return std::sqrt(dx * dx + dy * dy);
}

// Length of the longest simple cycle (0 when acyclic), by exhaustive search.
inline std::size_t longest_cycle(const std::vector<std::vector<int>>& adj)
{
    const int n = static_cast<int>(adj.size());
    std::size_t best = 0;
    std::vector<int> on(n, 0);
    // Enumerate cycles whose smallest vertex is `s`.
    auto search = [&](auto&& self, int s, int v, std::size_t depth) -> void {
        for (int w : adj[v]) {
            if (w == s && depth >= 3)
                best = std::max(best, depth);
            if (w <= s || on[w])
                continue;
            on[w] = 1;
            self(self, s, w, depth + 1);
            on[w] = 0;
        }
    };
    for (int s = 0; s < n; ++s) {
        on[s] = 1;
        search(search, s, s, 1);
        on[s] = 0;
    }
    return best;
}

inline std::vector<std::vector<int>> all_pairs_hops(const sketchlayout::Graph& g)
{
    const std::size_t n = g.node_count();
    const int inf = std::numeric_limits<int>::max() / 4;
    std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
    for (std::size_t v = 0; v < n; ++v)
        d[v][v] = 0;
    for (auto [a, b] : g.edges())
        d[a][b] = d[b][a] = 1;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    return d;
}

// Hamilton's method in exact integer arithmetic: quota_i = l_i * count / L.
inline std::vector<std::size_t> largest_remainder(const std::vector<std::uint64_t>& lengths, std::size_t count)
{
    const std::uint64_t total = std::accumulate(lengths.begin(), lengths.end(), std::uint64_t{0});
    std::vector<std::size_t> k(lengths.size());
    std::vector<std::uint64_t> rem(lengths.size());
    std::size_t given = 0;
    for (std::size_t i = 0; i < lengths.size(); ++i) {
        k[i] = static_cast<std::size_t>(lengths[i] * count / total);
        rem[i] = lengths[i] * count % total;
        given += k[i];
    }
    std::vector<std::size_t> idx(lengths.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return rem[a] > rem[b]; });
    for (std::size_t j = 0; given < count; ++j, ++given)
        ++k[idx[j]];
    return k;
}

// Random union of filled rectangles and disks.
inline sketchlayout::BinaryImage random_blob(std::mt19937_64& rng, int size = 64)
{
    sketchlayout::BinaryImage img(size, size);
    std::uniform_int_distribution<int> shapes(1, 4), kind(0, 1), pos(4, size - 5), extent(3, size / 3);
    const int n = shapes(rng);
    for (int s = 0; s < n; ++s) {
        const int cx = pos(rng), cy = pos(rng), e = extent(rng);
        if (kind(rng) == 0) {
            const int hw = e, hh = extent(rng);
            for (int y = cy - hh / 2; y <= cy + hh / 2; ++y)
                for (int x = cx - hw / 2; x <= cx + hw / 2; ++x)
                    if (img.in_bounds(x, y))
                        img.set(x, y);
        } else {
            const int r = std::max(2, e / 2);
            for (int y = cy - r; y <= cy + r; ++y)
                for (int x = cx - r; x <= cx + r; ++x)
                    if (img.in_bounds(x, y) && (x - cx) * (x - cx) + (y - cy) * (y - cy) <= r * r)
                        img.set(x, y);
        }
    }
    return img;
}

} // namespace oracle
