#include "sketchlayout/samples.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

namespace sketchlayout::samples {

namespace {

std::string name(std::size_t i) { return "n" + std::to_string(i); }

Graph with_nodes(std::size_t n)
{
    Graph g;
    for (std::size_t i = 0; i < n; ++i)
        g.add_node(name(i));
    return g;
}

} // namespace

Graph cycle(std::size_t n)
{
    Graph g = with_nodes(n);
    for (std::size_t i = 0; i < n; ++i)
        g.add_edge(i, (i + 1) % n);
    return g;
}

Graph path(std::size_t n)
{
    Graph g = with_nodes(n);
    for (std::size_t i = 1; i < n; ++i)
        g.add_edge(i - 1, i);
    return g;
}

Graph grid(std::size_t rows, std::size_t cols)
{
    Graph g = with_nodes(rows * cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            const std::size_t v = r * cols + c;
            if (c + 1 < cols)
                g.add_edge(v, v + 1);
            if (r + 1 < rows)
                g.add_edge(v, v + cols);
        }
    }
    return g;
}

Graph tree(std::size_t n, std::size_t branching)
{
    Graph g = with_nodes(n);
    for (std::size_t i = 1; i < n; ++i)
        g.add_edge((i - 1) / branching, i);
    return g;
}

Graph random_connected(std::size_t n, std::size_t edges, std::uint64_t seed)
{
    Graph g = with_nodes(n);
    std::mt19937_64 rng(seed);
    for (std::size_t i = 1; i < n; ++i) {
        std::uniform_int_distribution<std::size_t> pick(0, i - 1);
        g.add_edge(pick(rng), i);
    }
    std::uniform_int_distribution<std::size_t> any(0, n - 1);
    std::size_t attempts = 0;
    while (g.edge_count() < edges && attempts++ < 50 * edges)
        g.add_edge(any(rng), any(rng));
    return g;
}

Image blank_canvas(int size) { return Image(size, size, 1, 255); }

Image draw(const std::vector<std::vector<Point>>& strokes, int size, double stroke_width)
{
    Image canvas = blank_canvas(size);
    for (const auto& s : strokes)
        stroke_polyline(canvas, s, stroke_width);
    return canvas;
}

Image rectangle_sketch(int size, double stroke_width)
{
    const double s = size;
    return draw({{{0.2 * s, 0.25 * s}, {0.8 * s, 0.25 * s}, {0.8 * s, 0.75 * s}, {0.2 * s, 0.75 * s}, {0.2 * s, 0.25 * s}}},
                size, stroke_width);
}

Image l_shape_sketch(int size, double stroke_width)
{
    const double s = size;
    return draw({{{0.25 * s, 0.15 * s}, {0.25 * s, 0.8 * s}, {0.8 * s, 0.8 * s}}}, size, stroke_width);
}

Image horizontal_line_sketch(int size, double stroke_width)
{
    const double s = size;
    return draw({{{0.1 * s, 0.5 * s}, {0.9 * s, 0.5 * s}}}, size, stroke_width);
}

Image circle_sketch(int size, double stroke_width)
{
    const double s = size;
    std::vector<Point> ring;
    for (int k = 0; k <= 96; ++k) {
        const double a = 2.0 * std::numbers::pi * k / 96.0;
        ring.push_back({0.5 * s + 0.35 * s * std::cos(a), 0.5 * s + 0.35 * s * std::sin(a)});
    }
    return draw({ring}, size, stroke_width);
}

Image zigzag_sketch(int size, double stroke_width)
{
    const double s = size;
    return draw({{{0.1 * s, 0.3 * s}, {0.35 * s, 0.7 * s}, {0.6 * s, 0.3 * s}, {0.9 * s, 0.7 * s}}}, size, stroke_width);
}

} // namespace sketchlayout::samples
