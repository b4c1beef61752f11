#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sketchlayout/geometry.hpp"
#include "sketchlayout/graph.hpp"
#include "sketchlayout/raster.hpp"

namespace sketchlayout::samples {

// Graph generators. Node ids are "n0", "n1", ...
Graph cycle(std::size_t n);
Graph path(std::size_t n);
Graph grid(std::size_t rows, std::size_t cols);
/// Balanced tree where every internal node has `branching` children.
Graph tree(std::size_t n, std::size_t branching);
/// Random spanning tree plus extra random edges up to `edges` in total.
Graph random_connected(std::size_t n, std::size_t edges, std::uint64_t seed);

// Sketches: dark strokes on a white canvas (single channel).
Image blank_canvas(int size = 512);
Image draw(const std::vector<std::vector<Point>>& strokes, int size = 512, double stroke_width = 8.0);
Image rectangle_sketch(int size = 512, double stroke_width = 8.0);
Image l_shape_sketch(int size = 512, double stroke_width = 8.0);
Image horizontal_line_sketch(int size = 512, double stroke_width = 8.0);
Image circle_sketch(int size = 512, double stroke_width = 8.0);
Image zigzag_sketch(int size = 512, double stroke_width = 8.0);

} // namespace sketchlayout::samples
