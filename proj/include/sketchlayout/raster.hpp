#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sketchlayout/geometry.hpp"

namespace sketchlayout {

/// Decoded 8-bit raster. `channels` is 1 (gray), 2 (gray+alpha), 3 (RGB) or
/// 4 (RGBA); samples are stored row-major, interleaved.
struct Image {
    int width = 0;
    int height = 0;
    int channels = 1;
    std::vector<std::uint8_t> samples;

    Image() = default;
    Image(int w, int h, int c, std::uint8_t fill = 0);

    std::uint8_t* pixel(int x, int y) { return samples.data() + (static_cast<std::size_t>(y) * width + x) * channels; }
    const std::uint8_t* pixel(int x, int y) const
    {
        return samples.data() + (static_cast<std::size_t>(y) * width + x) * channels;
    }
};

struct Pixel {
    int x = 0;
    int y = 0;

    friend bool operator==(const Pixel&, const Pixel&) = default;
    friend auto operator<=>(const Pixel&, const Pixel&) = default;
};

/// Foreground/background grid, origin top-left, y growing downward.
class BinaryImage {
public:
    BinaryImage() = default;
    BinaryImage(int width, int height);

    int width() const { return width_; }
    int height() const { return height_; }
    bool empty() const { return width_ == 0 || height_ == 0; }

    bool in_bounds(int x, int y) const { return x >= 0 && y >= 0 && x < width_ && y < height_; }

    // Out-of-bounds reads are background.
    bool get(int x, int y) const { return in_bounds(x, y) && bits_[index(x, y)] != 0; }
    void set(int x, int y, bool on = true) { bits_[index(x, y)] = on ? 1 : 0; }

    std::size_t count() const;
    std::vector<Pixel> foreground() const;

    std::span<const std::uint8_t> bits() const { return bits_; }

    friend bool operator==(const BinaryImage&, const BinaryImage&) = default;

private:
    std::size_t index(int x, int y) const { return static_cast<std::size_t>(y) * width_ + x; }

    int width_ = 0;
    int height_ = 0;
    std::vector<std::uint8_t> bits_;
};

struct BinarizeOptions {
    int threshold = 128;
    bool invert = false;
};

// Pixels with alpha below this are background whatever their color.
inline constexpr int kTransparentAlpha = 16;

/// Dark strokes on a light canvas become foreground: a pixel is set iff its
/// luminance is below `threshold` (or not below it, with `invert`).
BinaryImage binarize(const Image& image, const BinarizeOptions& options = {});

/// Zhang-Suen thinning, iterated until a full pass removes nothing.
BinaryImage thin(const BinaryImage& image);

struct TraceOptions {
    int chunk_size = 10;
    // Traced polylines shorter than this (total length, px) are dropped.
    double min_length = 3.0;
};

/// Recursive divide-and-conquer skeleton tracing. The input is expected to be
/// thinned already.
std::vector<Polyline> trace_skeleton(const BinaryImage& image, const TraceOptions& options = {});

/// Number of 8-connected foreground components.
std::size_t count_components(const BinaryImage& image);

/// Paints a round-capped stroke of the given width (px) onto a canvas; used to
/// render synthetic sketches.
void stroke_polyline(Image& canvas, std::span<const Point> points, double width, std::uint8_t value = 0);

} // namespace sketchlayout
