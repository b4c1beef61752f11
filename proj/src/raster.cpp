#include "sketchlayout/raster.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "sketchlayout/error.hpp"

namespace sketchlayout {

BinaryImage::BinaryImage(int width, int height)
    : width_(width), height_(height)
{
    if (width < 0 || height < 0)
        throw Error(ErrorKind::InvalidInput, "negative image dimension");
    bits_.assign(static_cast<std::size_t>(width) * height, 0);
}

std::size_t BinaryImage::count() const
{
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

std::vector<Pixel> BinaryImage::foreground() const
{
    std::vector<Pixel> out;
    for (int y = 0; y < height_; ++y)
        for (int x = 0; x < width_; ++x)
            if (bits_[index(x, y)])
                out.push_back({x, y});
    return out;
}

namespace {

// Rec. 601 luma, integer arithmetic.
int luminance(const std::uint8_t* px, int channels)
{
    if (channels <= 2)
        return px[0];
    return (299 * px[0] + 587 * px[1] + 114 * px[2] + 500) / 1000;
}

int alpha(const std::uint8_t* px, int channels)
{
    if (channels == 2)
        return px[1];
    if (channels == 4)
        return px[3];
    return 255;
}

// Neighbours P2..P9, clockwise from north.
std::array<int, 8> neighbourhood(const BinaryImage& img, int x, int y)
{
    return {img.get(x, y - 1), img.get(x + 1, y - 1), img.get(x + 1, y), img.get(x + 1, y + 1),
            img.get(x, y + 1), img.get(x - 1, y + 1), img.get(x - 1, y), img.get(x - 1, y - 1)};
}

bool removable(const std::array<int, 8>& p, bool first_pass)
{
    int b = 0;
    int a = 0;
    for (int i = 0; i < 8; ++i) {
        b += p[i];
        if (p[i] == 0 && p[(i + 1) % 8] == 1)
            ++a;
    }
    if (b < 2 || b > 6 || a != 1)
        return false;
    const int n = p[0], e = p[2], s = p[4], w = p[6];
    if (first_pass)
        return n * e * s == 0 && e * s * w == 0;
    return n * e * w == 0 && n * s * w == 0;
}

} // namespace

BinaryImage binarize(const Image& image, const BinarizeOptions& options)
{
    if (image.width <= 0 || image.height <= 0 || image.samples.empty())
        throw Error(ErrorKind::InvalidInput, "empty image");
    if (image.channels < 1 || image.channels > 4)
        throw Error(ErrorKind::InvalidInput, "unsupported channel count");
    if (image.samples.size() != static_cast<std::size_t>(image.width) * image.height * image.channels)
        throw Error(ErrorKind::InvalidInput, "sample buffer does not match dimensions");

    BinaryImage out(image.width, image.height);
    for (int y = 0; y < image.height; ++y) {
        for (int x = 0; x < image.width; ++x) {
            const std::uint8_t* px = image.pixel(x, y);
            if (alpha(px, image.channels) < kTransparentAlpha)
                continue;
            const bool dark = luminance(px, image.channels) < options.threshold;
            if (dark != options.invert)
                out.set(x, y);
        }
    }
    return out;
}

BinaryImage thin(const BinaryImage& image)
{
    BinaryImage out = image;
    std::vector<Pixel> live = out.foreground();
    std::vector<Pixel> doomed;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const bool first_pass : {true, false}) {
            doomed.clear();
            for (const Pixel& p : live)
                if (removable(neighbourhood(out, p.x, p.y), first_pass))
                    doomed.push_back(p);
            for (const Pixel& p : doomed)
                out.set(p.x, p.y, false);
            if (!doomed.empty()) {
                changed = true;
                std::erase_if(live, [&out](const Pixel& p) { return !out.get(p.x, p.y); });
            }
        }
    }
    return out;
}

std::size_t count_components(const BinaryImage& image)
{
    std::vector<std::uint8_t> seen(static_cast<std::size_t>(image.width()) * image.height(), 0);
    std::vector<Pixel> stack;
    std::size_t components = 0;
    for (int y = 0; y < image.height(); ++y) {
        for (int x = 0; x < image.width(); ++x) {
            const auto at = static_cast<std::size_t>(y) * image.width() + x;
            if (!image.get(x, y) || seen[at])
                continue;
            ++components;
            seen[at] = 1;
            stack.push_back({x, y});
            while (!stack.empty()) {
                const Pixel p = stack.back();
                stack.pop_back();
                for (int dy = -1; dy <= 1; ++dy) {
                    for (int dx = -1; dx <= 1; ++dx) {
                        const int nx = p.x + dx, ny = p.y + dy;
                        if (!image.get(nx, ny))
                            continue;
                        const auto n = static_cast<std::size_t>(ny) * image.width() + nx;
                        if (!seen[n]) {
                            seen[n] = 1;
                            stack.push_back({nx, ny});
                        }
                    }
                }
            }
        }
    }
    return components;
}

void stroke_polyline(Image& canvas, std::span<const Point> points, double width, std::uint8_t value)
{
    if (points.empty() || canvas.width <= 0 || canvas.height <= 0)
        return;
    const double r = width / 2.0;
    double min_x = points[0].x, max_x = points[0].x, min_y = points[0].y, max_y = points[0].y;
    for (const Point& p : points) {
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
    }
    const int x0 = std::max(0, static_cast<int>(std::floor(min_x - r)));
    const int x1 = std::min(canvas.width - 1, static_cast<int>(std::ceil(max_x + r)));
    const int y0 = std::max(0, static_cast<int>(std::floor(min_y - r)));
    const int y1 = std::min(canvas.height - 1, static_cast<int>(std::ceil(max_y + r)));
    const double r2 = r * r;
    for (int y = y0; y <= y1; ++y) {
        for (int x = x0; x <= x1; ++x) {
            const Point c{static_cast<double>(x), static_cast<double>(y)};
            bool hit = points.size() == 1 && squared_distance(c, points[0]) <= r2;
            for (std::size_t i = 1; i < points.size() && !hit; ++i)
                hit = squared_segment_distance(c, points[i - 1], points[i]) <= r2;
            if (!hit)
                continue;
            std::uint8_t* px = canvas.pixel(x, y);
            const int color_channels = canvas.channels == 2 || canvas.channels == 4 ? canvas.channels - 1 : canvas.channels;
            for (int ch = 0; ch < color_channels; ++ch)
                px[ch] = value;
            if (color_channels != canvas.channels)
                px[canvas.channels - 1] = 255;
        }
    }
}

} // namespace sketchlayout
