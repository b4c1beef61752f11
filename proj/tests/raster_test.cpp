#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "sketchlayout/error.hpp"
#include "sketchlayout/raster.hpp"

using namespace sketchlayout;

namespace {

Image gray(int w, int h, std::uint8_t fill) { return Image(w, h, 1, fill); }

double distance_to(const std::vector<Polyline>& lines, double x, double y)
{
    double best = std::numeric_limits<double>::infinity();
    for (const auto& line : lines) {
        if (line.size() == 1)
            best = std::min(best, std::hypot(x - line[0].x, y - line[0].y));
        for (std::size_t i = 0; i + 1 < line.size(); ++i)
            best = std::min(best, oracle::point_segment_distance(x, y, line[i].x, line[i].y, line[i + 1].x,
                                                                 line[i + 1].y));
    }
    return best;
}

bool isolated(const BinaryImage& img, const Pixel& p)
{
    for (int dy = -1; dy <= 1; ++dy)
        for (int dx = -1; dx <= 1; ++dx)
            if ((dx || dy) && img.get(p.x + dx, p.y + dy))
                return false;
    return true;
}

// Isolated pixels cannot form a polyline and are skipped.
double max_uncovered(const BinaryImage& img, const std::vector<Polyline>& lines)
{
    double worst = 0.0;
    for (const Pixel& p : img.foreground())
        if (!isolated(img, p))
            worst = std::max(worst, distance_to(lines, p.x, p.y));
    return worst;
}

BinaryImage disk(int size, double cx, double cy, double r)
{
    BinaryImage img(size, size);
    for (int y = 0; y < size; ++y)
        for (int x = 0; x < size; ++x)
            if ((x - cx) * (x - cx) + (y - cy) * (y - cy) <= r * r)
                img.set(x, y);
    return img;
}

} // namespace

TEST(Binarize, AllWhiteIsEmpty)
{
    EXPECT_EQ(binarize(gray(4, 4, 255)).count(), 0u);
}

TEST(Binarize, AllBlackIsFull)
{
    EXPECT_EQ(binarize(gray(4, 4, 0)).count(), 16u);
}

TEST(Binarize, Checkerboard)
{
    Image img = gray(2, 2, 255);
    *img.pixel(0, 0) = 0;
    *img.pixel(1, 1) = 0;
    const auto fg = binarize(img).foreground();
    ASSERT_EQ(fg.size(), 2u);
    EXPECT_EQ(fg[0], (Pixel{0, 0}));
    EXPECT_EQ(fg[1], (Pixel{1, 1}));
}

TEST(Binarize, ThresholdIsStrict)
{
    Image img(3, 1, 1);
    img.samples = {127, 128, 129};
    const auto bin = binarize(img, {.threshold = 128});
    EXPECT_TRUE(bin.get(0, 0));
    EXPECT_FALSE(bin.get(1, 0));
    EXPECT_FALSE(bin.get(2, 0));
}

TEST(Binarize, TransparentPixelsAreBackground)
{
    Image img(2, 1, 4);
    img.samples = {0, 0, 0, 0, 0, 0, 0, 255};
    const auto bin = binarize(img);
    EXPECT_FALSE(bin.get(0, 0));
    EXPECT_TRUE(bin.get(1, 0));
}

TEST(Binarize, EmptyImageThrows)
{
    try {
        binarize(Image{});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::InvalidInput);
    }
}

TEST(Binarize, InvertMatchesInvertedLuminance)
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> byte(0, 255);
    Image img(16, 9, 1);
    for (auto& s : img.samples)
        s = static_cast<std::uint8_t>(byte(rng));
    Image flipped = img;
    for (auto& s : flipped.samples)
        s = static_cast<std::uint8_t>(255 - s);
    EXPECT_EQ(binarize(img, {.threshold = 128, .invert = true}), binarize(flipped, {.threshold = 128}));
}

TEST(Thin, EmptyStaysEmpty)
{
    EXPECT_EQ(thin(BinaryImage(8, 8)).count(), 0u);
}

TEST(Thin, OnePixelLineUnchanged)
{
    BinaryImage line(12, 3);
    for (int x = 1; x <= 10; ++x)
        line.set(x, 1);
    EXPECT_EQ(thin(line), oracle::from_grid(oracle::zhang_suen(oracle::to_grid(line))));
    EXPECT_EQ(thin(line), line);
}

TEST(Thin, DiskMatchesReference)
{
    const BinaryImage d = disk(21, 10.0, 10.0, 8.0);
    const BinaryImage expected = oracle::from_grid(oracle::zhang_suen(oracle::to_grid(d)));
    const BinaryImage got = thin(d);
    EXPECT_EQ(got, expected);
    EXPECT_GT(got.count(), 0u);
    EXPECT_EQ(count_components(got), 1u);
    for (const Pixel& p : got.foreground()) {
        EXPECT_NEAR(p.x, 10.0, 3.0);
        EXPECT_NEAR(p.y, 10.0, 3.0);
    }
}

TEST(Thin, RandomBlobsMatchReference)
{
    std::mt19937_64 rng(11);
    for (int i = 0; i < 25; ++i) {
        const BinaryImage blob = oracle::random_blob(rng, 48);
        EXPECT_EQ(thin(blob), oracle::from_grid(oracle::zhang_suen(oracle::to_grid(blob)))) << "blob " << i;
    }
}

TEST(Thin, IdempotentSubsetAndTopology)
{
    std::mt19937_64 rng(3);
    for (int i = 0; i < 30; ++i) {
        const BinaryImage blob = oracle::random_blob(rng);
        const BinaryImage once = thin(blob);
        EXPECT_EQ(thin(once), once);
        for (const Pixel& p : once.foreground())
            EXPECT_TRUE(blob.get(p.x, p.y));
        EXPECT_EQ(oracle::components8(oracle::to_grid(once)), oracle::components8(oracle::to_grid(blob)));
    }
}

TEST(CountComponents, AgreesWithReference)
{
    std::mt19937_64 rng(5);
    for (int i = 0; i < 20; ++i) {
        const BinaryImage blob = oracle::random_blob(rng);
        EXPECT_EQ(count_components(blob), static_cast<std::size_t>(oracle::components8(oracle::to_grid(blob))));
    }
}

TEST(Trace, EmptyImageGivesNothing)
{
    EXPECT_TRUE(trace_skeleton(BinaryImage(30, 30)).empty());
}

TEST(Trace, HorizontalSegment)
{
    BinaryImage img(48, 12);
    for (int x = 2; x <= 40; ++x)
        img.set(x, 5);
    const auto lines = trace_skeleton(img);
    ASSERT_EQ(lines.size(), 1u);
    const Polyline& l = lines[0];
    const Point a = l.front().x < l.back().x ? l.front() : l.back();
    const Point b = l.front().x < l.back().x ? l.back() : l.front();
    EXPECT_NEAR(a.x, 2, 1.0);
    EXPECT_NEAR(b.x, 40, 1.0);
    EXPECT_NEAR(a.y, 5, 1.0);
    EXPECT_NEAR(b.y, 5, 1.0);
    EXPECT_LE(max_uncovered(img, lines), 2.0);
}

TEST(Trace, PlusSign)
{
    BinaryImage img(41, 41);
    for (int i = 4; i <= 36; ++i) {
        img.set(i, 20);
        img.set(20, i);
    }
    const auto lines = trace_skeleton(img);
    EXPECT_GE(lines.size(), 2u);
    EXPECT_LE(lines.size(), 4u);
    EXPECT_LE(max_uncovered(img, lines), 2.0);
}

TEST(Trace, ConsecutivePointsDistinct)
{
    std::mt19937_64 rng(17);
    for (int i = 0; i < 10; ++i)
        for (const auto& line : trace_skeleton(thin(oracle::random_blob(rng)))) {
            ASSERT_GE(line.size(), 2u);
            for (std::size_t k = 0; k + 1 < line.size(); ++k)
                EXPECT_FALSE(line[k] == line[k + 1]);
        }
}

TEST(Trace, CoverageOnThinnedBlobs)
{
    std::mt19937_64 rng(23);
    for (int chunk : {6, 10, 16}) {
        // No length filter here: the noise floor is allowed to drop burrs.
        const TraceOptions opts{.chunk_size = chunk, .min_length = 0.0};
        for (int i = 0; i < 15; ++i) {
            const BinaryImage skel = thin(oracle::random_blob(rng));
            const auto lines = trace_skeleton(skel, opts);
            EXPECT_LE(max_uncovered(skel, lines), chunk / 2.0 + 1.0) << "chunk " << chunk << " blob " << i;
        }
    }
}

TEST(Trace, ThickSquareOutlineLength)
{
    Image canvas(128, 128, 1, 255);
    const std::vector<Point> square{{20, 20}, {100, 20}, {100, 100}, {20, 100}, {20, 20}};
    stroke_polyline(canvas, square, 6.0);
    const auto lines = trace_skeleton(thin(binarize(canvas)));
    ASSERT_FALSE(lines.empty());
    double total = 0.0;
    for (const auto& l : lines)
        total += polyline_length(l);
    EXPECT_NEAR(total, 320.0, 40.0);
}
