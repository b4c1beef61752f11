#include <gtest/gtest.h>

#include <filesystem>
#include <random>
#include <string>

#include "sketchlayout/error.hpp"
#include "sketchlayout/image_io.hpp"
#include "sketchlayout/raster.hpp"

using namespace sketchlayout;

namespace {

Image noise(int w, int h, int channels, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> byte(0, 255);
    Image img(w, h, channels);
    for (auto& s : img.samples)
        s = static_cast<std::uint8_t>(byte(rng));
    return img;
}

std::vector<std::uint8_t> bytes_of(const std::string& s) { return {s.begin(), s.end()}; }

} // namespace

TEST(Png, RoundTripsEveryChannelLayout)
{
    for (int c = 1; c <= 4; ++c) {
        const Image img = noise(13, 7, c, static_cast<std::uint64_t>(c));
        const Image back = decode_png(encode_png(img));
        EXPECT_EQ(back.width, 13);
        EXPECT_EQ(back.height, 7);
        EXPECT_EQ(back.channels, c);
        EXPECT_EQ(back.samples, img.samples);
    }
}

TEST(Png, GarbageIsInvalidInput)
{
    const std::vector<std::uint8_t> junk{0x89, 'P', 'N', 'G', 1, 2, 3};
    try {
        decode_png(junk);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::InvalidInput);
    }
}

TEST(Pgm, BinaryRoundTrip)
{
    const Image img = noise(9, 4, 1, 42);
    const Image back = decode_pgm(encode_pgm(img));
    EXPECT_EQ(back.samples, img.samples);
    EXPECT_EQ(back.width, 9);
}

TEST(Pgm, AsciiWithComments)
{
    const Image img = decode_pgm(bytes_of("P2\n# a comment\n3 2\n# another\n255\n0 128 255\n10 20 30\n"));
    ASSERT_EQ(img.width, 3);
    ASSERT_EQ(img.height, 2);
    EXPECT_EQ(img.samples, (std::vector<std::uint8_t>{0, 128, 255, 10, 20, 30}));
}

TEST(Pgm, RescalesSmallMaxval)
{
    const Image img = decode_pgm(bytes_of("P2 2 1 15 0 15"));
    EXPECT_EQ(img.samples, (std::vector<std::uint8_t>{0, 255}));
}

TEST(Pgm, TruncatedRasterThrows)
{
    EXPECT_THROW(decode_pgm(bytes_of("P5\n4 4\n255\nab")), Error);
}

TEST(DecodeImage, SniffsFormat)
{
    const Image img = noise(5, 5, 1, 9);
    EXPECT_EQ(decode_image(encode_png(img)).samples, img.samples);
    EXPECT_EQ(decode_image(encode_pgm(img)).samples, img.samples);
    EXPECT_THROW(decode_image(bytes_of("GIF89a")), Error);
}

TEST(BinaryImage, EncodeDecodeIsIdentity)
{
    BinaryImage bin(17, 11);
    std::mt19937_64 rng(1);
    for (int y = 0; y < 11; ++y)
        for (int x = 0; x < 17; ++x)
            bin.set(x, y, rng() % 3 == 0);
    EXPECT_EQ(binarize(decode_png(encode_png(to_image(bin)))), bin);
    EXPECT_EQ(binarize(decode_pgm(encode_pgm(to_image(bin)))), bin);
}

TEST(Files, ReadWriteAndMissing)
{
    const auto dir = std::filesystem::temp_directory_path() / "sketchlayout_io_test";
    std::filesystem::create_directories(dir);
    const Image img = noise(6, 6, 3, 5);
    write_png(dir / "a.png", img);
    EXPECT_EQ(read_image(dir / "a.png").samples, img.samples);
    try {
        read_file(dir / "missing.png");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Io);
    }
    std::filesystem::remove_all(dir);
}
