#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "sketchlayout/raster.hpp"

namespace sketchlayout {

/// PNG (8-bit gray, gray+alpha, RGB, RGBA; palette and 16-bit inputs are
/// converted) decoded into its native channel count.
Image decode_png(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> encode_png(const Image& image);

/// Binary (P5) or ASCII (P2) graymap.
Image decode_pgm(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> encode_pgm(const Image& image);

/// Sniffs the magic bytes and dispatches to the PNG or PGM decoder.
Image decode_image(std::span<const std::uint8_t> bytes);

Image read_image(const std::filesystem::path& path);
void write_png(const std::filesystem::path& path, const Image& image);

/// Foreground black on a white background, single channel.
Image to_image(const BinaryImage& image);

std::vector<std::uint8_t> read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);
void write_file(const std::filesystem::path& path, const std::string& text);

} // namespace sketchlayout
