#include "sketchlayout/image_io.hpp"

#include <png.h>

#include <cctype>
#include <cstring>
#include <fstream>
#include <iterator>

#include "sketchlayout/error.hpp"

namespace sketchlayout {

namespace {

int channels_for(png_uint_32 format)
{
    return static_cast<int>(PNG_IMAGE_PIXEL_CHANNELS(format));
}

png_uint_32 format_for(int channels)
{
    switch (channels) {
    case 1: return PNG_FORMAT_GRAY;
    case 2: return PNG_FORMAT_GA;
    case 3: return PNG_FORMAT_RGB;
    case 4: return PNG_FORMAT_RGBA;
    default: throw Error(ErrorKind::InvalidInput, "unsupported channel count " + std::to_string(channels));
    }
}

// Minimal tokenizer for PGM headers: whitespace separated, '#' comments.
class PgmReader {
public:
    explicit PgmReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

    std::string token()
    {
        skip_space();
        std::string out;
        while (pos_ < bytes_.size() && !std::isspace(bytes_[pos_]) && bytes_[pos_] != '#')
            out.push_back(static_cast<char>(bytes_[pos_++]));
        if (out.empty())
            throw Error(ErrorKind::InvalidInput, "truncated PGM header");
        return out;
    }

    int integer()
    {
        const std::string t = token();
        try {
            std::size_t used = 0;
            const int v = std::stoi(t, &used);
            if (used != t.size())
                throw Error(ErrorKind::InvalidInput, "bad PGM number '" + t + "'");
            return v;
        } catch (const std::logic_error&) {
            throw Error(ErrorKind::InvalidInput, "bad PGM number '" + t + "'");
        }
    }

    // Exactly one whitespace byte separates the header from P5 raster data.
    std::span<const std::uint8_t> raster()
    {
        if (pos_ >= bytes_.size())
            throw Error(ErrorKind::InvalidInput, "missing PGM raster");
        ++pos_;
        return bytes_.subspan(pos_);
    }

private:
    void skip_space()
    {
        while (pos_ < bytes_.size()) {
            if (bytes_[pos_] == '#') {
                while (pos_ < bytes_.size() && bytes_[pos_] != '\n')
                    ++pos_;
            } else if (std::isspace(bytes_[pos_])) {
                ++pos_;
            } else {
                break;
            }
        }
    }

    std::span<const std::uint8_t> bytes_;
    std::size_t pos_ = 0;
};

} // namespace

Image::Image(int w, int h, int c, std::uint8_t fill)
    : width(w), height(h), channels(c),
      samples(static_cast<std::size_t>(w > 0 ? w : 0) * (h > 0 ? h : 0) * (c > 0 ? c : 0), fill)
{
}

Image decode_png(std::span<const std::uint8_t> bytes)
{
    png_image png;
    std::memset(&png, 0, sizeof png);
    png.version = PNG_IMAGE_VERSION;
    if (!png_image_begin_read_from_memory(&png, bytes.data(), bytes.size()))
        throw Error(ErrorKind::InvalidInput, std::string("PNG decode failed: ") + png.message);

    // Keep gray and color apart but always expand to 8 bits per sample.
    const bool color = (png.format & PNG_FORMAT_FLAG_COLOR) != 0;
    const bool alpha = (png.format & PNG_FORMAT_FLAG_ALPHA) != 0;
    png.format = color ? (alpha ? PNG_FORMAT_RGBA : PNG_FORMAT_RGB) : (alpha ? PNG_FORMAT_GA : PNG_FORMAT_GRAY);

    Image image(static_cast<int>(png.width), static_cast<int>(png.height), channels_for(png.format));
    if (!png_image_finish_read(&png, nullptr, image.samples.data(), 0, nullptr)) {
        const std::string message = png.message;
        png_image_free(&png);
        throw Error(ErrorKind::InvalidInput, "PNG decode failed: " + message);
    }
    return image;
}

std::vector<std::uint8_t> encode_png(const Image& image)
{
    if (image.width <= 0 || image.height <= 0)
        throw Error(ErrorKind::InvalidInput, "cannot encode an empty image");
    png_image png;
    std::memset(&png, 0, sizeof png);
    png.version = PNG_IMAGE_VERSION;
    png.width = static_cast<png_uint_32>(image.width);
    png.height = static_cast<png_uint_32>(image.height);
    png.format = format_for(image.channels);

    png_alloc_size_t size = 0;
    if (!png_image_write_to_memory(&png, nullptr, &size, 0, image.samples.data(), 0, nullptr))
        throw Error(ErrorKind::Io, std::string("PNG encode failed: ") + png.message);
    std::vector<std::uint8_t> out(size);
    if (!png_image_write_to_memory(&png, out.data(), &size, 0, image.samples.data(), 0, nullptr))
        throw Error(ErrorKind::Io, std::string("PNG encode failed: ") + png.message);
    out.resize(size);
    return out;
}

Image decode_pgm(std::span<const std::uint8_t> bytes)
{
    PgmReader reader(bytes);
    const std::string magic = reader.token();
    if (magic != "P2" && magic != "P5")
        throw Error(ErrorKind::InvalidInput, "not a PGM file");
    const int width = reader.integer();
    const int height = reader.integer();
    const int maxval = reader.integer();
    if (width <= 0 || height <= 0)
        throw Error(ErrorKind::InvalidInput, "PGM has zero dimension");
    if (maxval <= 0 || maxval > 65535)
        throw Error(ErrorKind::InvalidInput, "PGM maxval out of range");

    Image image(width, height, 1);
    const std::size_t n = image.samples.size();
    auto scale = [maxval](int v) {
        return static_cast<std::uint8_t>((static_cast<long>(v) * 255 + maxval / 2) / maxval);
    };
    if (magic == "P2") {
        for (std::size_t i = 0; i < n; ++i)
            image.samples[i] = scale(reader.integer());
        return image;
    }
    const auto raster = reader.raster();
    const std::size_t bytes_per = maxval > 255 ? 2 : 1;
    if (raster.size() < n * bytes_per)
        throw Error(ErrorKind::InvalidInput, "truncated PGM raster");
    for (std::size_t i = 0; i < n; ++i) {
        const int v = bytes_per == 2 ? (raster[2 * i] << 8) | raster[2 * i + 1] : raster[i];
        image.samples[i] = scale(v);
    }
    return image;
}

std::vector<std::uint8_t> encode_pgm(const Image& image)
{
    if (image.channels != 1)
        throw Error(ErrorKind::InvalidInput, "PGM output needs a single-channel image");
    const std::string header = "P5\n" + std::to_string(image.width) + " " + std::to_string(image.height) + "\n255\n";
    std::vector<std::uint8_t> out(header.begin(), header.end());
    out.insert(out.end(), image.samples.begin(), image.samples.end());
    return out;
}

Image decode_image(std::span<const std::uint8_t> bytes)
{
    static constexpr std::uint8_t kPngMagic[] = {0x89, 'P', 'N', 'G'};
    if (bytes.size() >= 4 && std::memcmp(bytes.data(), kPngMagic, 4) == 0)
        return decode_png(bytes);
    if (bytes.size() >= 2 && bytes[0] == 'P' && (bytes[1] == '2' || bytes[1] == '5'))
        return decode_pgm(bytes);
    throw Error(ErrorKind::InvalidInput, "unrecognized image format (expected PNG or PGM)");
}

Image read_image(const std::filesystem::path& path)
{
    const auto bytes = read_file(path);
    return decode_image(bytes);
}

void write_png(const std::filesystem::path& path, const Image& image)
{
    write_file(path, encode_png(image));
}

Image to_image(const BinaryImage& image)
{
    Image out(image.width(), image.height(), 1, 255);
    for (int y = 0; y < image.height(); ++y)
        for (int x = 0; x < image.width(); ++x)
            if (image.get(x, y))
                *out.pixel(x, y) = 0;
    return out;
}

std::vector<std::uint8_t> read_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorKind::Io, "cannot open " + path.string());
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error(ErrorKind::Io, "cannot write " + path.string());
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out)
        throw Error(ErrorKind::Io, "write failed for " + path.string());
}

void write_file(const std::filesystem::path& path, const std::string& text)
{
    write_file(path, std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
}

} // namespace sketchlayout
