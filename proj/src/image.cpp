#include "tabforge/image.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <stdexcept>

#include <zlib.h>

#include "tabforge/pixelops.hpp"

namespace tabforge {

Image::Image(int w, int h, Rgb fill) : width(w), height(h) {
    if (w <= 0 || h <= 0) throw std::invalid_argument("image extents must be positive");
    rgb.resize(static_cast<std::size_t>(w) * h * 3);
    pixelops::active().fill_span(rgb.data(), static_cast<std::size_t>(w) * h, fill.r, fill.g, fill.b);
}

void fill_rect(Image& img, const BBox& box, Rgb color) {
    int x0 = std::max(0, box.x0), x1 = std::min(img.width, box.x1);
    int y0 = std::max(0, box.y0), y1 = std::min(img.height, box.y1);
    if (x0 >= x1) return;
    const auto& k = pixelops::active();
    for (int y = y0; y < y1; ++y)
        k.fill_span(img.px(x0, y), static_cast<std::size_t>(x1 - x0), color.r, color.g, color.b);
}

void draw_frame(Image& img, const BBox& box, int width, Rgb color) {
    if (width <= 0) return;
    int w = std::min({width, box.width(), box.height()});
    fill_rect(img, BBox(box.x0, box.y0, box.x1, box.y0 + w), color);
    fill_rect(img, BBox(box.x0, box.y1 - w, box.x1, box.y1), color);
    fill_rect(img, BBox(box.x0, box.y0, box.x0 + w, box.y1), color);
    fill_rect(img, BBox(box.x1 - w, box.y0, box.x1, box.y1), color);
}

Image crop(const Image& img, const BBox& box) {
    if (box.x1 > img.width || box.y1 > img.height)
        throw std::invalid_argument("crop box outside image");
    Image out;
    out.width = box.width();
    out.height = box.height();
    out.rgb.resize(static_cast<std::size_t>(out.width) * out.height * 3);
    for (int y = 0; y < out.height; ++y)
        std::memcpy(out.row(y), img.px(box.x0, box.y0 + y), static_cast<std::size_t>(out.width) * 3);
    return out;
}

Image resize(const Image& img, int new_width, int new_height) {
    if (new_width <= 0 || new_height <= 0) throw std::invalid_argument("bad resize extents");
    Image out;
    out.width = new_width;
    out.height = new_height;
    out.rgb.resize(static_cast<std::size_t>(new_width) * new_height * 3);
    double sx = static_cast<double>(img.width) / new_width;
    double sy = static_cast<double>(img.height) / new_height;
    for (int y = 0; y < new_height; ++y) {
        double fy = (y + 0.5) * sy - 0.5;
        int y0 = static_cast<int>(std::floor(fy));
        double wy = fy - y0;
        int ya = std::clamp(y0, 0, img.height - 1);
        int yb = std::clamp(y0 + 1, 0, img.height - 1);
        for (int x = 0; x < new_width; ++x) {
            double fx = (x + 0.5) * sx - 0.5;
            int x0 = static_cast<int>(std::floor(fx));
            double wx = fx - x0;
            int xa = std::clamp(x0, 0, img.width - 1);
            int xb = std::clamp(x0 + 1, 0, img.width - 1);
            for (int ch = 0; ch < 3; ++ch) {
                double top = img.px(xa, ya)[ch] * (1 - wx) + img.px(xb, ya)[ch] * wx;
                double bot = img.px(xa, yb)[ch] * (1 - wx) + img.px(xb, yb)[ch] * wx;
                out.px(x, y)[ch] = static_cast<std::uint8_t>(std::lround(top * (1 - wy) + bot * wy));
            }
        }
    }
    return out;
}

std::uint64_t count_mismatching_pixels(const Image& img, const BBox& box, Rgb background) {
    int x0 = std::max(0, box.x0), x1 = std::min(img.width, box.x1);
    int y0 = std::max(0, box.y0), y1 = std::min(img.height, box.y1);
    if (x0 >= x1 || y0 >= y1) return 0;
    const auto& k = pixelops::active();
    std::uint64_t n = 0;
    for (int y = y0; y < y1; ++y)
        n += k.count_mismatch(img.px(x0, y), static_cast<std::size_t>(x1 - x0), background.r,
                              background.g, background.b);
    return n;
}

namespace {

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
    out.push_back(static_cast<std::uint8_t>(v >> 24));
    out.push_back(static_cast<std::uint8_t>(v >> 16));
    out.push_back(static_cast<std::uint8_t>(v >> 8));
    out.push_back(static_cast<std::uint8_t>(v));
}

void put_chunk(std::vector<std::uint8_t>& out, const char type[4],
               const std::vector<std::uint8_t>& data) {
    put_u32(out, static_cast<std::uint32_t>(data.size()));
    std::size_t crc_start = out.size();
    out.insert(out.end(), type, type + 4);
    out.insert(out.end(), data.begin(), data.end());
    std::uint32_t crc = static_cast<std::uint32_t>(
        ::crc32(0, out.data() + crc_start, static_cast<uInt>(out.size() - crc_start)));
    put_u32(out, crc);
}

}  // namespace

std::vector<std::uint8_t> encode_png(const Image& img) {
    if (img.width <= 0 || img.height <= 0) throw std::invalid_argument("cannot encode empty image");

    // Scanlines with filter byte 0 (None).
    std::vector<std::uint8_t> raw;
    raw.reserve(static_cast<std::size_t>(img.height) * (1 + static_cast<std::size_t>(img.width) * 3));
    for (int y = 0; y < img.height; ++y) {
        raw.push_back(0);
        const std::uint8_t* row = img.row(y);
        raw.insert(raw.end(), row, row + static_cast<std::size_t>(img.width) * 3);
    }

    uLongf compressed_size = ::compressBound(static_cast<uLong>(raw.size()));
    std::vector<std::uint8_t> compressed(compressed_size);
    if (::compress2(compressed.data(), &compressed_size, raw.data(), static_cast<uLong>(raw.size()),
                    6) != Z_OK)
        throw std::runtime_error("png deflate failed");
    compressed.resize(compressed_size);

    std::vector<std::uint8_t> out{0x89, 'P', 'N', 'G', 0x0D, 0x0A, 0x1A, 0x0A};
    std::vector<std::uint8_t> ihdr;
    put_u32(ihdr, static_cast<std::uint32_t>(img.width));
    put_u32(ihdr, static_cast<std::uint32_t>(img.height));
    ihdr.push_back(8);   // bit depth
    ihdr.push_back(2);   // color type: truecolor
    ihdr.push_back(0);   // compression
    ihdr.push_back(0);   // filter method
    ihdr.push_back(0);   // no interlace
    put_chunk(out, "IHDR", ihdr);
    put_chunk(out, "IDAT", compressed);
    put_chunk(out, "IEND", {});
    return out;
}

}  // namespace tabforge
