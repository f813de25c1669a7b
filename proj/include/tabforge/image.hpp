#pragma once

#include <cstdint>
#include <vector>

#include "tabforge/bbox.hpp"
#include "tabforge/theme.hpp"

namespace tabforge {

// Plain RGB8 raster, row-major, 3 bytes per pixel.
struct Image {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> rgb;

    Image() = default;
    Image(int w, int h, Rgb fill);

    std::uint8_t* row(int y) { return rgb.data() + static_cast<std::size_t>(y) * width * 3; }
    const std::uint8_t* row(int y) const {
        return rgb.data() + static_cast<std::size_t>(y) * width * 3;
    }
    std::uint8_t* px(int x, int y) { return row(y) + 3 * x; }
    const std::uint8_t* px(int x, int y) const { return row(y) + 3 * x; }

    bool operator==(const Image&) const = default;
};

void fill_rect(Image& img, const BBox& box, Rgb color);

// 1px (or wider) rectangle outline drawn just inside the box.
void draw_frame(Image& img, const BBox& box, int width, Rgb color);

Image crop(const Image& img, const BBox& box);

// Deterministic bilinear downscale/upscale.
Image resize(const Image& img, int new_width, int new_height);

// Number of pixels inside `box` that differ from `background`.
std::uint64_t count_mismatching_pixels(const Image& img, const BBox& box, Rgb background);

// Lossless PNG with a fixed encoder configuration (8-bit RGB, filter None,
// deflate level 6), so identical images always produce identical bytes.
std::vector<std::uint8_t> encode_png(const Image& img);

}  // namespace tabforge
