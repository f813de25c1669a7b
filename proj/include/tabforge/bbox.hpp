#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace tabforge {

// Axis-aligned pixel rectangle, origin top-left, half-open on both axes:
// the box covers pixel columns [x0, x1) and pixel rows [y0, y1).
struct BBox {
    int x0 = 0;
    int y0 = 0;
    int x1 = 0;
    int y1 = 0;

    BBox() = default;
    BBox(int x0_, int y0_, int x1_, int y1_) : x0(x0_), y0(y0_), x1(x1_), y1(y1_) {
        if (x0 < 0 || y0 < 0 || x1 <= x0 || y1 <= y0)
            throw std::invalid_argument("BBox requires 0 <= x0 < x1 and 0 <= y0 < y1");
    }

    int width() const { return x1 - x0; }
    int height() const { return y1 - y0; }

    bool contains(const BBox& inner) const {
        return inner.x0 >= x0 && inner.y0 >= y0 && inner.x1 <= x1 && inner.y1 <= y1;
    }

    bool intersects(const BBox& other) const {
        return x0 < other.x1 && other.x0 < x1 && y0 < other.y1 && other.y0 < y1;
    }

    BBox translated(int dx, int dy) const { return BBox(x0 + dx, y0 + dy, x1 + dx, y1 + dy); }

    // Inflation clamps at zero so the result is still a valid box.
    BBox inflated(int amount) const {
        return BBox(std::max(0, x0 - amount), std::max(0, y0 - amount), x1 + amount, y1 + amount);
    }

    bool operator==(const BBox& o) const = default;
};

// Box scaled into the 0-1000 virtual coordinate space used by layout models.
// Each coordinate maps to floor(coord * 1000 / page_extent). The result may be
// degenerate (zero extent) after quantization, so it is returned as raw ints.
struct VirtualBox {
    int x0 = 0;
    int y0 = 0;
    int x1 = 0;
    int y1 = 0;
    bool operator==(const VirtualBox& o) const = default;
};

inline VirtualBox to_virtual_coords(const BBox& box, int page_width, int page_height) {
    if (page_width <= 0 || page_height <= 0)
        throw std::invalid_argument("to_virtual_coords: page extents must be positive");
    if (box.x1 > page_width || box.y1 > page_height)
        throw std::invalid_argument("to_virtual_coords: box outside page");
    auto scale = [](int c, int extent) {
        return static_cast<int>(static_cast<std::int64_t>(c) * 1000 / extent);
    };
    return VirtualBox{scale(box.x0, page_width), scale(box.y0, page_height),
                      scale(box.x1, page_width), scale(box.y1, page_height)};
}

}  // namespace tabforge
