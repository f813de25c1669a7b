#pragma once

#include <cstdint>
#include <vector>

#include "tabforge/image.hpp"
#include "tabforge/layout.hpp"
#include "tabforge/table.hpp"
#include "tabforge/theme.hpp"

namespace tabforge {

// Per-word glyph ink accounting, gathered while blending. All ink lands
// within the word box inflated by 2 px by construction of the stroke fonts;
// the stats let tests assert that instead of assuming it.
struct WordInk {
    std::uint64_t total = 0;       // ink pixels drawn for the word
    std::uint64_t in_box = 0;      // inside the exact word box
    std::uint64_t in_inflated = 0; // inside the word box inflated by 2 px
};

struct RenderStats {
    std::vector<WordInk> words;    // parallel to layout.words
    std::uint64_t notdef_count = 0;
};

// Rasterizes a laid-out table: cell fills, borders, then glyphs. Byte
// deterministic for fixed inputs. Missing glyphs render as a notdef box and
// are counted in stats.
Image render(const LayoutTree& layout, const Table& table, const ThemeStyle& style,
             RenderStats* stats = nullptr);

struct PasteResult {
    Image image;
    A4Placement placement;
};

// Pastes a table image onto a white A4 canvas at the top-left content origin,
// scaling down uniformly (aspect preserved) when it does not fit.
PasteResult paste_on_a4(const Image& table_image);

// Remaps a box through the paste transform (floor on the near edges, ceil on
// the far edges, so containment is preserved and boxes stay non-degenerate).
BBox paste_box(const BBox& box, const A4Placement& placement);

// Side-by-side debug image: original on the left, annotation boxes on the
// right (table red, rows blue, cells green, words yellow).
Image render_annotation_overlay(const Image& base, const LayoutTree& layout);

}  // namespace tabforge
