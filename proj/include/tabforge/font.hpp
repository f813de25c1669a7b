#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace tabforge {

// Embedded vector fonts. Glyphs are stroke skeletons in em-relative
// coordinates (x right, y down, 0 at the top of the em box, baseline at
// 0.74 em). Shipping the outlines in code keeps text measurement and
// rasterization identical on every machine, with no system font dependency.

enum class FontFamily { Sans, Serif, Condensed };

FontFamily font_family_from_name(const std::string& name);
const char* font_family_name(FontFamily family);

struct Glyph {
    float advance = 0.0f;  // em units, excludes family x-scale
    std::vector<std::vector<std::array<float, 2>>> strokes;
};

struct StrokeFont {
    FontFamily family = FontFamily::Sans;
    float x_scale = 1.0f;
    const Glyph* find(char32_t codepoint) const;  // nullptr when missing
    const Glyph& notdef() const;

    std::vector<std::pair<char32_t, Glyph>> glyphs;  // sorted by codepoint
    Glyph notdef_glyph;
};

const StrokeFont& get_font(FontFamily family);

struct TextStyle {
    FontFamily family = FontFamily::Sans;
    int size_px = 13;
    bool bold = false;
};

// Stroke half-width in pixels for a style; used by both the renderer and the
// ink-margin reasoning in layout.
float stroke_halfwidth(const TextStyle& style);

// Decodes UTF-8; invalid sequences become U+FFFD (rendered as the notdef box).
std::u32string decode_utf8(std::string_view text);

// Integer pixel advance of one codepoint. Pens advance by whole pixels so
// measurement and rasterization agree exactly.
int glyph_advance_px(char32_t codepoint, const TextStyle& style);

// Abstract text measurement. Deterministic for fixed inputs, and monotone:
// measuring any extension of a string never yields a smaller width.
class FontMetricsProvider {
public:
    virtual ~FontMetricsProvider() = default;
    virtual int text_width(std::string_view text, const TextStyle& style) const = 0;
    virtual int line_height(const TextStyle& style) const = 0;
    virtual int space_width(const TextStyle& style) const = 0;
};

class StrokeFontMetrics final : public FontMetricsProvider {
public:
    int text_width(std::string_view text, const TextStyle& style) const override;
    int line_height(const TextStyle& style) const override;
    int space_width(const TextStyle& style) const override;

    static const StrokeFontMetrics& instance();
};

}  // namespace tabforge
