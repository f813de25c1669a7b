#include "tabforge/font.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>

namespace tabforge {
namespace {

// Glyphs are authored on a design grid: y runs 0 (cap top) to 100 (baseline),
// descenders reach ~127, x in the same units. One unit is 0.006 em; the cap
// top sits at 0.14 em so ink stays inside the line box at every size.
constexpr float kUnit = 0.006f;
constexpr float kCapTop = 0.14f;
constexpr float kBearing = 0.10f;

constexpr float kPi = 3.14159265358979323846f;

using Pt = std::array<float, 2>;

struct GlyphBuilder {
    Glyph g;

    explicit GlyphBuilder(float design_width) { g.advance = 2 * kBearing + design_width * kUnit; }

    GlyphBuilder& poly(std::initializer_list<Pt> pts) {
        std::vector<Pt> s;
        for (const Pt& p : pts) s.push_back({kBearing + p[0] * kUnit, kCapTop + p[1] * kUnit});
        g.strokes.push_back(std::move(s));
        return *this;
    }

    // Elliptic arc from deg0 to deg1 (math convention, y flipped for screen
    // space), sampled as a polyline.
    GlyphBuilder& arc(float cx, float cy, float rx, float ry, float deg0, float deg1, int n = 8) {
        std::vector<Pt> s;
        for (int i = 0; i <= n; ++i) {
            float a = (deg0 + (deg1 - deg0) * static_cast<float>(i) / n) * kPi / 180.0f;
            s.push_back({kBearing + (cx + rx * std::cos(a)) * kUnit,
                         kCapTop + (cy - ry * std::sin(a)) * kUnit});
        }
        g.strokes.push_back(std::move(s));
        return *this;
    }
};

void add(std::vector<std::pair<char32_t, Glyph>>& out, char32_t cp, GlyphBuilder&& b) {
    out.emplace_back(cp, std::move(b.g));
}

std::vector<std::pair<char32_t, Glyph>> build_base_glyphs() {
    std::vector<std::pair<char32_t, Glyph>> t;

    add(t, U' ', GlyphBuilder(18));

    // Capitals.
    add(t, U'A', GlyphBuilder(72).poly({{0, 100}, {36, 0}, {72, 100}}).poly({{14, 62}, {58, 62}}));
    add(t, U'B', GlyphBuilder(64)
                     .poly({{0, 0}, {0, 100}})
                     .poly({{0, 0}, {40, 0}})
                     .arc(40, 24, 22, 24, 90, -90, 6)
                     .poly({{0, 48}, {40, 48}})
                     .arc(38, 74, 26, 26, 90, -90, 6)
                     .poly({{0, 100}, {38, 100}}));
    add(t, U'C', GlyphBuilder(76).arc(40, 50, 36, 50, 40, 320, 10));
    add(t, U'D', GlyphBuilder(70)
                     .poly({{0, 0}, {0, 100}})
                     .poly({{0, 0}, {30, 0}})
                     .arc(30, 50, 40, 50, 90, -90, 8)
                     .poly({{0, 100}, {30, 100}}));
    add(t, U'E', GlyphBuilder(62).poly({{62, 0}, {0, 0}, {0, 100}, {62, 100}}).poly({{0, 50}, {50, 50}}));
    add(t, U'F', GlyphBuilder(60).poly({{60, 0}, {0, 0}, {0, 100}}).poly({{0, 50}, {46, 50}}));
    add(t, U'G', GlyphBuilder(78)
                     .arc(40, 50, 36, 50, 40, 320, 10)
                     .poly({{44, 56}, {76, 56}, {76, 88}}));
    add(t, U'H', GlyphBuilder(70).poly({{0, 0}, {0, 100}}).poly({{70, 0}, {70, 100}}).poly({{0, 50}, {70, 50}}));
    add(t, U'I', GlyphBuilder(10).poly({{5, 0}, {5, 100}}));
    add(t, U'J', GlyphBuilder(46).poly({{44, 0}, {44, 78}}).arc(22, 78, 22, 22, 0, -180, 6));
    add(t, U'K', GlyphBuilder(66).poly({{0, 0}, {0, 100}}).poly({{62, 0}, {0, 56}}).poly({{22, 40}, {66, 100}}));
    add(t, U'L', GlyphBuilder(58).poly({{0, 0}, {0, 100}, {58, 100}}));
    add(t, U'M', GlyphBuilder(80).poly({{0, 100}, {0, 0}, {40, 68}, {80, 0}, {80, 100}}));
    add(t, U'N', GlyphBuilder(70).poly({{0, 100}, {0, 0}, {70, 100}, {70, 0}}));
    add(t, U'O', GlyphBuilder(78).arc(39, 50, 37, 50, 0, 360, 12));
    add(t, U'P', GlyphBuilder(64)
                     .poly({{0, 100}, {0, 0}, {40, 0}})
                     .arc(40, 26, 22, 26, 90, -90, 6)
                     .poly({{40, 52}, {0, 52}}));
    add(t, U'Q', GlyphBuilder(78).arc(39, 50, 37, 50, 0, 360, 12).poly({{52, 72}, {78, 104}}));
    add(t, U'R', GlyphBuilder(68)
                     .poly({{0, 100}, {0, 0}, {40, 0}})
                     .arc(40, 26, 22, 26, 90, -90, 6)
                     .poly({{40, 52}, {0, 52}})
                     .poly({{34, 52}, {68, 100}}));
    add(t, U'S', GlyphBuilder(66).poly({{62, 12}, {48, 2}, {22, 2}, {6, 14}, {6, 32}, {20, 44}, {46, 54},
                                        {60, 64}, {60, 84}, {46, 98}, {18, 98}, {2, 86}}));
    add(t, U'T', GlyphBuilder(68).poly({{0, 0}, {68, 0}}).poly({{34, 0}, {34, 100}}));
    add(t, U'U', GlyphBuilder(70)
                     .poly({{0, 0}, {0, 68}})
                     .arc(35, 68, 35, 32, 180, 360, 8)
                     .poly({{70, 68}, {70, 0}}));
    add(t, U'V', GlyphBuilder(72).poly({{0, 0}, {36, 100}, {72, 0}}));
    add(t, U'W', GlyphBuilder(92).poly({{0, 0}, {22, 100}, {46, 28}, {70, 100}, {92, 0}}));
    add(t, U'X', GlyphBuilder(68).poly({{0, 0}, {68, 100}}).poly({{68, 0}, {0, 100}}));
    add(t, U'Y', GlyphBuilder(70).poly({{0, 0}, {35, 48}, {70, 0}}).poly({{35, 48}, {35, 100}}));
    add(t, U'Z', GlyphBuilder(66).poly({{2, 0}, {64, 0}, {2, 100}, {66, 100}}));

    // Digits are tabular: equal advance so numeric columns align.
    add(t, U'0', GlyphBuilder(58).arc(29, 50, 27, 50, 0, 360, 12));
    add(t, U'1', GlyphBuilder(58).poly({{14, 16}, {32, 0}, {32, 100}}).poly({{12, 100}, {50, 100}}));
    add(t, U'2', GlyphBuilder(58).arc(29, 24, 25, 24, 175, 15, 7).poly({{53, 32}, {2, 100}, {56, 100}}));
    add(t, U'3', GlyphBuilder(58)
                     .arc(27, 25, 25, 25, 160, -80, 7)
                     .arc(28, 73, 27, 27, 80, -160, 7));
    add(t, U'4', GlyphBuilder(58).poly({{42, 100}, {42, 0}, {0, 66}, {56, 66}}));
    add(t, U'5', GlyphBuilder(58)
                     .poly({{52, 0}, {8, 0}, {6, 42}, {28, 38}})
                     .arc(26, 68, 28, 30, 80, -140, 7));
    add(t, U'6', GlyphBuilder(58)
                     .arc(29, 68, 26, 31, 0, 360, 10)
                     .poly({{50, 4}, {18, 38}, {6, 64}}));
    add(t, U'7', GlyphBuilder(58).poly({{2, 0}, {56, 0}, {22, 100}}));
    add(t, U'8', GlyphBuilder(58).arc(29, 24, 23, 24, 0, 360, 10).arc(29, 75, 26, 25, 0, 360, 10));
    add(t, U'9', GlyphBuilder(58)
                     .arc(29, 32, 26, 31, 0, 360, 10)
                     .poly({{52, 36}, {40, 62}, {8, 96}}));

    // Lower case.
    add(t, U'a', GlyphBuilder(52).arc(25, 70, 23, 30, 0, 360, 10).poly({{48, 40}, {48, 100}}));
    add(t, U'b', GlyphBuilder(54).poly({{0, 0}, {0, 100}}).arc(28, 70, 24, 30, 0, 360, 10));
    add(t, U'c', GlyphBuilder(50).arc(27, 70, 24, 30, 40, 320, 8));
    add(t, U'd', GlyphBuilder(54).poly({{52, 0}, {52, 100}}).arc(26, 70, 24, 30, 0, 360, 10));
    add(t, U'e', GlyphBuilder(52).poly({{2, 66}, {48, 66}}).arc(25, 70, 23, 30, 10, 325, 9));
    add(t, U'f', GlyphBuilder(38).poly({{36, 6}, {28, 0}, {18, 8}, {18, 100}}).poly({{4, 40}, {34, 40}}));
    add(t, U'g', GlyphBuilder(52)
                     .arc(25, 68, 23, 28, 0, 360, 10)
                     .poly({{48, 40}, {48, 108}})
                     .poly({{48, 108}, {42, 122}, {20, 127}, {6, 120}}));
    add(t, U'h', GlyphBuilder(50).poly({{0, 0}, {0, 100}}).arc(24, 66, 23, 26, 180, 0, 6).poly({{47, 66}, {47, 100}}));
    add(t, U'i', GlyphBuilder(10).poly({{5, 40}, {5, 100}}).poly({{5, 14}, {5, 19}}));
    add(t, U'j', GlyphBuilder(20)
                     .poly({{14, 40}, {14, 110}})
                     .poly({{14, 110}, {8, 124}, {0, 127}})
                     .poly({{14, 14}, {14, 19}}));
    add(t, U'k', GlyphBuilder(46).poly({{0, 0}, {0, 100}}).poly({{40, 40}, {2, 72}}).poly({{15, 61}, {44, 100}}));
    add(t, U'l', GlyphBuilder(10).poly({{5, 0}, {5, 100}}));
    add(t, U'm', GlyphBuilder(76)
                     .poly({{0, 40}, {0, 100}})
                     .arc(18, 64, 18, 24, 180, 0, 5)
                     .poly({{36, 64}, {36, 100}})
                     .arc(54, 64, 18, 24, 180, 0, 5)
                     .poly({{72, 64}, {72, 100}}));
    add(t, U'n', GlyphBuilder(50).poly({{0, 40}, {0, 100}}).arc(24, 66, 24, 26, 180, 0, 6).poly({{48, 66}, {48, 100}}));
    add(t, U'o', GlyphBuilder(52).arc(26, 70, 24, 30, 0, 360, 10));
    add(t, U'p', GlyphBuilder(54).poly({{0, 40}, {0, 127}}).arc(28, 70, 24, 30, 0, 360, 10));
    add(t, U'q', GlyphBuilder(54).poly({{52, 40}, {52, 127}}).arc(26, 70, 24, 30, 0, 360, 10));
    add(t, U'r', GlyphBuilder(34).poly({{0, 40}, {0, 100}}).arc(17, 62, 16, 22, 180, 30, 4));
    add(t, U's', GlyphBuilder(46).poly({{42, 46}, {32, 40}, {12, 40}, {4, 48}, {10, 60}, {32, 70},
                                        {42, 80}, {38, 96}, {12, 100}, {2, 92}}));
    add(t, U't', GlyphBuilder(36).poly({{16, 8}, {16, 88}}).poly({{16, 88}, {20, 98}, {32, 100}}).poly({{2, 40}, {32, 40}}));
    add(t, U'u', GlyphBuilder(50).poly({{0, 40}, {0, 74}}).arc(24, 74, 24, 26, 180, 360, 6).poly({{48, 40}, {48, 100}}));
    add(t, U'v', GlyphBuilder(48).poly({{0, 40}, {24, 100}, {48, 40}}));
    add(t, U'w', GlyphBuilder(66).poly({{0, 40}, {15, 100}, {33, 52}, {51, 100}, {66, 40}}));
    add(t, U'x', GlyphBuilder(46).poly({{0, 40}, {46, 100}}).poly({{46, 40}, {0, 100}}));
    add(t, U'y', GlyphBuilder(48).poly({{0, 40}, {22, 96}}).poly({{48, 40}, {10, 127}}));
    add(t, U'z', GlyphBuilder(46).poly({{2, 40}, {44, 40}, {2, 100}, {46, 100}}));

    // Punctuation and currency.
    add(t, U'.', GlyphBuilder(10).poly({{5, 95}, {5, 100}}));
    add(t, U',', GlyphBuilder(12).poly({{7, 94}, {7, 102}, {1, 112}}));
    add(t, U'(', GlyphBuilder(24).poly({{22, -4}, {8, 18}, {2, 50}, {8, 82}, {22, 104}}));
    add(t, U')', GlyphBuilder(24).poly({{2, -4}, {16, 18}, {22, 50}, {16, 82}, {2, 104}}));
    add(t, U'-', GlyphBuilder(36).poly({{0, 58}, {36, 58}}));
    add(t, U':', GlyphBuilder(10).poly({{5, 50}, {5, 55}}).poly({{5, 95}, {5, 100}}));
    add(t, U';', GlyphBuilder(12).poly({{7, 50}, {7, 55}}).poly({{7, 94}, {7, 102}, {1, 112}}));
    add(t, U'/', GlyphBuilder(40).poly({{0, 104}, {40, -4}}));
    add(t, U'%', GlyphBuilder(62)
                     .arc(12, 14, 11, 14, 0, 360, 8)
                     .arc(50, 86, 11, 14, 0, 360, 8)
                     .poly({{6, 104}, {58, -4}}));
    add(t, U'&', GlyphBuilder(70)
                     .arc(24, 22, 18, 22, -60, 255, 8)
                     .poly({{12, 42}, {2, 58}, {2, 84}, {16, 100}, {40, 100}, {56, 80}})
                     .poly({{20, 46}, {62, 100}}));
    add(t, U'\'', GlyphBuilder(8).poly({{4, 0}, {4, 16}}));
    add(t, U'"', GlyphBuilder(20).poly({{4, 0}, {4, 16}}).poly({{16, 0}, {16, 16}}));
    add(t, U'?', GlyphBuilder(48)
                     .arc(24, 22, 20, 22, 180, -50, 6)
                     .poly({{30, 40}, {26, 62}})
                     .poly({{26, 92}, {26, 97}}));
    add(t, U'!', GlyphBuilder(10).poly({{5, 0}, {5, 66}}).poly({{5, 94}, {5, 99}}));
    add(t, U'£', GlyphBuilder(56)
                     .arc(34, 28, 17, 25, 15, 175, 5)
                     .poly({{17, 30}, {17, 90}})
                     .poly({{2, 100}, {54, 100}})
                     .poly({{2, 60}, {36, 60}}));
    add(t, U'$', GlyphBuilder(60)
                     .poly({{54, 14}, {42, 4}, {18, 4}, {6, 16}, {6, 32}, {18, 44}, {42, 54},
                            {54, 66}, {54, 82}, {42, 96}, {16, 96}, {4, 84}})
                     .poly({{30, -6}, {30, 106}}));
    add(t, U'€', GlyphBuilder(64)
                     .arc(36, 50, 28, 50, 45, 315, 8)
                     .poly({{0, 40}, {38, 40}})
                     .poly({{0, 62}, {34, 62}}));

    std::sort(t.begin(), t.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return t;
}

Glyph build_notdef() {
    GlyphBuilder b(52);
    b.poly({{2, 2}, {46, 2}, {46, 98}, {2, 98}, {2, 2}});
    return std::move(b.g);
}

// Serif variant: same skeletons with small foot/head ticks added wherever a
// stroke terminates vertically.
Glyph with_serifs(const Glyph& base) {
    Glyph out = base;
    const float tick = 5.0f * kUnit;
    const float min_x = 0.02f;
    const float max_x = base.advance - 0.02f;
    auto add_tick = [&](const Pt& end, const Pt& prev) {
        float dx = end[0] - prev[0];
        float dy = end[1] - prev[1];
        if (std::abs(dy) < 2.0f * std::abs(dx)) return;  // not vertical enough
        float x0 = std::max(min_x, end[0] - tick);
        float x1 = std::min(max_x, end[0] + tick);
        if (x1 > x0) out.strokes.push_back({{x0, end[1]}, {x1, end[1]}});
    };
    for (const auto& stroke : base.strokes) {
        if (stroke.size() < 2) continue;
        add_tick(stroke.front(), stroke[1]);
        add_tick(stroke.back(), stroke[stroke.size() - 2]);
    }
    return out;
}

StrokeFont build_font(FontFamily family) {
    StrokeFont f;
    f.family = family;
    f.glyphs = build_base_glyphs();
    f.notdef_glyph = build_notdef();
    switch (family) {
        case FontFamily::Sans:
            break;
        case FontFamily::Serif:
            for (auto& [cp, g] : f.glyphs) g = with_serifs(g);
            break;
        case FontFamily::Condensed:
            f.x_scale = 0.82f;
            break;
    }
    return f;
}

}  // namespace

FontFamily font_family_from_name(const std::string& name) {
    if (name == "sans") return FontFamily::Sans;
    if (name == "serif") return FontFamily::Serif;
    if (name == "condensed") return FontFamily::Condensed;
    throw std::invalid_argument("unknown typeface: " + name);
}

const char* font_family_name(FontFamily family) {
    switch (family) {
        case FontFamily::Sans: return "sans";
        case FontFamily::Serif: return "serif";
        case FontFamily::Condensed: return "condensed";
    }
    throw std::logic_error("unknown font family");
}

const Glyph* StrokeFont::find(char32_t codepoint) const {
    auto it = std::lower_bound(glyphs.begin(), glyphs.end(), codepoint,
                               [](const auto& entry, char32_t cp) { return entry.first < cp; });
    if (it != glyphs.end() && it->first == codepoint) return &it->second;
    return nullptr;
}

const Glyph& StrokeFont::notdef() const { return notdef_glyph; }

const StrokeFont& get_font(FontFamily family) {
    static const StrokeFont sans = build_font(FontFamily::Sans);
    static const StrokeFont serif = build_font(FontFamily::Serif);
    static const StrokeFont condensed = build_font(FontFamily::Condensed);
    switch (family) {
        case FontFamily::Sans: return sans;
        case FontFamily::Serif: return serif;
        case FontFamily::Condensed: return condensed;
    }
    throw std::logic_error("unknown font family");
}

float stroke_halfwidth(const TextStyle& style) {
    return (style.bold ? 0.065f : 0.040f) * static_cast<float>(style.size_px);
}

std::u32string decode_utf8(std::string_view text) {
    std::u32string out;
    std::size_t i = 0;
    while (i < text.size()) {
        unsigned char c = static_cast<unsigned char>(text[i]);
        char32_t cp = 0xFFFD;
        std::size_t len = 1;
        if (c < 0x80) {
            cp = c;
        } else if ((c >> 5) == 0x6 && i + 1 < text.size()) {
            cp = static_cast<char32_t>((c & 0x1F) << 6 | (text[i + 1] & 0x3F));
            len = 2;
        } else if ((c >> 4) == 0xE && i + 2 < text.size()) {
            cp = static_cast<char32_t>((c & 0x0F) << 12 | (text[i + 1] & 0x3F) << 6 | (text[i + 2] & 0x3F));
            len = 3;
        } else if ((c >> 3) == 0x1E && i + 3 < text.size()) {
            cp = static_cast<char32_t>((c & 0x07) << 18 | (text[i + 1] & 0x3F) << 12 |
                                       (text[i + 2] & 0x3F) << 6 | (text[i + 3] & 0x3F));
            len = 4;
        }
        out.push_back(cp);
        i += len;
    }
    return out;
}

int glyph_advance_px(char32_t codepoint, const TextStyle& style) {
    const StrokeFont& font = get_font(style.family);
    const Glyph* g = font.find(codepoint);
    float adv = (g ? g->advance : font.notdef().advance) * font.x_scale;
    return std::max(2, static_cast<int>(std::lround(adv * static_cast<float>(style.size_px))));
}

int StrokeFontMetrics::text_width(std::string_view text, const TextStyle& style) const {
    int width = 0;
    for (char32_t cp : decode_utf8(text)) width += glyph_advance_px(cp, style);
    return width;
}

int StrokeFontMetrics::line_height(const TextStyle& style) const {
    return static_cast<int>(std::lround(1.20 * style.size_px));
}

int StrokeFontMetrics::space_width(const TextStyle& style) const {
    return glyph_advance_px(U' ', style);
}

const StrokeFontMetrics& StrokeFontMetrics::instance() {
    static const StrokeFontMetrics metrics;
    return metrics;
}

}  // namespace tabforge
