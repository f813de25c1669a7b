#include "tabforge/render.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "tabforge/font.hpp"
#include "tabforge/pixelops.hpp"

namespace tabforge {
namespace {

// Coverage accumulator for one word, sized to the word box inflated by 2 px.
// Strokes never reach further than that: skeletons keep side bearings larger
// than the stroke half-width plus the 1 px anti-aliasing falloff.
struct CoveragePatch {
    BBox bounds;
    int w = 0, h = 0;
    std::vector<float> cov;

    explicit CoveragePatch(const BBox& box, int img_w, int img_h) {
        BBox grown = box.inflated(2);
        bounds = BBox(grown.x0, grown.y0, std::min(grown.x1, img_w), std::min(grown.y1, img_h));
        w = bounds.width();
        h = bounds.height();
        cov.assign(static_cast<std::size_t>(w) * h, 0.0f);
    }

    void stroke(float x0, float y0, float x1, float y1, float halfwidth) {
        float reach = halfwidth + 0.5f;
        int px0 = std::max(bounds.x0, static_cast<int>(std::floor(std::min(x0, x1) - reach)));
        int px1 = std::min(bounds.x1, static_cast<int>(std::ceil(std::max(x0, x1) + reach)) + 1);
        int py0 = std::max(bounds.y0, static_cast<int>(std::floor(std::min(y0, y1) - reach)));
        int py1 = std::min(bounds.y1, static_cast<int>(std::ceil(std::max(y0, y1) + reach)) + 1);
        float dx = x1 - x0, dy = y1 - y0;
        float len2 = dx * dx + dy * dy;
        for (int py = py0; py < py1; ++py) {
            for (int px = px0; px < px1; ++px) {
                float cx = static_cast<float>(px) + 0.5f;
                float cy = static_cast<float>(py) + 0.5f;
                float t = len2 > 0 ? ((cx - x0) * dx + (cy - y0) * dy) / len2 : 0.0f;
                t = std::clamp(t, 0.0f, 1.0f);
                float ex = x0 + t * dx - cx;
                float ey = y0 + t * dy - cy;
                float dist = std::sqrt(ex * ex + ey * ey);
                float c = std::clamp(halfwidth + 0.5f - dist, 0.0f, 1.0f);
                if (c > 0) {
                    float& slot = cov[static_cast<std::size_t>(py - bounds.y0) * w + (px - bounds.x0)];
                    slot = std::max(slot, c);
                }
            }
        }
    }
};

void draw_word(Image& img, const WordLayout& word, const TextStyle& ts, Rgb color,
               WordInk* ink, std::uint64_t* notdef_count) {
    const StrokeFont& font = get_font(ts.family);
    const float scale = static_cast<float>(ts.size_px);
    const float hw = stroke_halfwidth(ts);

    CoveragePatch patch(word.box, img.width, img.height);
    if (patch.w <= 0 || patch.h <= 0) return;

    int pen = word.box.x0;
    for (char32_t cp : decode_utf8(word.text)) {
        const Glyph* glyph = font.find(cp);
        if (!glyph) {
            glyph = &font.notdef();
            if (notdef_count) ++*notdef_count;
        }
        for (const auto& stroke : glyph->strokes) {
            for (std::size_t i = 1; i < stroke.size(); ++i) {
                patch.stroke(pen + stroke[i - 1][0] * font.x_scale * scale,
                             word.box.y0 + stroke[i - 1][1] * scale,
                             pen + stroke[i][0] * font.x_scale * scale,
                             word.box.y0 + stroke[i][1] * scale, hw);
            }
        }
        pen += glyph_advance_px(cp, ts);
    }

    // Quantize coverage, gather ink stats, blend row by row.
    const auto& kernels = pixelops::active();
    std::uint8_t fg96[96];
    pixelops::make_pattern96(color.r, color.g, color.b, fg96);
    std::vector<std::uint8_t> cov3(static_cast<std::size_t>(patch.w) * 3);
    BBox inflated = word.box.inflated(2);
    for (int py = patch.bounds.y0; py < patch.bounds.y1; ++py) {
        const float* src = patch.cov.data() + static_cast<std::size_t>(py - patch.bounds.y0) * patch.w;
        bool any = false;
        for (int i = 0; i < patch.w; ++i) {
            auto v = static_cast<std::uint8_t>(std::lround(std::clamp(src[i], 0.0f, 1.0f) * 255.0f));
            cov3[3 * i] = cov3[3 * i + 1] = cov3[3 * i + 2] = v;
            if (v) {
                any = true;
                if (ink) {
                    int px = patch.bounds.x0 + i;
                    ++ink->total;
                    if (px >= word.box.x0 && px < word.box.x1 && py >= word.box.y0 && py < word.box.y1)
                        ++ink->in_box;
                    if (px >= inflated.x0 && px < inflated.x1 && py >= inflated.y0 && py < inflated.y1)
                        ++ink->in_inflated;
                }
            }
        }
        if (!any) continue;
        // The pattern must stay phase-aligned with pixel channels: the blend
        // span always starts at a pixel boundary, so offset 0 is correct.
        kernels.blend_span(img.px(patch.bounds.x0, py), cov3.data(), fg96,
                           static_cast<std::size_t>(patch.w) * 3);
    }
}

void draw_cell_borders(Image& img, const BBox& box, const CellBorders& b, Rgb color) {
    if (b.top > 0) fill_rect(img, BBox(box.x0, box.y0, box.x1, std::min(box.y1, box.y0 + b.top)), color);
    if (b.bottom > 0)
        fill_rect(img, BBox(box.x0, std::max(box.y0, box.y1 - b.bottom), box.x1, box.y1), color);
    if (b.left > 0) fill_rect(img, BBox(box.x0, box.y0, std::min(box.x1, box.x0 + b.left), box.y1), color);
    if (b.right > 0)
        fill_rect(img, BBox(std::max(box.x0, box.x1 - b.right), box.y0, box.x1, box.y1), color);
}

// Data rows alternate stripes by their ordinal among data rows, so a striped
// theme shades every second body row regardless of interleaved titles.
std::vector<bool> stripe_flags(const Table& table) {
    std::vector<bool> flags(table.rows.size(), false);
    int data_ordinal = 0;
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        bool is_body = !table.rows[r].cells.empty() &&
                       table.rows[r].cells.front().type == CellType::RowHeader;
        if (is_body) flags[r] = (data_ordinal++ % 2) == 1;
    }
    return flags;
}

}  // namespace

Image render(const LayoutTree& layout, const Table& table, const ThemeStyle& style,
             RenderStats* stats) {
    Image img(layout.page_width, layout.page_height, style.page_background);
    if (stats) {
        stats->words.assign(layout.words.size(), WordInk{});
        stats->notdef_count = 0;
    }

    std::vector<bool> stripes = stripe_flags(table);

    for (const CellLayout& cl : layout.cells) {
        const Cell& cell = table.rows[static_cast<std::size_t>(cl.row)].cells[static_cast<std::size_t>(cl.cell)];
        Rgb fill = style.fill(cell.type, stripes[static_cast<std::size_t>(cl.row)]);
        if (!(fill == style.page_background)) fill_rect(img, cl.box, fill);
    }
    for (const CellLayout& cl : layout.cells) {
        const Cell& cell = table.rows[static_cast<std::size_t>(cl.row)].cells[static_cast<std::size_t>(cl.cell)];
        draw_cell_borders(img, cl.box, style.borders(cell.type), style.border_color);
    }
    if (style.table_border > 0) draw_frame(img, layout.table_box, style.table_border, style.border_color);

    for (std::size_t i = 0; i < layout.words.size(); ++i) {
        const WordLayout& wl = layout.words[i];
        const Cell& cell = table.rows[static_cast<std::size_t>(wl.row)].cells[static_cast<std::size_t>(wl.cell)];
        draw_word(img, wl, style.text_style(cell.type), style.text(cell.type),
                  stats ? &stats->words[i] : nullptr, stats ? &stats->notdef_count : nullptr);
    }
    return img;
}

PasteResult paste_on_a4(const Image& table_image) {
    const int content_w = kA4WidthPx - 2 * kA4MarginPx;
    const int content_h = kA4HeightPx - 2 * kA4MarginPx;

    PasteResult out;
    out.image = Image(kA4WidthPx, kA4HeightPx, Rgb{255, 255, 255});
    out.placement.offset_x = kA4MarginPx;
    out.placement.offset_y = kA4MarginPx;

    const Image* src = &table_image;
    Image scaled;
    if (table_image.width > content_w || table_image.height > content_h) {
        double scale = std::min(static_cast<double>(content_w) / table_image.width,
                                static_cast<double>(content_h) / table_image.height);
        int nw = std::max(1, static_cast<int>(std::floor(table_image.width * scale)));
        int nh = std::max(1, static_cast<int>(std::floor(table_image.height * scale)));
        scaled = resize(table_image, nw, nh);
        src = &scaled;
        out.placement.scale = scale;
    }
    for (int y = 0; y < src->height; ++y)
        std::copy_n(src->row(y), static_cast<std::size_t>(src->width) * 3,
                    out.image.px(kA4MarginPx, kA4MarginPx + y));
    return out;
}

BBox paste_box(const BBox& box, const A4Placement& placement) {
    auto lo = [&](int v, int off) {
        return off + static_cast<int>(std::floor(v * placement.scale));
    };
    auto hi = [&](int v, int off) {
        return off + static_cast<int>(std::ceil(v * placement.scale));
    };
    return BBox(lo(box.x0, placement.offset_x), lo(box.y0, placement.offset_y),
                hi(box.x1, placement.offset_x), hi(box.y1, placement.offset_y));
}

Image render_annotation_overlay(const Image& base, const LayoutTree& layout) {
    Image out(base.width * 2, base.height, Rgb{255, 255, 255});
    for (int y = 0; y < base.height; ++y) {
        std::copy_n(base.row(y), static_cast<std::size_t>(base.width) * 3, out.row(y));
        std::copy_n(base.row(y), static_cast<std::size_t>(base.width) * 3, out.px(base.width, y));
    }
    auto shifted = [&](const BBox& b) { return b.translated(base.width, 0); };
    draw_frame(out, shifted(layout.table_box), 1, Rgb{255, 0, 0});
    for (const RowLayout& rl : layout.rows) draw_frame(out, shifted(rl.box), 1, Rgb{0, 0, 255});
    for (const CellLayout& cl : layout.cells) draw_frame(out, shifted(cl.box), 1, Rgb{0, 200, 0});
    for (const WordLayout& wl : layout.words) draw_frame(out, shifted(wl.box), 1, Rgb{255, 215, 0});
    return out;
}

}  // namespace tabforge
