#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tabforge/font.hpp"
#include "tabforge/table.hpp"

namespace tabforge {

struct Rgb {
    std::uint8_t r = 0, g = 0, b = 0;
    bool operator==(const Rgb&) const = default;
};

struct CellPadding {
    int h = 6;  // left and right, px
    int v = 4;  // top and bottom, px
};

struct CellBorders {
    int top = 0, right = 0, bottom = 0, left = 0;  // widths in px, drawn inside the cell box
};

enum class NegativeStyle { Parentheses, Minus };

// Visual family for one theme: fills, borders, padding and text colors per
// cell type, plus the sampling pools the spec sampler draws from (typefaces,
// font sizes, date formats, currency symbols).
struct ThemeStyle {
    int theme_id = 0;
    std::string name;

    // Concrete text settings; resolve_style() fills these from a TableSpec.
    std::string typeface = "sans";
    int font_size_px = 13;
    bool bold_headers = false;

    Rgb page_background{255, 255, 255};
    Rgb border_color{0, 0, 0};
    Rgb text_color{0, 0, 0};
    Rgb header_text_color{0, 0, 0};
    Rgb title_text_color{0, 0, 0};

    // Cell backgrounds; data rows may alternate with stripe_fill.
    Rgb data_fill{255, 255, 255};
    Rgb header_fill{255, 255, 255};
    Rgb title_fill{255, 255, 255};
    Rgb currency_fill{255, 255, 255};
    Rgb stripe_fill{255, 255, 255};
    bool row_striping = false;

    CellPadding pad_title, pad_header, pad_currency, pad_row_header, pad_data;
    CellBorders borders_title, borders_header, borders_currency, borders_row_header, borders_data;
    int table_border = 0;  // outer frame width, px

    // Sampler pools.
    std::vector<std::string> typeface_pool{"sans"};
    int font_size_min_pt = 9;
    int font_size_max_pt = 12;
    std::vector<std::string> date_format_pool{"DD.MM.YY"};
    std::vector<std::string> currency_pool{"£"};
    bool currency_row = false;
    NegativeStyle negative_style = NegativeStyle::Parentheses;
    double bold_header_probability = 0.5;
    bool allow_section_numbering = true;

    const CellPadding& padding(CellType t) const;
    const CellBorders& borders(CellType t) const;
    Rgb fill(CellType t, bool striped) const;
    Rgb text(CellType t) const;
    TextStyle text_style(CellType t) const;
};

constexpr int kThemeCount = 6;

// Built-in styles 0-5: a filing-style theme, four spreadsheet styles, and a
// typeset report style.
const ThemeStyle& builtin_theme(int theme_id);

// Copy of the theme with the spec's sampled typeface/size/boldness applied.
ThemeStyle resolve_style(const ThemeStyle& base, const TableSpec& spec);

// Themes are serializable so users can define their own six.
std::string themes_to_json(const std::vector<ThemeStyle>& themes);
std::vector<ThemeStyle> themes_from_json(const std::string& json_text);
std::vector<ThemeStyle> load_themes_file(const std::string& path);

}  // namespace tabforge
