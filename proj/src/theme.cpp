#include "tabforge/theme.hpp"

#include <array>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace tabforge {
namespace {

using Json = nlohmann::ordered_json;

ThemeStyle make_filing_theme() {
    ThemeStyle t;
    t.theme_id = 0;
    t.name = "filing";
    t.typeface_pool = {"serif", "sans"};
    t.font_size_min_pt = 9;
    t.font_size_max_pt = 12;
    t.date_format_pool = {"DD.MM.YY", "DD Month YYYY"};
    t.currency_pool = {"£"};
    t.currency_row = true;
    t.bold_header_probability = 0.5;
    t.pad_title = {6, 6};
    t.pad_header = {8, 5};
    t.pad_currency = {8, 3};
    t.pad_row_header = {8, 4};
    t.pad_data = {8, 4};
    t.borders_header = {0, 0, 1, 0};
    t.borders_title = {0, 0, 0, 0};
    return t;
}

ThemeStyle make_grid_sheet_theme() {
    ThemeStyle t;
    t.theme_id = 1;
    t.name = "grid-sheet";
    t.typeface_pool = {"sans", "condensed"};
    t.font_size_min_pt = 8;
    t.font_size_max_pt = 11;
    t.date_format_pool = {"DD/MM/YYYY", "YYYY"};
    t.currency_pool = {"£", "$", "€"};
    t.currency_row = false;
    t.header_fill = {222, 222, 222};
    t.title_fill = {240, 240, 240};
    t.border_color = {120, 120, 120};
    CellBorders grid{1, 1, 1, 1};
    t.borders_title = grid;
    t.borders_header = grid;
    t.borders_currency = grid;
    t.borders_row_header = grid;
    t.borders_data = grid;
    t.table_border = 1;
    t.pad_title = {5, 4};
    t.pad_header = {6, 4};
    t.pad_currency = {6, 3};
    t.pad_row_header = {6, 3};
    t.pad_data = {6, 3};
    return t;
}

ThemeStyle make_blue_sheet_theme() {
    ThemeStyle t;
    t.theme_id = 2;
    t.name = "blue-sheet";
    t.typeface_pool = {"sans"};
    t.font_size_min_pt = 9;
    t.font_size_max_pt = 12;
    t.date_format_pool = {"DD.MM.YY", "DD/MM/YYYY"};
    t.currency_pool = {"£", "€"};
    t.currency_row = true;
    t.header_fill = {47, 84, 150};
    t.header_text_color = {255, 255, 255};
    t.title_fill = {218, 227, 243};
    t.currency_fill = {218, 227, 243};
    t.stripe_fill = {237, 242, 250};
    t.row_striping = true;
    t.border_color = {47, 84, 150};
    t.borders_header = {0, 0, 2, 0};
    t.pad_title = {6, 4};
    t.pad_header = {7, 5};
    t.pad_currency = {7, 3};
    t.pad_row_header = {7, 4};
    t.pad_data = {7, 4};
    return t;
}

ThemeStyle make_minimal_sheet_theme() {
    ThemeStyle t;
    t.theme_id = 3;
    t.name = "minimal-sheet";
    t.typeface_pool = {"condensed", "sans"};
    t.font_size_min_pt = 9;
    t.font_size_max_pt = 12;
    t.date_format_pool = {"Month YYYY", "YYYY"};
    t.currency_pool = {"$", "£"};
    t.currency_row = false;
    t.negative_style = NegativeStyle::Minus;
    t.bold_header_probability = 1.0;
    t.borders_header = {0, 0, 2, 0};
    t.borders_data = {0, 0, 1, 0};
    t.borders_row_header = {0, 0, 1, 0};
    t.border_color = {160, 160, 160};
    t.pad_title = {4, 6};
    t.pad_header = {6, 5};
    t.pad_currency = {6, 3};
    t.pad_row_header = {6, 4};
    t.pad_data = {6, 4};
    return t;
}

ThemeStyle make_green_sheet_theme() {
    ThemeStyle t;
    t.theme_id = 4;
    t.name = "green-sheet";
    t.typeface_pool = {"sans", "condensed"};
    t.font_size_min_pt = 8;
    t.font_size_max_pt = 11;
    t.date_format_pool = {"DD Month YYYY", "DD/MM/YYYY"};
    t.currency_pool = {"£", "$"};
    t.currency_row = true;
    t.header_fill = {84, 130, 53};
    t.header_text_color = {255, 255, 255};
    t.title_fill = {226, 239, 218};
    t.currency_fill = {226, 239, 218};
    t.stripe_fill = {235, 244, 230};
    t.row_striping = true;
    t.border_color = {120, 150, 110};
    CellBorders grid{1, 1, 1, 1};
    t.borders_title = grid;
    t.borders_header = grid;
    t.borders_currency = grid;
    t.borders_row_header = grid;
    t.borders_data = grid;
    t.table_border = 1;
    t.pad_title = {5, 4};
    t.pad_header = {6, 4};
    t.pad_currency = {6, 3};
    t.pad_row_header = {6, 3};
    t.pad_data = {6, 3};
    return t;
}

ThemeStyle make_report_theme() {
    ThemeStyle t;
    t.theme_id = 5;
    t.name = "report";
    t.typeface_pool = {"serif"};
    t.font_size_min_pt = 10;
    t.font_size_max_pt = 12;
    t.date_format_pool = {"DD Month YYYY", "Month YYYY"};
    t.currency_pool = {"£"};
    t.currency_row = true;
    t.title_fill = {31, 56, 100};
    t.title_text_color = {255, 255, 255};
    t.borders_header = {0, 0, 2, 0};
    t.border_color = {31, 56, 100};
    t.bold_header_probability = 1.0;
    t.allow_section_numbering = false;
    t.pad_title = {8, 6};
    t.pad_header = {9, 6};
    t.pad_currency = {9, 3};
    t.pad_row_header = {9, 5};
    t.pad_data = {9, 5};
    return t;
}

Json rgb_to_json(const Rgb& c) { return Json::array({c.r, c.g, c.b}); }

Rgb rgb_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 3) throw std::invalid_argument("color must be [r,g,b]");
    return Rgb{j[0].get<std::uint8_t>(), j[1].get<std::uint8_t>(), j[2].get<std::uint8_t>()};
}

Json pad_to_json(const CellPadding& p) { return Json{{"h", p.h}, {"v", p.v}}; }

CellPadding pad_from_json(const Json& j) { return CellPadding{j.at("h").get<int>(), j.at("v").get<int>()}; }

Json borders_to_json(const CellBorders& b) {
    return Json::array({b.top, b.right, b.bottom, b.left});
}

CellBorders borders_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 4) throw std::invalid_argument("borders must be [t,r,b,l]");
    return CellBorders{j[0].get<int>(), j[1].get<int>(), j[2].get<int>(), j[3].get<int>()};
}

Json theme_to_json(const ThemeStyle& t) {
    Json j;
    j["theme_id"] = t.theme_id;
    j["name"] = t.name;
    j["page_background"] = rgb_to_json(t.page_background);
    j["border_color"] = rgb_to_json(t.border_color);
    j["text_color"] = rgb_to_json(t.text_color);
    j["header_text_color"] = rgb_to_json(t.header_text_color);
    j["title_text_color"] = rgb_to_json(t.title_text_color);
    j["data_fill"] = rgb_to_json(t.data_fill);
    j["header_fill"] = rgb_to_json(t.header_fill);
    j["title_fill"] = rgb_to_json(t.title_fill);
    j["currency_fill"] = rgb_to_json(t.currency_fill);
    j["stripe_fill"] = rgb_to_json(t.stripe_fill);
    j["row_striping"] = t.row_striping;
    j["pad_title"] = pad_to_json(t.pad_title);
    j["pad_header"] = pad_to_json(t.pad_header);
    j["pad_currency"] = pad_to_json(t.pad_currency);
    j["pad_row_header"] = pad_to_json(t.pad_row_header);
    j["pad_data"] = pad_to_json(t.pad_data);
    j["borders_title"] = borders_to_json(t.borders_title);
    j["borders_header"] = borders_to_json(t.borders_header);
    j["borders_currency"] = borders_to_json(t.borders_currency);
    j["borders_row_header"] = borders_to_json(t.borders_row_header);
    j["borders_data"] = borders_to_json(t.borders_data);
    j["table_border"] = t.table_border;
    j["typeface_pool"] = t.typeface_pool;
    j["font_size_min_pt"] = t.font_size_min_pt;
    j["font_size_max_pt"] = t.font_size_max_pt;
    j["date_format_pool"] = t.date_format_pool;
    j["currency_pool"] = t.currency_pool;
    j["currency_row"] = t.currency_row;
    j["negative_style"] = t.negative_style == NegativeStyle::Parentheses ? "parentheses" : "minus";
    j["bold_header_probability"] = t.bold_header_probability;
    j["allow_section_numbering"] = t.allow_section_numbering;
    return j;
}

ThemeStyle theme_from_json(const Json& j) {
    ThemeStyle t;
    t.theme_id = j.at("theme_id").get<int>();
    t.name = j.value("name", std::string{});
    auto color = [&](const char* key, Rgb& out) {
        if (j.contains(key)) out = rgb_from_json(j.at(key));
    };
    color("page_background", t.page_background);
    color("border_color", t.border_color);
    color("text_color", t.text_color);
    color("header_text_color", t.header_text_color);
    color("title_text_color", t.title_text_color);
    color("data_fill", t.data_fill);
    color("header_fill", t.header_fill);
    color("title_fill", t.title_fill);
    color("currency_fill", t.currency_fill);
    color("stripe_fill", t.stripe_fill);
    t.row_striping = j.value("row_striping", false);
    if (j.contains("pad_title")) t.pad_title = pad_from_json(j.at("pad_title"));
    if (j.contains("pad_header")) t.pad_header = pad_from_json(j.at("pad_header"));
    if (j.contains("pad_currency")) t.pad_currency = pad_from_json(j.at("pad_currency"));
    if (j.contains("pad_row_header")) t.pad_row_header = pad_from_json(j.at("pad_row_header"));
    if (j.contains("pad_data")) t.pad_data = pad_from_json(j.at("pad_data"));
    if (j.contains("borders_title")) t.borders_title = borders_from_json(j.at("borders_title"));
    if (j.contains("borders_header")) t.borders_header = borders_from_json(j.at("borders_header"));
    if (j.contains("borders_currency")) t.borders_currency = borders_from_json(j.at("borders_currency"));
    if (j.contains("borders_row_header")) t.borders_row_header = borders_from_json(j.at("borders_row_header"));
    if (j.contains("borders_data")) t.borders_data = borders_from_json(j.at("borders_data"));
    t.table_border = j.value("table_border", 0);
    if (j.contains("typeface_pool")) t.typeface_pool = j.at("typeface_pool").get<std::vector<std::string>>();
    t.font_size_min_pt = j.value("font_size_min_pt", 9);
    t.font_size_max_pt = j.value("font_size_max_pt", 12);
    if (j.contains("date_format_pool"))
        t.date_format_pool = j.at("date_format_pool").get<std::vector<std::string>>();
    if (j.contains("currency_pool")) t.currency_pool = j.at("currency_pool").get<std::vector<std::string>>();
    t.currency_row = j.value("currency_row", false);
    std::string neg = j.value("negative_style", "parentheses");
    if (neg == "parentheses") t.negative_style = NegativeStyle::Parentheses;
    else if (neg == "minus") t.negative_style = NegativeStyle::Minus;
    else throw std::invalid_argument("negative_style must be 'parentheses' or 'minus'");
    t.bold_header_probability = j.value("bold_header_probability", 0.5);
    t.allow_section_numbering = j.value("allow_section_numbering", true);
    if (t.typeface_pool.empty()) throw std::invalid_argument("typeface_pool must not be empty");
    if (t.date_format_pool.empty()) throw std::invalid_argument("date_format_pool must not be empty");
    if (t.currency_pool.empty()) throw std::invalid_argument("currency_pool must not be empty");
    if (t.font_size_min_pt < 6 || t.font_size_max_pt < t.font_size_min_pt)
        throw std::invalid_argument("bad font size range");
    return t;
}

}  // namespace

const CellPadding& ThemeStyle::padding(CellType t) const {
    switch (t) {
        case CellType::SectionTitle: return pad_title;
        case CellType::ColumnHeader: return pad_header;
        case CellType::CurrencyUnit: return pad_currency;
        case CellType::RowHeader: return pad_row_header;
        case CellType::Data: return pad_data;
    }
    throw std::logic_error("unknown cell type");
}

const CellBorders& ThemeStyle::borders(CellType t) const {
    switch (t) {
        case CellType::SectionTitle: return borders_title;
        case CellType::ColumnHeader: return borders_header;
        case CellType::CurrencyUnit: return borders_currency;
        case CellType::RowHeader: return borders_row_header;
        case CellType::Data: return borders_data;
    }
    throw std::logic_error("unknown cell type");
}

Rgb ThemeStyle::fill(CellType t, bool striped) const {
    switch (t) {
        case CellType::SectionTitle: return title_fill;
        case CellType::ColumnHeader: return header_fill;
        case CellType::CurrencyUnit: return currency_fill;
        case CellType::RowHeader:
        case CellType::Data: return striped && row_striping ? stripe_fill : data_fill;
    }
    throw std::logic_error("unknown cell type");
}

Rgb ThemeStyle::text(CellType t) const {
    switch (t) {
        case CellType::SectionTitle: return title_text_color;
        case CellType::ColumnHeader: return header_text_color;
        default: return text_color;
    }
}

TextStyle ThemeStyle::text_style(CellType t) const {
    bool bold = bold_headers &&
                (t == CellType::ColumnHeader || t == CellType::SectionTitle);
    return TextStyle{font_family_from_name(typeface), font_size_px, bold};
}

const ThemeStyle& builtin_theme(int theme_id) {
    static const std::array<ThemeStyle, kThemeCount> themes = {
        make_filing_theme(),        make_grid_sheet_theme(),  make_blue_sheet_theme(),
        make_minimal_sheet_theme(), make_green_sheet_theme(), make_report_theme(),
    };
    if (theme_id < 0 || theme_id >= kThemeCount)
        throw std::out_of_range("theme id must be 0-" + std::to_string(kThemeCount - 1));
    return themes[static_cast<std::size_t>(theme_id)];
}

ThemeStyle resolve_style(const ThemeStyle& base, const TableSpec& spec) {
    ThemeStyle out = base;
    out.typeface = spec.typeface;
    out.font_size_px = static_cast<int>(std::lround(spec.font_size_pt * 96.0 / 72.0));
    out.bold_headers = spec.bold_headers;
    return out;
}

std::string themes_to_json(const std::vector<ThemeStyle>& themes) {
    Json arr = Json::array();
    for (const ThemeStyle& t : themes) arr.push_back(theme_to_json(t));
    return Json{{"themes", arr}}.dump(2);
}

std::vector<ThemeStyle> themes_from_json(const std::string& json_text) {
    Json j = Json::parse(json_text);
    if (!j.contains("themes") || !j.at("themes").is_array())
        throw std::invalid_argument("themes file must contain a 'themes' array");
    std::vector<ThemeStyle> out;
    for (const Json& tj : j.at("themes")) out.push_back(theme_from_json(tj));
    if (out.size() != kThemeCount)
        throw std::invalid_argument("themes file must define exactly " + std::to_string(kThemeCount) +
                                    " themes");
    for (int i = 0; i < kThemeCount; ++i)
        if (out[static_cast<std::size_t>(i)].theme_id != i)
            throw std::invalid_argument("themes must carry ids 0-5 in order");
    return out;
}

std::vector<ThemeStyle> load_themes_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open themes file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return themes_from_json(ss.str());
}

}  // namespace tabforge
