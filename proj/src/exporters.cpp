#include "tabforge/exporters.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace tabforge {
namespace {

using Json = nlohmann::ordered_json;

std::string escape_html(const std::string& text) {
    std::string out;
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string unescape_html(const std::string& text) {
    std::string out;
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] == '&') {
            if (text.compare(i, 5, "&amp;") == 0) { out += '&'; i += 5; continue; }
            if (text.compare(i, 4, "&lt;") == 0) { out += '<'; i += 4; continue; }
            if (text.compare(i, 4, "&gt;") == 0) { out += '>'; i += 4; continue; }
            if (text.compare(i, 6, "&quot;") == 0) { out += '"'; i += 6; continue; }
        }
        out += text[i++];
    }
    return out;
}

std::string css_color(Rgb c) {
    char buf[8];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", c.r, c.g, c.b);
    return buf;
}

const char* css_class(CellType t) {
    switch (t) {
        case CellType::SectionTitle: return "section-title";
        case CellType::CurrencyUnit: return "currency-unit";
        case CellType::RowHeader: return "row-header";
        case CellType::ColumnHeader: return "column-header";
        case CellType::Data: return "data";
    }
    throw std::logic_error("unknown cell type");
}

CellType cell_type_from_css_class(const std::string& cls) {
    if (cls == "section-title") return CellType::SectionTitle;
    if (cls == "currency-unit") return CellType::CurrencyUnit;
    if (cls == "row-header") return CellType::RowHeader;
    if (cls == "column-header") return CellType::ColumnHeader;
    if (cls == "data") return CellType::Data;
    throw std::invalid_argument("unknown cell class: " + cls);
}

Json box_json(const BBox& b) { return Json::array({b.x0, b.y0, b.x1, b.y1}); }

BBox box_from_json(const Json& j) {
    return BBox(j.at(0).get<int>(), j.at(1).get<int>(), j.at(2).get<int>(), j.at(3).get<int>());
}

std::string csv_field(const std::string& text) {
    bool needs_quoting = text.find_first_of(",\"\r\n") != std::string::npos;
    if (!needs_quoting) return text;
    std::string out = "\"";
    for (char c : text) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

// Attribute value of `name` inside an already-extracted tag string.
std::string tag_attr(const std::string& tag, const std::string& name) {
    std::string needle = name + "=\"";
    auto pos = tag.find(needle);
    if (pos == std::string::npos) return {};
    auto end = tag.find('"', pos + needle.size());
    if (end == std::string::npos) return {};
    return tag.substr(pos + needle.size(), end - pos - needle.size());
}

}  // namespace

std::string to_html(const Table& table, const ThemeStyle& style) {
    std::ostringstream out;
    out << "<!DOCTYPE html>\n<html>\n<head>\n<meta charset=\"utf-8\">\n<style>\n";
    out << "body { background: " << css_color(style.page_background) << "; }\n";
    out << "table { border-collapse: collapse; font-family: " << style.typeface << "; font-size: "
        << style.font_size_px << "px; color: " << css_color(style.text_color) << "; }\n";
    out << "td.column-header { background: " << css_color(style.header_fill) << "; color: "
        << css_color(style.header_text_color) << (style.bold_headers ? "; font-weight: bold" : "")
        << "; }\n";
    out << "td.section-title { background: " << css_color(style.title_fill) << "; color: "
        << css_color(style.title_text_color) << (style.bold_headers ? "; font-weight: bold" : "")
        << "; }\n";
    out << "</style>\n</head>\n<body>\n<table id=\"table-0\">\n";
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        const Row& row = table.rows[r];
        out << "<tr id=\"row-" << r << "\">";
        for (std::size_t c = 0; c < row.cells.size(); ++c) {
            const Cell& cell = row.cells[c];
            out << "<td id=\"cell-" << r << "-" << c << "\" class=\"" << css_class(cell.type) << "\"";
            if (cell.colspan > 1) out << " colspan=\"" << cell.colspan << "\"";
            out << ">";
            for (std::size_t w = 0; w < cell.words.size(); ++w) {
                if (w) out << " ";
                out << "<span id=\"word-" << r << "-" << c << "-" << w << "\">"
                    << escape_html(cell.words[w]) << "</span>";
            }
            out << "</td>";
        }
        out << "</tr>\n";
    }
    out << "</table>\n</body>\n</html>\n";
    return out.str();
}

std::string to_csv(const Table& table) {
    std::ostringstream out;
    for (const Row& row : table.rows) {
        bool first = true;
        for (const Cell& cell : row.cells) {
            if (!first) out << ',';
            first = false;
            out << csv_field(cell.text());
            for (int k = 1; k < cell.colspan; ++k) out << ',';
        }
        out << "\r\n";
    }
    return out.str();
}

std::string to_structure_json(const Table& table, const LayoutTree& layout, bool with_virtual) {
    auto vbox_json = [&](const BBox& b) {
        VirtualBox v = to_virtual_coords(b, layout.page_width, layout.page_height);
        return Json::array({v.x0, v.y0, v.x1, v.y1});
    };

    std::map<std::pair<int, int>, const CellLayout*> cell_boxes;
    for (const CellLayout& cl : layout.cells) cell_boxes[{cl.row, cl.cell}] = &cl;
    std::map<std::pair<int, int>, std::vector<const WordLayout*>> cell_words;
    for (const WordLayout& wl : layout.words) cell_words[{wl.row, wl.cell}].push_back(&wl);

    Json root;
    root["page"] = Json{{"width", layout.page_width}, {"height", layout.page_height}};
    root["bbox"] = box_json(layout.table_box);
    if (with_virtual) root["vbox"] = vbox_json(layout.table_box);
    Json rows = Json::array();
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        const Row& row = table.rows[r];
        Json row_json;
        row_json["index"] = row.row_index;
        if (row.section_index >= 0) row_json["section"] = row.section_index;
        row_json["bbox"] = box_json(layout.rows[r].box);
        if (with_virtual) row_json["vbox"] = vbox_json(layout.rows[r].box);
        Json cells = Json::array();
        for (std::size_t c = 0; c < row.cells.size(); ++c) {
            const Cell& cell = row.cells[c];
            const CellLayout* cl = cell_boxes.at({static_cast<int>(r), static_cast<int>(c)});
            Json cell_json;
            cell_json["type"] = cell_type_name(cell.type);
            cell_json["column"] = cell.column_index;
            if (cell.colspan > 1) cell_json["colspan"] = cell.colspan;
            cell_json["bbox"] = box_json(cl->box);
            if (with_virtual) cell_json["vbox"] = vbox_json(cl->box);
            Json words = Json::array();
            auto it = cell_words.find({static_cast<int>(r), static_cast<int>(c)});
            if (it != cell_words.end()) {
                for (const WordLayout* wl : it->second) {
                    Json word_json;
                    word_json["text"] = wl->text;
                    word_json["bbox"] = box_json(wl->box);
                    if (with_virtual) word_json["vbox"] = vbox_json(wl->box);
                    words.push_back(std::move(word_json));
                }
            }
            cell_json["words"] = std::move(words);
            cells.push_back(std::move(cell_json));
        }
        row_json["cells"] = std::move(cells);
        rows.push_back(std::move(row_json));
    }
    root["rows"] = std::move(rows);
    return root.dump();
}

std::vector<std::vector<std::string>> table_grid(const Table& table) {
    std::vector<std::vector<std::string>> grid;
    for (const Row& row : table.rows) {
        std::vector<std::string> line;
        for (const Cell& cell : row.cells) {
            line.push_back(cell.text());
            for (int k = 1; k < cell.colspan; ++k) line.emplace_back();
        }
        grid.push_back(std::move(line));
    }
    return grid;
}

std::vector<std::vector<std::string>> grid_from_html(const std::string& html) {
    std::vector<std::vector<std::string>> grid;
    std::size_t pos = 0;
    while (true) {
        auto tr = html.find("<tr", pos);
        if (tr == std::string::npos) break;
        auto tr_end = html.find("</tr>", tr);
        if (tr_end == std::string::npos) throw std::invalid_argument("unterminated <tr>");
        std::string row_html = html.substr(tr, tr_end - tr);
        std::vector<std::string> line;
        std::size_t cpos = 0;
        while (true) {
            auto td = row_html.find("<td", cpos);
            if (td == std::string::npos) break;
            auto td_gt = row_html.find('>', td);
            auto td_end = row_html.find("</td>", td);
            if (td_gt == std::string::npos || td_end == std::string::npos)
                throw std::invalid_argument("unterminated <td>");
            std::string tag = row_html.substr(td, td_gt - td);
            std::string inner = row_html.substr(td_gt + 1, td_end - td_gt - 1);
            std::string colspan_attr = tag_attr(tag, "colspan");
            int colspan = colspan_attr.empty() ? 1 : std::stoi(colspan_attr);

            std::string text;
            std::size_t spos = 0;
            bool first = true;
            while (true) {
                auto sp = inner.find("<span", spos);
                if (sp == std::string::npos) break;
                auto sp_gt = inner.find('>', sp);
                auto sp_end = inner.find("</span>", sp);
                if (sp_gt == std::string::npos || sp_end == std::string::npos)
                    throw std::invalid_argument("unterminated <span>");
                if (!first) text += ' ';
                first = false;
                text += unescape_html(inner.substr(sp_gt + 1, sp_end - sp_gt - 1));
                spos = sp_end + 7;
            }
            line.push_back(std::move(text));
            for (int k = 1; k < colspan; ++k) line.emplace_back();
            cpos = td_end + 5;
        }
        grid.push_back(std::move(line));
        pos = tr_end + 5;
    }
    return grid;
}

std::vector<std::vector<std::string>> grid_from_csv(const std::string& csv) {
    std::vector<std::vector<std::string>> grid;
    std::vector<std::string> line;
    std::string field;
    bool quoted = false;
    bool line_has_content = false;
    std::size_t i = 0;
    while (i < csv.size()) {
        char c = csv[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < csv.size() && csv[i + 1] == '"') {
                    field += '"';
                    i += 2;
                    continue;
                }
                quoted = false;
                ++i;
                continue;
            }
            field += c;
            ++i;
            continue;
        }
        if (c == '"' && field.empty()) {
            quoted = true;
            line_has_content = true;
            ++i;
            continue;
        }
        if (c == ',') {
            line.push_back(std::move(field));
            field.clear();
            line_has_content = true;
            ++i;
            continue;
        }
        if (c == '\r' || c == '\n') {
            if (line_has_content || !field.empty() || !line.empty()) {
                line.push_back(std::move(field));
                field.clear();
                grid.push_back(std::move(line));
                line.clear();
                line_has_content = false;
            }
            if (c == '\r' && i + 1 < csv.size() && csv[i + 1] == '\n') ++i;
            ++i;
            continue;
        }
        field += c;
        line_has_content = true;
        ++i;
    }
    if (line_has_content || !field.empty() || !line.empty()) {
        line.push_back(std::move(field));
        grid.push_back(std::move(line));
    }
    return grid;
}

std::vector<std::vector<std::string>> grid_from_structure_json(const std::string& json_text) {
    Json root = Json::parse(json_text);
    std::vector<std::vector<std::string>> grid;
    for (const Json& row : root.at("rows")) {
        std::vector<std::string> line;
        for (const Json& cell : row.at("cells")) {
            std::string text;
            bool first = true;
            for (const Json& word : cell.at("words")) {
                if (!first) text += ' ';
                first = false;
                text += word.at("text").get<std::string>();
            }
            line.push_back(std::move(text));
            int colspan = cell.value("colspan", 1);
            for (int k = 1; k < colspan; ++k) line.emplace_back();
        }
        grid.push_back(std::move(line));
    }
    return grid;
}

ParsedStructure structure_from_json(const std::string& json_text) {
    Json root = Json::parse(json_text);
    ParsedStructure out;
    out.layout.page_width = root.at("page").at("width").get<int>();
    out.layout.page_height = root.at("page").at("height").get<int>();
    out.layout.table_box = box_from_json(root.at("bbox"));

    int column_count = 0;
    int r = 0;
    for (const Json& row_json : root.at("rows")) {
        Row row;
        row.row_index = row_json.at("index").get<int>();
        row.section_index = row_json.value("section", -1);
        out.layout.rows.push_back({r, box_from_json(row_json.at("bbox"))});
        int c = 0;
        int span_total = 0;
        for (const Json& cell_json : row_json.at("cells")) {
            Cell cell;
            cell.type = cell_type_from_name(cell_json.at("type").get<std::string>());
            cell.column_index = cell_json.at("column").get<int>();
            cell.colspan = cell_json.value("colspan", 1);
            span_total += cell.colspan;
            out.layout.cells.push_back({r, c, box_from_json(cell_json.at("bbox"))});
            int w = 0;
            for (const Json& word_json : cell_json.at("words")) {
                cell.words.push_back(word_json.at("text").get<std::string>());
                out.layout.words.push_back(
                    {word_json.at("text").get<std::string>(), box_from_json(word_json.at("bbox")), r, c, w});
                ++w;
            }
            row.cells.push_back(std::move(cell));
            ++c;
        }
        column_count = std::max(column_count, span_total);
        out.table.rows.push_back(std::move(row));
        ++r;
    }
    out.table.column_count = column_count;
    return out;
}

std::string record_to_json(const DatasetRecord& record) {
    Json j;
    j["id"] = record.id;
    j["theme"] = record.theme;
    j["split"] = split_name(record.split);
    j["seed"] = record.per_table_seed;
    j["image"] = "images/" + record.id + ".png";
    if (!record.image_a4_png.empty()) {
        j["image_a4"] = "images_a4/" + record.id + ".png";
        j["a4"] = Json{{"offset", Json::array({record.a4.offset_x, record.a4.offset_y})},
                       {"scale", record.a4.scale},
                       {"page", Json::array({794, 1123})}};
    }
    j["html"] = record.html;
    j["csv"] = record.csv;
    j["structure"] = Json::parse(record.structure_json);
    Json pairs = Json::array();
    for (const QAPair& p : record.qa_pairs) {
        pairs.push_back(Json{{"question", p.question},
                             {"answer", p.answer_text},
                             {"row_key", p.row_key},
                             {"column_key", p.column_key},
                             {"start", p.start},
                             {"end", p.end}});
    }
    j["qa_pairs"] = std::move(pairs);
    j["competition_pair"] = record.competition_pair;
    return j.dump();
}

std::string manifest_line(const ManifestEntry& entry) {
    Json j;
    j["id"] = entry.id;
    j["theme"] = entry.theme;
    j["split"] = split_name(entry.split);
    j["image"] = entry.image;
    if (!entry.image_a4.empty()) j["image_a4"] = entry.image_a4;
    j["annotation"] = entry.annotation;
    return j.dump();
}

ManifestEntry manifest_entry_from_line(const std::string& line) {
    Json j = Json::parse(line);
    ManifestEntry e;
    e.id = j.at("id").get<std::string>();
    e.theme = j.at("theme").get<int>();
    e.split = split_from_name(j.at("split").get<std::string>());
    e.image = j.at("image").get<std::string>();
    e.image_a4 = j.value("image_a4", std::string{});
    e.annotation = j.at("annotation").get<std::string>();
    return e;
}

ManifestEntry write_record(const DatasetRecord& record, const std::filesystem::path& output_root) {
    namespace fs = std::filesystem;
    ManifestEntry entry;
    entry.id = record.id;
    entry.theme = record.theme;
    entry.split = record.split;
    entry.image = "images/" + record.id + ".png";
    entry.annotation = "annotations/" + record.id + ".json";
    if (!record.image_a4_png.empty()) entry.image_a4 = "images_a4/" + record.id + ".png";

    std::vector<fs::path> written;
    auto write_file = [&](const fs::path& rel, const void* data, std::size_t size) {
        fs::path full = output_root / rel;
        fs::create_directories(full.parent_path());
        std::ofstream out(full, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open for writing: " + full.string());
        out.write(static_cast<const char*>(data), static_cast<std::streamsize>(size));
        if (!out) throw std::runtime_error("write failed: " + full.string());
        written.push_back(full);
    };

    try {
        write_file(entry.image, record.image_png.data(), record.image_png.size());
        if (!record.image_a4_png.empty())
            write_file(entry.image_a4, record.image_a4_png.data(), record.image_a4_png.size());
        std::string annotation = record_to_json(record);
        write_file(entry.annotation, annotation.data(), annotation.size());
    } catch (...) {
        std::error_code ec;
        for (const fs::path& p : written) fs::remove(p, ec);
        throw;
    }
    return entry;
}

}  // namespace tabforge
