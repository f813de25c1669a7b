#include "tabforge/table.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace tabforge {

const char* cell_type_name(CellType t) {
    switch (t) {
        case CellType::SectionTitle: return "section_title";
        case CellType::CurrencyUnit: return "currency_unit";
        case CellType::RowHeader: return "row_header";
        case CellType::ColumnHeader: return "column_header";
        case CellType::Data: return "data";
    }
    throw std::logic_error("unknown cell type");
}

CellType cell_type_from_name(const std::string& name) {
    if (name == "section_title") return CellType::SectionTitle;
    if (name == "currency_unit") return CellType::CurrencyUnit;
    if (name == "row_header") return CellType::RowHeader;
    if (name == "column_header") return CellType::ColumnHeader;
    if (name == "data") return CellType::Data;
    throw std::invalid_argument("unknown cell type: " + name);
}

const char* split_name(Split s) {
    switch (s) {
        case Split::Train: return "train";
        case Split::Validation: return "validation";
        case Split::Test: return "test";
    }
    throw std::logic_error("unknown split");
}

Split split_from_name(const std::string& name) {
    if (name == "train") return Split::Train;
    if (name == "validation") return Split::Validation;
    if (name == "test") return Split::Test;
    throw std::invalid_argument("unknown split: " + name);
}

std::string Cell::text() const {
    std::string out;
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (i) out += ' ';
        out += words[i];
    }
    return out;
}

const Row* Table::header_row() const {
    for (const Row& row : rows) {
        bool all_headers = !row.cells.empty();
        for (const Cell& c : row.cells)
            if (c.type != CellType::ColumnHeader) all_headers = false;
        if (all_headers) return &row;
    }
    return nullptr;
}

std::vector<std::string> validate_table(const Table& table) {
    std::vector<std::string> problems;
    auto fail = [&](const std::string& msg) { problems.push_back(msg); };

    if (table.column_count < 1) fail("column_count must be >= 1");
    if (table.theme < 0) fail("theme must be >= 0");

    int header_rows = 0;
    int first_data_row = -1;
    int header_row_index = -1;
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        const Row& row = table.rows[r];
        if (row.row_index != static_cast<int>(r))
            fail("row " + std::to_string(r) + " has row_index " + std::to_string(row.row_index));
        int span_total = 0;
        int expected_col = 0;
        bool all_headers = !row.cells.empty();
        bool has_data = false;
        for (const Cell& cell : row.cells) {
            if (cell.colspan < 1) fail("cell colspan must be >= 1");
            if (cell.column_index != expected_col)
                fail("row " + std::to_string(r) + ": cell column_index mismatch");
            expected_col += cell.colspan;
            span_total += cell.colspan;
            if (cell.type != CellType::ColumnHeader) all_headers = false;
            if (cell.type == CellType::Data) has_data = true;
        }
        if (span_total != table.column_count)
            fail("row " + std::to_string(r) + ": colspans sum to " + std::to_string(span_total) +
                 ", expected " + std::to_string(table.column_count));
        if (all_headers) {
            ++header_rows;
            header_row_index = static_cast<int>(r);
        }
        if (has_data) {
            if (first_data_row < 0) first_data_row = static_cast<int>(r);
            if (row.cells.empty() || row.cells.front().type != CellType::RowHeader)
                fail("row " + std::to_string(r) + ": data row must start with a RowHeader cell");
            if (row.cells.front().empty())
                fail("row " + std::to_string(r) + ": row header cell is empty");
        }
    }
    if (header_rows != 1)
        fail("table must have exactly one all-ColumnHeader row, found " + std::to_string(header_rows));
    if (header_rows == 1 && first_data_row >= 0 && header_row_index > first_data_row)
        fail("header row must precede all data rows");
    return problems;
}

std::vector<std::string> validate_layout(const Table& table, const LayoutTree& layout) {
    std::vector<std::string> problems;
    auto fail = [&](const std::string& msg) { problems.push_back(msg); };

    BBox page(0, 0, layout.page_width > 0 ? layout.page_width : 1,
              layout.page_height > 0 ? layout.page_height : 1);
    if (layout.page_width <= 0 || layout.page_height <= 0) fail("page extents must be positive");
    if (!page.contains(layout.table_box)) fail("table box outside page");

    std::map<int, BBox> row_boxes;
    for (const RowLayout& rl : layout.rows) {
        if (!layout.table_box.contains(rl.box)) fail("row box outside table box");
        row_boxes.emplace(rl.row, rl.box);
    }
    if (row_boxes.size() != table.rows.size()) fail("row box count does not match table rows");

    // Rows must be pairwise disjoint; they are stacked, so sorting by top edge
    // and checking neighbours is sufficient and catches any overlap.
    std::vector<BBox> sorted_rows;
    for (const auto& [idx, box] : row_boxes) sorted_rows.push_back(box);
    std::sort(sorted_rows.begin(), sorted_rows.end(),
              [](const BBox& a, const BBox& b) { return a.y0 < b.y0; });
    for (std::size_t i = 1; i < sorted_rows.size(); ++i)
        if (sorted_rows[i - 1].y1 > sorted_rows[i].y0) fail("row boxes overlap");

    std::map<std::pair<int, int>, BBox> cell_boxes;
    std::map<int, std::vector<BBox>> cells_by_row;
    for (const CellLayout& cl : layout.cells) {
        auto row_it = row_boxes.find(cl.row);
        if (row_it == row_boxes.end()) {
            fail("cell references unknown row");
            continue;
        }
        if (!row_it->second.contains(cl.box)) fail("cell box outside its row box");
        cell_boxes.emplace(std::make_pair(cl.row, cl.cell), cl.box);
        cells_by_row[cl.row].push_back(cl.box);
    }
    std::size_t expected_cells = 0;
    for (const Row& row : table.rows) expected_cells += row.cells.size();
    if (cell_boxes.size() != expected_cells) fail("cell box count does not match table cells");

    for (auto& [row, boxes] : cells_by_row) {
        std::sort(boxes.begin(), boxes.end(), [](const BBox& a, const BBox& b) { return a.x0 < b.x0; });
        for (std::size_t i = 1; i < boxes.size(); ++i)
            if (boxes[i - 1].x1 > boxes[i].x0)
                fail("cell boxes overlap in row " + std::to_string(row));
    }

    for (const WordLayout& wl : layout.words) {
        auto it = cell_boxes.find({wl.row, wl.cell});
        if (it == cell_boxes.end()) {
            fail("word references unknown cell");
            continue;
        }
        if (!it->second.contains(wl.box)) fail("word box outside its cell box: '" + wl.text + "'");
    }

    // Flattening cell word lists in row-major, left-to-right order must
    // reproduce the layout's word sequence exactly.
    std::size_t w = 0;
    bool order_ok = true;
    for (std::size_t r = 0; r < table.rows.size() && order_ok; ++r) {
        const Row& row = table.rows[r];
        for (std::size_t c = 0; c < row.cells.size() && order_ok; ++c) {
            const Cell& cell = row.cells[c];
            for (std::size_t k = 0; k < cell.words.size(); ++k) {
                if (w >= layout.words.size()) {
                    order_ok = false;
                    break;
                }
                const WordLayout& wl = layout.words[w++];
                if (wl.text != cell.words[k] || wl.row != static_cast<int>(r) ||
                    wl.cell != static_cast<int>(c) || wl.word != static_cast<int>(k))
                    order_ok = false;
            }
        }
    }
    if (!order_ok || w != layout.words.size())
        fail("flattened word sequence does not match table contents");

    return problems;
}

}  // namespace tabforge
