#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tabforge/bbox.hpp"

namespace tabforge {

enum class CellType { SectionTitle, CurrencyUnit, RowHeader, ColumnHeader, Data };

const char* cell_type_name(CellType t);
CellType cell_type_from_name(const std::string& name);

enum class Split { Train, Validation, Test };

const char* split_name(Split s);
Split split_from_name(const std::string& name);

// One table cell. `words` holds display strings post-formatting ("52,160",
// "(1,839)"); empty cells have no words but still get a box at layout time.
struct Cell {
    CellType type = CellType::Data;
    std::vector<std::string> words;
    int column_index = 0;
    int colspan = 1;

    bool empty() const { return words.empty(); }
    std::string text() const;  // words joined with single spaces
};

struct Row {
    std::vector<Cell> cells;
    int row_index = 0;
    int section_index = -1;  // -1 for rows outside any section
};

struct Table {
    std::string id;
    int theme = 0;
    std::vector<Row> rows;
    int column_count = 0;
    std::string currency_symbol;

    const Row* header_row() const;  // the all-ColumnHeader row, or nullptr
};

// Checks the structural invariants of a Table. Returns problem descriptions;
// empty means the table is valid.
std::vector<std::string> validate_table(const Table& table);

// Sampled blueprint for one table.
struct TableSpec {
    int theme = 0;
    std::string typeface;
    int font_size_pt = 10;
    bool bold_headers = false;
    int section_count = 1;
    std::vector<int> rows_per_section;
    int value_column_count = 2;
    bool has_note_column = false;
    std::string date_format;
    bool section_numbering = false;
    std::uint64_t per_table_seed = 0;
};

struct RowLayout {
    int row = 0;
    BBox box;
};

struct CellLayout {
    int row = 0;
    int cell = 0;  // index into rows[row].cells
    BBox box;
};

struct WordLayout {
    std::string text;
    BBox box;
    int row = 0;
    int cell = 0;
    int word = 0;  // index into the cell's word list
};

// Geometric realization of a table: nested boxes for the table, its rows and
// cells, and every word in flattened reading order.
struct LayoutTree {
    int page_width = 0;
    int page_height = 0;
    BBox table_box;
    std::vector<RowLayout> rows;
    std::vector<CellLayout> cells;
    std::vector<WordLayout> words;
};

// Validates containment (word in cell in row in table in page), intra-row cell
// disjointness, row disjointness, and that the flattened word sequence matches
// the table's cell contents in row-major order. Empty result means valid.
std::vector<std::string> validate_layout(const Table& table, const LayoutTree& layout);

struct QAPair {
    std::string question;
    std::string answer_text;
    std::string row_key;
    std::string column_key;
    int start = 0;  // word index, half-open [start, end)
    int end = 0;
};

struct A4Placement {
    int offset_x = 0;
    int offset_y = 0;
    double scale = 1.0;
};

// Everything exported for one table.
struct DatasetRecord {
    std::string id;
    int theme = 0;
    Split split = Split::Train;
    std::uint64_t per_table_seed = 0;
    std::string html;
    std::string csv;
    std::string structure_json;
    std::vector<QAPair> qa_pairs;
    int competition_pair = 0;
    std::vector<std::uint8_t> image_png;
    std::vector<std::uint8_t> image_a4_png;  // empty when A4 output is disabled
    A4Placement a4;
};

}  // namespace tabforge
