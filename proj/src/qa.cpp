#include "tabforge/qa.hpp"

#include <map>
#include <stdexcept>

#include "tabforge/rng.hpp"

namespace tabforge {

std::vector<QAPair> generate_qa_pairs(const Table& table, const LayoutTree& layout) {
    const Row* header = table.header_row();
    if (!header) throw std::invalid_argument("generate_qa_pairs: table has no header row");

    // Column header text per grid column.
    std::map<int, std::string> column_keys;
    for (const Cell& cell : header->cells)
        for (int k = 0; k < cell.colspan; ++k) column_keys[cell.column_index + k] = cell.text();

    // First/last flattened index per (row, cell); words of one cell are
    // contiguous in reading order.
    std::map<std::pair<int, int>, std::pair<int, int>> spans;
    for (std::size_t i = 0; i < layout.words.size(); ++i) {
        const WordLayout& wl = layout.words[i];
        auto key = std::make_pair(wl.row, wl.cell);
        auto it = spans.find(key);
        if (it == spans.end())
            spans.emplace(key, std::make_pair(static_cast<int>(i), static_cast<int>(i) + 1));
        else
            it->second.second = static_cast<int>(i) + 1;
    }

    std::vector<QAPair> pairs;
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        const Row& row = table.rows[r];
        for (std::size_t c = 0; c < row.cells.size(); ++c) {
            const Cell& cell = row.cells[c];
            if (cell.type != CellType::Data || cell.empty()) continue;
            if (row.cells.front().type != CellType::RowHeader || row.cells.front().empty())
                throw std::invalid_argument("generate_qa_pairs: data row lacks a row header");
            auto col_it = column_keys.find(cell.column_index);
            if (col_it == column_keys.end() || col_it->second.empty())
                throw std::invalid_argument("generate_qa_pairs: data column lacks a column header");

            QAPair pair;
            pair.row_key = row.cells.front().text();
            pair.column_key = col_it->second;
            pair.answer_text = cell.text();
            pair.question = "What is the value of " + pair.row_key + " for " + pair.column_key + "?";
            auto span_it = spans.find({static_cast<int>(r), static_cast<int>(c)});
            if (span_it == spans.end())
                throw std::logic_error("generate_qa_pairs: layout is missing the cell's words");
            pair.start = span_it->second.first;
            pair.end = span_it->second.second;
            pairs.push_back(std::move(pair));
        }
    }
    return pairs;
}

int select_competition_pair(const std::vector<QAPair>& pairs, std::uint64_t seed) {
    if (pairs.empty())
        throw std::invalid_argument("select_competition_pair: table has no QA pairs");
    Rng rng(mix64(seed));
    return static_cast<int>(rng.below(pairs.size()));
}

}  // namespace tabforge
