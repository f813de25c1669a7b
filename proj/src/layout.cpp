#include "tabforge/layout.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tabforge {
namespace {

bool left_aligned(CellType type) {
    return type == CellType::SectionTitle || type == CellType::RowHeader;
}

struct CellMeasure {
    int text_width = 0;   // words plus single-space gaps, no padding
    std::vector<int> word_widths;
};

}  // namespace

LayoutTree layout_table(const Table& table, const ThemeStyle& style,
                        const FontMetricsProvider& metrics, PageMode page_mode) {
    auto problems = validate_table(table);
    if (!problems.empty())
        throw std::invalid_argument("layout_table: invalid table: " + problems.front());

    const int columns = table.column_count;

    // Measure every cell once.
    std::vector<std::vector<CellMeasure>> measures(table.rows.size());
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        measures[r].resize(table.rows[r].cells.size());
        for (std::size_t c = 0; c < table.rows[r].cells.size(); ++c) {
            const Cell& cell = table.rows[r].cells[c];
            TextStyle ts = style.text_style(cell.type);
            CellMeasure& m = measures[r][c];
            int space = metrics.space_width(ts);
            for (std::size_t w = 0; w < cell.words.size(); ++w) {
                int width = metrics.text_width(cell.words[w], ts);
                m.word_widths.push_back(width);
                m.text_width += width + (w + 1 < cell.words.size() ? space : 0);
            }
        }
    }

    // Column widths from single-column cells, then widen for spanning cells.
    std::vector<int> col_width(static_cast<std::size_t>(columns), 0);
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        for (std::size_t c = 0; c < table.rows[r].cells.size(); ++c) {
            const Cell& cell = table.rows[r].cells[c];
            if (cell.colspan != 1) continue;
            const CellPadding& pad = style.padding(cell.type);
            int need = measures[r][c].text_width + 2 * pad.h;
            col_width[static_cast<std::size_t>(cell.column_index)] =
                std::max(col_width[static_cast<std::size_t>(cell.column_index)], need);
        }
    }
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        for (std::size_t c = 0; c < table.rows[r].cells.size(); ++c) {
            const Cell& cell = table.rows[r].cells[c];
            if (cell.colspan == 1) continue;
            const CellPadding& pad = style.padding(cell.type);
            int need = measures[r][c].text_width + 2 * pad.h;
            int have = 0;
            for (int k = 0; k < cell.colspan; ++k)
                have += col_width[static_cast<std::size_t>(cell.column_index + k)];
            if (need > have) {
                int deficit = need - have;
                int per = deficit / cell.colspan;
                int extra = deficit % cell.colspan;
                for (int k = 0; k < cell.colspan; ++k)
                    col_width[static_cast<std::size_t>(cell.column_index + k)] += per + (k < extra ? 1 : 0);
            }
        }
    }

    // Row heights: tallest cell in the row.
    std::vector<int> row_height(table.rows.size(), 0);
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        for (std::size_t c = 0; c < table.rows[r].cells.size(); ++c) {
            const Cell& cell = table.rows[r].cells[c];
            TextStyle ts = style.text_style(cell.type);
            const CellPadding& pad = style.padding(cell.type);
            row_height[r] = std::max(row_height[r], metrics.line_height(ts) + 2 * pad.v);
        }
    }

    std::vector<int> col_x(static_cast<std::size_t>(columns) + 1, 0);
    for (int c = 0; c < columns; ++c)
        col_x[static_cast<std::size_t>(c) + 1] = col_x[static_cast<std::size_t>(c)] + col_width[static_cast<std::size_t>(c)];
    const int table_width = col_x[static_cast<std::size_t>(columns)];
    int table_height = 0;
    for (int h : row_height) table_height += h;
    if (table_width <= 0 || table_height <= 0)
        throw std::invalid_argument("layout_table: table has zero extent");

    LayoutTree layout;
    int origin_x = 0, origin_y = 0;
    if (page_mode == PageMode::A4Page) {
        origin_x = kA4MarginPx;
        origin_y = kA4MarginPx;
        layout.page_width = kA4WidthPx;
        layout.page_height = kA4HeightPx;
        if (table_width > kA4WidthPx - 2 * kA4MarginPx || table_height > kA4HeightPx - 2 * kA4MarginPx)
            throw LayoutOverflowError("table " + std::to_string(table_width) + "x" +
                                      std::to_string(table_height) + " exceeds the A4 content area");
    } else {
        layout.page_width = table_width;
        layout.page_height = table_height;
    }
    layout.table_box = BBox(origin_x, origin_y, origin_x + table_width, origin_y + table_height);

    int y = origin_y;
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        const Row& row = table.rows[r];
        const int h = row_height[r];
        layout.rows.push_back({static_cast<int>(r), BBox(origin_x, y, origin_x + table_width, y + h)});

        for (std::size_t c = 0; c < row.cells.size(); ++c) {
            const Cell& cell = row.cells[c];
            const CellPadding& pad = style.padding(cell.type);
            TextStyle ts = style.text_style(cell.type);
            int x0 = origin_x + col_x[static_cast<std::size_t>(cell.column_index)];
            int x1 = origin_x + col_x[static_cast<std::size_t>(cell.column_index + cell.colspan)];
            layout.cells.push_back({static_cast<int>(r), static_cast<int>(c), BBox(x0, y, x1, y + h)});

            const CellMeasure& m = measures[r][c];
            if (m.word_widths.empty()) continue;
            int pen = left_aligned(cell.type) ? x0 + pad.h : x1 - pad.h - m.text_width;
            int word_y = y + pad.v;
            int line = metrics.line_height(ts);
            int space = metrics.space_width(ts);
            for (std::size_t w = 0; w < cell.words.size(); ++w) {
                layout.words.push_back({cell.words[w],
                                        BBox(pen, word_y, pen + m.word_widths[w], word_y + line),
                                        static_cast<int>(r), static_cast<int>(c), static_cast<int>(w)});
                pen += m.word_widths[w] + space;
            }
        }
        y += h;
    }
    return layout;
}

const std::vector<WordLayout>& flatten_words(const LayoutTree& layout) { return layout.words; }

}  // namespace tabforge
