#pragma once

#include <stdexcept>

#include "tabforge/font.hpp"
#include "tabforge/table.hpp"
#include "tabforge/theme.hpp"

namespace tabforge {

// A4 at 96 px/inch.
constexpr int kA4WidthPx = 794;
constexpr int kA4HeightPx = 1123;
constexpr int kA4MarginPx = 40;

enum class PageMode {
    TableBoundary,  // page equals the table box
    A4Page,         // table anchored at the top-left content origin of an A4 page
};

// Raised when a table cannot fit the A4 content area; callers may reduce the
// font size or regenerate.
struct LayoutOverflowError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Computes the full pixel geometry for a table under a style. Column widths
// are the maximum content width per column plus padding; cells are
// single-line; row headers and titles are left-aligned, all other columns
// right-aligned. Word boxes tile each cell's text run with single-space gaps.
LayoutTree layout_table(const Table& table, const ThemeStyle& style,
                        const FontMetricsProvider& metrics, PageMode page_mode);

// The flattened reading-order word list (row-major: top-to-bottom by row,
// left-to-right by cell, in-cell order).
const std::vector<WordLayout>& flatten_words(const LayoutTree& layout);

}  // namespace tabforge
