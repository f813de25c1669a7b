#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "tabforge/table.hpp"
#include "tabforge/theme.hpp"

namespace tabforge {

// HTML document with location-encoded IDs: rows "row-{r}", cells
// "cell-{r}-{c}", word spans "word-{r}-{c}-{w}", all 0-based.
std::string to_html(const Table& table, const ThemeStyle& style);

// Nested rows -> cells -> words with pixel boxes (and 0-1000 virtual boxes
// when `with_virtual` is set). Empty cells appear with boxes and no words.
std::string to_structure_json(const Table& table, const LayoutTree& layout, bool with_virtual);

// RFC 4180, one line per row; spanning cells are padded with empty fields so
// every line has column_count fields.
std::string to_csv(const Table& table);

// The canonical cell-text grid (rows x column_count, colspans expanded with
// empty strings after the first column). All three exports parse back to it.
std::vector<std::vector<std::string>> table_grid(const Table& table);

std::vector<std::vector<std::string>> grid_from_html(const std::string& html);
std::vector<std::vector<std::string>> grid_from_csv(const std::string& csv);
std::vector<std::vector<std::string>> grid_from_structure_json(const std::string& json_text);

// Rebuilds the table skeleton and layout recorded in a structure JSON, so
// dataset validation can re-run the geometry validator on stored annotations.
struct ParsedStructure {
    Table table;
    LayoutTree layout;
};
ParsedStructure structure_from_json(const std::string& json_text);

// Serialized annotation record (annotations/{id}.json).
std::string record_to_json(const DatasetRecord& record);

struct ManifestEntry {
    std::string id;
    int theme = 0;
    Split split = Split::Train;
    std::string image;
    std::string image_a4;  // empty when A4 output is disabled
    std::string annotation;
};

std::string manifest_line(const ManifestEntry& entry);
ManifestEntry manifest_entry_from_line(const std::string& line);

// Writes images/{id}.png, images_a4/{id}.png and annotations/{id}.json under
// output_root; cleans up partial files on failure. Returns the manifest entry
// (the caller appends it to manifest.jsonl).
ManifestEntry write_record(const DatasetRecord& record, const std::filesystem::path& output_root);

}  // namespace tabforge
