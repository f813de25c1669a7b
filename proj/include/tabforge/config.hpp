#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "tabforge/theme.hpp"

namespace tabforge {

struct IntRange {
    int min = 0;
    int max = 0;
};

// Everything the sampler needs. Defaults reproduce the standard dataset mix:
// 40% theme 0 and 12% for each of themes 1-5, a bundled 10,000-word
// vocabulary, and structural ranges of 1-3 sections, 2-8 rows per section and
// 1-3 value columns.
struct GeneratorConfig {
    std::uint64_t master_seed = 0;
    std::array<double, kThemeCount> theme_weights{0.40, 0.12, 0.12, 0.12, 0.12, 0.12};
    std::vector<std::string> vocabulary;       // defaults to the bundled list
    std::vector<std::string> section_titles;   // defaults to the bundled list
    std::int64_t number_min = 1;
    std::int64_t number_max = 9'999'999;
    double negative_probability = 0.15;
    double empty_cell_probability = 0.05;
    IntRange sections{1, 3};
    IntRange rows_per_section{2, 8};
    IntRange value_columns{1, 3};
    double note_column_probability = 0.35;
    IntRange note_values{1, 25};
    IntRange base_year{1970, 2030};
    std::vector<ThemeStyle> themes;            // defaults to the six built-ins

    static GeneratorConfig defaults();

    // Throws std::invalid_argument describing the first problem found.
    void validate() const;
};

// Bundled word lists (also shipped as assets/*.txt for editing).
const std::vector<std::string>& default_vocabulary();
const std::vector<std::string>& default_section_titles();

// Config files are JSON with lowercase snake_case keys; any omitted field
// keeps its default. `vocabulary_file` / `section_titles_file` point at plain
// newline-delimited text files.
GeneratorConfig load_config_file(const std::string& path);
GeneratorConfig config_from_json(const std::string& json_text);

std::vector<std::string> load_word_list(const std::string& path);

}  // namespace tabforge
