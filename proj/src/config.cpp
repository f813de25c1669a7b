#include "tabforge/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace tabforge {
namespace {

using Json = nlohmann::ordered_json;

const char* const kDefaultVocabulary[] = {
#include "generated/default_vocabulary.inc"
};

const char* const kDefaultSectionTitles[] = {
#include "generated/default_section_titles.inc"
};

IntRange range_from_json(const Json& j, IntRange fallback) {
    if (j.is_null()) return fallback;
    IntRange r{j.at("min").get<int>(), j.at("max").get<int>()};
    return r;
}

}  // namespace

const std::vector<std::string>& default_vocabulary() {
    static const std::vector<std::string> words(std::begin(kDefaultVocabulary),
                                                std::end(kDefaultVocabulary));
    return words;
}

const std::vector<std::string>& default_section_titles() {
    static const std::vector<std::string> titles(std::begin(kDefaultSectionTitles),
                                                 std::end(kDefaultSectionTitles));
    return titles;
}

GeneratorConfig GeneratorConfig::defaults() {
    GeneratorConfig c;
    c.vocabulary = default_vocabulary();
    c.section_titles = default_section_titles();
    c.themes.reserve(kThemeCount);
    for (int i = 0; i < kThemeCount; ++i) c.themes.push_back(builtin_theme(i));
    return c;
}

void GeneratorConfig::validate() const {
    double sum = 0;
    for (double w : theme_weights) {
        if (w < 0) throw std::invalid_argument("theme weights must be non-negative");
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-9)
        throw std::invalid_argument("theme weights must sum to 1, got " + std::to_string(sum));
    if (vocabulary.empty()) throw std::invalid_argument("vocabulary must not be empty");
    if (section_titles.empty()) throw std::invalid_argument("section_titles must not be empty");
    if (number_min < 0 || number_max < number_min)
        throw std::invalid_argument("bad number range");
    if (negative_probability < 0 || negative_probability > 1)
        throw std::invalid_argument("negative_probability must be in [0,1]");
    if (empty_cell_probability < 0 || empty_cell_probability > 1)
        throw std::invalid_argument("empty_cell_probability must be in [0,1]");
    if (note_column_probability < 0 || note_column_probability > 1)
        throw std::invalid_argument("note_column_probability must be in [0,1]");
    auto check_range = [](const IntRange& r, int lo, const char* name) {
        if (r.min < lo || r.max < r.min)
            throw std::invalid_argument(std::string(name) + " range invalid");
    };
    check_range(sections, 1, "sections");
    check_range(rows_per_section, 1, "rows_per_section");
    check_range(value_columns, 1, "value_columns");
    check_range(note_values, 0, "note_values");
    check_range(base_year, 1900, "base_year");
    if (themes.size() != theme_weights.size())
        throw std::invalid_argument("themes and theme_weights must have matching size");
}

std::vector<std::string> load_word_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open word list: " + path);
    std::vector<std::string> words;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (!line.empty()) words.push_back(line);
    }
    return words;
}

GeneratorConfig config_from_json(const std::string& json_text) {
    Json j = Json::parse(json_text);
    GeneratorConfig c = GeneratorConfig::defaults();
    if (j.contains("master_seed")) c.master_seed = j.at("master_seed").get<std::uint64_t>();
    if (j.contains("theme_weights")) {
        auto w = j.at("theme_weights").get<std::vector<double>>();
        if (w.size() != c.theme_weights.size())
            throw std::invalid_argument("theme_weights must have 6 entries");
        std::copy(w.begin(), w.end(), c.theme_weights.begin());
    }
    if (j.contains("vocabulary_file")) c.vocabulary = load_word_list(j.at("vocabulary_file").get<std::string>());
    if (j.contains("section_titles_file"))
        c.section_titles = load_word_list(j.at("section_titles_file").get<std::string>());
    if (j.contains("number_min")) c.number_min = j.at("number_min").get<std::int64_t>();
    if (j.contains("number_max")) c.number_max = j.at("number_max").get<std::int64_t>();
    if (j.contains("negative_probability")) c.negative_probability = j.at("negative_probability").get<double>();
    if (j.contains("empty_cell_probability"))
        c.empty_cell_probability = j.at("empty_cell_probability").get<double>();
    if (j.contains("note_column_probability"))
        c.note_column_probability = j.at("note_column_probability").get<double>();
    c.sections = range_from_json(j.value("sections", Json{}), c.sections);
    c.rows_per_section = range_from_json(j.value("rows_per_section", Json{}), c.rows_per_section);
    c.value_columns = range_from_json(j.value("value_columns", Json{}), c.value_columns);
    c.note_values = range_from_json(j.value("note_values", Json{}), c.note_values);
    c.base_year = range_from_json(j.value("base_year", Json{}), c.base_year);
    if (j.contains("themes_file"))
        c.themes = load_themes_file(j.at("themes_file").get<std::string>());
    c.validate();
    return c;
}

GeneratorConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return config_from_json(ss.str());
}

}  // namespace tabforge
