#include "tabforge/sampler.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tabforge {
namespace {

constexpr std::uint64_t kSpecSalt = 0x5BEC5A17ULL;
constexpr std::uint64_t kContentSalt = 0xC047E47ULL;

const char* const kMonthNames[12] = {"January", "February", "March",     "April",   "May",      "June",
                                     "July",    "August",   "September", "October", "November", "December"};

std::string two_digits(int v) {
    std::string s = std::to_string(v);
    return v < 10 ? "0" + s : s;
}

int month_from_name(const std::string& name) {
    for (int m = 1; m <= 12; ++m)
        if (name == kMonthNames[m - 1]) return m;
    throw std::invalid_argument("unknown month name: " + name);
}

std::string capitalize(std::string word) {
    if (!word.empty() && word[0] >= 'a' && word[0] <= 'z')
        word[0] = static_cast<char>(word[0] - 'a' + 'A');
    return word;
}

std::vector<std::string> split_words(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream ss(text);
    std::string w;
    while (ss >> w) out.push_back(w);
    return out;
}

}  // namespace

std::int64_t days_from_civil(const Date& d) {
    std::int64_t y = d.year;
    if (d.month <= 2) --y;
    std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    std::int64_t yoe = y - era * 400;
    std::int64_t doy = (153 * (d.month + (d.month > 2 ? -3 : 9)) + 2) / 5 + d.day - 1;
    std::int64_t doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + doe - 719468;
}

Date civil_from_days(std::int64_t days) {
    std::int64_t z = days + 719468;
    std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    std::int64_t doe = z - era * 146097;
    std::int64_t yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    std::int64_t y = yoe + era * 400;
    std::int64_t doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    std::int64_t mp = (5 * doy + 2) / 153;
    std::int64_t d = doy - (153 * mp + 2) / 5 + 1;
    std::int64_t m = mp + (mp < 10 ? 3 : -9);
    if (m <= 2) ++y;
    return Date{static_cast<int>(y), static_cast<int>(m), static_cast<int>(d)};
}

int days_in_month(int year, int month) {
    static const int lengths[12] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    if (month < 1 || month > 12) throw std::invalid_argument("month out of range");
    if (month == 2) {
        bool leap = (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
        return leap ? 29 : 28;
    }
    return lengths[month - 1];
}

bool is_supported_date_pattern(const std::string& pattern) {
    return pattern == "DD.MM.YY" || pattern == "DD/MM/YYYY" || pattern == "DD Month YYYY" ||
           pattern == "Month YYYY" || pattern == "YYYY";
}

std::string format_date(const Date& date, const std::string& pattern) {
    if (pattern == "DD.MM.YY")
        return two_digits(date.day) + "." + two_digits(date.month) + "." + two_digits(date.year % 100);
    if (pattern == "DD/MM/YYYY")
        return two_digits(date.day) + "/" + two_digits(date.month) + "/" + std::to_string(date.year);
    if (pattern == "DD Month YYYY")
        return std::to_string(date.day) + " " + kMonthNames[date.month - 1] + " " + std::to_string(date.year);
    if (pattern == "Month YYYY")
        return std::string(kMonthNames[date.month - 1]) + " " + std::to_string(date.year);
    if (pattern == "YYYY") return std::to_string(date.year);
    throw std::invalid_argument("unsupported date pattern: " + pattern);
}

Date parse_date(const std::string& text, const std::string& pattern) {
    auto to_int = [](const std::string& s) {
        if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw std::invalid_argument("expected digits, got: " + s);
        return std::stoi(s);
    };
    if (pattern == "DD.MM.YY" || pattern == "DD/MM/YYYY") {
        char sep = pattern[2];
        auto p1 = text.find(sep);
        auto p2 = text.find(sep, p1 == std::string::npos ? 0 : p1 + 1);
        if (p1 == std::string::npos || p2 == std::string::npos)
            throw std::invalid_argument("malformed date: " + text);
        int d = to_int(text.substr(0, p1));
        int m = to_int(text.substr(p1 + 1, p2 - p1 - 1));
        int y = to_int(text.substr(p2 + 1));
        if (pattern == "DD.MM.YY") y = y < 50 ? 2000 + y : 1900 + y;
        return Date{y, m, d};
    }
    if (pattern == "DD Month YYYY") {
        auto w = split_words(text);
        if (w.size() != 3) throw std::invalid_argument("malformed date: " + text);
        return Date{to_int(w[2]), month_from_name(w[1]), to_int(w[0])};
    }
    if (pattern == "Month YYYY") {
        auto w = split_words(text);
        if (w.size() != 2) throw std::invalid_argument("malformed date: " + text);
        return Date{to_int(w[1]), month_from_name(w[0]), 1};
    }
    if (pattern == "YYYY") return Date{to_int(text), 1, 1};
    throw std::invalid_argument("unsupported date pattern: " + pattern);
}

std::string format_number(std::int64_t value, NegativeStyle style, bool thousands_separator) {
    std::uint64_t magnitude = value < 0 ? static_cast<std::uint64_t>(-(value + 1)) + 1
                                        : static_cast<std::uint64_t>(value);
    std::string digits = std::to_string(magnitude);
    std::string grouped;
    if (thousands_separator) {
        int count = 0;
        for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
            if (count != 0 && count % 3 == 0) grouped += ',';
            grouped += *it;
            ++count;
        }
        std::reverse(grouped.begin(), grouped.end());
    } else {
        grouped = digits;
    }
    if (value >= 0) return grouped;
    if (style == NegativeStyle::Parentheses) return "(" + grouped + ")";
    return "-" + grouped;
}

std::vector<std::int64_t> theme_quotas(std::int64_t total, const std::array<double, kThemeCount>& weights) {
    double sum = std::accumulate(weights.begin(), weights.end(), 0.0);
    if (std::abs(sum - 1.0) > 1e-9)
        throw std::invalid_argument("theme weights must sum to 1, got " + std::to_string(sum));
    if (total < 0) throw std::invalid_argument("total must be non-negative");

    std::vector<std::int64_t> quotas(weights.size());
    std::vector<double> remainders(weights.size());
    std::int64_t assigned = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        double exact = weights[i] * static_cast<double>(total);
        // Snap near-integer products so 0.12 * 1000 floors to 120, not 119.
        auto fl = static_cast<std::int64_t>(std::floor(exact + 1e-9));
        quotas[i] = fl;
        remainders[i] = exact - static_cast<double>(fl);
        assigned += fl;
    }
    std::vector<std::size_t> order(weights.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return remainders[a] > remainders[b]; });
    for (std::int64_t k = 0; k < total - assigned; ++k) ++quotas[order[static_cast<std::size_t>(k) % order.size()]];
    return quotas;
}

int assign_theme(std::int64_t table_index, std::int64_t total,
                 const std::array<double, kThemeCount>& weights) {
    if (table_index < 0 || table_index >= total)
        throw std::out_of_range("table_index outside [0, total)");
    auto quotas = theme_quotas(total, weights);
    std::int64_t cum = 0;
    for (std::size_t i = 0; i < quotas.size(); ++i) {
        cum += quotas[i];
        if (table_index < cum) return static_cast<int>(i);
    }
    return static_cast<int>(quotas.size()) - 1;
}

TableSpec sample_spec(std::uint64_t seed, int theme, const GeneratorConfig& config) {
    if (theme < 0 || theme >= static_cast<int>(config.themes.size()))
        throw std::out_of_range("theme outside configured range");
    const ThemeStyle& traits = config.themes[static_cast<std::size_t>(theme)];
    Rng rng(mix64(seed ^ kSpecSalt));

    TableSpec spec;
    spec.theme = theme;
    spec.per_table_seed = seed;
    spec.typeface = rng.pick(traits.typeface_pool);
    spec.font_size_pt = static_cast<int>(rng.range(traits.font_size_min_pt, traits.font_size_max_pt));
    spec.bold_headers = rng.chance(traits.bold_header_probability);
    spec.section_count = static_cast<int>(rng.range(config.sections.min, config.sections.max));
    spec.rows_per_section.resize(static_cast<std::size_t>(spec.section_count));
    for (int& rows : spec.rows_per_section)
        rows = static_cast<int>(rng.range(config.rows_per_section.min, config.rows_per_section.max));
    spec.value_column_count = static_cast<int>(rng.range(config.value_columns.min, config.value_columns.max));
    spec.has_note_column = rng.chance(config.note_column_probability);
    spec.date_format = rng.pick(traits.date_format_pool);
    spec.section_numbering = traits.allow_section_numbering && rng.chance(0.3);
    return spec;
}

Table sample_table(const TableSpec& spec, const GeneratorConfig& config) {
    if (spec.theme < 0 || spec.theme >= static_cast<int>(config.themes.size()))
        throw std::out_of_range("spec theme outside configured range");
    const ThemeStyle& traits = config.themes[static_cast<std::size_t>(spec.theme)];
    Rng rng(mix64(spec.per_table_seed ^ kContentSalt));

    Table table;
    table.theme = spec.theme;
    table.column_count = 1 + (spec.has_note_column ? 1 : 0) + spec.value_column_count;
    table.currency_symbol = rng.pick(traits.currency_pool);

    // Every display word placed so far. Data values and note numbers are kept
    // unique against this set so an answer string pins down one table cell.
    std::set<std::string> used_words;
    // First words of row headers; kept globally unique so a row-header key
    // matches exactly one window in the flattened word list.
    std::set<std::string> reserved_firsts;
    auto place = [&](const std::vector<std::string>& words) {
        for (const auto& w : words) used_words.insert(w);
    };

    // Titles are chosen up front so header-word uniqueness can account for them.
    std::vector<std::size_t> title_order(config.section_titles.size());
    std::iota(title_order.begin(), title_order.end(), 0);
    rng.shuffle(std::span<std::size_t>(title_order));
    std::vector<std::vector<std::string>> section_titles;
    for (int s = 0; s < spec.section_count; ++s) {
        const std::string& title = config.section_titles[title_order[static_cast<std::size_t>(s) % title_order.size()]];
        std::vector<std::string> words;
        if (spec.section_numbering) words.push_back(std::to_string(s + 1) + ".");
        for (auto& w : split_words(title)) words.push_back(w);
        section_titles.push_back(words);
        place(words);
    }

    // Column header dates: one shared day/month, consecutive distinct years.
    int base_year = static_cast<int>(rng.range(config.base_year.min, config.base_year.max));
    int month = static_cast<int>(rng.range(1, 12));
    std::vector<std::vector<std::string>> date_words;
    for (int c = 0; c < spec.value_column_count; ++c) {
        int year = base_year - c;
        Date date{year, month, days_in_month(year, month)};
        auto words = split_words(format_date(date, spec.date_format));
        date_words.push_back(words);
        place(words);
    }
    if (spec.has_note_column) used_words.insert("Notes");

    int row_index = 0;
    auto next_row = [&](int section) {
        Row row;
        row.row_index = row_index++;
        row.section_index = section;
        return row;
    };
    auto push_cell = [](Row& row, CellType type, std::vector<std::string> words, int col, int span = 1) {
        Cell cell;
        cell.type = type;
        cell.words = std::move(words);
        cell.column_index = col;
        cell.colspan = span;
        row.cells.push_back(std::move(cell));
    };

    {
        Row header = next_row(-1);
        int col = 0;
        push_cell(header, CellType::ColumnHeader, {}, col++);
        if (spec.has_note_column) push_cell(header, CellType::ColumnHeader, {"Notes"}, col++);
        for (int c = 0; c < spec.value_column_count; ++c)
            push_cell(header, CellType::ColumnHeader, date_words[static_cast<std::size_t>(c)], col++);
        table.rows.push_back(std::move(header));
    }
    if (traits.currency_row) {
        Row currency = next_row(-1);
        int col = 0;
        push_cell(currency, CellType::CurrencyUnit, {}, col++);
        if (spec.has_note_column) push_cell(currency, CellType::CurrencyUnit, {}, col++);
        for (int c = 0; c < spec.value_column_count; ++c) {
            push_cell(currency, CellType::CurrencyUnit, {table.currency_symbol}, col++);
            used_words.insert(table.currency_symbol);
        }
        table.rows.push_back(std::move(currency));
    }

    // Note numbers come from a pre-shuffled pool so they stay distinct.
    std::vector<std::int64_t> note_pool;
    for (std::int64_t v = config.note_values.min; v <= config.note_values.max; ++v) note_pool.push_back(v);
    rng.shuffle(std::span<std::int64_t>(note_pool));
    std::size_t next_note = 0;

    auto sample_row_header = [&]() {
        std::vector<std::string> words;
        int count = static_cast<int>(rng.range(1, 6));
        for (int k = 0; k < count; ++k) {
            for (int attempt = 0;; ++attempt) {
                if (attempt > 1000) throw std::runtime_error("vocabulary too small for unique row headers");
                std::string w = rng.pick(config.vocabulary);
                if (k == 0) {
                    w = capitalize(w);
                    if (used_words.count(w) || reserved_firsts.count(w)) continue;
                    reserved_firsts.insert(w);
                } else if (reserved_firsts.count(w)) {
                    continue;
                }
                words.push_back(w);
                break;
            }
        }
        place(words);
        return words;
    };

    auto sample_value = [&]() {
        for (int attempt = 0;; ++attempt) {
            if (attempt > 1000) throw std::runtime_error("number range too small for unique values");
            std::int64_t magnitude = rng.range(config.number_min, config.number_max);
            bool negative = rng.chance(config.negative_probability);
            std::string text = format_number(negative ? -magnitude : magnitude, traits.negative_style, true);
            if (used_words.count(text)) continue;
            used_words.insert(text);
            return text;
        }
    };

    for (int s = 0; s < spec.section_count; ++s) {
        Row title = next_row(s);
        push_cell(title, CellType::SectionTitle, section_titles[static_cast<std::size_t>(s)], 0,
                  table.column_count);
        table.rows.push_back(std::move(title));

        for (int r = 0; r < spec.rows_per_section[static_cast<std::size_t>(s)]; ++r) {
            Row row = next_row(s);
            int col = 0;
            push_cell(row, CellType::RowHeader, sample_row_header(), col++);
            if (spec.has_note_column) {
                std::vector<std::string> note;
                if (!rng.chance(config.empty_cell_probability)) {
                    while (next_note < note_pool.size() &&
                           used_words.count(std::to_string(note_pool[next_note])))
                        ++next_note;
                    if (next_note < note_pool.size()) {
                        std::string text = std::to_string(note_pool[next_note++]);
                        note.push_back(text);
                        used_words.insert(text);
                    }
                }
                push_cell(row, CellType::Data, std::move(note), col++);
            }
            for (int c = 0; c < spec.value_column_count; ++c) {
                std::vector<std::string> value;
                if (!rng.chance(config.empty_cell_probability)) value.push_back(sample_value());
                push_cell(row, CellType::Data, std::move(value), col++);
            }
            table.rows.push_back(std::move(row));
        }
    }
    return table;
}

}  // namespace tabforge
