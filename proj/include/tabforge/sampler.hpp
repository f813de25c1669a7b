#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "tabforge/config.hpp"
#include "tabforge/rng.hpp"
#include "tabforge/table.hpp"

namespace tabforge {

// Proleptic Gregorian calendar date. Conversions use the standard
// days-from-civil algorithm; the epoch is 1970-01-01.
struct Date {
    int year = 1970;
    int month = 1;  // 1-12
    int day = 1;    // 1-31
    bool operator==(const Date&) const = default;
};

std::int64_t days_from_civil(const Date& d);
Date civil_from_days(std::int64_t days);
int days_in_month(int year, int month);

// Supported patterns: "DD.MM.YY", "DD/MM/YYYY", "DD Month YYYY",
// "Month YYYY", "YYYY". Anything else throws std::invalid_argument.
std::string format_date(const Date& date, const std::string& pattern);

// Inverse of format_date. Fields the pattern does not carry default to 1;
// two-digit years pivot at 50 (00-49 -> 2000s, 50-99 -> 1900s).
Date parse_date(const std::string& text, const std::string& pattern);

bool is_supported_date_pattern(const std::string& pattern);

// "52,160", "(1,839)", "-1,839", "0".
std::string format_number(std::int64_t value, NegativeStyle style, bool thousands_separator);

// Exact quota allocation of `total` tables over the configured theme weights:
// floor quotas plus largest-remainder correction, ties to the lowest theme id.
std::vector<std::int64_t> theme_quotas(std::int64_t total, const std::array<double, kThemeCount>& weights);

// Theme of table `table_index` in a run of `total`. Indices are assigned in
// contiguous quota blocks, so over the whole run the counts are exact.
int assign_theme(std::int64_t table_index, std::int64_t total,
                 const std::array<double, kThemeCount>& weights);

TableSpec sample_spec(std::uint64_t seed, int theme, const GeneratorConfig& config);

Table sample_table(const TableSpec& spec, const GeneratorConfig& config);

}  // namespace tabforge
