#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "tabforge/config.hpp"
#include "tabforge/exporters.hpp"
#include "tabforge/layout.hpp"
#include "tabforge/qa.hpp"
#include "tabforge/sampler.hpp"

namespace tabforge {

// Per-theme split quotas: train = round(0.8 n), validation = round(0.1 n),
// test = the rest (integer arithmetic, round half up).
struct SplitQuotas {
    std::int64_t train = 0;
    std::int64_t validation = 0;
    std::int64_t test = 0;
};

SplitQuotas split_quotas(std::int64_t theme_total);

// Split for the table holding `rank` in the theme's seed-shuffled order:
// the first train-quota ranks are Train, the next Validation, the rest Test.
Split assign_split(std::int64_t rank, std::int64_t theme_total);

// Rank of every within-theme index in the shuffled order used by
// assign_split; seeded from the master seed so splits are stable.
std::vector<std::int64_t> split_ranks(std::uint64_t master_seed, int theme, std::int64_t theme_total);

// Everything produced for table `index` before rasterization. Deterministic
// in (config, index, total); rejected samples (A4 overflow, zero QA pairs)
// are retried on a reserved seed stream that never shifts other tables.
struct GeneratedTable {
    TableSpec spec;
    Table table;
    ThemeStyle style;
    LayoutTree layout;
    std::vector<QAPair> qa_pairs;
    int competition_pair = 0;
    int attempts = 1;
};

GeneratedTable generate_table(const GeneratorConfig& config, std::int64_t index, std::int64_t total);

struct BuildOptions {
    int workers = 0;  // 0 = hardware concurrency
    bool write_a4 = true;
    bool debug_overlays = false;
    bool progress = true;  // advisory, stderr only
};

struct BuildSummary {
    std::int64_t total = 0;
    std::vector<std::int64_t> theme_counts;
    std::int64_t train = 0, validation = 0, test = 0;
    std::int64_t retried_tables = 0;
    std::string output_root;

    std::string to_json() const;
};

// Generates `total` records under output_root: images/{id}.png,
// images_a4/{id}.png, annotations/{id}.json and manifest.jsonl. Output is a
// pure function of (config, total); worker count and scheduling are
// unobservable.
BuildSummary build_dataset(const GeneratorConfig& config, std::int64_t total,
                           const std::filesystem::path& output_root, const BuildOptions& options);

std::vector<ManifestEntry> load_manifest(const std::filesystem::path& dataset_root);

// Parsed annotations/{id}.json.
struct LoadedRecord {
    std::string id;
    int theme = 0;
    Split split = Split::Train;
    std::uint64_t seed = 0;
    std::string html;
    std::string csv;
    ParsedStructure structure;
    std::vector<QAPair> qa_pairs;
    int competition_pair = 0;
    bool has_a4 = false;
    A4Placement a4;
};

LoadedRecord load_record(const std::filesystem::path& dataset_root, const ManifestEntry& entry);

// Dataset statistics report (counts per theme/split, structure distributions,
// empty-cell and negative-value rates) as JSON.
std::string dataset_stats(const std::filesystem::path& dataset_root);

// Re-checks a generated dataset: manifest audit, geometry, span fidelity and
// HTML/CSV/structure consistency. Returns a JSON report; `ok` reflects
// whether every check passed.
struct ValidationReport {
    bool ok = false;
    std::string json;
};

ValidationReport validate_dataset(const std::filesystem::path& dataset_root);

}  // namespace tabforge
