#include "tabforge/builder.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "tabforge/render.hpp"
#include "tabforge/rng.hpp"

namespace tabforge {
namespace {

using Json = nlohmann::ordered_json;

std::string table_id(std::int64_t index, std::int64_t total) {
    std::size_t width = std::max<std::size_t>(6, std::to_string(total > 0 ? total - 1 : 0).size());
    std::string digits = std::to_string(index);
    return std::string(width > digits.size() ? width - digits.size() : 0, '0') + digits;
}

bool fits_a4_content(const LayoutTree& layout) {
    return layout.table_box.width() <= kA4WidthPx - 2 * kA4MarginPx &&
           layout.table_box.height() <= kA4HeightPx - 2 * kA4MarginPx;
}

}  // namespace

SplitQuotas split_quotas(std::int64_t theme_total) {
    if (theme_total < 0) throw std::invalid_argument("theme_total must be non-negative");
    SplitQuotas q;
    q.train = (8 * theme_total + 5) / 10;
    q.validation = (theme_total + 5) / 10;
    q.test = theme_total - q.train - q.validation;
    return q;
}

Split assign_split(std::int64_t rank, std::int64_t theme_total) {
    if (rank < 0 || rank >= theme_total) throw std::out_of_range("rank outside [0, theme_total)");
    SplitQuotas q = split_quotas(theme_total);
    if (rank < q.train) return Split::Train;
    if (rank < q.train + q.validation) return Split::Validation;
    return Split::Test;
}

std::vector<std::int64_t> split_ranks(std::uint64_t master_seed, int theme, std::int64_t theme_total) {
    std::vector<std::int64_t> order(static_cast<std::size_t>(theme_total));
    std::iota(order.begin(), order.end(), 0);
    Rng rng(derive_table_seed(master_seed, seed_stream::kSplitShuffleBase + static_cast<std::uint64_t>(theme)));
    rng.shuffle(std::span<std::int64_t>(order));
    std::vector<std::int64_t> rank(static_cast<std::size_t>(theme_total));
    for (std::int64_t k = 0; k < theme_total; ++k) rank[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])] = k;
    return rank;
}

GeneratedTable generate_table(const GeneratorConfig& config, std::int64_t index, std::int64_t total) {
    config.validate();
    int theme = assign_theme(index, total, config.theme_weights);
    const int max_attempts = 8;

    std::uint64_t seed = derive_table_seed(config.master_seed, static_cast<std::uint64_t>(index));
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        GeneratedTable out;
        out.attempts = attempt + 1;
        out.spec = sample_spec(seed, theme, config);
        out.table = sample_table(out.spec, config);
        out.style = resolve_style(config.themes[static_cast<std::size_t>(theme)], out.spec);
        out.layout = layout_table(out.table, out.style, StrokeFontMetrics::instance(),
                                  PageMode::TableBoundary);
        bool ok = fits_a4_content(out.layout);
        if (ok) {
            out.qa_pairs = generate_qa_pairs(out.table, out.layout);
            ok = !out.qa_pairs.empty();
        }
        if (ok) {
            out.competition_pair = select_competition_pair(
                out.qa_pairs,
                derive_table_seed(config.master_seed,
                                  seed_stream::kCompetitionBase + static_cast<std::uint64_t>(index)));
            return out;
        }
        seed = derive_table_seed(config.master_seed,
                                 seed_stream::kRetryBase + static_cast<std::uint64_t>(index) * 256 +
                                     static_cast<std::uint64_t>(attempt) + 1);
    }
    throw std::runtime_error("table " + std::to_string(index) + " rejected after " +
                             std::to_string(max_attempts) + " attempts; last seed " +
                             std::to_string(seed));
}

std::string BuildSummary::to_json() const {
    Json j;
    j["total"] = total;
    Json themes;
    for (std::size_t t = 0; t < theme_counts.size(); ++t)
        themes[std::to_string(t)] = theme_counts[t];
    j["themes"] = std::move(themes);
    j["splits"] = Json{{"train", train}, {"validation", validation}, {"test", test}};
    j["retried_tables"] = retried_tables;
    j["output_root"] = output_root;
    return j.dump();
}

BuildSummary build_dataset(const GeneratorConfig& config, std::int64_t total,
                           const std::filesystem::path& output_root, const BuildOptions& options) {
    namespace fs = std::filesystem;
    if (total < 1) throw std::invalid_argument("total must be >= 1");
    config.validate();
    fs::create_directories(output_root);

    auto quotas = theme_quotas(total, config.theme_weights);
    std::vector<std::int64_t> theme_start(quotas.size() + 1, 0);
    for (std::size_t t = 0; t < quotas.size(); ++t) theme_start[t + 1] = theme_start[t] + quotas[t];
    std::vector<std::vector<std::int64_t>> ranks(quotas.size());
    for (std::size_t t = 0; t < quotas.size(); ++t)
        ranks[t] = split_ranks(config.master_seed, static_cast<int>(t), quotas[t]);

    int workers = options.workers > 0 ? options.workers
                                      : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    workers = static_cast<int>(std::min<std::int64_t>(workers, total));

    struct Done {
        ManifestEntry entry;
        int attempts = 1;
        std::uint64_t notdef = 0;
    };
    std::mutex mu;
    std::condition_variable cv;
    std::map<std::int64_t, Done> finished;
    std::atomic<std::int64_t> next{0};
    std::atomic<bool> failed{false};
    std::string error_message;

    auto worker_main = [&]() {
        while (!failed.load(std::memory_order_relaxed)) {
            std::int64_t index = next.fetch_add(1);
            if (index >= total) break;
            try {
                GeneratedTable gen = generate_table(config, index, total);
                int theme = gen.spec.theme;
                std::int64_t within = index - theme_start[static_cast<std::size_t>(theme)];

                DatasetRecord record;
                record.id = table_id(index, total);
                record.theme = theme;
                record.split = assign_split(ranks[static_cast<std::size_t>(theme)][static_cast<std::size_t>(within)],
                                            quotas[static_cast<std::size_t>(theme)]);
                record.per_table_seed = gen.spec.per_table_seed;
                record.html = to_html(gen.table, gen.style);
                record.csv = to_csv(gen.table);
                record.structure_json = to_structure_json(gen.table, gen.layout, true);
                record.qa_pairs = gen.qa_pairs;
                record.competition_pair = gen.competition_pair;

                RenderStats stats;
                Image table_image = render(gen.layout, gen.table, gen.style, &stats);
                record.image_png = encode_png(table_image);
                if (options.write_a4) {
                    PasteResult pasted = paste_on_a4(table_image);
                    record.image_a4_png = encode_png(pasted.image);
                    record.a4 = pasted.placement;
                }

                ManifestEntry entry = write_record(record, output_root);
                if (options.debug_overlays) {
                    Image overlay = render_annotation_overlay(table_image, gen.layout);
                    auto png = encode_png(overlay);
                    fs::path p = output_root / "debug" / (record.id + ".png");
                    fs::create_directories(p.parent_path());
                    std::ofstream out(p, std::ios::binary);
                    out.write(reinterpret_cast<const char*>(png.data()),
                              static_cast<std::streamsize>(png.size()));
                }

                std::lock_guard lock(mu);
                finished[index] = Done{std::move(entry), gen.attempts, stats.notdef_count};
                cv.notify_all();
            } catch (const std::exception& e) {
                std::lock_guard lock(mu);
                if (!failed.exchange(true))
                    error_message = "table " + std::to_string(index) + ": " + e.what();
                cv.notify_all();
                break;
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker_main);

    // Single manifest writer, consuming results in index order so the
    // manifest is byte-identical no matter how work was scheduled.
    BuildSummary summary;
    summary.total = total;
    summary.theme_counts.assign(quotas.size(), 0);
    summary.output_root = output_root.string();

    std::ofstream manifest(output_root / "manifest.jsonl", std::ios::binary);
    if (!manifest) {
        failed = true;
        for (auto& t : pool) t.join();
        throw std::runtime_error("cannot open manifest for writing under " + output_root.string());
    }

    std::int64_t emitted = 0;
    while (emitted < total) {
        std::unique_lock lock(mu);
        cv.wait(lock, [&] { return failed.load() || finished.count(emitted) > 0; });
        if (failed.load() && finished.count(emitted) == 0) break;
        Done done = std::move(finished.at(emitted));
        finished.erase(emitted);
        lock.unlock();

        manifest << manifest_line(done.entry) << "\n";
        ++summary.theme_counts[static_cast<std::size_t>(done.entry.theme)];
        switch (done.entry.split) {
            case Split::Train: ++summary.train; break;
            case Split::Validation: ++summary.validation; break;
            case Split::Test: ++summary.test; break;
        }
        if (done.attempts > 1) ++summary.retried_tables;
        if (done.notdef > 0)
            std::cerr << "warning: table " << done.entry.id << " rendered " << done.notdef
                      << " missing glyphs\n";
        ++emitted;
        if (options.progress && (emitted % 200 == 0 || emitted == total))
            std::cerr << "generated " << emitted << "/" << total << "\n";
    }

    for (auto& t : pool) t.join();
    if (failed.load()) throw std::runtime_error("generation failed: " + error_message);
    manifest.flush();
    if (!manifest) throw std::runtime_error("manifest write failed");
    return summary;
}

std::vector<ManifestEntry> load_manifest(const std::filesystem::path& dataset_root) {
    std::ifstream in(dataset_root / "manifest.jsonl");
    if (!in) throw std::runtime_error("cannot open manifest under " + dataset_root.string());
    std::vector<ManifestEntry> entries;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        entries.push_back(manifest_entry_from_line(line));
    }
    return entries;
}

LoadedRecord load_record(const std::filesystem::path& dataset_root, const ManifestEntry& entry) {
    std::ifstream in(dataset_root / entry.annotation);
    if (!in) throw std::runtime_error("cannot open annotation: " + entry.annotation);
    std::ostringstream ss;
    ss << in.rdbuf();
    Json j = Json::parse(ss.str());

    LoadedRecord rec;
    rec.id = j.at("id").get<std::string>();
    rec.theme = j.at("theme").get<int>();
    rec.split = split_from_name(j.at("split").get<std::string>());
    rec.seed = j.value("seed", std::uint64_t{0});
    rec.html = j.at("html").get<std::string>();
    rec.csv = j.at("csv").get<std::string>();
    rec.structure = structure_from_json(j.at("structure").dump());
    for (const Json& p : j.at("qa_pairs")) {
        QAPair pair;
        pair.question = p.at("question").get<std::string>();
        pair.answer_text = p.at("answer").get<std::string>();
        pair.row_key = p.at("row_key").get<std::string>();
        pair.column_key = p.at("column_key").get<std::string>();
        pair.start = p.at("start").get<int>();
        pair.end = p.at("end").get<int>();
        rec.qa_pairs.push_back(std::move(pair));
    }
    rec.competition_pair = j.at("competition_pair").get<int>();
    if (j.contains("a4")) {
        rec.has_a4 = true;
        rec.a4.offset_x = j.at("a4").at("offset").at(0).get<int>();
        rec.a4.offset_y = j.at("a4").at("offset").at(1).get<int>();
        rec.a4.scale = j.at("a4").at("scale").get<double>();
    }
    return rec;
}

std::string dataset_stats(const std::filesystem::path& dataset_root) {
    auto entries = load_manifest(dataset_root);

    std::map<int, std::int64_t> theme_counts;
    std::map<std::string, std::int64_t> split_counts;
    std::map<int, std::int64_t> row_hist, col_hist, qa_hist;
    std::int64_t data_cells = 0, empty_data_cells = 0, negative_values = 0, qa_total = 0;
    Json errors = Json::array();

    for (const ManifestEntry& entry : entries) {
        ++theme_counts[entry.theme];
        ++split_counts[split_name(entry.split)];
        try {
            LoadedRecord rec = load_record(dataset_root, entry);
            ++row_hist[static_cast<int>(rec.structure.table.rows.size())];
            ++col_hist[rec.structure.table.column_count];
            ++qa_hist[static_cast<int>(rec.qa_pairs.size())];
            qa_total += static_cast<std::int64_t>(rec.qa_pairs.size());
            for (const Row& row : rec.structure.table.rows) {
                for (const Cell& cell : row.cells) {
                    if (cell.type != CellType::Data) continue;
                    ++data_cells;
                    if (cell.empty()) ++empty_data_cells;
                    else if (cell.words.size() == 1 &&
                             (cell.words[0].front() == '(' || cell.words[0].front() == '-'))
                        ++negative_values;
                }
            }
        } catch (const std::exception& e) {
            errors.push_back(Json{{"id", entry.id}, {"error", e.what()}});
        }
    }

    auto hist_json = [](const std::map<int, std::int64_t>& h) {
        Json j;
        for (const auto& [k, v] : h) j[std::to_string(k)] = v;
        return j;
    };

    Json j;
    j["total"] = static_cast<std::int64_t>(entries.size());
    Json themes;
    for (const auto& [t, n] : theme_counts) themes[std::to_string(t)] = n;
    j["themes"] = std::move(themes);
    Json splits;
    for (const auto& [s, n] : split_counts) splits[s] = n;
    j["splits"] = std::move(splits);
    j["rows_per_table"] = hist_json(row_hist);
    j["columns_per_table"] = hist_json(col_hist);
    j["qa_pairs_per_table"] = hist_json(qa_hist);
    j["qa_pairs_total"] = qa_total;
    j["data_cells"] = data_cells;
    j["empty_data_cell_rate"] = data_cells ? static_cast<double>(empty_data_cells) / data_cells : 0.0;
    j["negative_value_rate"] = data_cells ? static_cast<double>(negative_values) / data_cells : 0.0;
    j["errors"] = std::move(errors);
    return j.dump();
}

ValidationReport validate_dataset(const std::filesystem::path& dataset_root) {
    struct Check {
        std::int64_t failures = 0;
        std::string first_detail;
        void fail(const std::string& detail) {
            if (failures == 0) first_detail = detail;
            ++failures;
        }
    };
    Check manifest_check, structure_check, geometry_check, span_check, consistency_check;
    std::int64_t records = 0;

    std::vector<ManifestEntry> entries;
    try {
        entries = load_manifest(dataset_root);
        if (entries.empty()) manifest_check.fail("manifest is empty");
    } catch (const std::exception& e) {
        manifest_check.fail(e.what());
    }

    std::set<std::string> seen_ids;
    for (const ManifestEntry& entry : entries) {
        ++records;
        if (!seen_ids.insert(entry.id).second) manifest_check.fail("duplicate id " + entry.id);
        for (const std::string& rel : {entry.image, entry.annotation}) {
            if (!std::filesystem::exists(dataset_root / rel))
                manifest_check.fail("missing file " + rel);
        }
        if (!entry.image_a4.empty() && !std::filesystem::exists(dataset_root / entry.image_a4))
            manifest_check.fail("missing file " + entry.image_a4);

        LoadedRecord rec;
        try {
            rec = load_record(dataset_root, entry);
        } catch (const std::exception& e) {
            structure_check.fail(entry.id + ": " + e.what());
            continue;
        }
        if (rec.id != entry.id) manifest_check.fail("annotation id mismatch for " + entry.id);
        if (rec.theme != entry.theme || rec.split != entry.split)
            manifest_check.fail("annotation metadata mismatch for " + entry.id);
        if (rec.competition_pair < 0 ||
            rec.competition_pair >= static_cast<int>(rec.qa_pairs.size()))
            structure_check.fail(entry.id + ": competition pair index out of range");

        auto table_problems = validate_table(rec.structure.table);
        auto layout_problems = validate_layout(rec.structure.table, rec.structure.layout);
        for (const auto& p : table_problems) structure_check.fail(entry.id + ": " + p);
        for (const auto& p : layout_problems) geometry_check.fail(entry.id + ": " + p);

        const auto& words = rec.structure.layout.words;
        for (const QAPair& pair : rec.qa_pairs) {
            if (pair.start < 0 || pair.end <= pair.start ||
                pair.end > static_cast<int>(words.size())) {
                span_check.fail(entry.id + ": span out of range");
                continue;
            }
            std::string joined;
            for (int i = pair.start; i < pair.end; ++i) {
                if (i > pair.start) joined += ' ';
                joined += words[static_cast<std::size_t>(i)].text;
            }
            if (joined != pair.answer_text)
                span_check.fail(entry.id + ": span text '" + joined + "' != answer '" +
                                pair.answer_text + "'");
        }

        try {
            auto reference = table_grid(rec.structure.table);
            if (grid_from_html(rec.html) != reference)
                consistency_check.fail(entry.id + ": html grid mismatch");
            if (grid_from_csv(rec.csv) != reference)
                consistency_check.fail(entry.id + ": csv grid mismatch");
        } catch (const std::exception& e) {
            consistency_check.fail(entry.id + ": " + e.what());
        }
    }

    Json j;
    bool ok = true;
    auto emit = [&](const char* name, const Check& c) {
        Json cj;
        cj["passed"] = c.failures == 0;
        cj["failures"] = c.failures;
        if (c.failures > 0) cj["first_failure"] = c.first_detail;
        j[name] = std::move(cj);
        ok = ok && c.failures == 0;
    };
    j["records"] = records;
    emit("manifest", manifest_check);
    emit("structure", structure_check);
    emit("geometry", geometry_check);
    emit("span_fidelity", span_check);
    emit("triple_consistency", consistency_check);
    j["ok"] = ok;
    return ValidationReport{ok, j.dump()};
}

}  // namespace tabforge
