#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tabforge/builder.hpp"
#include "tabforge/config.hpp"
#include "tabforge/eval.hpp"
#include "tabforge/pixelops.hpp"
#include "tabforge/render.hpp"

namespace {

using Json = nlohmann::ordered_json;
using namespace tabforge;

GeneratorConfig load_config(const std::string& config_path, const std::string& themes_path,
                            std::optional<std::uint64_t> seed) {
    GeneratorConfig config =
        config_path.empty() ? GeneratorConfig::defaults() : load_config_file(config_path);
    if (!themes_path.empty()) config.themes = load_themes_file(themes_path);
    if (seed) config.master_seed = *seed;
    config.validate();
    return config;
}

struct PredictionEntry {
    bool has_span = false;
    SpanPair span;
    std::vector<double> start_scores, end_scores;
};

std::map<std::string, PredictionEntry> load_predictions(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open predictions file: " + path);
    std::map<std::string, PredictionEntry> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        Json j = Json::parse(line);
        PredictionEntry entry;
        if (j.contains("start") && j.contains("end")) {
            entry.has_span = true;
            entry.span = SpanPair{j.at("start").get<int>(), j.at("end").get<int>()};
        } else if (j.contains("start_scores") && j.contains("end_scores")) {
            entry.start_scores = j.at("start_scores").get<std::vector<double>>();
            entry.end_scores = j.at("end_scores").get<std::vector<double>>();
        } else {
            throw std::runtime_error("prediction line needs start/end or start_scores/end_scores");
        }
        out[j.at("id").get<std::string>()] = std::move(entry);
    }
    return out;
}

Context context_from_ocr_json(const Json& j, EvalImageMode mode, const LoadedRecord& record) {
    Context ctx;
    ctx.source = ContextSource::OcrOutput;
    const LayoutTree& layout = record.structure.layout;
    for (const Json& w : j.at("words")) {
        BBox box(w.at("bbox").at(0).get<int>(), w.at("bbox").at(1).get<int>(),
                 w.at("bbox").at(2).get<int>(), w.at("bbox").at(3).get<int>());
        ctx.words.push_back(w.at("text").get<std::string>());
        if (mode == EvalImageMode::TableBoundary) {
            ctx.boxes.push_back(to_virtual_coords(box, layout.page_width, layout.page_height));
        } else {
            ctx.boxes.push_back(to_virtual_coords(paste_box(box, record.a4), 794, 1123));
        }
    }
    return ctx;
}

int cmd_generate(const std::string& out_dir, std::int64_t total, std::optional<std::uint64_t> seed,
                 int workers, const std::string& config_path, const std::string& themes_path,
                 bool write_a4, bool overlays) {
    GeneratorConfig config = load_config(config_path, themes_path, seed);
    BuildOptions options;
    options.workers = workers;
    options.write_a4 = write_a4;
    options.debug_overlays = overlays;
    BuildSummary summary = build_dataset(config, total, out_dir, options);
    std::cout << summary.to_json() << "\n";
    return 0;
}

int cmd_validate(const std::string& in_dir) {
    ValidationReport report = validate_dataset(in_dir);
    std::cout << report.json << "\n";
    return report.ok ? 0 : 1;
}

int cmd_stats(const std::string& in_dir) {
    std::cout << dataset_stats(in_dir) << "\n";
    return 0;
}

int cmd_eval(const std::string& in_dir, const std::string& split, const std::string& predictor_name,
             const std::string& predictions_path, double corrupt_rate, std::uint64_t corrupt_seed,
             bool constrained, const std::string& scatter_path, const std::string& svg_path,
             const std::string& image_mode_name, const std::string& ocr_path) {
    EvalImageMode mode =
        image_mode_name == "a4" ? EvalImageMode::A4Page : EvalImageMode::TableBoundary;
    Split wanted = split_from_name(split);

    std::map<std::string, Json> ocr_by_id;
    if (!ocr_path.empty()) {
        std::ifstream in(ocr_path);
        if (!in) throw std::runtime_error("cannot open OCR file: " + ocr_path);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            Json j = Json::parse(line);
            ocr_by_id[j.at("id").get<std::string>()] = std::move(j);
        }
    }

    std::vector<EvalExample> examples;
    for (const ManifestEntry& entry : load_manifest(in_dir)) {
        if (entry.split != wanted) continue;
        LoadedRecord record = load_record(in_dir, entry);
        EvalExample ex;
        ex.id = record.id;
        ex.pair = record.qa_pairs.at(static_cast<std::size_t>(record.competition_pair));
        if (!ocr_by_id.empty()) {
            auto it = ocr_by_id.find(record.id);
            if (it == ocr_by_id.end())
                throw std::runtime_error("OCR file has no entry for record " + record.id);
            ex.context = context_from_ocr_json(it->second, mode, record);
        } else {
            ex.context = context_from_record(record, mode);
            if (corrupt_rate > 0)
                ex.context = corrupt_context(ex.context, corrupt_rate,
                                             derive_table_seed(corrupt_seed, fnv1a64(record.id)));
        }
        examples.push_back(std::move(ex));
    }

    Predictor predictor;
    if (!predictions_path.empty()) {
        auto predictions = load_predictions(predictions_path);
        predictor = [predictions = std::move(predictions), constrained](
                        const Context&, const PredictorInput& input) -> SpanPair {
            auto it = predictions.find(input.id);
            if (it == predictions.end())
                throw std::runtime_error("no prediction for record " + input.id);
            if (it->second.has_span) return it->second.span;
            return decode_span(it->second.start_scores, it->second.end_scores, constrained);
        };
    } else if (predictor_name == "oracle") {
        predictor = make_oracle_predictor();
    } else if (predictor_name == "search") {
        predictor = make_search_predictor();
    } else {
        throw std::runtime_error("unknown predictor: " + predictor_name);
    }

    EvalReport report = evaluate(examples, predictor);
    if (!scatter_path.empty()) {
        std::ofstream out(scatter_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write scatter CSV: " + scatter_path);
        out << scatter_csv(report);
    }
    if (!svg_path.empty()) {
        std::ofstream out(svg_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write scatter SVG: " + svg_path);
        out << scatter_svg(report);
    }
    std::cout << report.to_json() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Synthetic financial table dataset generator and span-QA evaluation harness"};
    app.require_subcommand(1);

    if (const char* simd = std::getenv("TABFORGE_SIMD")) {
        if (!pixelops::select(simd))
            std::cerr << "warning: TABFORGE_SIMD=" << simd << " unavailable, using "
                      << pixelops::active_name() << "\n";
    }

    std::string env_out = std::getenv("TABFORGE_OUT_ROOT") ? std::getenv("TABFORGE_OUT_ROOT") : "";
    int env_workers = 0;
    if (const char* w = std::getenv("TABFORGE_WORKERS")) env_workers = std::atoi(w);

    // generate
    auto* generate = app.add_subcommand("generate", "Generate a dataset");
    std::int64_t total = 0;
    std::optional<std::uint64_t> seed;
    std::string out_dir = env_out;
    int workers = env_workers;
    std::string config_path, themes_path;
    bool write_a4 = true, overlays = false;
    generate->add_option("--total", total, "Number of tables")->required()->check(CLI::PositiveNumber);
    generate->add_option("--seed", seed, "Master seed (overrides config)");
    auto* out_opt = generate->add_option("--out", out_dir, "Output directory");
    if (env_out.empty()) out_opt->required();
    generate->add_option("--workers", workers, "Worker threads (0 = hardware)");
    generate->add_option("--config", config_path, "Generator config JSON")->check(CLI::ExistingFile);
    generate->add_option("--themes", themes_path, "Theme styles JSON")->check(CLI::ExistingFile);
    generate->add_flag("--a4,!--no-a4", write_a4, "Write A4 page-size image variants (default on)");
    generate->add_flag("--debug-overlays", overlays, "Write side-by-side annotation overlays");

    // validate
    auto* validate = app.add_subcommand("validate", "Re-check a generated dataset");
    std::string validate_in;
    validate->add_option("--in", validate_in, "Dataset directory")->required()->check(CLI::ExistingDirectory);

    // stats
    auto* stats = app.add_subcommand("stats", "Dataset statistics report");
    std::string stats_in;
    stats->add_option("--in", stats_in, "Dataset directory")->required()->check(CLI::ExistingDirectory);

    // eval
    auto* eval = app.add_subcommand("eval", "Evaluate span predictions on a dataset split");
    std::string eval_in, eval_split = "test", predictor_name = "oracle";
    std::string predictions_path, scatter_path, svg_path, image_mode = "table", ocr_path;
    double corrupt_rate = 0.0;
    std::uint64_t corrupt_seed = 0;
    bool constrained = false;
    eval->add_option("--in", eval_in, "Dataset directory")->required()->check(CLI::ExistingDirectory);
    eval->add_option("--split", eval_split, "Dataset split (train|validation|test)");
    eval->add_option("--predictor", predictor_name, "Built-in predictor: oracle|search");
    eval->add_option("--predictions", predictions_path, "Predictions JSONL ({id,start,end} or score vectors)")
        ->check(CLI::ExistingFile);
    eval->add_option("--corrupt-rate", corrupt_rate, "OCR corruption rate in [0,1]")
        ->check(CLI::Range(0.0, 1.0));
    eval->add_option("--corrupt-seed", corrupt_seed, "OCR corruption seed");
    eval->add_flag("--constrained", constrained, "Decode score vectors with end after start");
    eval->add_option("--scatter-out", scatter_path, "Write target-vs-predicted scatter CSV here");
    eval->add_option("--scatter-svg", svg_path, "Write scatter SVG here");
    eval->add_option("--image-mode", image_mode, "Virtual coordinate frame: table|a4")
        ->check(CLI::IsMember({"table", "a4"}));
    eval->add_option("--ocr", ocr_path, "External OCR words JSONL")->check(CLI::ExistingFile);

    CLI11_PARSE(app, argc, argv);

    try {
        if (generate->parsed())
            return cmd_generate(out_dir, total, seed, workers, config_path, themes_path, write_a4,
                                overlays);
        if (validate->parsed()) return cmd_validate(validate_in);
        if (stats->parsed()) return cmd_stats(stats_in);
        if (eval->parsed())
            return cmd_eval(eval_in, eval_split, predictor_name, predictions_path, corrupt_rate,
                            corrupt_seed, constrained, scatter_path, svg_path, image_mode, ocr_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
