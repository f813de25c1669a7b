#include "tabforge/eval.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "tabforge/render.hpp"
#include "tabforge/rng.hpp"

namespace tabforge {
namespace {

using Json = nlohmann::ordered_json;

std::vector<std::string> split_on_spaces(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream ss(text);
    std::string w;
    while (ss >> w) out.push_back(w);
    return out;
}

std::string join_words(const std::vector<std::string>& words, std::size_t begin, std::size_t end) {
    std::string out;
    for (std::size_t i = begin; i < end; ++i) {
        if (i > begin) out += ' ';
        out += words[i];
    }
    return out;
}

constexpr SpanPair kZeroSpan{0, 0};
constexpr SpanPair kMissSpan{0, 1};  // predictor fallback when keys are unusable

SpanPair context_gold(const Context& context, const std::string& answer_text) {
    auto found = find_answer_span(context, answer_text);
    return found ? *found : kZeroSpan;
}

}  // namespace

std::optional<SpanPair> find_answer_span(const Context& context, const std::string& answer_text) {
    auto target = split_on_spaces(answer_text);
    if (target.empty()) return std::nullopt;
    std::size_t n = target.size();
    if (context.words.size() < n) return std::nullopt;
    for (std::size_t start = 0; start + n <= context.words.size(); ++start) {
        bool match = true;
        for (std::size_t k = 0; k < n && match; ++k) match = context.words[start + k] == target[k];
        // Space-joined window must equal the answer exactly; comparing word
        // by word is equivalent because both sides are split on spaces.
        if (match) return SpanPair{static_cast<int>(start), static_cast<int>(start + n)};
    }
    return std::nullopt;
}

SpanPair decode_span(const std::vector<double>& start_scores, const std::vector<double>& end_scores,
                     bool constrained) {
    if (start_scores.size() != end_scores.size())
        throw std::invalid_argument("decode_span: score vectors must have equal length");
    std::size_t length = start_scores.size();
    if (length < 2) throw std::invalid_argument("decode_span: need at least two positions");

    std::size_t start = 0;
    for (std::size_t i = 1; i < length; ++i)
        if (start_scores[i] > start_scores[start]) start = i;

    std::size_t end_raw;
    if (constrained) {
        if (start + 1 >= length)
            // The start argmax fell on the last position: the only spans with
            // end > start would leave the context, so clamp to the last pair.
            return SpanPair{static_cast<int>(length - 2), static_cast<int>(length)};
        end_raw = start + 1;
        for (std::size_t i = start + 2; i < length; ++i)
            if (end_scores[i] > end_scores[end_raw]) end_raw = i;
    } else {
        end_raw = 0;
        for (std::size_t i = 1; i < length; ++i)
            if (end_scores[i] > end_scores[end_raw]) end_raw = i;
    }
    return SpanPair{static_cast<int>(start), static_cast<int>(end_raw + 1)};
}

bool exact_match(const SpanPair& pred, int gold_start, int gold_end) {
    return pred.start == gold_start && pred.end == gold_end;
}

const char* error_category_name(ErrorCategory c) {
    switch (c) {
        case ErrorCategory::Correct: return "correct";
        case ErrorCategory::HeaderNotInContext: return "header_not_in_context";
        case ErrorCategory::AnswerNotInContext: return "answer_not_in_context";
        case ErrorCategory::WrongSpan: return "wrong_span";
    }
    throw std::logic_error("unknown error category");
}

ErrorCategory classify_error(const Context& context, const QAPair& gold, const SpanPair& pred,
                             const SpanPair& gold_span) {
    if (exact_match(pred, gold_span.start, gold_span.end)) return ErrorCategory::Correct;
    if (!find_answer_span(context, gold.row_key) || !find_answer_span(context, gold.column_key))
        return ErrorCategory::HeaderNotInContext;
    if (!find_answer_span(context, gold.answer_text)) return ErrorCategory::AnswerNotInContext;
    return ErrorCategory::WrongSpan;
}

Context corrupt_context(const Context& context, double corruption_rate, std::uint64_t seed) {
    if (context.words.size() != context.boxes.size())
        throw std::invalid_argument("corrupt_context: words and boxes must be parallel");
    if (corruption_rate < 0 || corruption_rate > 1)
        throw std::invalid_argument("corrupt_context: rate must be in [0,1]");

    static const std::u32string kReplacementPool = U"abcdefghijklmnopqrstuvwxyz";

    Context out;
    out.source = ContextSource::OcrOutput;
    for (std::size_t i = 0; i < context.words.size(); ++i) {
        // One stream per word, independent of the rate: the uniform draw only
        // gates the (otherwise identical) corruption, so corruption sets nest
        // across rates.
        Rng rng(derive_table_seed(seed, seed_stream::kCorruptionBase + static_cast<std::uint64_t>(i)));
        bool corrupt = rng.real01() < corruption_rate;
        const std::string& word = context.words[i];
        const VirtualBox& box = context.boxes[i];
        if (!corrupt) {
            out.words.push_back(word);
            out.boxes.push_back(box);
            continue;
        }

        std::u32string cps = decode_utf8(word);
        int op = static_cast<int>(rng.below(3));
        bool can_split = cps.size() >= 2 && box.x1 - box.x0 >= 2;
        if (op == 2 && !can_split) op = 0;

        auto encode = [](const std::u32string& s) {
            std::string bytes;
            for (char32_t cp : s) {
                if (cp < 0x80) {
                    bytes += static_cast<char>(cp);
                } else if (cp < 0x800) {
                    bytes += static_cast<char>(0xC0 | (cp >> 6));
                    bytes += static_cast<char>(0x80 | (cp & 0x3F));
                } else {
                    bytes += static_cast<char>(0xE0 | (cp >> 12));
                    bytes += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
                    bytes += static_cast<char>(0x80 | (cp & 0x3F));
                }
            }
            return bytes;
        };

        if (op == 0) {
            // Substitution: one codepoint becomes a letter it was not.
            std::size_t pos = static_cast<std::size_t>(rng.below(cps.size()));
            char32_t replacement;
            do {
                replacement = kReplacementPool[static_cast<std::size_t>(rng.below(kReplacementPool.size()))];
            } while (replacement == cps[pos]);
            cps[pos] = replacement;
            out.words.push_back(encode(cps));
            out.boxes.push_back(box);
        } else if (op == 1) {
            // Drop: the word and its box disappear.
        } else {
            std::size_t pos = 1 + static_cast<std::size_t>(rng.below(cps.size() - 1));
            int width = box.x1 - box.x0;
            int cut = box.x0 + std::clamp(static_cast<int>(std::lround(
                                              static_cast<double>(width) * static_cast<double>(pos) /
                                              static_cast<double>(cps.size()))),
                                          1, width - 1);
            out.words.push_back(encode(cps.substr(0, pos)));
            out.boxes.push_back(VirtualBox{box.x0, box.y0, cut, box.y1});
            out.words.push_back(encode(cps.substr(pos)));
            out.boxes.push_back(VirtualBox{cut, box.y0, box.x1, box.y1});
        }
    }
    return out;
}

Predictor make_oracle_predictor() {
    return [](const Context& context, const PredictorInput& input) {
        return context_gold(context, input.answer_text);
    };
}

Predictor make_search_predictor() {
    return [](const Context& context, const PredictorInput& input) -> SpanPair {
        auto row_window = find_answer_span(context, input.row_key);
        auto col_window = find_answer_span(context, input.column_key);
        if (!row_window || !col_window) return kMissSpan;

        auto band_y = [&](const SpanPair& span) {
            int lo = context.boxes[static_cast<std::size_t>(span.start)].y0;
            int hi = context.boxes[static_cast<std::size_t>(span.start)].y1;
            for (int i = span.start; i < span.end; ++i) {
                lo = std::min(lo, context.boxes[static_cast<std::size_t>(i)].y0);
                hi = std::max(hi, context.boxes[static_cast<std::size_t>(i)].y1);
            }
            return std::make_pair(lo, hi);
        };
        auto band_x = [&](const SpanPair& span) {
            int lo = context.boxes[static_cast<std::size_t>(span.start)].x0;
            int hi = context.boxes[static_cast<std::size_t>(span.start)].x1;
            for (int i = span.start; i < span.end; ++i) {
                lo = std::min(lo, context.boxes[static_cast<std::size_t>(i)].x0);
                hi = std::max(hi, context.boxes[static_cast<std::size_t>(i)].x1);
            }
            return std::make_pair(lo, hi);
        };
        auto [row_y0, row_y1] = band_y(*row_window);
        auto [col_x0, col_x1] = band_x(*col_window);

        // First contiguous run of words overlapping both the row's y band and
        // the column's x band: the cell where the headers intersect.
        int run_start = -1, run_end = -1;
        for (std::size_t i = 0; i < context.words.size(); ++i) {
            const VirtualBox& b = context.boxes[i];
            bool candidate = b.y0 < row_y1 && row_y0 < b.y1 && b.x0 < col_x1 && col_x0 < b.x1;
            if (candidate) {
                if (run_start < 0) {
                    run_start = static_cast<int>(i);
                    run_end = run_start + 1;
                } else if (run_end == static_cast<int>(i)) {
                    run_end = static_cast<int>(i) + 1;
                } else {
                    break;  // a later disjoint run; keep the first
                }
            } else if (run_start >= 0) {
                break;  // first maximal run complete
            }
        }
        if (run_start < 0) return kMissSpan;

        std::string text = join_words(context.words, static_cast<std::size_t>(run_start),
                                      static_cast<std::size_t>(run_end));
        auto span = find_answer_span(context, text);
        return span ? *span : kMissSpan;
    };
}

EvalReport evaluate(const std::vector<EvalExample>& examples, const Predictor& predictor) {
    if (examples.empty()) throw std::invalid_argument("evaluate: no examples (refusing to report on zero)");

    EvalReport report;
    report.total = static_cast<std::int64_t>(examples.size());
    for (const EvalExample& ex : examples) {
        ExampleResult row;
        row.id = ex.id;
        row.gold = context_gold(ex.context, ex.pair.answer_text);
        PredictorInput input{ex.id, ex.pair.question, ex.pair.row_key, ex.pair.column_key,
                             ex.pair.answer_text};
        try {
            row.pred = predictor(ex.context, input);
        } catch (const std::exception&) {
            row.pred = kMissSpan;
            row.predictor_failed = true;
            ++report.predictor_failures;
        }
        row.category = classify_error(ex.context, ex.pair, row.pred, row.gold);
        switch (row.category) {
            case ErrorCategory::Correct: ++report.correct; break;
            case ErrorCategory::HeaderNotInContext: ++report.header_not_in_context; break;
            case ErrorCategory::AnswerNotInContext: ++report.answer_not_in_context; break;
            case ErrorCategory::WrongSpan: ++report.wrong_span; break;
        }
        report.rows.push_back(std::move(row));
    }
    report.accuracy = static_cast<double>(report.correct) / static_cast<double>(report.total);
    return report;
}

std::string EvalReport::to_json() const {
    Json j;
    j["examples"] = total;
    j["correct"] = correct;
    j["accuracy"] = accuracy;
    j["categories"] = Json{{"correct", correct},
                           {"header_not_in_context", header_not_in_context},
                           {"answer_not_in_context", answer_not_in_context},
                           {"wrong_span", wrong_span}};
    j["predictor_failures"] = predictor_failures;
    return j.dump();
}

std::string scatter_csv(const EvalReport& report) {
    std::ostringstream out;
    out << "gold_start,pred_start,gold_end,pred_end,category\n";
    for (const ExampleResult& row : report.rows)
        out << row.gold.start << ',' << row.pred.start << ',' << row.gold.end << ',' << row.pred.end
            << ',' << error_category_name(row.category) << '\n';
    return out.str();
}

std::string scatter_svg(const EvalReport& report) {
    int max_pos = 1;
    for (const ExampleResult& row : report.rows)
        max_pos = std::max({max_pos, row.gold.end, row.pred.end});

    const int panel = 320, margin = 44, gap = 40;
    const int width = 2 * panel + 3 * margin + gap - margin;
    const int height = panel + 2 * margin;
    auto sx = [&](int panel_idx, double v) {
        return margin + panel_idx * (panel + gap) + v / max_pos * panel;
    };
    auto sy = [&](double v) { return margin + panel - v / max_pos * panel; };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\">\n";
    const char* titles[2] = {"Start positions", "End positions"};
    for (int p = 0; p < 2; ++p) {
        double x0 = sx(p, 0), x1 = sx(p, max_pos);
        svg << "<rect x=\"" << x0 << "\" y=\"" << margin << "\" width=\"" << panel << "\" height=\""
            << panel << "\" fill=\"white\" stroke=\"black\"/>\n";
        svg << "<line x1=\"" << x0 << "\" y1=\"" << sy(0) << "\" x2=\"" << x1 << "\" y2=\""
            << sy(max_pos) << "\" stroke=\"#bbbbbb\"/>\n";
        svg << "<text x=\"" << x0 + panel / 2.0 << "\" y=\"" << margin - 10
            << "\" text-anchor=\"middle\" font-size=\"13\">" << titles[p] << "</text>\n";
        for (const ExampleResult& row : report.rows) {
            int gx = p == 0 ? row.gold.start : row.gold.end;
            int py = p == 0 ? row.pred.start : row.pred.end;
            const char* color = row.category == ErrorCategory::Correct ? "#2a6fdb" : "#d64545";
            svg << "<circle cx=\"" << sx(p, gx) << "\" cy=\"" << sy(py)
                << "\" r=\"2.4\" fill=\"" << color << "\" fill-opacity=\"0.6\"/>\n";
        }
        svg << "<text x=\"" << x0 + panel / 2.0 << "\" y=\"" << height - 8
            << "\" text-anchor=\"middle\" font-size=\"11\">target</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

Context context_from_record(const LoadedRecord& record, EvalImageMode mode) {
    Context ctx;
    ctx.source = ContextSource::GroundTruth;
    const LayoutTree& layout = record.structure.layout;
    for (const WordLayout& wl : layout.words) {
        ctx.words.push_back(wl.text);
        if (mode == EvalImageMode::TableBoundary) {
            ctx.boxes.push_back(to_virtual_coords(wl.box, layout.page_width, layout.page_height));
        } else {
            if (!record.has_a4)
                throw std::invalid_argument("record " + record.id + " has no A4 image variant");
            BBox on_page = paste_box(wl.box, record.a4);
            ctx.boxes.push_back(to_virtual_coords(on_page, 794, 1123));
        }
    }
    return ctx;
}

}  // namespace tabforge
