#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tabforge/bbox.hpp"
#include "tabforge/builder.hpp"
#include "tabforge/table.hpp"

namespace tabforge {

enum class ContextSource { GroundTruth, OcrOutput };

// A table's words and word boxes as fed to a span predictor. Boxes are in
// 0-1000 virtual coordinates, parallel to the words.
struct Context {
    std::vector<std::string> words;
    std::vector<VirtualBox> boxes;
    ContextSource source = ContextSource::GroundTruth;
};

struct SpanPair {
    int start = 0;
    int end = 0;  // half-open
    bool operator==(const SpanPair&) const = default;
};

// First contiguous word window whose space-joined text equals answer_text.
// Callers map NotFound to (0, 0), matching the zero-assignment convention.
std::optional<SpanPair> find_answer_span(const Context& context, const std::string& answer_text);

// Argmax span decoding. Ties go to the lowest index. Unconstrained, the raw
// end argmax may land at or before the start (an invalid span); constrained,
// the end is the argmax over indices strictly after the start. Either way the
// result is reported half-open (end = raw end index + 1).
SpanPair decode_span(const std::vector<double>& start_scores, const std::vector<double>& end_scores,
                     bool constrained);

// Strict positional exact match; never compares text.
bool exact_match(const SpanPair& pred, int gold_start, int gold_end);

enum class ErrorCategory { Correct, HeaderNotInContext, AnswerNotInContext, WrongSpan };

const char* error_category_name(ErrorCategory c);

ErrorCategory classify_error(const Context& context, const QAPair& gold, const SpanPair& pred,
                             const SpanPair& gold_span);

// Simulates imperfect OCR: each word independently, with probability
// corruption_rate, suffers a character substitution, a drop (with its box),
// or a split at a random position (box split proportionally). Draws are
// coupled across rates so the corrupted word set at a lower rate is a subset
// of the set at a higher rate under the same seed.
Context corrupt_context(const Context& context, double corruption_rate, std::uint64_t seed);

struct PredictorInput {
    std::string id;
    std::string question;
    std::string row_key;
    std::string column_key;
    std::string answer_text;  // for the diagnostic oracle predictor only
};

using Predictor = std::function<SpanPair(const Context&, const PredictorInput&)>;

// Echoes the context gold span (first occurrence of the answer, (0,0) when
// missing): the upper bound every other predictor is measured against.
Predictor make_oracle_predictor();

// Key-driven extraction baseline: finds the row-key and column-key windows,
// intersects their row/column bands geometrically, and returns the first
// occurrence of the text found there. Predicts (0, 1) when a key is missing
// or the cell is empty.
Predictor make_search_predictor();

struct EvalExample {
    std::string id;
    Context context;
    QAPair pair;
};

struct ExampleResult {
    std::string id;
    SpanPair gold;
    SpanPair pred;
    ErrorCategory category = ErrorCategory::Correct;
    bool predictor_failed = false;
};

struct EvalReport {
    std::int64_t total = 0;
    std::int64_t correct = 0;
    double accuracy = 0.0;
    std::int64_t header_not_in_context = 0;
    std::int64_t answer_not_in_context = 0;
    std::int64_t wrong_span = 0;
    std::int64_t predictor_failures = 0;
    std::vector<ExampleResult> rows;

    std::string to_json() const;
};

// Evaluates the predictor over each example's competition pair. The gold span
// is recomputed by first-occurrence search in the (possibly corrupted)
// context, exactly as at test time with OCR words. Throws on zero examples.
EvalReport evaluate(const std::vector<EvalExample>& examples, const Predictor& predictor);

// Scatter data for the target-vs-predicted position plots. One row per
// example: gold_start, pred_start, gold_end, pred_end, category. Examples
// whose answers were not found sit on the x=0 column.
std::string scatter_csv(const EvalReport& report);

// Two-panel SVG (start and end positions) of the same data.
std::string scatter_svg(const EvalReport& report);

enum class EvalImageMode { TableBoundary, A4Page };

// Ground-truth context of a stored record, with boxes scaled to virtual
// coordinates in the chosen image frame.
Context context_from_record(const LoadedRecord& record, EvalImageMode mode);

}  // namespace tabforge
