#pragma once

#include <cstdint>
#include <vector>

#include "tabforge/table.hpp"

namespace tabforge {

// One question-answer pair per non-empty Data cell. The question is built
// from the cell's row header and column header ("What is the value of {row}
// for {column}?"); (start, end) is the half-open index range of the cell's
// words in the flattened word list.
std::vector<QAPair> generate_qa_pairs(const Table& table, const LayoutTree& layout);

// Uniform deterministic choice of the competition pair. Throws on an empty
// list (the builder regenerates such tables with the next retry seed).
int select_competition_pair(const std::vector<QAPair>& pairs, std::uint64_t seed);

}  // namespace tabforge
