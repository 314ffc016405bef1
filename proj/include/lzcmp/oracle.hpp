#pragma once

#include <lzcmp/parsing.hpp>
#include <lzcmp/text.hpp>

#include <cstddef>

namespace lzcmp {

struct OracleResult {
    Variant type;
    std::size_t min_size = 0;
    // One parsing of size min_size; among minimal parsings, the one whose
    // phrases are chosen longest-last when walking back from the end.
    Parsing witness;
};

inline constexpr std::size_t kOracleGuard = 1'000;

// Minimum number of phrases over every LZ-type / novLZ-type / LZ3-type /
// novLZ3-type parsing of `text`, by dynamic programming over prefix lengths
// with an all-pairs common-extension table. Throws SizeLimitError past the
// guard.
OracleResult min_parsing_size(const Text& text, Variant type, std::size_t guard = kOracleGuard);

// True iff the greedy parsing of every variant has the minimum size.
bool assert_greedy_optimal(const Text& text, std::size_t guard = kOracleGuard);

}  // namespace lzcmp
