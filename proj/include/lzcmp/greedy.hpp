#pragma once

#include <lzcmp/parsing.hpp>
#include <lzcmp/suffix_index.hpp>
#include <lzcmp/text.hpp>

#include <cstddef>
#include <stdexcept>

namespace lzcmp {

// Input larger than the guard of a quadratic-or-worse routine.
class SizeLimitError : public std::length_error {
public:
    using std::length_error::length_error;
};

// Greedy left-to-right parsing for the given variant. Copy phrases record the
// leftmost admissible source. For triple variants the final phrase carries no
// trailing letter when the text ends while the reference is still extending.
Parsing parse_greedy(const Text& text, Variant variant);

// Same, reusing a prebuilt index of `text`.
Parsing parse_greedy(const Text& text, const SuffixIndex& index, Variant variant);

inline constexpr std::size_t kReferenceGuard = 100'000;

// Direct scan over every earlier start position; quadratic per phrase.
// Produces exactly the same phrases as parse_greedy(). Throws
// SizeLimitError when the text is longer than `guard`.
Parsing parse_reference(const Text& text, Variant variant, std::size_t guard = kReferenceGuard);

}  // namespace lzcmp
