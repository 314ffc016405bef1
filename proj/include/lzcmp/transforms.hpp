#pragma once

#include <lzcmp/parsing.hpp>
#include <lzcmp/text.hpp>

#include <cstddef>

namespace lzcmp {

struct TransformConfig {
    // Threshold coefficient; must lie strictly between 0 and 1.
    double alpha = 0.5;

    // Throws std::invalid_argument when alpha is outside (0, 1).
    void check() const;
};

// Integer distance threshold separating "near" from "far" overlapping
// sources: max(1, floor(alpha * log_sigma z)), and 1 when z <= 1 or sigma <= 1.
std::size_t near_threshold(std::size_t z, std::size_t sigma, double alpha);

// Rewrites the LZ parsing of `text` into a novLZ-type parsing.
//
// Phrases whose leftmost occurrence does not overlap them are kept. A phrase
// whose leftmost occurrence overlaps it at distance p is periodic with period
// p and is cut into pieces of doubling length, each of which has a
// non-overlapping copy exactly one piece-length to the left:
//
//   p >  k   pieces p, 2p, 4p, ... plus a shorter tail
//   p <= k   with c = floor(k / p): a head of length cp, then cp, 2cp, ...
//            plus a tail; the head is split into letters unless it has a
//            non-overlapping earlier occurrence. If cp >= |phrase| the whole
//            phrase is split into letters.
//
// The result passes validate_parsing(text, _, kNovLZ). Empty text yields an
// empty parsing.
Parsing overlap_to_nonoverlap_parsing(const Text& text, const TransformConfig& cfg = {});

// Splits every phrase f of the LZ3 (or novLZ3) parsing after the first into
// f[1..|f|-1] and its last letter, dropping empty pieces. The result is an
// LZ-type (novLZ-type) parsing of size at most 2 * z3 - 1.
Parsing triples_to_pairs_parsing(const Text& text, Overlap overlap = Overlap::Allowed);

}  // namespace lzcmp
