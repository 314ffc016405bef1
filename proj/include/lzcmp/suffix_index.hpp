#pragma once

#include <lzcmp/parsing.hpp>
#include <lzcmp/text.hpp>

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace lzcmp {

// Sparse table answering range-minimum queries in O(1).
class RangeMin {
public:
    RangeMin() = default;
    explicit RangeMin(std::span<const std::uint32_t> values);

    // Minimum over [lo, hi], inclusive. Requires lo <= hi < size().
    std::uint32_t query(std::size_t lo, std::size_t hi) const;
    std::size_t size() const noexcept { return levels_.empty() ? 0 : levels_[0].size(); }

private:
    std::vector<std::vector<std::uint32_t>> levels_;
};

// Longest admissible earlier match at a position, with its leftmost source.
// Positions are 0-based here; `len == 0` means no earlier occurrence.
struct Match {
    std::size_t len = 0;
    std::size_t source = 0;
};

// Suffix array, inverse suffix array, and LCP array of a text, plus the
// range-minimum structures needed to answer "leftmost occurrence of
// text[pos, pos + len)" in O(log len) time.
//
// Construction is prefix doubling with counting sorts, O(n log n); the LCP
// array comes from Kasai's algorithm.
class SuffixIndex {
public:
    explicit SuffixIndex(const Text& text);

    std::size_t size() const noexcept { return sa_.size(); }
    std::span<const std::uint32_t> suffix_array() const noexcept { return sa_; }
    std::span<const std::uint32_t> inverse() const noexcept { return rank_; }
    // lcp()[r] is the LCP of the suffixes of rank r-1 and r; lcp()[0] == 0.
    std::span<const std::uint32_t> lcp() const noexcept { return lcp_; }

    // Leftmost 0-based start of text[pos, pos + len). Requires pos + len <= size().
    std::size_t leftmost_occurrence(std::size_t pos, std::size_t len) const;

    // Longest prefix of text[pos..] with an occurrence starting before pos
    // (Overlap::Allowed) or ending no later than pos - 1 (Overlap::Forbidden).
    Match longest_previous(std::size_t pos, Overlap overlap) const;

private:
    std::vector<std::uint32_t> sa_;
    std::vector<std::uint32_t> rank_;
    std::vector<std::uint32_t> lcp_;
    RangeMin lcp_min_;
    RangeMin sa_min_;
};

}  // namespace lzcmp
