#include <lzcmp/suffix_index.hpp>

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>

namespace lzcmp {

RangeMin::RangeMin(std::span<const std::uint32_t> values) {
    if (values.empty()) return;
    levels_.emplace_back(values.begin(), values.end());
    for (std::size_t width = 2; width <= values.size(); width *= 2) {
        const auto& prev = levels_.back();
        const std::size_t half = width / 2;
        std::vector<std::uint32_t> next(values.size() - width + 1);
        for (std::size_t i = 0; i < next.size(); ++i) next[i] = std::min(prev[i], prev[i + half]);
        levels_.push_back(std::move(next));
    }
}

std::uint32_t RangeMin::query(std::size_t lo, std::size_t hi) const {
    const std::size_t level = std::bit_width(hi - lo + 1) - 1;
    const auto& row = levels_[level];
    return std::min(row[lo], row[hi + 1 - (std::size_t{1} << level)]);
}

namespace {

std::vector<std::uint32_t> build_suffix_array(std::span<const Symbol> s, std::size_t sigma) {
    const std::size_t n = s.size();
    std::vector<std::uint32_t> sa(n), rank(n), tmp(n);
    if (n == 0) return sa;
    std::vector<std::uint32_t> count(std::max(sigma, n) + 1);

    for (Symbol c : s) ++count[c];
    for (std::size_t c = 1; c < count.size(); ++c) count[c] += count[c - 1];
    for (std::size_t i = n; i-- > 0;) sa[--count[s[i]]] = static_cast<std::uint32_t>(i);
    std::size_t classes = 1;
    rank[sa[0]] = 0;
    for (std::size_t r = 1; r < n; ++r) {
        if (s[sa[r]] != s[sa[r - 1]]) ++classes;
        rank[sa[r]] = static_cast<std::uint32_t>(classes - 1);
    }

    for (std::size_t k = 1; classes < n; k *= 2) {
        // Order by the second key: suffixes shorter than k come first.
        std::size_t p = 0;
        for (std::size_t i = n - k; i < n; ++i) tmp[p++] = static_cast<std::uint32_t>(i);
        for (std::size_t r = 0; r < n; ++r) {
            if (sa[r] >= k) tmp[p++] = static_cast<std::uint32_t>(sa[r] - k);
        }
        // Stable counting sort by the first key.
        std::fill(count.begin(), count.begin() + static_cast<std::ptrdiff_t>(classes) + 1, 0);
        for (std::size_t i = 0; i < n; ++i) ++count[rank[i]];
        for (std::size_t c = 1; c <= classes; ++c) count[c] += count[c - 1];
        for (std::size_t r = n; r-- > 0;) sa[--count[rank[tmp[r]]]] = tmp[r];

        auto second = [&](std::size_t i) -> std::int64_t { return i + k < n ? rank[i + k] : -1; };
        tmp[sa[0]] = 0;
        classes = 1;
        for (std::size_t r = 1; r < n; ++r) {
            const std::size_t a = sa[r - 1], b = sa[r];
            if (rank[a] != rank[b] || second(a) != second(b)) ++classes;
            tmp[b] = static_cast<std::uint32_t>(classes - 1);
        }
        rank.swap(tmp);
    }
    return sa;
}

// Smallest x in [0, start] with pred(x); pred(start) is assumed true and
// pred is monotone (false below some threshold, true above it).
template <typename Pred>
std::size_t gallop_down(std::size_t start, Pred pred) {
    std::size_t good = start, step = 1;
    while (good > 0) {
        const std::size_t cand = good > step ? good - step : 0;
        if (!pred(cand)) {
            std::size_t bad = cand;
            while (good - bad > 1) {
                const std::size_t mid = bad + (good - bad) / 2;
                (pred(mid) ? good : bad) = mid;
            }
            return good;
        }
        good = cand;
        step *= 2;
    }
    return good;
}

// Largest y in [start, last] with pred(y); mirror image of gallop_down.
template <typename Pred>
std::size_t gallop_up(std::size_t start, std::size_t last, Pred pred) {
    std::size_t good = start, step = 1;
    while (good < last) {
        const std::size_t cand = last - good > step ? good + step : last;
        if (!pred(cand)) {
            std::size_t bad = cand;
            while (bad - good > 1) {
                const std::size_t mid = good + (bad - good) / 2;
                (pred(mid) ? good : bad) = mid;
            }
            return good;
        }
        good = cand;
        step *= 2;
    }
    return good;
}

}  // namespace

SuffixIndex::SuffixIndex(const Text& text) {
    const std::size_t n = text.size();
    if (n >= std::numeric_limits<std::uint32_t>::max()) {
        throw std::length_error("text too long for a 32-bit suffix index");
    }
    const auto s = text.view();
    sa_ = build_suffix_array(s, std::max<std::size_t>(text.sigma, 1));
    rank_.resize(n);
    for (std::size_t r = 0; r < n; ++r) rank_[sa_[r]] = static_cast<std::uint32_t>(r);

    // Kasai et al.
    lcp_.assign(n, 0);
    std::size_t h = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (rank_[i] == 0) {
            h = 0;
            continue;
        }
        const std::size_t j = sa_[rank_[i] - 1];
        while (i + h < n && j + h < n && s[i + h] == s[j + h]) ++h;
        lcp_[rank_[i]] = static_cast<std::uint32_t>(h);
        if (h > 0) --h;
    }

    lcp_min_ = RangeMin(lcp_);
    sa_min_ = RangeMin(sa_);
}

std::size_t SuffixIndex::leftmost_occurrence(std::size_t pos, std::size_t len) const {
    if (len == 0) return 0;
    const std::size_t n = size();
    const std::size_t r = rank_[pos];

    // Rank interval [lo, hi] of suffixes sharing at least len symbols with
    // suffix pos, found by galloping away from r and then bisecting.
    auto shares = [&](std::size_t a, std::size_t b) { return lcp_min_.query(a, b) >= len; };
    const std::size_t lo = r == 0 ? 0 : gallop_down(r, [&](std::size_t x) { return shares(x + 1, r); });
    const std::size_t hi = gallop_up(r, n - 1, [&](std::size_t y) { return shares(r + 1, y); });
    return sa_min_.query(lo, hi);
}

Match SuffixIndex::longest_previous(std::size_t pos, Overlap overlap) const {
    const std::size_t n = size();
    if (pos == 0 || pos >= n) return {};
    const bool allowed = overlap == Overlap::Allowed;
    const std::size_t cap = allowed ? n - pos : std::min(n - pos, pos);

    auto admissible = [&](std::size_t len) {
        const std::size_t j = leftmost_occurrence(pos, len);
        return allowed ? j < pos : j + len <= pos;
    };

    std::size_t good = 0;
    std::size_t bad = cap + 1;
    for (std::size_t probe = 1; probe <= cap; probe *= 2) {
        if (admissible(probe)) {
            good = probe;
        } else {
            bad = probe;
            break;
        }
    }
    bad = std::min(bad, cap + 1);
    while (bad - good > 1) {
        const std::size_t mid = good + (bad - good) / 2;
        if (admissible(mid)) good = mid;
        else bad = mid;
    }
    if (good == 0) return {};
    return {good, leftmost_occurrence(pos, good)};
}

}  // namespace lzcmp
