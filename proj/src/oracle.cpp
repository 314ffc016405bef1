#include <lzcmp/oracle.hpp>

#include <lzcmp/greedy.hpp>

#include <algorithm>
#include <limits>
#include <vector>

namespace lzcmp {

namespace {

// ext[j * (n + 1) + i] = length of the longest common prefix of the suffixes
// at j and i.
class CommonExtensions {
public:
    explicit CommonExtensions(const Text& text) : n_(text.size()), ext_((n_ + 1) * (n_ + 1), 0) {
        for (std::size_t j = n_; j-- > 0;) {
            for (std::size_t i = n_; i-- > 0;) {
                if (text[j] == text[i]) at(j, i) = at(j + 1, i + 1) + 1;
            }
        }
    }
    std::size_t operator()(std::size_t j, std::size_t i) const { return ext_[j * (n_ + 1) + i]; }

private:
    std::uint32_t& at(std::size_t j, std::size_t i) { return ext_[j * (n_ + 1) + i]; }

    std::size_t n_;
    std::vector<std::uint32_t> ext_;
};

}  // namespace

OracleResult min_parsing_size(const Text& text, Variant type, std::size_t guard) {
    const std::size_t n = text.size();
    if (n > guard) {
        throw SizeLimitError("oracle guard is " + std::to_string(guard) + " symbols, text has " +
                             std::to_string(n));
    }
    OracleResult result{type, 0, Parsing{type, {}, n}};
    if (n == 0) return result;

    const CommonExtensions ext(text);
    // Leftmost admissible start of an earlier copy of text[b, b + len).
    auto source_of = [&](std::size_t b, std::size_t len) -> std::optional<std::size_t> {
        for (std::size_t j = 0; j < b; ++j) {
            if (ext(j, b) >= len && (type.overlapping() || j + len <= b)) return j;
        }
        return std::nullopt;
    };

    // Longest phrase allowed to start at b. Every type is closed under
    // shortening a phrase, so [b, b + len) is admissible iff len <= reach[b].
    std::vector<std::size_t> reach(n);
    for (std::size_t b = 0; b < n; ++b) {
        std::size_t longest = 0;
        for (std::size_t j = 0; j < b; ++j) {
            std::size_t e = ext(j, b);
            if (!type.overlapping()) e = std::min(e, b - j);
            longest = std::max(longest, e);
        }
        reach[b] = type.triples() ? std::min(n - b, longest + 1) : std::max<std::size_t>(1, longest);
    }

    constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> best(n + 1, kInf), back(n + 1, 0);
    best[0] = 0;
    for (std::size_t e = 1; e <= n; ++e) {
        for (std::size_t b = 0; b < e; ++b) {
            if (e - b > reach[b] || best[b] == kInf) continue;
            if (best[b] + 1 < best[e]) {
                best[e] = best[b] + 1;
                back[e] = b;
            }
        }
    }
    result.min_size = best[n];

    std::vector<Phrase> phrases;
    for (std::size_t e = n; e > 0; e = back[e]) {
        const std::size_t b = back[e];
        const std::size_t len = e - b;
        const std::size_t start = b + 1;
        if (!type.triples()) {
            auto j = source_of(b, len);
            phrases.push_back(j ? Phrase::copy(start, len, *j + 1) : Phrase::literal(start, text[b]));
        } else if (len == 1) {
            phrases.push_back(Phrase::literal(start, text[b]));
        } else {
            phrases.push_back(Phrase::copy_with_letter(start, len, *source_of(b, len - 1) + 1, text[e - 1]));
        }
    }
    std::reverse(phrases.begin(), phrases.end());
    result.witness.phrases = std::move(phrases);
    return result;
}

bool assert_greedy_optimal(const Text& text, std::size_t guard) {
    if (text.size() > guard) {
        throw SizeLimitError("oracle guard is " + std::to_string(guard) + " symbols, text has " +
                             std::to_string(text.size()));
    }
    return std::all_of(kAllVariants.begin(), kAllVariants.end(), [&](Variant v) {
        return parse_greedy(text, v).size() == min_parsing_size(text, v, guard).min_size;
    });
}

}  // namespace lzcmp
