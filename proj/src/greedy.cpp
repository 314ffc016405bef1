#include <lzcmp/greedy.hpp>

#include <algorithm>

namespace lzcmp {

namespace {

// Shared phrase emission: given the longest admissible earlier match at
// 0-based position pos, append the phrase the variant's greedy rule picks.
// Returns the phrase length.
std::size_t emit_phrase(const Text& text, Variant variant, std::size_t pos, Match m, Parsing& out) {
    const std::size_t n = text.size();
    const std::size_t start = pos + 1;
    if (!variant.triples()) {
        if (m.len == 0) {
            out.phrases.push_back(Phrase::literal(start, text[pos]));
            return 1;
        }
        out.phrases.push_back(Phrase::copy(start, m.len, m.source + 1));
        return m.len;
    }
    if (m.len == 0) {
        out.phrases.push_back(Phrase::literal(start, text[pos]));
        return 1;
    }
    if (pos + m.len == n) {
        out.phrases.push_back(Phrase::copy(start, m.len, m.source + 1));
        return m.len;
    }
    out.phrases.push_back(Phrase::copy_with_letter(start, m.len + 1, m.source + 1, text[pos + m.len]));
    return m.len + 1;
}

}  // namespace

Parsing parse_greedy(const Text& text, const SuffixIndex& index, Variant variant) {
    Parsing out{variant, {}, text.size()};
    for (std::size_t pos = 0; pos < text.size();) {
        pos += emit_phrase(text, variant, pos, index.longest_previous(pos, variant.overlap), out);
    }
    return out;
}

Parsing parse_greedy(const Text& text, Variant variant) {
    if (text.empty()) return Parsing{variant, {}, 0};
    const SuffixIndex index(text);
    return parse_greedy(text, index, variant);
}

Parsing parse_reference(const Text& text, Variant variant, std::size_t guard) {
    const std::size_t n = text.size();
    if (n > guard) {
        throw SizeLimitError("reference parser guard is " + std::to_string(guard) + " symbols, text has " +
                             std::to_string(n));
    }

    // Leftmost j <= last with text[j, j + len) == text[pos, pos + len).
    auto find_leftmost = [&](std::size_t pos, std::size_t len, std::size_t last) -> std::optional<std::size_t> {
        for (std::size_t j = 0; j <= last; ++j) {
            std::size_t t = 0;
            while (t < len && text[j + t] == text[pos + t]) ++t;
            if (t == len) return j;
        }
        return std::nullopt;
    };
    // Leftmost admissible earlier occurrence of text[pos, pos + len).
    auto admissible = [&](std::size_t pos, std::size_t len) -> std::optional<std::size_t> {
        if (variant.overlapping()) {
            if (pos == 0) return std::nullopt;
            return find_leftmost(pos, len, pos - 1);
        }
        if (pos < len) return std::nullopt;
        return find_leftmost(pos, len, pos - len);
    };

    Parsing out{variant, {}, n};
    for (std::size_t pos = 0; pos < n;) {
        const std::size_t start = pos + 1;
        if (!variant.triples()) {
            std::size_t len = 0, source = 0;
            while (pos + len < n) {
                auto j = admissible(pos, len + 1);
                if (!j) break;
                ++len;
                source = *j;
            }
            if (len == 0) {
                out.phrases.push_back(Phrase::literal(start, text[pos]));
                pos += 1;
            } else {
                out.phrases.push_back(Phrase::copy(start, len, source + 1));
                pos += len;
            }
            continue;
        }

        // Longest f with f[1..|f|-1] admissible; the empty reference always is.
        std::size_t len = 1;
        while (pos + len < n && admissible(pos, len)) ++len;
        if (pos + len == n) {
            if (auto whole = admissible(pos, len)) {
                out.phrases.push_back(Phrase::copy(start, len, *whole + 1));
                pos += len;
                continue;
            }
        }
        if (len == 1) {
            out.phrases.push_back(Phrase::literal(start, text[pos]));
        } else {
            const std::size_t source = *admissible(pos, len - 1);
            out.phrases.push_back(Phrase::copy_with_letter(start, len, source + 1, text[pos + len - 1]));
        }
        pos += len;
    }
    return out;
}

}  // namespace lzcmp
