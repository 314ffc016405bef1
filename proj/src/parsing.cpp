#include <lzcmp/parsing.hpp>

#include <algorithm>

namespace lzcmp {

std::string_view Variant::name() const noexcept {
    if (triples()) return overlapping() ? "lz3" : "novlz3";
    return overlapping() ? "lz" : "novlz";
}

std::uint8_t Variant::code() const noexcept {
    return static_cast<std::uint8_t>((triples() ? 2 : 0) + (overlapping() ? 0 : 1));
}

Variant variant_from_name(std::string_view name) {
    for (Variant v : kAllVariants) {
        if (v.name() == name) return v;
    }
    throw std::invalid_argument("unknown variant '" + std::string(name) + "'");
}

Variant variant_from_code(std::uint8_t code) {
    if (code >= kAllVariants.size()) {
        throw std::invalid_argument("unknown variant code " + std::to_string(code));
    }
    return kAllVariants[code];
}

void check_tiling(const Parsing& parsing) {
    std::size_t next = 1;
    for (const Phrase& ph : parsing.phrases) {
        if (ph.len == 0) throw TilingError("phrase at " + std::to_string(ph.start) + " is empty");
        if (ph.start != next) {
            throw TilingError("phrase starts at " + std::to_string(ph.start) + ", expected " +
                              std::to_string(next));
        }
        next += ph.len;
    }
    if (next != parsing.text_len + 1) {
        throw TilingError("phrases cover " + std::to_string(next - 1) + " symbols of " +
                          std::to_string(parsing.text_len));
    }
}

namespace {

// Does text[from, from + len) occur at some 0-based j <= last_start?
bool occurs_no_later_than(const Text& text, std::size_t from, std::size_t len, std::size_t last_start) {
    if (len == 0) return true;
    const auto& s = text.symbols;
    auto pattern_begin = s.begin() + static_cast<std::ptrdiff_t>(from);
    auto pattern_end = pattern_begin + static_cast<std::ptrdiff_t>(len);
    auto hay_end = s.begin() + static_cast<std::ptrdiff_t>(std::min(s.size(), last_start + len));
    return std::search(s.begin(), hay_end, pattern_begin, pattern_end) != hay_end;
}

}  // namespace

bool validate_parsing(const Text& text, const Parsing& parsing, Variant type) {
    if (parsing.text_len != text.size()) {
        throw TilingError("parsing covers " + std::to_string(parsing.text_len) + " symbols, text has " +
                          std::to_string(text.size()));
    }
    check_tiling(parsing);

    for (const Phrase& ph : parsing.phrases) {
        const std::size_t s0 = ph.start - 1;
        if (!type.triples()) {
            if (ph.len == 1) continue;
            // The occurrence starts before the phrase; a non-overlapping one
            // also ends before it.
            if (type.overlapping()) {
                if (s0 == 0 || !occurs_no_later_than(text, s0, ph.len, s0 - 1)) return false;
            } else {
                if (s0 < ph.len || !occurs_no_later_than(text, s0, ph.len, s0 - ph.len)) return false;
            }
        } else {
            const std::size_t ref = ph.len - 1;
            if (ref == 0) continue;
            if (type.overlapping()) {
                if (s0 == 0 || !occurs_no_later_than(text, s0, ref, s0 - 1)) return false;
            } else {
                if (s0 < ref || !occurs_no_later_than(text, s0, ref, s0 - ref)) return false;
            }
        }
    }
    return true;
}

Text reconstruct(const Parsing& parsing, std::size_t sigma) {
    std::vector<Symbol> out;
    out.reserve(parsing.text_len);
    for (const Phrase& ph : parsing.phrases) {
        if (ph.start != out.size() + 1 || ph.len == 0) {
            throw CorruptParsingError("phrase at " + std::to_string(ph.start) + " does not follow position " +
                                      std::to_string(out.size()));
        }
        if (ph.is_literal() && (!ph.trailing || ph.len != 1)) {
            throw CorruptParsingError("literal phrase at " + std::to_string(ph.start) + " is malformed");
        }
        if (ph.source) {
            const std::size_t j0 = *ph.source - 1;
            const std::size_t n = ph.copy_len();
            if (*ph.source == 0 || j0 >= out.size()) {
                throw CorruptParsingError("dangling source " + std::to_string(*ph.source) + " for phrase at " +
                                          std::to_string(ph.start));
            }
            for (std::size_t t = 0; t < n; ++t) {
                // j0 + t < out.size() always holds once j0 < out.size(): the
                // output grows by one per copied symbol.
                out.push_back(out[j0 + t]);
            }
        }
        if (ph.trailing) {
            if (*ph.trailing >= sigma) {
                throw CorruptParsingError("symbol " + std::to_string(*ph.trailing) + " outside alphabet");
            }
            out.push_back(*ph.trailing);
        }
    }
    if (out.size() != parsing.text_len) {
        throw CorruptParsingError("parsing expands to " + std::to_string(out.size()) + " symbols, expected " +
                                  std::to_string(parsing.text_len));
    }
    return Text(std::move(out), sigma);
}

std::string to_dot(const Text& text, const Parsing& parsing) {
    std::string out;
    for (std::size_t i = 0; i < parsing.phrases.size(); ++i) {
        if (i) out.push_back('.');
        const Phrase& ph = parsing.phrases[i];
        out += render(text, ph.start - 1, ph.len);
    }
    return out;
}

bool has_period(const Text& text, std::size_t begin, std::size_t len, std::size_t p) {
    if (p == 0) return false;
    for (std::size_t i = begin; i + p < begin + len; ++i) {
        if (text[i] != text[i + p]) return false;
    }
    return true;
}

}  // namespace lzcmp
