#pragma once

#include <lzcmp/text.hpp>

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lzcmp {

enum class Shape : std::uint8_t { Pairs, Triples };
enum class Overlap : std::uint8_t { Allowed, Forbidden };

// One of the four LZ77 flavours. The same value doubles as a parsing *type*
// (LZ-type, novLZ-type, ...) when passed to validate_parsing().
struct Variant {
    Shape shape = Shape::Pairs;
    Overlap overlap = Overlap::Allowed;

    constexpr bool triples() const noexcept { return shape == Shape::Triples; }
    constexpr bool overlapping() const noexcept { return overlap == Overlap::Allowed; }

    // "lz", "novlz", "lz3", "novlz3"
    std::string_view name() const noexcept;
    // Single byte used by the codec container.
    std::uint8_t code() const noexcept;

    friend constexpr bool operator==(Variant, Variant) noexcept = default;
};

inline constexpr Variant kLZ{Shape::Pairs, Overlap::Allowed};
inline constexpr Variant kNovLZ{Shape::Pairs, Overlap::Forbidden};
inline constexpr Variant kLZ3{Shape::Triples, Overlap::Allowed};
inline constexpr Variant kNovLZ3{Shape::Triples, Overlap::Forbidden};
inline constexpr std::array<Variant, 4> kAllVariants{kLZ, kNovLZ, kLZ3, kNovLZ3};

// Accepts the names produced by Variant::name(). Throws std::invalid_argument.
Variant variant_from_name(std::string_view name);
Variant variant_from_code(std::uint8_t code);

// A factor of a parsing. Positions are 1-based.
//
//   literal            source empty,   trailing = the letter,  len == 1
//   copy               source set,     trailing empty          (pairs, or the
//                                                               final triple phrase
//                                                               cut off by the end
//                                                               of the text)
//   copy + letter      source set,     trailing set,           len >= 1; the first
//                                                               len-1 symbols are copied
struct Phrase {
    std::size_t start = 0;
    std::size_t len = 0;
    std::optional<std::size_t> source;
    std::optional<Symbol> trailing;

    bool is_literal() const noexcept { return !source.has_value(); }
    // Number of symbols taken from the source.
    std::size_t copy_len() const noexcept {
        if (!source) return 0;
        return trailing ? len - 1 : len;
    }
    std::size_t end() const noexcept { return start + len - 1; }

    static Phrase literal(std::size_t start, Symbol letter) { return {start, 1, std::nullopt, letter}; }
    static Phrase copy(std::size_t start, std::size_t len, std::size_t source) {
        return {start, len, source, std::nullopt};
    }
    static Phrase copy_with_letter(std::size_t start, std::size_t len, std::size_t source, Symbol letter) {
        return {start, len, source, letter};
    }

    friend bool operator==(const Phrase&, const Phrase&) = default;
};

struct Parsing {
    Variant variant;
    std::vector<Phrase> phrases;
    std::size_t text_len = 0;

    std::size_t size() const noexcept { return phrases.size(); }
    friend bool operator==(const Parsing&, const Parsing&) = default;
};

// Phrases do not tile [1..text_len], or lengths are zero.
class TilingError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A copy reaches material that has not been produced yet, or a symbol is
// outside the alphabet.
class CorruptParsingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Throws TilingError unless the phrases cover [1..text_len] contiguously.
void check_tiling(const Parsing& parsing);

// Checks the definition of an LZ-type / novLZ-type / LZ3-type / novLZ3-type
// parsing by direct substring search over the text; recorded sources are not
// consulted. Throws TilingError if the parsing does not tile the text.
bool validate_parsing(const Text& text, const Parsing& parsing, Variant type);

// Expands a parsing left to right. Copies whose source overlaps the phrase
// are resolved symbol by symbol.
Text reconstruct(const Parsing& parsing, std::size_t sigma);

// Phrases joined by dots, e.g. "a.b.abab.c".
std::string to_dot(const Text& text, const Parsing& parsing);

// True iff p is a period of text[begin, begin + len) (0-based begin).
bool has_period(const Text& text, std::size_t begin, std::size_t len, std::size_t p);

}  // namespace lzcmp
