#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lzcmp {

using Symbol = std::uint32_t;

// Thrown when a text violates its alphabet bound or an input cannot be mapped.
class TextError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A string over the integer alphabet [0..sigma-1].
//
// `letters` optionally assigns a display byte to every symbol id; it is
// filled by from_bytes() and by the family generators so that parsings can
// be printed in the familiar a.b.abab.c notation.
struct Text {
    std::vector<Symbol> symbols;
    std::size_t sigma = 0;
    std::string letters;

    Text() = default;
    Text(std::vector<Symbol> syms, std::size_t alphabet_size, std::string display = {});

    std::size_t size() const noexcept { return symbols.size(); }
    bool empty() const noexcept { return symbols.empty(); }
    Symbol operator[](std::size_t i) const { return symbols[i]; }
    std::span<const Symbol> view() const noexcept { return symbols; }

    // Display character for a symbol id; see default_letter().
    char letter(Symbol s) const;

    // Throws TextError unless every symbol is below sigma and `letters`
    // is either empty or has exactly sigma distinct entries.
    void check() const;

    friend bool operator==(const Text& a, const Text& b) noexcept {
        return a.symbols == b.symbols && a.sigma == b.sigma;
    }
};

// Maps bytes to symbol ids in order of first occurrence.
Text from_bytes(std::string_view bytes);

// Symbol id = byte value, sigma = 256. Used where ids must survive a round
// trip through a container that does not record the byte mapping.
Text from_raw_bytes(std::string_view bytes);

// Inverse of from_raw_bytes(); throws TextError for ids above 255.
std::string to_raw_bytes(const Text& text);

// Parses whitespace-separated non-negative integers; sigma = max + 1.
Text from_int_sequence(std::string_view input);

// Renders every symbol through Text::letter().
std::string to_bytes(const Text& text);

// Whitespace-separated symbol ids, newline terminated.
std::string to_int_sequence(const Text& text);

// a..z, A..Z, 0..9 for ids below 62, the raw byte value below 256.
char default_letter(Symbol s);

// Renders text[begin, begin + len) through the text's letters.
std::string render(const Text& text, std::size_t begin, std::size_t len);

}  // namespace lzcmp
