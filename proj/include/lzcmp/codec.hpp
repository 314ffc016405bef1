#pragma once

#include <lzcmp/parsing.hpp>
#include <lzcmp/text.hpp>

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace lzcmp {

// Container layout, little-endian:
//
//   "LZCMP1"            6 bytes magic
//   variant             1 byte  (0 lz, 1 novlz, 2 lz3, 3 novlz3)
//   sigma               4 bytes
//   n                   8 bytes
//   tokens until EOF    1 tag byte, then base-128 varints:
//     0 Literal         symbol
//     1 PairCopy        len, offset
//     2 TripleCopy      len, offset, trailing symbol
//
// TripleCopy len counts the trailing symbol, so len - 1 symbols are copied.
// A triple-variant stream uses PairCopy only for a final phrase that the end
// of the text cut off before its trailing letter.
inline constexpr std::string_view kCodecMagic = "LZCMP1";
inline constexpr std::size_t kCodecHeaderSize = 6 + 1 + 4 + 8;

enum class TokenKind : std::uint8_t { Literal = 0, PairCopy = 1, TripleCopy = 2 };

struct Token {
    TokenKind kind = TokenKind::Literal;
    Symbol symbol = 0;        // Literal letter, or TripleCopy trailing letter
    std::uint64_t len = 0;     // copy kinds only
    std::uint64_t offset = 0;  // start - source, copy kinds only

    friend bool operator==(const Token&, const Token&) = default;
};

struct TokenStream {
    Variant variant;
    std::uint32_t sigma = 0;
    std::uint64_t n = 0;
    std::vector<Token> tokens;

    friend bool operator==(const TokenStream&, const TokenStream&) = default;
};

class DecodeError : public std::runtime_error {
public:
    enum class Reason { MalformedHeader, MalformedToken, OffsetBeforeStart, Truncated, Overrun };

    DecodeError(Reason reason, const std::string& what) : std::runtime_error(what), reason_(reason) {}
    Reason reason() const noexcept { return reason_; }

private:
    Reason reason_;
};

// One token per phrase, offsets start - source.
TokenStream encode(const Parsing& parsing, std::size_t sigma);

// Expands tokens left to right; copies with offset < len repeat symbol by
// symbol. Throws DecodeError.
Text decode(const TokenStream& stream);

std::vector<std::uint8_t> serialize(const TokenStream& stream);
// Throws DecodeError on a bad header or a token cut off by EOF.
TokenStream deserialize(std::span<const std::uint8_t> bytes);

// deserialize() followed by decode().
Text decode(std::span<const std::uint8_t> bytes);

// Overlap-forbidden streams never reference into the phrase being decoded:
// offset >= len for PairCopy, offset >= len - 1 for TripleCopy.
bool respects_overlap_rule(const TokenStream& stream);

}  // namespace lzcmp
