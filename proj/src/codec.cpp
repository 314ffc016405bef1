#include <lzcmp/codec.hpp>

#include <algorithm>

namespace lzcmp {

using Reason = DecodeError::Reason;

TokenStream encode(const Parsing& parsing, std::size_t sigma) {
    TokenStream stream{parsing.variant, static_cast<std::uint32_t>(sigma), parsing.text_len, {}};
    stream.tokens.reserve(parsing.size());
    for (const Phrase& ph : parsing.phrases) {
        Token t;
        if (ph.is_literal()) {
            t.kind = TokenKind::Literal;
            t.symbol = *ph.trailing;
        } else if (ph.trailing) {
            t.kind = TokenKind::TripleCopy;
            t.len = ph.len;
            t.offset = ph.start - *ph.source;
            t.symbol = *ph.trailing;
        } else {
            t.kind = TokenKind::PairCopy;
            t.len = ph.len;
            t.offset = ph.start - *ph.source;
        }
        stream.tokens.push_back(t);
    }
    return stream;
}

Text decode(const TokenStream& stream) {
    std::vector<Symbol> out;
    out.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(stream.n, std::uint64_t{1} << 30)));
    auto check_symbol = [&](Symbol c) {
        if (c >= stream.sigma) {
            throw DecodeError(Reason::MalformedToken, "symbol " + std::to_string(c) + " outside alphabet");
        }
    };
    auto check_room = [&](std::uint64_t extra) {
        if (out.size() + extra > stream.n) {
            throw DecodeError(Reason::Overrun, "tokens expand past the declared length " + std::to_string(stream.n));
        }
    };

    for (const Token& t : stream.tokens) {
        if (t.kind == TokenKind::Literal) {
            check_symbol(t.symbol);
            check_room(1);
            out.push_back(t.symbol);
            continue;
        }
        if (t.kind == TokenKind::TripleCopy && !stream.variant.triples()) {
            throw DecodeError(Reason::MalformedToken, "triple token in a pair stream");
        }
        const std::uint64_t min_len = t.kind == TokenKind::TripleCopy ? 2 : 1;
        if (t.len < min_len) throw DecodeError(Reason::MalformedToken, "copy token too short");
        if (t.offset == 0 || t.offset > out.size()) {
            throw DecodeError(Reason::OffsetBeforeStart,
                              "offset " + std::to_string(t.offset) + " reaches before position 1");
        }
        check_room(t.len);
        const std::uint64_t copied = t.kind == TokenKind::TripleCopy ? t.len - 1 : t.len;
        const std::size_t from = out.size() - static_cast<std::size_t>(t.offset);
        for (std::uint64_t q = 0; q < copied; ++q) out.push_back(out[from + q]);
        if (t.kind == TokenKind::TripleCopy) {
            check_symbol(t.symbol);
            out.push_back(t.symbol);
        }
    }
    if (out.size() != stream.n) {
        throw DecodeError(Reason::Truncated, "stream ends after " + std::to_string(out.size()) + " of " +
                                                 std::to_string(stream.n) + " symbols");
    }
    return Text(std::move(out), stream.sigma);
}

namespace {

void put_le(std::vector<std::uint8_t>& out, std::uint64_t value, int bytes) {
    for (int b = 0; b < bytes; ++b) out.push_back(static_cast<std::uint8_t>(value >> (8 * b)));
}

void put_varint(std::vector<std::uint8_t>& out, std::uint64_t value) {
    while (value >= 0x80) {
        out.push_back(static_cast<std::uint8_t>(value | 0x80));
        value >>= 7;
    }
    out.push_back(static_cast<std::uint8_t>(value));
}

class Reader {
public:
    explicit Reader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

    bool done() const noexcept { return pos_ == bytes_.size(); }

    std::uint8_t byte() {
        if (done()) throw DecodeError(Reason::Truncated, "unexpected end of stream");
        return bytes_[pos_++];
    }
    std::uint64_t le(int count) {
        std::uint64_t v = 0;
        for (int b = 0; b < count; ++b) v |= std::uint64_t{byte()} << (8 * b);
        return v;
    }
    std::uint64_t varint() {
        std::uint64_t v = 0;
        for (int shift = 0; shift < 64; shift += 7) {
            const std::uint8_t b = byte();
            v |= std::uint64_t{b & 0x7FU} << shift;
            if (!(b & 0x80)) return v;
        }
        throw DecodeError(Reason::MalformedToken, "varint longer than 64 bits");
    }

private:
    std::span<const std::uint8_t> bytes_;
    std::size_t pos_ = 0;
};

}  // namespace

std::vector<std::uint8_t> serialize(const TokenStream& stream) {
    std::vector<std::uint8_t> out(kCodecMagic.begin(), kCodecMagic.end());
    out.push_back(stream.variant.code());
    put_le(out, stream.sigma, 4);
    put_le(out, stream.n, 8);
    for (const Token& t : stream.tokens) {
        out.push_back(static_cast<std::uint8_t>(t.kind));
        switch (t.kind) {
            case TokenKind::Literal: put_varint(out, t.symbol); break;
            case TokenKind::PairCopy:
                put_varint(out, t.len);
                put_varint(out, t.offset);
                break;
            case TokenKind::TripleCopy:
                put_varint(out, t.len);
                put_varint(out, t.offset);
                put_varint(out, t.symbol);
                break;
        }
    }
    return out;
}

TokenStream deserialize(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < kCodecHeaderSize ||
        !std::equal(kCodecMagic.begin(), kCodecMagic.end(), bytes.begin())) {
        throw DecodeError(Reason::MalformedHeader, "missing LZCMP1 header");
    }
    Reader in(bytes.subspan(kCodecMagic.size()));
    TokenStream stream;
    const std::uint8_t code = in.byte();
    if (code >= kAllVariants.size()) {
        throw DecodeError(Reason::MalformedHeader, "unknown variant byte " + std::to_string(code));
    }
    stream.variant = variant_from_code(code);
    stream.sigma = static_cast<std::uint32_t>(in.le(4));
    stream.n = in.le(8);

    auto symbol = [&]() {
        const std::uint64_t v = in.varint();
        if (v > UINT32_MAX) throw DecodeError(Reason::MalformedToken, "symbol does not fit 32 bits");
        return static_cast<Symbol>(v);
    };
    while (!in.done()) {
        Token t;
        const std::uint8_t tag = in.byte();
        switch (tag) {
            case 0:
                t.kind = TokenKind::Literal;
                t.symbol = symbol();
                break;
            case 1:
                t.kind = TokenKind::PairCopy;
                t.len = in.varint();
                t.offset = in.varint();
                break;
            case 2:
                t.kind = TokenKind::TripleCopy;
                t.len = in.varint();
                t.offset = in.varint();
                t.symbol = symbol();
                break;
            default: throw DecodeError(Reason::MalformedToken, "unknown token tag " + std::to_string(tag));
        }
        stream.tokens.push_back(t);
    }
    return stream;
}

Text decode(std::span<const std::uint8_t> bytes) { return decode(deserialize(bytes)); }

bool respects_overlap_rule(const TokenStream& stream) {
    if (stream.variant.overlapping()) return true;
    return std::all_of(stream.tokens.begin(), stream.tokens.end(), [](const Token& t) {
        switch (t.kind) {
            case TokenKind::Literal: return true;
            case TokenKind::PairCopy: return t.offset >= t.len;
            case TokenKind::TripleCopy: return t.offset + 1 >= t.len;
        }
        return false;
    });
}

}  // namespace lzcmp
