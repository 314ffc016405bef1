#include <doctest.h>

#include <lzcmp/codec.hpp>
#include <lzcmp/generators.hpp>
#include <lzcmp/greedy.hpp>

using namespace lzcmp;

namespace {

TokenStream encode_text(const Text& t, Variant v) { return encode(parse_greedy(t, v), t.sigma); }

}  // namespace

TEST_CASE("tokens of abababc") {
    const Text t = from_bytes("abababc");
    const TokenStream lz = encode_text(t, kLZ);
    CHECK(lz.tokens == std::vector<Token>{{TokenKind::Literal, 0, 0, 0},
                                          {TokenKind::Literal, 1, 0, 0},
                                          {TokenKind::PairCopy, 0, 4, 2},
                                          {TokenKind::Literal, 2, 0, 0}});
    CHECK_FALSE(respects_overlap_rule(TokenStream{kNovLZ, 3, 7, lz.tokens}));

    const TokenStream lz3 = encode_text(t, kLZ3);
    CHECK(lz3.tokens.back() == Token{TokenKind::TripleCopy, 2, 5, 2});

    const TokenStream nov3 = encode_text(t, kNovLZ3);
    CHECK(nov3.tokens.size() == 4);
    CHECK(respects_overlap_rule(nov3));
}

TEST_CASE("byte layout") {
    const Text t = from_bytes("aaaa");
    const auto bytes = serialize(encode_text(t, kLZ));
    std::vector<std::uint8_t> expected{'L', 'Z', 'C', 'M', 'P', '1', 0, 1, 0, 0, 0, 4, 0, 0, 0, 0, 0, 0, 0};
    expected.insert(expected.end(), {0, 0, 1, 3, 1});
    CHECK(bytes == expected);
    CHECK(decode(std::span<const std::uint8_t>(bytes)) == t);

    TokenStream big{kLZ, 300, 1, {{TokenKind::Literal, 299, 0, 0}}};
    const auto b = serialize(big);
    CHECK(std::vector<std::uint8_t>(b.end() - 3, b.end()) == std::vector<std::uint8_t>{0, 0xAB, 0x02});
    CHECK(deserialize(b) == big);
}

TEST_CASE("truncated triple phrase travels as a pair token") {
    const Text t = from_bytes("abab");
    const TokenStream s = encode_text(t, kLZ3);
    CHECK(s.tokens.back() == Token{TokenKind::PairCopy, 0, 2, 2});
    CHECK(decode(s) == t);
}

TEST_CASE("round trip over random and family texts") {
    std::vector<Text> texts;
    for (std::uint64_t seed = 0; seed < 200; ++seed) texts.push_back(gen_random(seed % 300, 1 + seed % 5, seed));
    texts.push_back(gen_powers_c(6, true));
    texts.push_back(gen_recursive(8));
    texts.push_back(gen_thm2_string(make_thm2_params(1024, 2, 64)));
    for (const Text& t : texts) {
        for (Variant v : kAllVariants) {
            const TokenStream s = encode_text(t, v);
            const auto bytes = serialize(s);
            CHECK(deserialize(bytes) == s);
            CHECK(decode(std::span<const std::uint8_t>(bytes)) == t);
            CHECK(respects_overlap_rule(s));
        }
    }
}

TEST_CASE("decode errors") {
    auto reason_of = [](auto&& fn) {
        try {
            fn();
        } catch (const DecodeError& e) {
            return e.reason();
        }
        FAIL("no DecodeError");
        return DecodeError::Reason::MalformedHeader;
    };
    using R = DecodeError::Reason;
    const std::vector<std::uint8_t> bad_magic{'L', 'Z', 'C', 'M', 'P', '2', 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0};
    CHECK(reason_of([&] { deserialize(bad_magic); }) == R::MalformedHeader);
    CHECK(reason_of([&] { deserialize(std::vector<std::uint8_t>{'L', 'Z'}); }) == R::MalformedHeader);

    auto bytes = serialize(TokenStream{kLZ, 2, 1, {{TokenKind::Literal, 0, 0, 0}}});
    auto bad_variant = bytes;
    bad_variant[6] = 9;
    CHECK(reason_of([&] { deserialize(bad_variant); }) == R::MalformedHeader);
    auto bad_tag = bytes;
    bad_tag.push_back(7);
    CHECK(reason_of([&] { deserialize(bad_tag); }) == R::MalformedToken);
    auto cut = bytes;
    cut.push_back(1);
    cut.push_back(0x80);
    CHECK(reason_of([&] { deserialize(cut); }) == R::Truncated);

    CHECK(reason_of([] { decode(TokenStream{kLZ, 2, 2, {{TokenKind::PairCopy, 0, 2, 1}}}); }) ==
          R::OffsetBeforeStart);
    CHECK(reason_of([] {
              decode(TokenStream{kLZ, 2, 3, {{TokenKind::Literal, 0, 0, 0}, {TokenKind::PairCopy, 0, 2, 2}}});
          }) == R::OffsetBeforeStart);
    CHECK(reason_of([] { decode(TokenStream{kLZ, 2, 3, {{TokenKind::Literal, 0, 0, 0}}}); }) == R::Truncated);
    CHECK(reason_of([] {
              decode(TokenStream{kLZ, 2, 2, {{TokenKind::Literal, 0, 0, 0}, {TokenKind::PairCopy, 0, 5, 1}}});
          }) == R::Overrun);
    CHECK(reason_of([] { decode(TokenStream{kLZ, 2, 1, {{TokenKind::Literal, 5, 0, 0}}}); }) == R::MalformedToken);
    CHECK(reason_of([] {
              decode(TokenStream{kLZ, 2, 3, {{TokenKind::Literal, 0, 0, 0}, {TokenKind::TripleCopy, 1, 2, 1}}});
          }) == R::MalformedToken);
}
