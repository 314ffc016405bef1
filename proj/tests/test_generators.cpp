#include <doctest.h>

#include <lzcmp/generators.hpp>
#include <lzcmp/greedy.hpp>

#include <set>

using namespace lzcmp;

namespace {

std::size_t size_of(const Text& t, Variant v) { return parse_greedy(t, v).size(); }

std::string word(const Word& w) {
    std::string s;
    for (Symbol c : w) s.push_back(static_cast<char>('0' + c));
    return s;
}

std::size_t hamming(const Word& a, const Word& b) {
    std::size_t h = 0;
    for (std::size_t i = 0; i < a.size(); ++i) h += a[i] != b[i];
    return h;
}

}  // namespace

TEST_CASE("ternary and binary Gray codes") {
    std::vector<std::string> got;
    for (const Word& w : gray_code(3, 2, 0)) got.push_back(word(w));
    CHECK(got == std::vector<std::string>{"00", "01", "02", "12", "11", "10", "20", "21", "22"});

    got.clear();
    for (const Word& w : gray_code(2, 3, 0)) got.push_back(word(w));
    CHECK(got == std::vector<std::string>{"000", "001", "011", "010", "110", "111", "101", "100"});

    // Digit 0 and the zero letter trade places.
    got.clear();
    for (const Word& w : gray_code(3, 1, 2)) got.push_back(word(w));
    CHECK(got == std::vector<std::string>{"2", "1", "0"});
}

TEST_CASE("Gray codes are complete with unit steps") {
    for (std::size_t sigma : {2u, 3u, 4u, 5u}) {
        for (std::size_t d : {1u, 2u, 3u, 4u}) {
            const auto codes = gray_code(sigma, d, 1);
            std::set<Word> distinct(codes.begin(), codes.end());
            std::size_t count = 1;
            for (std::size_t h = 0; h < d; ++h) count *= sigma;
            CHECK(distinct.size() == count);
            CHECK(codes.front() == Word(d, 1));
            for (std::size_t i = 1; i < codes.size(); ++i) CHECK(hamming(codes[i - 1], codes[i]) == 1);
        }
    }
    CHECK_THROWS_AS(gray_code(1, 3, 0), ParameterError);
    CHECK_THROWS_AS(gray_code(2, 0, 0), ParameterError);
    CHECK_THROWS_AS(gray_code(2, 3, 2), ParameterError);
    CHECK_THROWS_AS(gray_code(2, 23, 0), ParameterError);
}

TEST_CASE("block string for n=64, sigma=2, z=16") {
    const Thm2Params p = make_thm2_params(64, 2, 16);
    CHECK(p.d == 4);
    CHECK(p.k == 2);
    CHECK(p.reps == 4);
    CHECK_FALSE(p.degenerate());
    const Text t = gen_thm2_string(p);
    CHECK(t.size() == 64);
    CHECK(render(t, 0, 8) == "abbbbbbb");
    CHECK(render(t, 32, 8) == "abbbbbba");
    CHECK(to_bytes(t) == std::string("abbbbbbbabbbbbbbabbbbbbbabbbbbbb") + "abbbbbbaabbbbbbaabbbbbbaabbbbbba");
}

TEST_CASE("block words are pairwise distinct and not conjugate") {
    const Thm2Params p = make_thm2_params(1 << 14, 4, 256);
    const auto words = thm2_words(p);
    REQUIRE(words.size() == p.k);
    for (std::size_t i = 0; i < words.size(); ++i) {
        CHECK(words[i].size() == 2 * p.d);
        for (std::size_t j = i + 1; j < words.size(); ++j) {
            Word doubled = words[j];
            doubled.insert(doubled.end(), words[j].begin(), words[j].end());
            CHECK(std::search(doubled.begin(), doubled.end(), words[i].begin(), words[i].end()) == doubled.end());
        }
    }
}

TEST_CASE("degenerate block string is unary") {
    const Thm2Params p = make_thm2_params(100, 2, 8);
    CHECK(p.degenerate());
    const Text t = gen_thm2_string(p);
    CHECK(to_bytes(t) == std::string(100, 'a'));
    CHECK(size_of(t, kLZ) == 2);
}

TEST_CASE("block parameter checks") {
    CHECK_THROWS_AS(make_thm2_params(64, 1, 16), ParameterError);
    CHECK_THROWS_AS(make_thm2_params(64, 2, 1), ParameterError);
    CHECK_THROWS_AS(make_thm2_params(64, 2, 65), ParameterError);
    CHECK_THROWS_AS(make_thm2_params(64, 2, 64), ParameterError);
    CHECK(in_theorem2_range(1024, 2, 64));
    CHECK_FALSE(in_theorem2_range(1024, 2, 256));
    CHECK_FALSE(in_theorem2_range(64, 2, 16));
}

TEST_CASE("power families have their closed-form sizes") {
    for (std::size_t k = 2; k <= 12; ++k) {
        CAPTURE(k);
        const Text a = gen_powers_a(k);
        CHECK(size_of(a, kLZ) == 2 * k - 1);
        CHECK(size_of(a, kLZ3) == k);
        const Text b = gen_powers_b(k);
        CHECK(size_of(b, kLZ) == 2 * k);
        CHECK(size_of(b, kLZ3) == 2 * k);
        const Text bt = gen_powers_b(k, true);
        CHECK(size_of(bt, kLZ) == 2 * k - 1);
        CHECK(size_of(bt, kLZ3) == 2 * k - 1);
        const Text ab = gen_ab_power(k);
        CHECK(size_of(ab, kNovLZ) == k);
        CHECK(size_of(ab, kNovLZ3) == k);
    }
    for (std::size_t k = 1; k <= 10; ++k) {
        CAPTURE(k);
        const Text c = gen_powers_c(k);
        CHECK(size_of(c, kNovLZ) == 4 * k + 3);
        CHECK(size_of(c, kNovLZ3) == 2 * k + 2);
        const Text ct = gen_powers_c(k, true);
        CHECK(size_of(ct, kNovLZ) == 4 * k + 1);
        CHECK(size_of(ct, kNovLZ3) == 2 * k + 1);
    }
    CHECK(to_bytes(gen_powers_a(3)) == "aabaabb");
    CHECK(to_bytes(gen_powers_b(2)) == "ababbbb");
    CHECK(to_bytes(gen_powers_c(1)) == "aabaaaaabb");
    CHECK(to_bytes(gen_ab_power(4)) == "abababab");
    CHECK_THROWS_AS(gen_powers_a(1), ParameterError);
    CHECK_THROWS_AS(gen_powers_c(0), ParameterError);
}

TEST_CASE("recursive family") {
    CHECK(to_bytes(gen_recursive(3)) == "aabaabc");
    for (std::size_t i = 1; i <= 12; ++i) {
        const Text s = gen_recursive(i);
        CHECK(s.size() == (std::size_t{1} << i) - 1);
        CHECK(s.sigma == i);
        CHECK(size_of(s, kLZ) == 2 * i - 1);
        CHECK(size_of(s, kNovLZ) == 2 * i - 1);
        CHECK(size_of(s, kLZ3) == i);
        CHECK(size_of(s, kNovLZ3) == i);
    }
}

TEST_CASE("Thue-Morse, unary blocks and random texts") {
    CHECK(to_bytes(gen_thue_morse(8)) == "abbabaab");
    CHECK(to_bytes(gen_unary_blocks(7, 3)) == "aabbccc");
    CHECK_THROWS_AS(gen_unary_blocks(2, 3), ParameterError);

    const Text r = gen_random(10000, 4, 42);
    CHECK(r == gen_random(10000, 4, 42));
    CHECK_FALSE(r == gen_random(10000, 4, 43));
    std::array<std::size_t, 4> counts{};
    for (Symbol c : r.symbols) ++counts.at(c);
    for (std::size_t c : counts) {
        CHECK(c > 2300);
        CHECK(c < 2700);
    }
    SplitMix64 rng(0);
    CHECK(rng.next() == 0xE220A8397B1DCDAFULL);
}

TEST_CASE("family dispatch") {
    FamilyParams p;
    p.k = 4;
    CHECK(generate(FamilyId::PowersA, p) == gen_powers_a(4));
    CHECK(describe(FamilyId::Recursive, p) == "i=4");
    p.truncated = true;
    CHECK(describe(FamilyId::PowersC, p) == "k=4;truncated");
    p.n = 64;
    p.sigma = 2;
    p.z = 16;
    CHECK(generate(FamilyId::GrayBlocks, p) == gen_thm2_string(make_thm2_params(64, 2, 16)));
    CHECK(describe(FamilyId::GrayBlocks, p) == "n=64;sigma=2;z=16");
    for (auto name : {"unary-blocks", "gray-blocks", "powers-a", "powers-b", "powers-c", "ab-power", "recursive",
                      "thue-morse", "random"}) {
        CHECK(family_name(family_from_name(name)) == name);
    }
    CHECK_THROWS_AS(family_from_name("fibonacci"), ParameterError);
}
