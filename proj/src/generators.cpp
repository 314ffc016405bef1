#include <lzcmp/generators.hpp>

#include <array>
#include <bit>
#include <cmath>

namespace lzcmp {

namespace {

constexpr Symbol kA = 0;
constexpr Symbol kB = 1;

void check_length(std::size_t len, std::string_view family) {
    if (len > kFamilyLengthGuard) {
        throw ParameterError(std::string(family) + ": length " + std::to_string(len) + " exceeds guard");
    }
}

void append_run(std::vector<Symbol>& out, Symbol c, std::size_t count) { out.insert(out.end(), count, c); }

Text binary(std::vector<Symbol> symbols) { return Text(std::move(symbols), 2, "ab"); }

std::size_t pow2(std::size_t e) {
    if (e >= 62) throw ParameterError("exponent " + std::to_string(e) + " too large");
    return std::size_t{1} << e;
}

}  // namespace

std::vector<Word> gray_code(std::size_t sigma, std::size_t d, Symbol zero_letter) {
    if (sigma < 2) throw ParameterError("gray_code: sigma must be at least 2");
    if (d < 1) throw ParameterError("gray_code: word length must be at least 1");
    if (zero_letter >= sigma) throw ParameterError("gray_code: zero letter outside alphabet");
    std::size_t count = 1;
    for (std::size_t h = 0; h < d; ++h) {
        if (count > kGrayCodeGuard / sigma) throw ParameterError("gray_code: sigma^d exceeds guard");
        count *= sigma;
    }

    auto map_digit = [&](std::size_t digit) -> Symbol {
        if (digit == 0) return zero_letter;
        if (digit == zero_letter) return 0;
        return static_cast<Symbol>(digit);
    };

    std::vector<Word> words;
    words.reserve(count);
    std::vector<std::size_t> digits(d);
    for (std::size_t m = 0; m < count; ++m) {
        std::size_t rest = m;
        for (std::size_t h = d; h-- > 0;) {
            digits[h] = rest % sigma;
            rest /= sigma;
        }
        // Reading from the most significant digit, every odd effective digit
        // reverses the order of the remaining suffix block.
        Word w(d);
        bool reflected = false;
        for (std::size_t h = 0; h < d; ++h) {
            const std::size_t eff = reflected ? sigma - 1 - digits[h] : digits[h];
            w[h] = map_digit(eff);
            if (eff % 2 == 1) reflected = !reflected;
        }
        words.push_back(std::move(w));
    }
    return words;
}

Thm2Params make_thm2_params(std::size_t n, std::size_t sigma, std::size_t z) {
    if (sigma < 2 || sigma > n) throw ParameterError("thm2: need 2 <= sigma <= n");
    if (z < sigma || z > n) throw ParameterError("thm2: need sigma <= z <= n");
    Thm2Params p{n, sigma, z, 0, 0, 0};
    std::size_t power = 1;
    while (power < z) {
        power *= sigma;
        ++p.d;
    }
    p.d = std::max<std::size_t>(p.d, 1);
    if (p.degenerate()) return p;
    p.k = z / 8;
    p.reps = n / (2 * p.k * p.d);
    if (p.reps < 2) {
        throw ParameterError("thm2: n=" + std::to_string(n) + " leaves fewer than two copies per block");
    }
    return p;
}

bool in_theorem2_range(std::size_t n, std::size_t sigma, std::size_t z) {
    if (n < 2 || sigma < 2 || sigma > n || z < sigma) return false;
    const double log_sigma_n = std::log(static_cast<double>(n)) / std::log(static_cast<double>(sigma));
    return static_cast<double>(z) <= static_cast<double>(n) / log_sigma_n;
}

std::vector<Word> thm2_words(const Thm2Params& p) {
    if (p.degenerate()) return {};
    constexpr Symbol a = 1, b = 0;
    const auto codes = gray_code(p.sigma, p.d, b);
    std::vector<Word> words;
    words.reserve(p.k);
    for (std::size_t i = 0; i < p.k; ++i) {
        Word u;
        u.reserve(2 * p.d);
        u.push_back(a);
        u.insert(u.end(), p.d - 1, b);
        u.insert(u.end(), codes[i].begin(), codes[i].end());
        words.push_back(std::move(u));
    }
    return words;
}

Text gen_thm2_string(const Thm2Params& p) {
    check_length(p.n, "thm2");
    std::string letters;
    letters.push_back('b');
    letters.push_back('a');
    for (std::size_t q = 2; q < p.sigma; ++q) letters.push_back(default_letter(static_cast<Symbol>(q)));

    std::vector<Symbol> s;
    s.reserve(p.n);
    for (const Word& u : thm2_words(p)) {
        for (std::size_t r = 0; r < p.reps; ++r) s.insert(s.end(), u.begin(), u.end());
    }
    append_run(s, 1, p.n - s.size());
    return Text(std::move(s), p.sigma, std::move(letters));
}

Text gen_powers_a(std::size_t k) {
    if (k < 2) throw ParameterError("powers-a: k must be at least 2");
    check_length(pow2(k), "powers-a");
    std::vector<Symbol> s;
    for (std::size_t j = 1; j + 2 <= k; ++j) {
        append_run(s, kA, 2);
        append_run(s, kB, pow2(j) - 1);
    }
    append_run(s, kA, 2);
    append_run(s, kB, pow2(k - 2));
    return binary(std::move(s));
}

Text gen_powers_b(std::size_t k, bool truncated) {
    if (k < 2) throw ParameterError("powers-b: k must be at least 2");
    check_length(4 * pow2(k), "powers-b");
    std::vector<Symbol> s;
    for (std::size_t j = 1; j + 1 <= k; ++j) {
        s.insert(s.end(), {kA, kB, kA});
        append_run(s, kB, 3 * pow2(j) - 2);
    }
    if (truncated) s.resize(s.size() - 3 * pow2(k - 2));
    return binary(std::move(s));
}

Text gen_powers_c(std::size_t k, bool truncated) {
    if (k < 1) throw ParameterError("powers-c: k must be at least 1");
    check_length(8 * pow2(k), "powers-c");
    std::vector<Symbol> s;
    for (std::size_t j = 1; j <= k; ++j) {
        append_run(s, kA, 3 * pow2(j - 1) - 1);
        append_run(s, kB, pow2(j) - 1);
    }
    append_run(s, kA, 3 * pow2(k) - 1);
    append_run(s, kB, pow2(k));
    if (truncated) s.resize(s.size() - (3 * pow2(k - 1) - 1) - pow2(k));
    return binary(std::move(s));
}

Text gen_ab_power(std::size_t k) {
    if (k < 2) throw ParameterError("ab-power: k must be at least 2");
    const std::size_t reps = pow2(k - 2);
    check_length(2 * reps, "ab-power");
    std::vector<Symbol> s;
    s.reserve(2 * reps);
    for (std::size_t r = 0; r < reps; ++r) s.insert(s.end(), {kA, kB});
    return binary(std::move(s));
}

Text gen_recursive(std::size_t i) {
    if (i < 1) throw ParameterError("recursive: i must be at least 1");
    if (i > 62) throw ParameterError("recursive: at most 62 letters");
    check_length(pow2(i) - 1, "recursive");
    std::vector<Symbol> s{0};
    for (std::size_t level = 2; level <= i; ++level) {
        const std::size_t half = s.size();
        s.reserve(2 * half + 1);
        s.insert(s.end(), s.begin(), s.begin() + static_cast<std::ptrdiff_t>(half));
        s.push_back(static_cast<Symbol>(level - 1));
    }
    return Text(std::move(s), i);
}

Text gen_thue_morse(std::size_t n) {
    check_length(n, "thue-morse");
    std::vector<Symbol> s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = static_cast<Symbol>(std::popcount(i) & 1U);
    return binary(std::move(s));
}

Text gen_unary_blocks(std::size_t n, std::size_t sigma) {
    if (sigma < 1 || sigma > n) throw ParameterError("unary-blocks: need 1 <= sigma <= n");
    check_length(n, "unary-blocks");
    std::vector<Symbol> s;
    s.reserve(n);
    const std::size_t run = n / sigma;
    for (std::size_t c = 0; c + 1 < sigma; ++c) append_run(s, static_cast<Symbol>(c), run);
    append_run(s, static_cast<Symbol>(sigma - 1), n - s.size());
    return Text(std::move(s), sigma);
}

Text gen_random(std::size_t n, std::size_t sigma, std::uint64_t seed) {
    if (n > 0 && sigma == 0) throw ParameterError("random: empty alphabet");
    check_length(n, "random");
    SplitMix64 rng(seed);
    std::vector<Symbol> s(n);
    for (auto& c : s) c = static_cast<Symbol>(rng.below(sigma));
    return Text(std::move(s), sigma);
}

namespace {
constexpr std::array<std::pair<FamilyId, std::string_view>, 9> kFamilyNames{{
    {FamilyId::UnaryBlocks, "unary-blocks"},
    {FamilyId::GrayBlocks, "gray-blocks"},
    {FamilyId::PowersA, "powers-a"},
    {FamilyId::PowersB, "powers-b"},
    {FamilyId::PowersC, "powers-c"},
    {FamilyId::AbPower, "ab-power"},
    {FamilyId::Recursive, "recursive"},
    {FamilyId::ThueMorse, "thue-morse"},
    {FamilyId::Random, "random"},
}};
}  // namespace

std::string_view family_name(FamilyId id) noexcept {
    for (auto [fid, name] : kFamilyNames) {
        if (fid == id) return name;
    }
    return "unknown";
}

FamilyId family_from_name(std::string_view name) {
    for (auto [fid, fname] : kFamilyNames) {
        if (fname == name) return fid;
    }
    throw ParameterError("unknown family '" + std::string(name) + "'");
}

Text generate(FamilyId id, const FamilyParams& p) {
    switch (id) {
        case FamilyId::UnaryBlocks: return gen_unary_blocks(p.n, p.sigma);
        case FamilyId::GrayBlocks: return gen_thm2_string(make_thm2_params(p.n, p.sigma, p.z));
        case FamilyId::PowersA: return gen_powers_a(p.k);
        case FamilyId::PowersB: return gen_powers_b(p.k, p.truncated);
        case FamilyId::PowersC: return gen_powers_c(p.k, p.truncated);
        case FamilyId::AbPower: return gen_ab_power(p.k);
        case FamilyId::Recursive: return gen_recursive(p.k);
        case FamilyId::ThueMorse: return gen_thue_morse(p.n);
        case FamilyId::Random: return gen_random(p.n, p.sigma, p.seed);
    }
    throw ParameterError("unknown family");
}

std::string describe(FamilyId id, const FamilyParams& p) {
    auto kv = [](std::string_view key, auto value) { return std::string(key) + "=" + std::to_string(value); };
    switch (id) {
        case FamilyId::UnaryBlocks: return kv("n", p.n) + ";" + kv("sigma", p.sigma);
        case FamilyId::GrayBlocks: return kv("n", p.n) + ";" + kv("sigma", p.sigma) + ";" + kv("z", p.z);
        case FamilyId::PowersA:
        case FamilyId::AbPower: return kv("k", p.k);
        case FamilyId::PowersB:
        case FamilyId::PowersC: return kv("k", p.k) + (p.truncated ? ";truncated" : "");
        case FamilyId::Recursive: return kv("i", p.k);
        case FamilyId::ThueMorse: return kv("n", p.n);
        case FamilyId::Random: return kv("n", p.n) + ";" + kv("sigma", p.sigma) + ";" + kv("seed", p.seed);
    }
    return {};
}

}  // namespace lzcmp
