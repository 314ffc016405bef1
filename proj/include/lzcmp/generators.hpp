#pragma once

#include <lzcmp/text.hpp>

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lzcmp {

// Generator parameters outside the family's domain.
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr std::size_t kFamilyLengthGuard = std::size_t{1} << 26;
inline constexpr std::size_t kGrayCodeGuard = std::size_t{1} << 22;

using Word = std::vector<Symbol>;

// Reflected sigma-ary Gray code: all sigma^d words of length d, consecutive
// words at Hamming distance 1, starting with zero_letter^d. Digit 0 is
// rendered as zero_letter and digit zero_letter as 0; other digits map to
// themselves.
std::vector<Word> gray_code(std::size_t sigma, std::size_t d, Symbol zero_letter);

// Block-string construction with many LZ phrases forced into logarithmic
// novLZ runs. Symbol 1 plays the letter `a`, symbol 0 the letter `b`.
struct Thm2Params {
    std::size_t n = 0;
    std::size_t sigma = 0;
    std::size_t z = 0;
    std::size_t d = 0;     // ceil(log_sigma z)
    std::size_t k = 0;     // floor(z / 8), number of blocks
    std::size_t reps = 0;  // floor(n / (2 k d)), copies of u_i per block

    bool degenerate() const noexcept { return z <= 8; }
};

// Derives d, k and reps; throws ParameterError unless 2 <= sigma <= n,
// sigma <= z <= n, and (for z > 8) every block holds at least two copies.
Thm2Params make_thm2_params(std::size_t n, std::size_t sigma, std::size_t z);

// sigma <= z <= n / log_sigma n: the parameter range in which the
// construction is claimed to be extremal.
bool in_theorem2_range(std::size_t n, std::size_t sigma, std::size_t z);

// u_i = a b^{d-1} v_i for the first k Gray words v_i.
std::vector<Word> thm2_words(const Thm2Params& p);

// a^n when z <= 8; otherwise u_1^reps u_2^reps ... u_k^reps padded with `a`
// to length n.
Text gen_thm2_string(const Thm2Params& p);

// aab aab^3 aab^7 ... aab^{2^{k-2}-1} aab^{2^{k-2}}; z = 2k-1, z3 = k.
Text gen_powers_a(std::size_t k);

// aba b^4 aba b^10 ... aba b^{3*2^{k-1}-2}; z = z3 = 2k. The truncated
// string drops the final 3*2^{k-2} b's and has z = z3 = 2k-1.
Text gen_powers_b(std::size_t k, bool truncated = false);

// a^2 b a^5 b^3 ... a^{3*2^{k-1}-1} b^{2^k-1} a^{3*2^k-1} b^{2^k};
// z_no = 4k+3, z3_no = 2k+2. The truncated string drops the last novLZ3
// phrase a^{3*2^{k-1}-1} b^{2^k} and has z_no = 4k+1, z3_no = 2k+1.
Text gen_powers_c(std::size_t k, bool truncated = false);

// (ab)^{2^{k-2}}; z_no = z3_no = k.
Text gen_ab_power(std::size_t k);

// s_1 = a_1, s_i = s_{i-1} s_{i-1} a_i over i distinct letters.
Text gen_recursive(std::size_t i);

// Length-n prefix of the Thue-Morse word over {a, b}.
Text gen_thue_morse(std::size_t n);

// sigma runs of floor(n / sigma) equal letters, the last run padded to n.
Text gen_unary_blocks(std::size_t n, std::size_t sigma);

// SplitMix64 stream seeded with `seed`; symbol i is next() % sigma.
Text gen_random(std::size_t n, std::size_t sigma, std::uint64_t seed);

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next() noexcept {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    // Uniform-ish value in [0, bound); bound > 0.
    std::uint64_t below(std::uint64_t bound) noexcept { return next() % bound; }

private:
    std::uint64_t state_;
};

enum class FamilyId { UnaryBlocks, GrayBlocks, PowersA, PowersB, PowersC, AbPower, Recursive, ThueMorse, Random };

std::string_view family_name(FamilyId id) noexcept;
FamilyId family_from_name(std::string_view name);

struct FamilyParams {
    std::size_t k = 0;  // k for the power families, i for Recursive
    std::size_t n = 0;
    std::size_t sigma = 0;
    std::size_t z = 0;
    std::uint64_t seed = 0;
    bool truncated = false;
};

// Dispatches to the generator of `id`, reading only the fields it uses.
Text generate(FamilyId id, const FamilyParams& params);

// Compact "k=3" / "n=64;sigma=2;z=16" description of the fields `id` uses.
std::string describe(FamilyId id, const FamilyParams& params);

}  // namespace lzcmp
