#pragma once

#include <lzcmp/generators.hpp>
#include <lzcmp/text.hpp>

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace lzcmp {

struct Check {
    std::string name;
    bool passed = false;
};

struct Metric {
    std::string name;
    double value = 0.0;
};

// Per-string measurement record.
struct Report {
    std::string string_id;
    std::string family;
    std::string params;
    std::size_t n = 0;
    std::size_t sigma = 0;
    std::size_t z = 0;
    std::size_t z_no = 0;
    std::size_t z3 = 0;
    std::size_t z3_no = 0;
    double ratio_no_over_ov = 0.0;
    double bound_t1 = 0.0;
    std::vector<Check> checks;
    std::vector<Metric> metrics;

    bool checks_passed() const;
    void add_check(std::string name, bool passed) { checks.push_back({std::move(name), passed}); }
    void add_metric(std::string name, double value) { metrics.push_back({std::move(name), value}); }
};

// log2(n / (z * max(1, log_sigma z))); 0 for an empty parse. log_sigma z is
// taken as 1 when sigma < 2.
double theorem1_bound(std::size_t n, std::size_t z, std::size_t sigma);

// Runs all four greedy parsers over one shared index and records the size
// inequalities that hold for every string:
//   z <= z_no, z3 <= z3_no, z3 <= z < 2 z3, z3_no <= z_no < 2 z3_no.
Report measure(const Text& text, std::string string_id = {}, std::string family = {}, std::string params = {});

struct Verification {
    std::vector<Report> reports;

    std::size_t failures() const;
    bool passed() const { return failures() == 0; }
};

struct RandomSweep {
    std::size_t count = 0;
    std::size_t max_n = 256;
    std::vector<std::size_t> sigmas{2, 3, 4};
    std::uint64_t seed = 1;
};

struct Theorem1Grid {
    std::vector<std::size_t> thue_morse_lengths;
    std::vector<Thm2Params> block_strings;
    RandomSweep random;
    double alpha = 0.5;
};

struct Theorem2Point {
    std::size_t n = 0;
    std::size_t sigma = 0;
    std::size_t z = 0;
};

struct Theorem3Range {
    std::size_t k_max = 14;
    std::size_t powers_c_k_max = 12;
    RandomSweep random{10'000, 256, {2, 3, 4}, 20};
};

struct Lemma2Bounds {
    std::size_t max_binary = 12;
    std::size_t max_ternary = 8;
    RandomSweep random{200, 48, {2, 3, 4}, 7};
};

// Default grids reproduce the acceptance sweeps.
Theorem1Grid default_theorem1_grid();
// Points of ns x sigmas x zs inside the extremal parameter range.
std::vector<Theorem2Point> theorem2_grid(const std::vector<std::size_t>& ns, const std::vector<std::size_t>& sigmas,
                                         const std::vector<std::size_t>& zs);
std::vector<Theorem2Point> default_theorem2_grid();

// z <= z_no per string, the empirical constant z_no / (z * max(1, bound)),
// and validity plus size of the overlap-to-non-overlap rewrite.
Verification verify_theorem1(const Theorem1Grid& grid);

// Block strings: LZ size <= 4k + 4 and novLZ size >= k log2 floor(n / 4kd);
// the degenerate a^n case checks LZ size <= 2 and novLZ size >= log2 n.
Verification verify_theorem2(const std::vector<Theorem2Point>& grid);

// Exact sizes of the four extremal families and the pair/triple inequalities
// on seeded random strings.
Verification verify_theorem3(const Theorem3Range& range);

// Greedy size equals the DP minimum for every variant, over every string of
// the bounded binary and ternary spaces plus random samples. One record per
// space; params carries the number of strings and failures.
Verification verify_lemma2(const Lemma2Bounds& bounds);

enum class ReportFormat { Csv, Json };

inline constexpr std::string_view kCsvHeader =
    "family,params,n,sigma,z,z_no,z3,z3_no,ratio_no_over_ov,bound_t1,checks_passed";

// Records are sorted by string_id first.
std::string format_report(std::vector<Report> reports, ReportFormat format);
void emit_report(const std::vector<Report>& reports, ReportFormat format, const std::filesystem::path& path);

}  // namespace lzcmp
