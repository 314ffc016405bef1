#include <lzcmp/codec.hpp>
#include <lzcmp/generators.hpp>
#include <lzcmp/greedy.hpp>
#include <lzcmp/harness.hpp>
#include <lzcmp/suffix_index.hpp>
#include <lzcmp/transforms.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace lzcmp;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
    bool passed = false;
    std::string detail;
};

int failed = 0;

void criterion(int id, const char* title, const std::function<Outcome()>& body) {
    const auto start = Clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.passed) ++failed;
    std::printf("[%s] %2d %s (%s; %.2fs)\n", o.passed ? "PASS" : "FAIL", id, title, o.detail.c_str(),
                seconds_since(start));
    std::fflush(stdout);
}

struct Named {
    std::string name;
    Text text;
};

std::vector<Named> family_strings() {
    std::vector<Named> out;
    for (std::size_t k = 2; k <= 14; ++k) {
        out.push_back({"powers-a k=" + std::to_string(k), gen_powers_a(k)});
        out.push_back({"powers-b k=" + std::to_string(k), gen_powers_b(k)});
        out.push_back({"powers-b k=" + std::to_string(k) + " truncated", gen_powers_b(k, true)});
        out.push_back({"ab-power k=" + std::to_string(k), gen_ab_power(k)});
    }
    for (std::size_t k = 1; k <= 12; ++k) {
        out.push_back({"powers-c k=" + std::to_string(k), gen_powers_c(k)});
        out.push_back({"powers-c k=" + std::to_string(k) + " truncated", gen_powers_c(k, true)});
    }
    for (std::size_t i = 1; i <= 16; ++i) out.push_back({"recursive i=" + std::to_string(i), gen_recursive(i)});
    for (std::size_t j = 0; j <= 16; ++j) out.push_back({"thue-morse 2^" + std::to_string(j), gen_thue_morse(std::size_t{1} << j)});
    for (const auto& pt : default_theorem2_grid()) {
        out.push_back({"gray-blocks n=" + std::to_string(pt.n), gen_thm2_string(make_thm2_params(pt.n, pt.sigma, pt.z))});
    }
    return out;
}

std::vector<Text> random_strings(std::size_t count, std::size_t max_n, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<Text> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t n = 1 + rng.below(max_n);
        const std::size_t sigma = 2 + i % 3;
        out.push_back(gen_random(n, sigma, rng.next()));
    }
    return out;
}

std::string counts(std::size_t checked, std::size_t violations) {
    return std::to_string(checked) + " checked, " + std::to_string(violations) + " violations";
}

}  // namespace

int main() {
    const std::vector<Named> families = family_strings();

    criterion(1, "worked example abababc", [] {
        const Text t = from_bytes("abababc");
        const std::vector<std::string> want{"a.b.abab.c", "a.b.ab.ab.c", "a.b.ababc", "a.b.aba.bc"};
        const std::vector<std::size_t> sizes{4, 5, 3, 4};
        const auto start = Clock::now();
        std::vector<Parsing> got;
        for (Variant v : kAllVariants) got.push_back(parse_greedy(t, v));
        const double elapsed = seconds_since(start);
        bool ok = elapsed < 1e-3;
        std::string detail;
        for (std::size_t i = 0; i < 4; ++i) {
            const std::string dot = to_dot(t, got[i]);
            ok = ok && dot == want[i] && got[i].size() == sizes[i];
            detail += std::string(i ? " / " : "") + dot;
        }
        return Outcome{ok, detail + ", " + std::to_string(elapsed * 1e6) + " us"};
    });

    criterion(2, "greedy size equals DP minimum, binary <= 12 and ternary <= 8", [] {
        const Verification v = verify_lemma2(Lemma2Bounds{12, 8, {0, 1, {2}, 0}});
        std::string detail;
        for (const Report& r : v.reports) detail += (detail.empty() ? "" : "; ") + r.params;
        return Outcome{v.reports.size() == 2 && v.passed(), detail};
    });

    criterion(3, "closed-form sizes of the power families", [] {
        const Verification v = verify_theorem3(Theorem3Range{14, 12, {0, 1, {2}, 0}});
        std::size_t wrong = 0;
        for (const Report& r : v.reports) {
            if (!r.checks_passed()) {
                ++wrong;
                std::printf("    %s %s: z=%zu z_no=%zu z3=%zu z3_no=%zu\n", r.family.c_str(), r.params.c_str(), r.z,
                            r.z_no, r.z3, r.z3_no);
            }
        }
        return Outcome{!v.reports.empty() && wrong == 0, counts(v.reports.size(), wrong)};
    });

    criterion(4, "pair/triple size inequalities", [&] {
        const Verification v = verify_theorem3(Theorem3Range{});
        std::size_t random = 0;
        for (const Report& r : v.reports) random += r.family == "random";
        std::size_t wrong = v.failures();
        for (const Named& f : families) wrong += !measure(f.text).checks_passed();
        return Outcome{random == 10'000 && wrong == 0, counts(v.reports.size() + families.size(), wrong)};
    });

    criterion(5, "z <= z_no, z3 <= z3_no, and the overlap rewrite is novLZ-type with size >= z_no", [&] {
        const Verification v = verify_theorem1(default_theorem1_grid());
        std::size_t wrong = v.failures();
        std::size_t checked = v.reports.size();
        for (const Named& f : families) {
            const Report r = measure(f.text);
            const Parsing p = overlap_to_nonoverlap_parsing(f.text);
            const bool ok = r.z <= r.z_no && r.z3 <= r.z3_no && validate_parsing(f.text, p, kNovLZ) &&
                            p.size() >= r.z_no;
            if (!ok) std::printf("    %s\n", f.name.c_str());
            wrong += !ok;
            ++checked;
        }
        return Outcome{wrong == 0, counts(checked, wrong)};
    });

    criterion(6, "block strings: z <= 4k+4 and z_no >= k log2 floor(n/4kd)", [] {
        const auto start = Clock::now();
        const Verification v = verify_theorem2(default_theorem2_grid());
        const double elapsed = seconds_since(start);
        for (const Report& r : v.reports) {
            if (!r.checks_passed()) std::printf("    %s: z=%zu z_no=%zu\n", r.params.c_str(), r.z, r.z_no);
        }
        return Outcome{!v.reports.empty() && v.passed() && elapsed < 60.0, counts(v.reports.size(), v.failures())};
    });

    criterion(7, "recursive family sizes", [] {
        std::size_t wrong = 0;
        for (std::size_t i = 1; i <= 16; ++i) {
            const Text s = gen_recursive(i);
            const Report r = measure(s);
            const bool ok = s.size() == (std::size_t{1} << i) - 1 && r.z == 2 * i - 1 && r.z_no == 2 * i - 1 &&
                            r.z3 == i && r.z3_no == i;
            wrong += !ok;
        }
        return Outcome{wrong == 0, counts(16, wrong)};
    });

    criterion(8, "Thue-Morse prefixes: z == z_no and z3 == z3_no", [] {
        std::size_t wrong = 0;
        for (std::size_t j = 0; j <= 16; ++j) {
            const Report r = measure(gen_thue_morse(std::size_t{1} << j));
            wrong += !(r.z == r.z_no && r.z3 == r.z3_no);
        }
        return Outcome{wrong == 0, counts(17, wrong)};
    });

    criterion(9, "codec round trip and overlap rule", [&] {
        std::vector<Text> texts = random_strings(1000, 256, 99);
        for (const Named& f : families) texts.push_back(f.text);
        std::size_t wrong = 0;
        for (const Text& t : texts) {
            const SuffixIndex index(t);
            for (Variant v : kAllVariants) {
                const TokenStream s = encode(parse_greedy(t, index, v), t.sigma);
                const std::vector<std::uint8_t> bytes = serialize(s);
                const bool ok = decode(std::span<const std::uint8_t>(bytes)) == t && respects_overlap_rule(s);
                wrong += !ok;
            }
        }
        return Outcome{wrong == 0, counts(4 * texts.size(), wrong)};
    });

    criterion(10, "10^6 random binary symbols under 5 s per variant, matching the reference on 10^3 prefixes", [] {
        const Text t = gen_random(1'000'000, 2, 2024);
        bool ok = true;
        std::string detail;
        for (Variant v : kAllVariants) {
            const auto start = Clock::now();
            const Parsing p = parse_greedy(t, v);
            const double elapsed = seconds_since(start);
            ok = ok && elapsed < 5.0 && reconstruct(p, t.sigma) == t;
            char buf[96];
            std::snprintf(buf, sizeof buf, "%s%s %zu phrases %.2fs", detail.empty() ? "" : ", ",
                          std::string(v.name()).c_str(), p.size(), elapsed);
            detail += buf;
        }
        std::size_t mismatches = 0;
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            const Text prefix(std::vector<Symbol>(t.symbols.begin() + seed * 1000, t.symbols.begin() + seed * 1000 + 1000), 2);
            for (Variant v : kAllVariants) mismatches += !(parse_greedy(prefix, v) == parse_reference(prefix, v));
        }
        detail += ", " + std::to_string(mismatches) + " reference mismatches";
        return Outcome{ok && mismatches == 0, detail};
    });

    std::printf("%s: %d of 10 criteria failed\n", failed ? "FAIL" : "PASS", failed);
    return failed ? 1 : 0;
}
