#include <lzcmp/harness.hpp>

#include <lzcmp/greedy.hpp>
#include <lzcmp/oracle.hpp>
#include <lzcmp/suffix_index.hpp>
#include <lzcmp/transforms.hpp>

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace lzcmp {

bool Report::checks_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

std::size_t Verification::failures() const {
    return static_cast<std::size_t>(
        std::count_if(reports.begin(), reports.end(), [](const Report& r) { return !r.checks_passed(); }));
}

double theorem1_bound(std::size_t n, std::size_t z, std::size_t sigma) {
    if (z == 0 || n == 0) return 0.0;
    double log_sigma_z = 1.0;
    if (sigma >= 2) log_sigma_z = std::log(static_cast<double>(z)) / std::log(static_cast<double>(sigma));
    return std::log2(static_cast<double>(n) / (static_cast<double>(z) * std::max(1.0, log_sigma_z)));
}

Report measure(const Text& text, std::string string_id, std::string family, std::string params) {
    Report r;
    r.string_id = std::move(string_id);
    r.family = std::move(family);
    r.params = std::move(params);
    r.n = text.size();
    r.sigma = text.sigma;
    if (!text.empty()) {
        const SuffixIndex index(text);
        r.z = parse_greedy(text, index, kLZ).size();
        r.z_no = parse_greedy(text, index, kNovLZ).size();
        r.z3 = parse_greedy(text, index, kLZ3).size();
        r.z3_no = parse_greedy(text, index, kNovLZ3).size();
    }
    r.ratio_no_over_ov = r.z ? static_cast<double>(r.z_no) / static_cast<double>(r.z) : 0.0;
    r.bound_t1 = theorem1_bound(r.n, r.z, r.sigma);

    const bool empty = r.n == 0;
    r.add_check("z<=z_no", r.z <= r.z_no);
    r.add_check("z3<=z3_no", r.z3 <= r.z3_no);
    r.add_check("z3<=z", r.z3 <= r.z);
    r.add_check("z<2*z3", empty || r.z < 2 * r.z3);
    r.add_check("z3_no<=z_no", r.z3_no <= r.z_no);
    r.add_check("z_no<2*z3_no", empty || r.z_no < 2 * r.z3_no);
    return r;
}

namespace {

std::string make_id(std::string_view target, std::size_t index) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%06zu", index);
    return std::string(target) + "-" + buf;
}

template <typename Fn>
void for_each_random(const RandomSweep& sweep, Fn fn) {
    SplitMix64 rng(sweep.seed);
    for (std::size_t i = 0; i < sweep.count; ++i) {
        const std::size_t n = 1 + static_cast<std::size_t>(rng.below(sweep.max_n));
        const std::size_t sigma = sweep.sigmas[i % sweep.sigmas.size()];
        const std::uint64_t seed = rng.next();
        fn(gen_random(n, sigma, seed), FamilyParams{0, n, sigma, 0, seed, false});
    }
}

double empirical_constant(std::size_t size, const Report& r) {
    if (r.z == 0) return 0.0;
    return static_cast<double>(size) / (static_cast<double>(r.z) * std::max(1.0, r.bound_t1));
}

}  // namespace

Theorem1Grid default_theorem1_grid() {
    Theorem1Grid grid;
    for (std::size_t j = 0; j <= 16; ++j) grid.thue_morse_lengths.push_back(std::size_t{1} << j);
    for (std::size_t n : {1024u, 4096u, 16384u}) {
        for (std::size_t z : {16u, 64u}) grid.block_strings.push_back(make_thm2_params(n, 2, z));
    }
    grid.random = RandomSweep{2'000, 256, {2, 3, 4}, 11};
    return grid;
}

Verification verify_theorem1(const Theorem1Grid& grid) {
    TransformConfig cfg{grid.alpha};
    cfg.check();
    Verification out;
    std::size_t index = 0;
    auto run = [&](const Text& text, FamilyId family, const FamilyParams& params) {
        Report r = measure(text, make_id("t1", index++), std::string(family_name(family)), describe(family, params));
        const Parsing rewritten = overlap_to_nonoverlap_parsing(text, cfg);
        r.add_check("transform_novlz_type", validate_parsing(text, rewritten, kNovLZ));
        r.add_check("transform>=z_no", rewritten.size() >= r.z_no);
        r.add_metric("empirical_constant", empirical_constant(r.z_no, r));
        r.add_metric("transform_size", static_cast<double>(rewritten.size()));
        r.add_metric("transform_constant", empirical_constant(rewritten.size(), r));
        out.reports.push_back(std::move(r));
    };

    for (std::size_t n : grid.thue_morse_lengths) {
        FamilyParams p;
        p.n = n;
        run(gen_thue_morse(n), FamilyId::ThueMorse, p);
    }
    for (const Thm2Params& t : grid.block_strings) {
        run(gen_thm2_string(t), FamilyId::GrayBlocks, FamilyParams{0, t.n, t.sigma, t.z, 0, false});
    }
    for_each_random(grid.random, [&](const Text& text, const FamilyParams& p) { run(text, FamilyId::Random, p); });
    return out;
}

std::vector<Theorem2Point> theorem2_grid(const std::vector<std::size_t>& ns, const std::vector<std::size_t>& sigmas,
                                         const std::vector<std::size_t>& zs) {
    std::vector<Theorem2Point> grid;
    for (std::size_t n : ns) {
        for (std::size_t sigma : sigmas) {
            for (std::size_t z : zs) {
                if (in_theorem2_range(n, sigma, z)) grid.push_back({n, sigma, z});
            }
        }
    }
    return grid;
}

std::vector<Theorem2Point> default_theorem2_grid() {
    return theorem2_grid({1u << 10, 1u << 14, 1u << 18}, {2, 4}, {16, 64, 256});
}

Verification verify_theorem2(const std::vector<Theorem2Point>& grid) {
    Verification out;
    std::size_t index = 0;
    for (const Theorem2Point& pt : grid) {
        const Thm2Params p = make_thm2_params(pt.n, pt.sigma, pt.z);
        const FamilyParams fp{0, pt.n, pt.sigma, pt.z, 0, false};
        Report r = measure(gen_thm2_string(p), make_id("t2", index++), std::string(family_name(FamilyId::GrayBlocks)),
                           describe(FamilyId::GrayBlocks, fp));
        if (p.degenerate()) {
            const double lower = std::log2(static_cast<double>(p.n));
            r.add_check("z<=2", r.z <= 2);
            r.add_check("z_no>=log2(n)", static_cast<double>(r.z_no) >= lower);
            r.add_metric("novlz_lower_bound", lower);
        } else {
            const double lower =
                static_cast<double>(p.k) * std::log2(static_cast<double>(p.n / (4 * p.k * p.d)));
            r.add_check("z<=4k+4", r.z <= 4 * p.k + 4);
            r.add_check("z_no>=k*log2(n/4kd)", static_cast<double>(r.z_no) >= lower);
            r.add_metric("novlz_lower_bound", lower);
            r.add_metric("k", static_cast<double>(p.k));
            r.add_metric("d", static_cast<double>(p.d));
        }
        out.reports.push_back(std::move(r));
    }
    return out;
}

Verification verify_theorem3(const Theorem3Range& range) {
    Verification out;
    std::size_t index = 0;
    auto record = [&](const Text& text, FamilyId family, const FamilyParams& params) -> Report& {
        out.reports.push_back(
            measure(text, make_id("t3", index++), std::string(family_name(family)), describe(family, params)));
        return out.reports.back();
    };

    for (std::size_t k = 2; k <= range.k_max; ++k) {
        FamilyParams p;
        p.k = k;
        Report& a = record(gen_powers_a(k), FamilyId::PowersA, p);
        a.add_check("z==2k-1", a.z == 2 * k - 1);
        a.add_check("z3==k", a.z3 == k);

        Report& b = record(gen_powers_b(k), FamilyId::PowersB, p);
        b.add_check("z==2k", b.z == 2 * k);
        b.add_check("z3==2k", b.z3 == 2 * k);

        p.truncated = true;
        Report& bt = record(gen_powers_b(k, true), FamilyId::PowersB, p);
        bt.add_check("z==2k-1", bt.z == 2 * k - 1);
        bt.add_check("z3==2k-1", bt.z3 == 2 * k - 1);

        p.truncated = false;
        Report& ab = record(gen_ab_power(k), FamilyId::AbPower, p);
        ab.add_check("z_no==k", ab.z_no == k);
        ab.add_check("z3_no==k", ab.z3_no == k);
    }
    for (std::size_t k = 1; k <= range.powers_c_k_max; ++k) {
        FamilyParams p;
        p.k = k;
        Report& c = record(gen_powers_c(k), FamilyId::PowersC, p);
        c.add_check("z_no==4k+3", c.z_no == 4 * k + 3);
        c.add_check("z3_no==2k+2", c.z3_no == 2 * k + 2);

        p.truncated = true;
        Report& ct = record(gen_powers_c(k, true), FamilyId::PowersC, p);
        ct.add_check("z_no==4k+1", ct.z_no == 4 * k + 1);
        ct.add_check("z3_no==2k+1", ct.z3_no == 2 * k + 1);
    }
    for_each_random(range.random, [&](const Text& text, const FamilyParams& p) { record(text, FamilyId::Random, p); });
    return out;
}

namespace {

// Calls fn on every string of length 1..max_len over [0..sigma-1].
template <typename Fn>
void for_each_string(std::size_t sigma, std::size_t max_len, Fn fn) {
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::vector<Symbol> s(len, 0);
        while (true) {
            fn(Text(s, sigma));
            std::size_t pos = len;
            while (pos > 0 && s[pos - 1] + 1 == sigma) s[--pos] = 0;
            if (pos == 0) break;
            ++s[pos - 1];
        }
    }
}

}  // namespace

Verification verify_lemma2(const Lemma2Bounds& bounds) {
    Verification out;
    auto summary = [&](std::string family, std::size_t sigma, std::size_t max_n, std::size_t strings,
                       std::size_t failures) {
        Report r;
        r.string_id = make_id("lemma2", out.reports.size());
        r.family = std::move(family);
        r.params = "sigma=" + std::to_string(sigma) + ";max_n=" + std::to_string(max_n) +
                   ";strings=" + std::to_string(strings) + ";failures=" + std::to_string(failures);
        r.n = max_n;
        r.sigma = sigma;
        r.add_check("greedy==dp_minimum", failures == 0);
        r.add_metric("strings", static_cast<double>(strings));
        out.reports.push_back(std::move(r));
    };

    for (auto [sigma, max_len] : {std::pair{std::size_t{2}, bounds.max_binary}, std::pair{std::size_t{3}, bounds.max_ternary}}) {
        std::size_t strings = 0, failures = 0;
        for_each_string(sigma, max_len, [&](const Text& t) {
            ++strings;
            if (!assert_greedy_optimal(t)) ++failures;
        });
        summary(sigma == 2 ? "exhaustive-binary" : "exhaustive-ternary", sigma, max_len, strings, failures);
    }

    std::size_t strings = 0, failures = 0, sigma_max = 0;
    for_each_random(bounds.random, [&](const Text& t, const FamilyParams& p) {
        ++strings;
        sigma_max = std::max(sigma_max, p.sigma);
        if (!assert_greedy_optimal(t)) ++failures;
    });
    if (strings > 0) summary("random", sigma_max, bounds.random.max_n, strings, failures);
    return out;
}

std::string format_report(std::vector<Report> reports, ReportFormat format) {
    std::stable_sort(reports.begin(), reports.end(),
                     [](const Report& a, const Report& b) { return a.string_id < b.string_id; });
    if (format == ReportFormat::Csv) {
        std::ostringstream os;
        os << kCsvHeader << '\n';
        char ratio[64], bound[64];
        for (const Report& r : reports) {
            std::snprintf(ratio, sizeof ratio, "%.6f", r.ratio_no_over_ov);
            std::snprintf(bound, sizeof bound, "%.6f", r.bound_t1);
            os << r.family << ',' << r.params << ',' << r.n << ',' << r.sigma << ',' << r.z << ',' << r.z_no << ','
               << r.z3 << ',' << r.z3_no << ',' << ratio << ',' << bound << ','
               << (r.checks_passed() ? "true" : "false") << '\n';
        }
        return os.str();
    }

    nlohmann::ordered_json records = nlohmann::ordered_json::array();
    for (const Report& r : reports) {
        nlohmann::ordered_json j;
        j["string_id"] = r.string_id;
        j["family"] = r.family;
        j["params"] = r.params;
        j["n"] = r.n;
        j["sigma"] = r.sigma;
        j["z"] = r.z;
        j["z_no"] = r.z_no;
        j["z3"] = r.z3;
        j["z3_no"] = r.z3_no;
        j["ratio_no_over_ov"] = r.ratio_no_over_ov;
        j["bound_t1"] = r.bound_t1;
        j["checks_passed"] = r.checks_passed();
        auto& checks = j["checks"] = nlohmann::ordered_json::object();
        for (const Check& c : r.checks) checks[c.name] = c.passed;
        auto& metrics = j["metrics"] = nlohmann::ordered_json::object();
        for (const Metric& m : r.metrics) metrics[m.name] = m.value;
        records.push_back(std::move(j));
    }
    return records.dump(2) + "\n";
}

void emit_report(const std::vector<Report>& reports, ReportFormat format, const std::filesystem::path& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open " + path.string() + " for writing");
    os << format_report(reports, format);
    if (!os) throw std::runtime_error("failed writing " + path.string());
}

}  // namespace lzcmp
