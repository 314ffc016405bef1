#include <lzcmp/cli.hpp>

#include <lzcmp/codec.hpp>
#include <lzcmp/generators.hpp>
#include <lzcmp/greedy.hpp>
#include <lzcmp/harness.hpp>
#include <lzcmp/oracle.hpp>
#include <lzcmp/serialize.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

namespace lzcmp {

namespace {

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

const std::vector<std::string> kVariantNames{"lz", "novlz", "lz3", "novlz3"};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, std::string_view data) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open " + path + " for writing");
    os.write(data.data(), static_cast<std::streamsize>(data.size()));
    if (!os) throw std::runtime_error("failed writing " + path);
}

Text command_line_text(const std::string& s) {
    for (char c : s) {
        if (c < 0x20 || c > 0x7E) throw UsageError("--text accepts printable ASCII only; use --input for other bytes");
    }
    return from_bytes(s);
}

struct ParseOptions {
    std::string variant;
    std::optional<std::string> text;
    std::optional<std::string> input;
    bool ints = false;
    std::string format = "text";
    bool phrases = false;
};

struct OracleOptions {
    std::string type;
    std::string text;
    std::string format = "text";
};

struct GenerateOptions {
    std::string family;
    std::optional<std::size_t> k, n, sigma, z;
    std::uint64_t seed = 0;
    bool truncated = false;
    bool ints = false;
    std::optional<std::string> out;
};

struct VerifyOptions {
    std::string target;
    std::optional<std::string> out;
    std::string format = "csv";
    std::optional<std::size_t> random;
    std::optional<std::uint64_t> seed;
    std::size_t k_max = 14;
    std::size_t c_k_max = 12;
    std::size_t max_binary = 12;
    std::size_t max_ternary = 8;
    std::vector<std::size_t> ns, sigmas, zs;
    double alpha = 0.5;
};

struct CodecOptions {
    std::optional<std::string> variant;
    std::string in;
    std::string out;
    bool ints = false;
};

struct BenchOptions {
    std::size_t n = 1'000'000;
    std::size_t sigma = 2;
    std::uint64_t seed = 42;
};

int do_parse(const ParseOptions& o, std::ostream& out) {
    if (o.text.has_value() == o.input.has_value()) throw UsageError("parse needs exactly one of --text or --input");
    if (o.ints && !o.input) throw UsageError("--ints applies to --input files only");
    Text text;
    if (o.text) {
        text = command_line_text(*o.text);
    } else {
        const std::string data = read_file(*o.input);
        text = o.ints ? from_int_sequence(data) : from_bytes(data);
    }
    const Parsing parsing = parse_greedy(text, variant_from_name(o.variant));
    if (o.format == "json") {
        out << parsing_to_json(parsing, o.phrases ? &text : nullptr) << '\n';
        return kExitOk;
    }
    if (o.phrases) out << to_dot(text, parsing) << '\n';
    out << parsing.size() << '\n';
    return kExitOk;
}

int do_oracle(const OracleOptions& o, std::ostream& out) {
    const Text text = command_line_text(o.text);
    const OracleResult result = min_parsing_size(text, variant_from_name(o.type));
    if (o.format == "json") {
        out << parsing_to_json(result.witness, &text) << '\n';
        return kExitOk;
    }
    out << to_dot(text, result.witness) << '\n' << result.min_size << '\n';
    return kExitOk;
}

int do_generate(const GenerateOptions& o, std::ostream& out) {
    const FamilyId id = family_from_name(o.family);
    auto need = [&](const std::optional<std::size_t>& v, std::string_view flag) {
        if (!v) throw UsageError("family " + o.family + " needs --" + std::string(flag));
        return *v;
    };
    FamilyParams p;
    p.seed = o.seed;
    p.truncated = o.truncated;
    switch (id) {
        case FamilyId::PowersA:
        case FamilyId::PowersB:
        case FamilyId::PowersC:
        case FamilyId::AbPower:
        case FamilyId::Recursive: p.k = need(o.k, "k"); break;
        case FamilyId::ThueMorse: p.n = need(o.n, "n"); break;
        case FamilyId::UnaryBlocks:
        case FamilyId::Random:
            p.n = need(o.n, "n");
            p.sigma = need(o.sigma, "sigma");
            break;
        case FamilyId::GrayBlocks:
            p.n = need(o.n, "n");
            p.sigma = need(o.sigma, "sigma");
            p.z = need(o.z, "z");
            break;
    }
    if (o.truncated && id != FamilyId::PowersB && id != FamilyId::PowersC) {
        throw UsageError("--truncated applies to powers-b and powers-c only");
    }
    const Text text = generate(id, p);
    const std::string data = (o.ints || text.sigma > 256) ? to_int_sequence(text) : to_bytes(text);
    if (o.out) write_file(*o.out, data);
    else out << data;
    return kExitOk;
}

int do_verify(const VerifyOptions& o, std::ostream& out) {
    Verification v;
    if (o.target == "lemma2") {
        Lemma2Bounds b;
        b.max_binary = o.max_binary;
        b.max_ternary = o.max_ternary;
        if (o.random) b.random.count = *o.random;
        if (o.seed) b.random.seed = *o.seed;
        v = verify_lemma2(b);
    } else if (o.target == "t1") {
        Theorem1Grid g = default_theorem1_grid();
        g.alpha = o.alpha;
        if (o.random) g.random.count = *o.random;
        if (o.seed) g.random.seed = *o.seed;
        v = verify_theorem1(g);
    } else if (o.target == "t2") {
        const bool custom = !o.ns.empty() || !o.sigmas.empty() || !o.zs.empty();
        if (custom && (o.ns.empty() || o.sigmas.empty() || o.zs.empty())) {
            throw UsageError("t2 grid needs all of --ns, --sigmas and --zs");
        }
        v = verify_theorem2(custom ? theorem2_grid(o.ns, o.sigmas, o.zs) : default_theorem2_grid());
    } else {
        Theorem3Range r;
        r.k_max = o.k_max;
        r.powers_c_k_max = o.c_k_max;
        if (o.random) r.random.count = *o.random;
        if (o.seed) r.random.seed = *o.seed;
        v = verify_theorem3(r);
    }

    if (o.out) emit_report(v.reports, o.format == "json" ? ReportFormat::Json : ReportFormat::Csv, *o.out);
    out << "verify " << o.target << ": " << v.reports.size() << " records, " << v.failures() << " failures\n";
    std::size_t shown = 0;
    for (const Report& r : v.reports) {
        if (r.checks_passed() || shown++ >= 20) continue;
        out << "  FAIL " << r.family << " " << r.params << ":";
        for (const Check& c : r.checks) {
            if (!c.passed) out << " " << c.name;
        }
        out << '\n';
    }
    return v.passed() ? kExitOk : kExitFailure;
}

int do_codec_encode(const CodecOptions& o) {
    const std::string data = read_file(o.in);
    const Text text = o.ints ? from_int_sequence(data) : from_raw_bytes(data);
    const Parsing parsing = parse_greedy(text, variant_from_name(*o.variant));
    const auto bytes = serialize(encode(parsing, text.sigma));
    write_file(o.out, std::string_view(reinterpret_cast<const char*>(bytes.data()), bytes.size()));
    return kExitOk;
}

int do_codec_decode(const CodecOptions& o) {
    const std::string data = read_file(o.in);
    const auto stream = deserialize(std::span(reinterpret_cast<const std::uint8_t*>(data.data()), data.size()));
    if (o.variant && variant_from_name(*o.variant) != stream.variant) {
        throw std::runtime_error("stream holds a " + std::string(stream.variant.name()) + " parsing, not " +
                                 *o.variant);
    }
    const Text text = decode(stream);
    write_file(o.out, (o.ints || text.sigma > 256) ? to_int_sequence(text) : to_raw_bytes(text));
    return kExitOk;
}

int do_bench(const BenchOptions& o, std::ostream& out) {
    const Text text = gen_random(o.n, o.sigma, o.seed);
    for (Variant v : kAllVariants) {
        const auto t0 = std::chrono::steady_clock::now();
        const Parsing parsing = parse_greedy(text, v);
        const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
        char line[160];
        std::snprintf(line, sizeof line, "%-7s n=%zu size=%zu seconds=%.3f msym_per_s=%.2f\n",
                      std::string(v.name()).c_str(), o.n, parsing.size(), dt.count(),
                      dt.count() > 0 ? static_cast<double>(o.n) / dt.count() / 1e6 : 0.0);
        out << line;
    }
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Compare greedy LZ77-type parsings", args.empty() ? "lzcmp" : args[0]};
    app.require_subcommand(1);

    ParseOptions po;
    auto* parse = app.add_subcommand("parse", "Greedy parsing size (and phrases)");
    parse->add_option("--variant", po.variant, "lz|novlz|lz3|novlz3")->required()->check(CLI::IsMember(kVariantNames));
    auto* text_opt = parse->add_option("--text", po.text, "Input string (printable ASCII)");
    auto* input_opt = parse->add_option("--input", po.input, "Input file");
    text_opt->excludes(input_opt);
    parse->add_flag("--ints", po.ints, "Input file holds whitespace-separated symbol ids");
    parse->add_option("--format", po.format)->check(CLI::IsMember({"text", "json"}));
    parse->add_flag("--phrases", po.phrases, "Also print the phrases in dot notation");

    OracleOptions oo;
    auto* oracle = app.add_subcommand("oracle", "Minimum parsing size by exhaustive DP");
    oracle->add_option("--type", oo.type)->required()->check(CLI::IsMember(kVariantNames));
    oracle->add_option("--text", oo.text)->required();
    oracle->add_option("--format", oo.format)->check(CLI::IsMember({"text", "json"}));

    GenerateOptions go;
    auto* gen = app.add_subcommand("generate", "Write a family string");
    gen->add_option("--family", go.family)
        ->required()
        ->check(CLI::IsMember({"unary-blocks", "gray-blocks", "powers-a", "powers-b", "powers-c", "ab-power",
                               "recursive", "thue-morse", "random"}));
    gen->add_option("--k", go.k, "Family index (i for recursive)");
    gen->add_option("--n", go.n);
    gen->add_option("--sigma", go.sigma);
    gen->add_option("--z", go.z);
    gen->add_option("--seed", go.seed);
    gen->add_flag("--truncated", go.truncated);
    gen->add_flag("--ints", go.ints, "Write whitespace-separated symbol ids");
    gen->add_option("--out", go.out);

    VerifyOptions vo;
    auto* verify = app.add_subcommand("verify", "Run a verification sweep");
    verify->add_option("--target", vo.target)->required()->check(CLI::IsMember({"lemma2", "t1", "t2", "t3"}));
    verify->add_option("--out", vo.out, "Report file");
    verify->add_option("--format", vo.format)->check(CLI::IsMember({"csv", "json"}));
    verify->add_option("--random", vo.random, "Number of random strings");
    verify->add_option("--seed", vo.seed);
    verify->add_option("--k-max", vo.k_max);
    verify->add_option("--c-k-max", vo.c_k_max);
    verify->add_option("--max-binary", vo.max_binary);
    verify->add_option("--max-ternary", vo.max_ternary);
    verify->add_option("--ns", vo.ns);
    verify->add_option("--sigmas", vo.sigmas);
    verify->add_option("--zs", vo.zs);
    verify->add_option("--alpha", vo.alpha)->check(CLI::Range(0.0, 1.0));

    CodecOptions eo;
    auto* enc = app.add_subcommand("codec-encode", "Parse a file and write the token container");
    enc->add_option("--variant", eo.variant)->required()->check(CLI::IsMember(kVariantNames));
    enc->add_option("--in", eo.in)->required();
    enc->add_option("--out", eo.out)->required();
    enc->add_flag("--ints", eo.ints);

    CodecOptions dopt;
    auto* dec = app.add_subcommand("codec-decode", "Expand a token container");
    dec->add_option("--variant", dopt.variant)->check(CLI::IsMember(kVariantNames));
    dec->add_option("--in", dopt.in)->required();
    dec->add_option("--out", dopt.out)->required();
    dec->add_flag("--ints", dopt.ints);

    BenchOptions bo;
    auto* bench = app.add_subcommand("bench", "Parse throughput on a random text");
    bench->add_option("--n", bo.n);
    bench->add_option("--sigma", bo.sigma)->check(CLI::PositiveNumber);
    bench->add_option("--seed", bo.seed);

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    if (args.empty()) argv.push_back("lzcmp");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (parse->parsed()) return do_parse(po, out);
        if (oracle->parsed()) return do_oracle(oo, out);
        if (gen->parsed()) return do_generate(go, out);
        if (verify->parsed()) return do_verify(vo, out);
        if (enc->parsed()) return do_codec_encode(eo);
        if (dec->parsed()) return do_codec_decode(dopt);
        if (bench->parsed()) return do_bench(bo, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ParameterError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitUsage;
}

}  // namespace lzcmp
