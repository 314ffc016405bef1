#include <lzcmp/transforms.hpp>

#include <lzcmp/greedy.hpp>
#include <lzcmp/suffix_index.hpp>

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace lzcmp {

void TransformConfig::check() const {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw std::invalid_argument("alpha must lie in (0, 1), got " + std::to_string(alpha));
    }
}

std::size_t near_threshold(std::size_t z, std::size_t sigma, double alpha) {
    if (z <= 1 || sigma <= 1) return 1;
    const double k = alpha * std::log(static_cast<double>(z)) / std::log(static_cast<double>(sigma));
    return std::max<std::size_t>(1, static_cast<std::size_t>(std::floor(k)));
}

namespace {

void push_letters(const Text& text, std::size_t begin, std::size_t len, Parsing& out) {
    for (std::size_t q = begin; q < begin + len; ++q) out.phrases.push_back(Phrase::literal(q + 1, text[q]));
}

// Cuts text[begin, begin + len) into pieces of nominal length unit, 2 unit,
// 4 unit, ...; the last piece may be shorter. Each piece is copied from
// exactly its nominal length to the left, which the caller guarantees holds
// the same symbols (the region is periodic with a period dividing unit and
// the unit symbols before `begin` repeat the start of the region).
void push_doubling(std::size_t begin, std::size_t len, std::size_t unit, Parsing& out) {
    std::size_t x = begin;
    const std::size_t end = begin + len;
    for (std::size_t nominal = unit; x < end; nominal *= 2) {
        const std::size_t piece = std::min(nominal, end - x);
        out.phrases.push_back(Phrase::copy(x + 1, piece, x - nominal + 1));
        x += piece;
    }
}

}  // namespace

Parsing overlap_to_nonoverlap_parsing(const Text& text, const TransformConfig& cfg) {
    cfg.check();
    Parsing out{kNovLZ, {}, text.size()};
    if (text.empty()) return out;

    const SuffixIndex index(text);
    const Parsing lz = parse_greedy(text, index, kLZ);
    const std::size_t k = near_threshold(lz.size(), text.sigma, cfg.alpha);

    for (const Phrase& ph : lz.phrases) {
        if (ph.is_literal()) {
            out.phrases.push_back(ph);
            continue;
        }
        const std::size_t s0 = ph.start - 1;
        const std::size_t j0 = *ph.source - 1;
        if (j0 + ph.len <= s0) {
            out.phrases.push_back(ph);
            continue;
        }

        const std::size_t p = s0 - j0;
        // An overlapping occurrence at distance p makes p a period.
        assert(has_period(text, j0, ph.len + p, p));

        if (p > k) {
            push_doubling(s0, ph.len, p, out);
            continue;
        }
        const std::size_t head = (k / p) * p;
        if (head >= ph.len) {
            push_letters(text, s0, ph.len, out);
            continue;
        }
        const std::size_t j_head = index.leftmost_occurrence(s0, head);
        if (j_head + head <= s0) {
            out.phrases.push_back(Phrase::copy(ph.start, head, j_head + 1));
        } else {
            push_letters(text, s0, head, out);
        }
        push_doubling(s0 + head, ph.len - head, head, out);
    }
    return out;
}

Parsing triples_to_pairs_parsing(const Text& text, Overlap overlap) {
    const Variant triple{Shape::Triples, overlap};
    const Parsing source = parse_greedy(text, triple);
    Parsing out{Variant{Shape::Pairs, overlap}, {}, text.size()};
    out.phrases.reserve(2 * source.size());
    for (const Phrase& ph : source.phrases) {
        if (ph.is_literal() || !ph.trailing) {
            out.phrases.push_back(ph);
            continue;
        }
        if (ph.len > 1) out.phrases.push_back(Phrase::copy(ph.start, ph.len - 1, *ph.source));
        out.phrases.push_back(Phrase::literal(ph.end(), *ph.trailing));
    }
    return out;
}

}  // namespace lzcmp
