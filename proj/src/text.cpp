#include <lzcmp/text.hpp>

#include <algorithm>
#include <array>
#include <charconv>
#include <cctype>

namespace lzcmp {

namespace {
constexpr std::string_view kLetterTable =
    "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789";
}

Text::Text(std::vector<Symbol> syms, std::size_t alphabet_size, std::string display)
    : symbols(std::move(syms)), sigma(alphabet_size), letters(std::move(display)) {}

char default_letter(Symbol s) {
    if (s < kLetterTable.size()) return kLetterTable[s];
    if (s < 256) return static_cast<char>(s);
    throw TextError("symbol id " + std::to_string(s) + " has no byte rendering");
}

char Text::letter(Symbol s) const {
    if (s < letters.size()) return letters[s];
    return default_letter(s);
}

void Text::check() const {
    for (Symbol s : symbols) {
        if (s >= sigma) {
            throw TextError("symbol id " + std::to_string(s) + " outside alphabet of size " +
                            std::to_string(sigma));
        }
    }
    if (!letters.empty()) {
        if (letters.size() != sigma) throw TextError("letter table size differs from sigma");
        std::string sorted = letters;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            throw TextError("letter table has duplicate entries");
        }
    }
}

Text from_bytes(std::string_view bytes) {
    std::array<int, 256> id;
    id.fill(-1);
    Text text;
    text.symbols.reserve(bytes.size());
    for (char c : bytes) {
        auto b = static_cast<unsigned char>(c);
        if (id[b] < 0) {
            id[b] = static_cast<int>(text.letters.size());
            text.letters.push_back(c);
        }
        text.symbols.push_back(static_cast<Symbol>(id[b]));
    }
    text.sigma = text.letters.size();
    return text;
}

Text from_raw_bytes(std::string_view bytes) {
    std::vector<Symbol> symbols;
    symbols.reserve(bytes.size());
    for (char c : bytes) symbols.push_back(static_cast<unsigned char>(c));
    return Text(std::move(symbols), 256);
}

std::string to_raw_bytes(const Text& text) {
    std::string out;
    out.reserve(text.size());
    for (Symbol s : text.symbols) {
        if (s > 255) throw TextError("symbol id " + std::to_string(s) + " does not fit a byte");
        out.push_back(static_cast<char>(s));
    }
    return out;
}

Text from_int_sequence(std::string_view input) {
    Text text;
    std::size_t i = 0;
    Symbol max_symbol = 0;
    while (i < input.size()) {
        if (std::isspace(static_cast<unsigned char>(input[i]))) {
            ++i;
            continue;
        }
        Symbol value = 0;
        auto [ptr, ec] = std::from_chars(input.data() + i, input.data() + input.size(), value);
        if (ec != std::errc() || ptr == input.data() + i) {
            throw TextError("malformed integer sequence at offset " + std::to_string(i));
        }
        i = static_cast<std::size_t>(ptr - input.data());
        if (i < input.size() && !std::isspace(static_cast<unsigned char>(input[i]))) {
            throw TextError("malformed integer sequence at offset " + std::to_string(i));
        }
        max_symbol = std::max(max_symbol, value);
        text.symbols.push_back(value);
    }
    text.sigma = text.symbols.empty() ? 0 : static_cast<std::size_t>(max_symbol) + 1;
    return text;
}

std::string to_bytes(const Text& text) {
    return render(text, 0, text.size());
}

std::string to_int_sequence(const Text& text) {
    std::string out;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (i) out.push_back(' ');
        out += std::to_string(text[i]);
    }
    out.push_back('\n');
    return out;
}

std::string render(const Text& text, std::size_t begin, std::size_t len) {
    std::string out;
    out.reserve(len);
    for (std::size_t i = begin; i < begin + len; ++i) out.push_back(text.letter(text[i]));
    return out;
}

}  // namespace lzcmp
