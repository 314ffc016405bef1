#include <lzcmp/serialize.hpp>

#include <json.hpp>

namespace lzcmp {

using nlohmann::ordered_json;

std::string parsing_to_json(const Parsing& parsing, const Text* text, int indent) {
    ordered_json j;
    j["variant"] = parsing.variant.name();
    j["n"] = parsing.text_len;
    j["size"] = parsing.size();
    auto& phrases = j["phrases"] = ordered_json::array();
    for (const Phrase& ph : parsing.phrases) {
        ordered_json rec;
        rec["kind"] = ph.is_literal() ? "LIT" : "COPY";
        rec["start"] = ph.start;
        rec["len"] = ph.len;
        if (ph.source) rec["source"] = *ph.source;
        if (ph.trailing) rec["trailing"] = *ph.trailing;
        phrases.push_back(std::move(rec));
    }
    if (text) j["dot"] = to_dot(*text, parsing);
    return j.dump(indent);
}

Parsing parsing_from_json(std::string_view json) {
    try {
        const auto j = ordered_json::parse(json);
        Parsing parsing;
        parsing.variant = variant_from_name(j.at("variant").get<std::string>());
        parsing.text_len = j.at("n").get<std::size_t>();
        for (const auto& rec : j.at("phrases")) {
            Phrase ph;
            ph.start = rec.at("start").get<std::size_t>();
            ph.len = rec.at("len").get<std::size_t>();
            if (rec.contains("source")) ph.source = rec["source"].get<std::size_t>();
            if (rec.contains("trailing")) ph.trailing = rec["trailing"].get<Symbol>();
            const auto kind = rec.at("kind").get<std::string>();
            if ((kind == "LIT") != ph.is_literal() || (kind != "LIT" && kind != "COPY")) {
                throw std::invalid_argument("phrase kind '" + kind + "' disagrees with its fields");
            }
            parsing.phrases.push_back(ph);
        }
        return parsing;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed parsing JSON: ") + e.what());
    }
}

}  // namespace lzcmp
