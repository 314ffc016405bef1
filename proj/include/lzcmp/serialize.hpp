#pragma once

#include <lzcmp/parsing.hpp>
#include <lzcmp/text.hpp>

#include <string>
#include <string_view>

namespace lzcmp {

// JSON form of a parsing:
//
//   {"variant": "lz", "n": 7, "size": 4,
//    "phrases": [{"kind": "LIT", "start": 1, "len": 1, "trailing": 0},
//                {"kind": "COPY", "start": 3, "len": 4, "source": 1}, ...]}
//
// When `text` is given, a "dot" member with the dotted rendering is added.
std::string parsing_to_json(const Parsing& parsing, const Text* text = nullptr, int indent = -1);

// Inverse of parsing_to_json(); ignores "dot". Throws std::invalid_argument.
Parsing parsing_from_json(std::string_view json);

}  // namespace lzcmp
