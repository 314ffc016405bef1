#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lzcmp {

// Exit codes of run_cli().
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // failed verification or runtime error
inline constexpr int kExitUsage = 2;

// Entry point of the `lzcmp` tool. args[0] is the program name.
//
//   parse         --variant V (--text STR | --input FILE [--ints]) [--format text|json] [--phrases]
//   oracle        --type V --text STR [--format text|json]
//   generate      --family ID [--k K] [--n N --sigma S --z Z --seed SEED] [--truncated] [--ints] [--out FILE]
//   verify        --target lemma2|t1|t2|t3 [grid flags] [--out REPORT] [--format csv|json]
//   codec-encode  --variant V --in FILE --out FILE [--ints]
//   codec-decode  --in FILE --out FILE [--variant V] [--ints]
//   bench         --n N --sigma S [--seed SEED]
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lzcmp
