#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace morfo::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitData = 1;
inline constexpr int kExitUsage = 2;

// Entry point behind the `morfo` binary. `args` excludes the program name.
//   separate --lexicon <path> [--paper-exact] [--jobs N] [<in>] [-o <out>]
//   combine [<in>] [-o <out>]
//   stats --before <file> --after <file>
//   bleu --hyp <file> --ref <file> [--sentence] [--max-n N]
//   rules dump
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace morfo::cli
