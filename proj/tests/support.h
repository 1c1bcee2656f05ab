#pragma once

#include <filesystem>
#include <string>

#include "morfo/lexicon.h"

namespace morfo::testing {

inline std::filesystem::path data_dir() { return MORFO_TEST_DATA_DIR; }
inline std::filesystem::path lexicon_path() { return data_dir() / "lexicon" / "roots.txt"; }
inline std::filesystem::path corpus_path() { return data_dir() / "corpus" / "sample.id"; }

inline const RootLexicon& shipped_lexicon() {
  static const RootLexicon lex = RootLexicon::load_file(lexicon_path());
  return lex;
}

}  // namespace morfo::testing
