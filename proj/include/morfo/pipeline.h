#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "morfo/lexicon.h"
#include "morfo/token.h"

namespace morfo {

// Lowercase + NFC, split on whitespace runs, detach leading and trailing punctuation
// glyphs as their own tokens. Internal hyphens stay. Throws EncodingError.
std::vector<std::string> preprocess(std::string_view sentence);

std::vector<SubwordToken> separate_tokens(std::string_view sentence, const RootLexicon& lexicon,
                                          RenderOptions opts = {});

// preprocess, separate_word on every token, render, join with single spaces.
std::string separate_sentence(std::string_view sentence, const RootLexicon& lexicon,
                              RenderOptions opts = {});

// Classifies each space-delimited token of wire-format text by its tilde shape.
std::vector<SubwordToken> parse_tokens(std::string_view separated);

// Inverse of separate_sentence. Punctuation stays space-delimited. Throws DanglingAffix.
std::string combine_sentence(std::string_view separated);

struct StreamOptions {
  unsigned jobs = 1;
  std::size_t batch_lines = 4096;
};

struct LineError {
  std::size_t line;  // 1-based
  std::string message;
};

// Maps `fn` over the lines of `in`, writing results to `out` in input order. Reads in
// batches of batch_lines so memory stays bounded. A line whose fn throws morfo::Error
// is echoed unchanged and recorded.
std::vector<LineError> transform_lines(std::istream& in, std::ostream& out,
                                       const std::function<std::string(std::string_view)>& fn,
                                       StreamOptions opts = {});

}  // namespace morfo
