#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace morfo {

using TokenList = std::vector<std::string>;

// Whitespace split; BLEU never re-tokenizes.
TokenList tokenize(std::string_view line);

struct BleuScore {
  std::vector<double> precisions;  // p1..pN
  std::vector<std::size_t> matches;  // clipped
  std::vector<std::size_t> totals;
  double brevity_penalty = 1.0;
  double score = 0.0;  // 0..100
  std::size_t hyp_len = 0;
  std::size_t ref_len = 0;
};

// Single-reference corpus BLEU with clipped counts pooled over all sentences.
// Orders that have no hypothesis n-grams anywhere in the corpus are left out of the
// geometric mean. Throws LengthMismatch, EmptyCorpus (no sentences or no hypothesis
// tokens).
BleuScore corpus_bleu(std::span<const TokenList> hyps, std::span<const TokenList> refs,
                      int max_n = 4);

// As corpus_bleu on one pair, except an order with zero matches counts epsilon matches.
// Throws EmptyInput.
BleuScore sentence_bleu(const TokenList& hyp, const TokenList& ref, int max_n = 4,
                        double epsilon = 0.1);

}  // namespace morfo
