#include "morfo/bleu.h"

#include <algorithm>
#include <cmath>
#include <map>

#include "morfo/errors.h"
#include "morfo/text.h"

namespace morfo {

TokenList tokenize(std::string_view line) {
  TokenList out;
  for (auto piece : text::split_whitespace(line)) out.emplace_back(piece);
  return out;
}

namespace {

struct SpanLess {
  bool operator()(std::span<const std::string> a, std::span<const std::string> b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }
};

using NgramCounts = std::map<std::span<const std::string>, std::size_t, SpanLess>;

NgramCounts ngrams(const TokenList& toks, std::size_t n) {
  NgramCounts counts;
  for (std::size_t i = 0; i + n <= toks.size(); ++i)
    ++counts[std::span<const std::string>(toks).subspan(i, n)];
  return counts;
}

void accumulate(const TokenList& hyp, const TokenList& ref, BleuScore& s) {
  s.hyp_len += hyp.size();
  s.ref_len += ref.size();
  for (std::size_t n = 1; n <= s.matches.size(); ++n) {
    const auto h = ngrams(hyp, n);
    const auto r = ngrams(ref, n);
    for (const auto& [gram, count] : h) {
      s.totals[n - 1] += count;
      if (auto it = r.find(gram); it != r.end()) s.matches[n - 1] += std::min(count, it->second);
    }
  }
}

BleuScore start(int max_n) {
  const auto n = static_cast<std::size_t>(std::max(max_n, 1));
  BleuScore s;
  s.matches.assign(n, 0);
  s.totals.assign(n, 0);
  s.precisions.assign(n, 0.0);
  return s;
}

void finish(BleuScore& s, double epsilon) {
  double log_sum = 0.0;
  std::size_t orders = 0;
  bool zero = false;
  for (std::size_t i = 0; i < s.totals.size(); ++i) {
    if (s.totals[i] == 0) continue;
    double m = static_cast<double>(s.matches[i]);
    if (s.matches[i] == 0) m = epsilon;
    s.precisions[i] = m / static_cast<double>(s.totals[i]);
    if (s.precisions[i] <= 0.0) zero = true;
    else log_sum += std::log(s.precisions[i]);
    ++orders;
  }
  s.brevity_penalty =
      s.hyp_len < s.ref_len
          ? std::exp(1.0 - static_cast<double>(s.ref_len) / static_cast<double>(s.hyp_len))
          : 1.0;
  s.score = (zero || orders == 0)
                ? 0.0
                : 100.0 * s.brevity_penalty * std::exp(log_sum / static_cast<double>(orders));
}

}  // namespace

BleuScore corpus_bleu(std::span<const TokenList> hyps, std::span<const TokenList> refs,
                      int max_n) {
  if (hyps.size() != refs.size()) throw LengthMismatch(hyps.size(), refs.size());
  if (hyps.empty()) throw EmptyCorpus();
  BleuScore s = start(max_n);
  for (std::size_t i = 0; i < hyps.size(); ++i) accumulate(hyps[i], refs[i], s);
  if (s.hyp_len == 0) throw EmptyCorpus();
  finish(s, 0.0);
  return s;
}

BleuScore sentence_bleu(const TokenList& hyp, const TokenList& ref, int max_n, double epsilon) {
  if (hyp.empty() || ref.empty()) throw EmptyInput();
  BleuScore s = start(max_n);
  accumulate(hyp, ref, s);
  finish(s, epsilon);
  return s;
}

}  // namespace morfo
