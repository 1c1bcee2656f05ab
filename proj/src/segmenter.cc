#include "morfo/segmenter.h"

#include <algorithm>
#include <tuple>

#include "morfo/combiner.h"
#include "morfo/errors.h"
#include "morfo/rules.h"
#include "morfo/token.h"

namespace morfo {

namespace {

// Calls fn(prefixes, stem) for the unstripped surface and for every chain of up to
// kMaxPrefixes - prefixes.size() further prefix strips.
template <typename Fn>
void for_each_prefix_chain(std::string_view surface, std::vector<Prefix>& prefixes, Fn&& fn) {
  fn(prefixes, surface);
  if (prefixes.size() == kMaxPrefixes) return;
  for (const auto& strip : strip_prefix_candidates(surface)) {
    prefixes.push_back(strip.prefix);
    for_each_prefix_chain(strip.remainder, prefixes, fn);
    prefixes.pop_back();
  }
}

bool recombines_to(const Segmentation& seg, std::string_view word) {
  try {
    return combine_word(seg) == word;
  } catch (const NoGenerationRule&) {
    return false;
  }
}

class CandidatePool {
 public:
  CandidatePool(std::string_view word, const RootLexicon& lexicon)
      : word_(word), lexicon_(lexicon) {}

  void consider(Segmentation seg) {
    if (seg.affix_count() == 0 || !is_valid(seg, lexicon_)) return;
    if (std::find(pool_.begin(), pool_.end(), seg) != pool_.end()) return;
    if (!recombines_to(seg, word_)) return;
    pool_.push_back(std::move(seg));
  }

  std::vector<Segmentation> take() { return std::move(pool_); }

 private:
  std::string_view word_;
  const RootLexicon& lexicon_;
  std::vector<Segmentation> pool_;
};

}  // namespace

bool is_valid(const Segmentation& seg, const RootLexicon& lexicon) {
  return seg.prefixes.size() <= kMaxPrefixes && seg.root.size() >= kMinRootLength &&
         lexicon.contains(seg.root) && is_allowed(seg.prefixes, seg.ds);
}

std::vector<Segmentation> candidates(std::string_view word, const RootLexicon& lexicon) {
  if (!is_lower_word(word) || lexicon.contains(word)) return {};
  CandidatePool pool(word, lexicon);
  std::vector<Prefix> prefixes;

  for (const auto& chain : strip_suffix_chain(word)) {
    for_each_prefix_chain(chain.core, prefixes, [&](const std::vector<Prefix>& pfx,
                                                    std::string_view stem) {
      pool.consider({pfx, false, std::string(stem), chain.ds, chain.pp, chain.p});
    });
  }
  for_each_prefix_chain(word, prefixes, [&](const std::vector<Prefix>& pfx,
                                            std::string_view stem) {
    if (pfx.empty()) return;
    for (const auto& chain : strip_suffix_chain(stem))
      pool.consider({pfx, false, chain.core, chain.ds, chain.pp, chain.p});
  });
  return pool.take();
}

const Segmentation& select(std::span<const Segmentation> pool) {
  auto key = [](const Segmentation& s) {
    return std::make_tuple(s.affix_count(), -static_cast<long>(s.root.size()), render_string(s));
  };
  return *std::min_element(pool.begin(), pool.end(),
                           [&](const auto& a, const auto& b) { return key(a) < key(b); });
}

std::optional<Segmentation> detect_reduplication(std::string_view word,
                                                 const RootLexicon& lexicon) {
  const auto hyphen = word.find('-');
  if (hyphen == std::string_view::npos || word.find('-', hyphen + 1) != std::string_view::npos)
    return std::nullopt;
  const auto left = word.substr(0, hyphen);
  const auto right = word.substr(hyphen + 1);
  if (!is_lower_word(left) || !is_lower_word(right)) return std::nullopt;

  auto analyses = [&](std::string_view side) {
    std::vector<Segmentation> out = candidates(side, lexicon);
    if (side.size() >= kMinRootLength && lexicon.contains(side))
      out.push_back({{}, false, std::string(side), {}, {}, {}});
    return out;
  };

  std::vector<Segmentation> pool;
  for (const auto& l : analyses(left)) {
    if (l.ds || l.pp || l.p) continue;
    for (const auto& r : analyses(right)) {
      if (!r.prefixes.empty() || r.root != l.root) continue;
      Segmentation seg{l.prefixes, true, l.root, r.ds, r.pp, r.p};
      if (is_valid(seg, lexicon) && recombines_to(seg, word) &&
          std::find(pool.begin(), pool.end(), seg) == pool.end())
        pool.push_back(std::move(seg));
    }
  }
  if (pool.empty()) return std::nullopt;
  return select(pool);
}

WordAnalysis separate_word(std::string_view word, const RootLexicon& lexicon) {
  if (word.find('-') != std::string_view::npos) {
    if (auto seg = detect_reduplication(word, lexicon)) return *seg;
    return Passthrough{std::string(word)};
  }
  auto pool = candidates(word, lexicon);
  if (pool.empty()) return Passthrough{std::string(word)};
  return select(pool);
}

}  // namespace morfo
