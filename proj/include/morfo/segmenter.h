#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "morfo/lexicon.h"
#include "morfo/segmentation.h"

namespace morfo {

// Root in the lexicon and at least kMinRootLength long, at most kMaxPrefixes prefixes,
// no disallowed prefix/suffix pair.
bool is_valid(const Segmentation& seg, const RootLexicon& lexicon);

// Every valid segmentation of a hyphen-free lowercase word that recombines to exactly
// that word. Roots themselves have no candidates. Both stripping orders (suffixes then
// prefixes, prefixes then suffixes) feed the pool.
std::vector<Segmentation> candidates(std::string_view word, const RootLexicon& lexicon);

// Deterministic choice: fewest affixes, then longest root, then the lexicographically
// smallest rendering. `pool` must be non-empty.
const Segmentation& select(std::span<const Segmentation> pool);

// "X-Y" where X carries only prefixes, Y only suffixes, and both reach the same root.
// Returns the analysis with redup set, or nullopt when the word is not a reduplication.
std::optional<Segmentation> detect_reduplication(std::string_view word,
                                                 const RootLexicon& lexicon);

// Segmentation when one exists, Passthrough otherwise (roots, OOV words, numbers,
// anything that is not lowercase a-z with at most one hyphen).
WordAnalysis separate_word(std::string_view word, const RootLexicon& lexicon);

}  // namespace morfo
