#pragma once

#include <span>
#include <string>
#include <vector>

#include "morfo/segmentation.h"
#include "morfo/token.h"

namespace morfo {

// Surface word for a segmentation. Suffixes concatenate onto the root; prefixes are
// then realized innermost first. Reduplication renders as
//   prefixes+root "-" root+suffixes.
// Throws NoGenerationRule.
std::string combine_word(const Segmentation& seg);

// Folds marks into the nearest Root: prefix/redup marks into the next one, suffix marks
// into the preceding one. Plain and Punct tokens pass through. Throws DanglingAffix with
// the index of the offending mark.
std::vector<std::string> combine_tokens(std::span<const SubwordToken> tokens);

}  // namespace morfo
