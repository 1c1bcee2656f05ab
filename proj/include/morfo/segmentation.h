#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "morfo/rules.h"

namespace morfo {

// A decomposition of one word. Renders in slot order:
// prefixes, redup?, root, ds?, pp?, p?
struct Segmentation {
  std::vector<Prefix> prefixes;  // outermost first, at most 3
  bool redup = false;
  std::string root;
  std::optional<DerivSuffix> ds;
  std::optional<Possessive> pp;
  std::optional<Particle> p;

  std::size_t affix_count() const {
    return prefixes.size() + (redup ? 1 : 0) + (ds ? 1 : 0) + (pp ? 1 : 0) + (p ? 1 : 0);
  }
  bool operator==(const Segmentation&) const = default;
};

// A word emitted unchanged.
struct Passthrough {
  std::string word;
  bool operator==(const Passthrough&) const = default;
};

using WordAnalysis = std::variant<Segmentation, Passthrough>;

inline constexpr std::size_t kMaxPrefixes = 3;
inline constexpr std::size_t kMinRootLength = 2;

}  // namespace morfo
