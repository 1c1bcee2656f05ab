#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "morfo/segmentation.h"

namespace morfo {

// Tilde wire format:
//   PrefixMark  "ter~"     RedupMark  "prl~"     SuffixMark  "~nya"
//   Root/Plain  bare word  Punct      one of . , ? ! ; : " ' ( ) [ ]
enum class TokenKind { PrefixMark, RedupMark, Root, SuffixMark, Plain, Punct };

struct SubwordToken {
  TokenKind kind;
  std::string text;
  bool operator==(const SubwordToken&) const = default;
};

inline constexpr std::string_view kRedupMark = "prl~";
inline constexpr std::string_view kPunctuation = ".,?!;:\"'()[]";

inline bool is_punct(char c) { return kPunctuation.find(c) != std::string_view::npos; }

struct RenderOptions {
  // Render per~ as pe~. Loses the pe/per distinction on recombination.
  bool paper_exact = false;
};

std::vector<SubwordToken> render(const Segmentation& seg, RenderOptions opts = {});
std::string render_string(const Segmentation& seg, RenderOptions opts = {});
std::vector<SubwordToken> render(const WordAnalysis& analysis, RenderOptions opts = {});

// Classifies one wire token by its shape. Marks must name a known affix of the right
// class; other bare tokens are Root.
SubwordToken classify_token(std::string_view text);

std::string join_tokens(const std::vector<SubwordToken>& tokens);

}  // namespace morfo
