#include "morfo/combiner.h"

#include "morfo/errors.h"

namespace morfo {

namespace {

std::string apply_prefixes(const std::vector<Prefix>& prefixes, std::string stem) {
  for (std::size_t i = prefixes.size(); i-- > 0;) {
    std::optional<Prefix> inner;
    if (i + 1 < prefixes.size()) inner = prefixes[i + 1];
    stem = generate_prefix(prefixes[i], stem, inner);
  }
  return stem;
}

std::string with_suffixes(const Segmentation& seg) {
  std::string out = seg.root;
  if (seg.ds) out += name(*seg.ds);
  if (seg.pp) out += name(*seg.pp);
  if (seg.p) out += name(*seg.p);
  return out;
}

// Sets the suffix slot named by `mark` and returns its rank (DS=1, PP=2, P=3).
int attach_suffix(std::string_view mark, Segmentation& seg) {
  const auto affix = find_affix(mark.substr(1));
  switch (affix->kind) {
    case AffixClass::DS:
      for (auto s : kAllDerivSuffixes)
        if (name(s) == affix->name) seg.ds = s;
      return 1;
    case AffixClass::PP:
      for (auto s : kAllPossessives)
        if (name(s) == affix->name) seg.pp = s;
      return 2;
    case AffixClass::P:
      for (auto s : kAllParticles)
        if (name(s) == affix->name) seg.p = s;
      return 3;
    case AffixClass::DP:
      break;
  }
  return 0;
}

}  // namespace

std::string combine_word(const Segmentation& seg) {
  if (!seg.redup) return apply_prefixes(seg.prefixes, with_suffixes(seg));
  return apply_prefixes(seg.prefixes, seg.root) + "-" + with_suffixes(seg);
}

std::vector<std::string> combine_tokens(std::span<const SubwordToken> tokens) {
  std::vector<std::string> out;
  Segmentation pending;
  std::size_t pending_start = 0;
  bool has_pending_marks = false;

  // The word currently accepting suffix marks.
  std::optional<Segmentation> open;
  int open_slot = 0;

  auto flush_open = [&] {
    if (open) {
      out.push_back(combine_word(*open));
      open.reset();
    }
  };

  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const auto& tok = tokens[i];
    switch (tok.kind) {
      case TokenKind::PrefixMark:
      case TokenKind::RedupMark:
        flush_open();
        if (!has_pending_marks) pending_start = i;
        has_pending_marks = true;
        if (tok.kind == TokenKind::RedupMark) {
          if (pending.redup) throw DanglingAffix(i, tok.text);
          pending.redup = true;
        } else {
          pending.prefixes.push_back(*find_prefix(tok.text.substr(0, tok.text.size() - 1)));
        }
        break;
      case TokenKind::Root:
        flush_open();
        pending.root = tok.text;
        open = std::move(pending);
        open_slot = 0;
        pending = Segmentation{};
        has_pending_marks = false;
        break;
      case TokenKind::SuffixMark: {
        if (!open || has_pending_marks) throw DanglingAffix(i, tok.text);
        Segmentation probe = *open;
        const int slot = attach_suffix(tok.text, probe);
        if (slot <= open_slot) throw DanglingAffix(i, tok.text);
        *open = std::move(probe);
        open_slot = slot;
        break;
      }
      case TokenKind::Plain:
      case TokenKind::Punct:
        if (has_pending_marks) throw DanglingAffix(pending_start, tokens[pending_start].text);
        flush_open();
        out.push_back(tok.text);
        break;
    }
  }
  if (has_pending_marks) throw DanglingAffix(pending_start, tokens[pending_start].text);
  flush_open();
  return out;
}

}  // namespace morfo
