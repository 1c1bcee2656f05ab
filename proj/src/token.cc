#include "morfo/token.h"

namespace morfo {

namespace {

std::string prefix_mark(Prefix p, RenderOptions opts) {
  if (opts.paper_exact && p == Prefix::per) p = Prefix::pe;
  std::string out(name(p));
  out += '~';
  return out;
}

template <typename Suffix>
std::string suffix_mark(Suffix s) {
  std::string out = "~";
  out += name(s);
  return out;
}

}  // namespace

std::vector<SubwordToken> render(const Segmentation& seg, RenderOptions opts) {
  std::vector<SubwordToken> out;
  out.reserve(seg.affix_count() + 1);
  for (Prefix p : seg.prefixes) out.push_back({TokenKind::PrefixMark, prefix_mark(p, opts)});
  if (seg.redup) out.push_back({TokenKind::RedupMark, std::string(kRedupMark)});
  out.push_back({TokenKind::Root, seg.root});
  if (seg.ds) out.push_back({TokenKind::SuffixMark, suffix_mark(*seg.ds)});
  if (seg.pp) out.push_back({TokenKind::SuffixMark, suffix_mark(*seg.pp)});
  if (seg.p) out.push_back({TokenKind::SuffixMark, suffix_mark(*seg.p)});
  return out;
}

std::string render_string(const Segmentation& seg, RenderOptions opts) {
  return join_tokens(render(seg, opts));
}

std::vector<SubwordToken> render(const WordAnalysis& analysis, RenderOptions opts) {
  if (const auto* seg = std::get_if<Segmentation>(&analysis)) return render(*seg, opts);
  const auto& word = std::get<Passthrough>(analysis).word;
  if (word.size() == 1 && is_punct(word[0])) return {{TokenKind::Punct, word}};
  return {{TokenKind::Plain, word}};
}

SubwordToken classify_token(std::string_view text) {
  std::string t(text);
  if (text == kRedupMark) return {TokenKind::RedupMark, t};
  if (text.size() == 1 && is_punct(text[0])) return {TokenKind::Punct, t};
  if (text.size() > 1 && text.back() == '~') {
    if (find_prefix(text.substr(0, text.size() - 1))) return {TokenKind::PrefixMark, t};
  } else if (text.size() > 1 && text.front() == '~') {
    auto affix = find_affix(text.substr(1));
    if (affix && affix->kind != AffixClass::DP) return {TokenKind::SuffixMark, t};
  }
  return {TokenKind::Root, t};
}

std::string join_tokens(const std::vector<SubwordToken>& tokens) {
  std::string out;
  for (const auto& tok : tokens) {
    if (!out.empty()) out += ' ';
    out += tok.text;
  }
  return out;
}

}  // namespace morfo
