#include "morfo/lexicon.h"

#include <algorithm>
#include <array>
#include <fstream>
#include <istream>
#include <ostream>

#include "morfo/errors.h"
#include "morfo/text.h"

namespace morfo {

namespace {

constexpr std::string_view kBom = "\xEF\xBB\xBF";

bool lower_ascii_into(std::string_view word, std::array<char, 64>& buf, std::string_view& out) {
  if (word.size() > buf.size()) return false;
  for (std::size_t i = 0; i < word.size(); ++i) {
    char c = word[i];
    if (static_cast<unsigned char>(c) >= 0x80) return false;
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    buf[i] = c;
  }
  out = std::string_view(buf.data(), word.size());
  return true;
}

}  // namespace

void RootLexicon::add_entry(std::string_view raw) {
  std::string folded = text::normalize_lower(raw);
  std::erase_if(folded, [](char c) { return text::is_ascii_space(c); });
  if (!folded.empty()) roots_.insert(std::move(folded));
}

RootLexicon RootLexicon::load(std::istream& in, std::string source_path) {
  RootLexicon lex;
  lex.source_path_ = std::move(source_path);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view view = line;
    if (lineno == 1 && view.starts_with(kBom)) view.remove_prefix(kBom.size());
    if (!text::is_valid_utf8(view)) throw EncodingError(lineno);
    view = text::trim(view);
    if (view.empty() || view.front() == '#') continue;
    lex.add_entry(view);
  }
  if (lex.roots_.empty()) throw EmptyLexicon(lex.source_path_);
  return lex;
}

RootLexicon RootLexicon::load_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open lexicon " + path.string());
  return load(in, path.string());
}

RootLexicon RootLexicon::from_words(std::span<const std::string_view> words) {
  RootLexicon lex;
  lex.source_path_ = "<memory>";
  for (std::string_view w : words) {
    if (!text::is_valid_utf8(w)) throw EncodingError();
    w = text::trim(w);
    if (!w.empty()) lex.add_entry(w);
  }
  if (lex.roots_.empty()) throw EmptyLexicon(lex.source_path_);
  return lex;
}

RootLexicon RootLexicon::from_words(std::initializer_list<std::string_view> words) {
  return from_words(std::span<const std::string_view>(words.begin(), words.size()));
}

bool RootLexicon::contains(std::string_view word) const {
  std::array<char, 64> buf;
  std::string_view key;
  if (lower_ascii_into(word, buf, key)) return roots_.find(key) != roots_.end();
  if (!text::is_valid_utf8(word)) return false;
  return roots_.find(text::normalize_lower(word)) != roots_.end();
}

std::vector<std::string> RootLexicon::sorted_roots() const {
  std::vector<std::string> out(roots_.begin(), roots_.end());
  std::sort(out.begin(), out.end());
  return out;
}

void RootLexicon::save(std::ostream& out) const {
  for (const auto& r : sorted_roots()) out << r << '\n';
}

}  // namespace morfo
