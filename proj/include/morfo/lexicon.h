#pragma once

#include <filesystem>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace morfo {

// Root-word dictionary. Entries are lowercase, NFC, whitespace-free. Immutable after
// construction, so concurrent lookups need no synchronization.
//
// File format: UTF-8, one root per line, blank lines ignored, lines whose first
// non-blank character is '#' are comments. Multi-word compound roots are stored with
// the spaces removed ("tanggung jawab" -> "tanggungjawab").
class RootLexicon {
 public:
  // Throws EncodingError (with line number) or EmptyLexicon.
  static RootLexicon load(std::istream& in, std::string source_path = "<stream>");
  static RootLexicon load_file(const std::filesystem::path& path);
  static RootLexicon from_words(std::span<const std::string_view> words);
  static RootLexicon from_words(std::initializer_list<std::string_view> words);

  // Exact match on lowercase(NFC(word)).
  bool contains(std::string_view word) const;

  std::size_t size() const { return roots_.size(); }
  const std::string& source_path() const { return source_path_; }

  std::vector<std::string> sorted_roots() const;
  // Writes sorted_roots() in the load format.
  void save(std::ostream& out) const;

  bool operator==(const RootLexicon& other) const { return roots_ == other.roots_; }

 private:
  struct Hash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const { return std::hash<std::string_view>{}(s); }
  };

  RootLexicon() = default;
  void add_entry(std::string_view raw);

  std::unordered_set<std::string, Hash, std::equal_to<>> roots_;
  std::string source_path_;
};

}  // namespace morfo
