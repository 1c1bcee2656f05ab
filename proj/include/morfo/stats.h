#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_set>

namespace morfo {

struct VocabCount {
  std::size_t unique_tokens = 0;
  std::size_t total_tokens = 0;
  std::size_t sentences = 0;
  bool operator==(const VocabCount&) const = default;
};

// Unique whitespace-delimited tokens over a stream of lines. Memory grows with the
// number of distinct tokens only.
class VocabCounter {
 public:
  // Throws EncodingError carrying the running line number.
  void add_line(std::string_view line);
  void merge(const VocabCounter& other);

  VocabCount count() const { return {vocab_.size(), total_, lines_}; }
  // Distinct tokens that are prefix, reduplication or suffix marks.
  std::size_t mark_vocabulary() const;
  const std::unordered_set<std::string>& vocabulary() const { return vocab_; }

 private:
  std::unordered_set<std::string> vocab_;
  std::size_t total_ = 0;
  std::size_t lines_ = 0;
};

VocabCount vocab_count(std::istream& corpus);

struct VocabReport {
  std::size_t tokens_before = 0;
  std::size_t tokens_after = 0;
  long long reduction_abs = 0;
  double reduction_pct = 0.0;
  bool pct_defined = true;  // false when the before corpus has no tokens
  std::size_t sentences = 0;
  double avg_words_per_sentence = 0.0;
  std::size_t mark_vocabulary = 0;
};

VocabReport reduction_report(std::istream& before, std::istream& after);
VocabReport reduction_report(const VocabCounter& before, const VocabCounter& after);

// Aligned table followed by key=value lines.
void print_report(const VocabReport& report, std::ostream& out);

}  // namespace morfo
