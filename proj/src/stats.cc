#include "morfo/stats.h"

#include <cstdio>
#include <istream>
#include <ostream>

#include "morfo/errors.h"
#include "morfo/text.h"
#include "morfo/token.h"

namespace morfo {

void VocabCounter::add_line(std::string_view line) {
  ++lines_;
  if (!text::is_valid_utf8(line)) throw EncodingError(lines_);
  for (auto tok : text::split_whitespace(line)) {
    ++total_;
    vocab_.emplace(tok);
  }
}

void VocabCounter::merge(const VocabCounter& other) {
  vocab_.insert(other.vocab_.begin(), other.vocab_.end());
  total_ += other.total_;
  lines_ += other.lines_;
}

std::size_t VocabCounter::mark_vocabulary() const {
  std::size_t n = 0;
  for (const auto& tok : vocab_) {
    switch (classify_token(tok).kind) {
      case TokenKind::PrefixMark:
      case TokenKind::RedupMark:
      case TokenKind::SuffixMark:
        ++n;
        break;
      default:
        break;
    }
  }
  return n;
}

namespace {

VocabCounter count_stream(std::istream& in) {
  VocabCounter counter;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    counter.add_line(line);
  }
  return counter;
}

}  // namespace

VocabCount vocab_count(std::istream& corpus) { return count_stream(corpus).count(); }

VocabReport reduction_report(const VocabCounter& before, const VocabCounter& after) {
  const auto b = before.count();
  const auto a = after.count();
  VocabReport r;
  r.tokens_before = b.unique_tokens;
  r.tokens_after = a.unique_tokens;
  r.reduction_abs = static_cast<long long>(b.unique_tokens) - static_cast<long long>(a.unique_tokens);
  r.pct_defined = b.unique_tokens > 0;
  r.reduction_pct = r.pct_defined ? 100.0 * static_cast<double>(r.reduction_abs) /
                                        static_cast<double>(b.unique_tokens)
                                  : 0.0;
  r.sentences = b.sentences;
  r.avg_words_per_sentence =
      b.sentences ? static_cast<double>(b.total_tokens) / static_cast<double>(b.sentences) : 0.0;
  r.mark_vocabulary = after.mark_vocabulary();
  return r;
}

VocabReport reduction_report(std::istream& before, std::istream& after) {
  return reduction_report(count_stream(before), count_stream(after));
}

void print_report(const VocabReport& r, std::ostream& out) {
  char buf[128];
  auto row = [&](const char* label, const std::string& value) {
    std::snprintf(buf, sizeof buf, "%-28s %14s\n", label, value.c_str());
    out << buf;
  };
  auto fixed = [&](double v) {
    char num[64];
    std::snprintf(num, sizeof num, "%.2f", v);
    return std::string(num);
  };
  const std::string pct = r.pct_defined ? fixed(r.reduction_pct) + "%" : "undefined";

  row("vocabulary before", std::to_string(r.tokens_before));
  row("vocabulary after", std::to_string(r.tokens_after));
  row("reduction", std::to_string(r.reduction_abs));
  row("reduction percentage", pct);
  row("sentences", std::to_string(r.sentences));
  row("average words per sentence", fixed(r.avg_words_per_sentence));
  row("affix mark vocabulary", std::to_string(r.mark_vocabulary));
  out << "(punctuation tokens are counted as vocabulary)\n\n";

  out << "tokens_before=" << r.tokens_before << '\n'
      << "tokens_after=" << r.tokens_after << '\n'
      << "reduction_abs=" << r.reduction_abs << '\n'
      << "reduction_pct=" << fixed(r.reduction_pct) << '\n'
      << "reduction_pct_defined=" << (r.pct_defined ? "true" : "false") << '\n'
      << "sentences=" << r.sentences << '\n'
      << "avg_words_per_sentence=" << fixed(r.avg_words_per_sentence) << '\n'
      << "mark_vocabulary=" << r.mark_vocabulary << '\n'
      << "punctuation_counted=true\n";
}

}  // namespace morfo
