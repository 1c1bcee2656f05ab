#include "morfo/pipeline.h"

#include <algorithm>
#include <istream>
#include <optional>
#include <ostream>
#include <thread>

#include "morfo/combiner.h"
#include "morfo/errors.h"
#include "morfo/segmenter.h"
#include "morfo/text.h"

namespace morfo {

std::vector<std::string> preprocess(std::string_view sentence) {
  const std::string lowered = text::normalize_lower(sentence);
  std::vector<std::string> out;
  for (std::string_view word : text::split_whitespace(lowered)) {
    std::size_t lead = 0;
    while (lead < word.size() && is_punct(word[lead])) out.emplace_back(1, word[lead++]);
    word.remove_prefix(lead);
    std::vector<std::string> trailing;
    while (!word.empty() && is_punct(word.back())) {
      trailing.emplace_back(1, word.back());
      word.remove_suffix(1);
    }
    if (!word.empty()) out.emplace_back(word);
    out.insert(out.end(), trailing.rbegin(), trailing.rend());
  }
  return out;
}

std::vector<SubwordToken> separate_tokens(std::string_view sentence, const RootLexicon& lexicon,
                                          RenderOptions opts) {
  std::vector<SubwordToken> out;
  for (const auto& word : preprocess(sentence)) {
    auto toks = render(separate_word(word, lexicon), opts);
    std::move(toks.begin(), toks.end(), std::back_inserter(out));
  }
  return out;
}

std::string separate_sentence(std::string_view sentence, const RootLexicon& lexicon,
                              RenderOptions opts) {
  return join_tokens(separate_tokens(sentence, lexicon, opts));
}

std::vector<SubwordToken> parse_tokens(std::string_view separated) {
  std::vector<SubwordToken> out;
  for (auto piece : text::split_whitespace(separated)) out.push_back(classify_token(piece));
  return out;
}

std::string combine_sentence(std::string_view separated) {
  std::string out;
  for (const auto& word : combine_tokens(parse_tokens(separated))) {
    if (!out.empty()) out += ' ';
    out += word;
  }
  return out;
}

std::vector<LineError> transform_lines(std::istream& in, std::ostream& out,
                                       const std::function<std::string(std::string_view)>& fn,
                                       StreamOptions opts) {
  const std::size_t batch = std::max<std::size_t>(opts.batch_lines, 1);
  const unsigned jobs = std::max(opts.jobs, 1u);
  std::vector<LineError> errors;
  std::vector<std::string> lines;
  std::vector<std::string> results;
  std::vector<std::optional<std::string>> failures;
  std::size_t first_line = 1;

  auto work = [&](std::size_t begin, std::size_t stride) {
    for (std::size_t i = begin; i < lines.size(); i += stride) {
      try {
        results[i] = fn(lines[i]);
      } catch (const Error& e) {
        results[i] = lines[i];
        failures[i] = e.what();
      }
    }
  };

  std::string line;
  bool more = true;
  while (more) {
    lines.clear();
    while (lines.size() < batch && (more = static_cast<bool>(std::getline(in, line)))) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      lines.push_back(std::move(line));
    }
    if (lines.empty()) break;
    results.assign(lines.size(), {});
    failures.assign(lines.size(), std::nullopt);

    if (jobs == 1 || lines.size() < 2) {
      work(0, 1);
    } else {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(work, t, jobs);
    }

    for (std::size_t i = 0; i < lines.size(); ++i) {
      out << results[i] << '\n';
      if (failures[i]) errors.push_back({first_line + i, *failures[i]});
    }
    first_line += lines.size();
  }
  out.flush();
  return errors;
}

}  // namespace morfo
