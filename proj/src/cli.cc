#include "morfo/cli.h"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <istream>
#include <memory>
#include <ostream>

#include "morfo/bleu.h"
#include "morfo/errors.h"
#include "morfo/lexicon.h"
#include "morfo/pipeline.h"
#include "morfo/rules.h"
#include "morfo/stats.h"

namespace morfo::cli {

namespace {

struct Options {
  std::string lexicon;
  bool paper_exact = false;
  unsigned jobs = 1;
  std::string input;
  std::string output;
  std::string before, after;
  std::string hyp, ref;
  bool sentence = false;
  int max_n = 4;
};

// Opens `path` or falls back to `fallback` for "" and "-".
class Streams {
 public:
  Streams(std::istream& in, std::ostream& out) : in_(&in), out_(&out) {}

  void open_input(const std::string& path) {
    if (path.empty() || path == "-") return;
    file_in_ = std::make_unique<std::ifstream>(path, std::ios::binary);
    if (!*file_in_) throw Error("cannot open " + path);
    in_ = file_in_.get();
  }
  void open_output(const std::string& path) {
    if (path.empty() || path == "-") return;
    file_out_ = std::make_unique<std::ofstream>(path, std::ios::binary);
    if (!*file_out_) throw Error("cannot write " + path);
    out_ = file_out_.get();
  }
  std::istream& in() { return *in_; }
  std::ostream& out() { return *out_; }

 private:
  std::istream* in_;
  std::ostream* out_;
  std::unique_ptr<std::ifstream> file_in_;
  std::unique_ptr<std::ofstream> file_out_;
};

std::vector<TokenList> read_token_lines(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open " + path);
  std::vector<TokenList> out;
  std::string line;
  while (std::getline(f, line)) out.push_back(tokenize(line));
  return out;
}

std::string format_bleu(const BleuScore& s) {
  std::string out;
  char buf[64];
  std::snprintf(buf, sizeof buf, "BLEU = %.2f, ", s.score);
  out += buf;
  for (std::size_t i = 0; i < s.precisions.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%s%.1f", i ? "/" : "", 100.0 * s.precisions[i]);
    out += buf;
  }
  std::snprintf(buf, sizeof buf, " (BP=%.3f, ratio=%.3f, ", s.brevity_penalty,
                s.ref_len ? static_cast<double>(s.hyp_len) / static_cast<double>(s.ref_len) : 0.0);
  out += buf;
  out += "hyp_len=" + std::to_string(s.hyp_len) + ", ref_len=" + std::to_string(s.ref_len) + ")";
  return out;
}

int report_line_errors(const std::vector<LineError>& errors, std::ostream& err) {
  for (const auto& e : errors) err << "line " << e.line << ": " << e.message << '\n';
  return errors.empty() ? kExitOk : kExitData;
}

int do_separate(const Options& o, Streams& io, std::ostream& err) {
  const auto lexicon = RootLexicon::load_file(o.lexicon);
  const RenderOptions render{o.paper_exact};
  const auto errors = transform_lines(
      io.in(), io.out(),
      [&](std::string_view line) { return separate_sentence(line, lexicon, render); },
      {.jobs = o.jobs});
  return report_line_errors(errors, err);
}

int do_combine(const Options& o, Streams& io, std::ostream& err) {
  const auto errors = transform_lines(
      io.in(), io.out(), [](std::string_view line) { return combine_sentence(line); },
      {.jobs = o.jobs});
  return report_line_errors(errors, err);
}

int do_stats(const Options& o, std::ostream& out) {
  std::ifstream before(o.before, std::ios::binary);
  std::ifstream after(o.after, std::ios::binary);
  if (!before) throw Error("cannot open " + o.before);
  if (!after) throw Error("cannot open " + o.after);
  print_report(reduction_report(before, after), out);
  return kExitOk;
}

int do_bleu(const Options& o, std::ostream& out) {
  const auto hyps = read_token_lines(o.hyp);
  const auto refs = read_token_lines(o.ref);
  if (o.sentence) {
    if (hyps.size() != refs.size()) throw LengthMismatch(hyps.size(), refs.size());
    for (std::size_t i = 0; i < hyps.size(); ++i) {
      out << i + 1 << '\t';
      if (hyps[i].empty() || refs[i].empty()) out << "n/a\n";
      else out << format_bleu(sentence_bleu(hyps[i], refs[i], o.max_n)) << '\n';
    }
  }
  out << format_bleu(corpus_bleu(hyps, refs, o.max_n)) << '\n';
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Reversible rule-based Indonesian sub-word segmenter", "morfo"};
  app.require_subcommand(1);
  Options o;

  auto* separate = app.add_subcommand("separate", "split words into root and affix tokens");
  separate->add_option("--lexicon", o.lexicon, "root list, one per line")
      ->envname("MORFO_LEXICON")
      ->required()
      ->check(CLI::ExistingFile);
  separate->add_flag("--paper-exact", o.paper_exact, "render per~ as pe~ (lossy)");
  separate->add_option("-j,--jobs", o.jobs, "worker threads")->check(CLI::Range(1u, 1024u));
  separate->add_option("input", o.input, "input file (default stdin)");
  separate->add_option("-o,--output", o.output, "output file (default stdout)");

  auto* combine = app.add_subcommand("combine", "rejoin tilde tokens into words");
  combine->add_option("-j,--jobs", o.jobs, "worker threads")->check(CLI::Range(1u, 1024u));
  combine->add_option("input", o.input, "input file (default stdin)");
  combine->add_option("-o,--output", o.output, "output file (default stdout)");

  auto* stats = app.add_subcommand("stats", "vocabulary reduction report");
  stats->add_option("--before", o.before)->required()->check(CLI::ExistingFile);
  stats->add_option("--after", o.after)->required()->check(CLI::ExistingFile);

  auto* bleu = app.add_subcommand("bleu", "single-reference BLEU");
  bleu->add_option("--hyp", o.hyp)->required()->check(CLI::ExistingFile);
  bleu->add_option("--ref", o.ref)->required()->check(CLI::ExistingFile);
  bleu->add_flag("--sentence", o.sentence, "also print per-line smoothed BLEU");
  bleu->add_option("--max-n", o.max_n)->check(CLI::Range(1, 9));

  auto* rules = app.add_subcommand("rules", "rule table utilities");
  rules->require_subcommand(1);
  auto* dump = rules->add_subcommand("dump", "print every rule table as TSV");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*separate || *combine) {
      Streams io(in, out);
      io.open_input(o.input);
      io.open_output(o.output);
      return *separate ? do_separate(o, io, err) : do_combine(o, io, err);
    }
    if (*stats) return do_stats(o, out);
    if (*bleu) return do_bleu(o, out);
    if (*dump) {
      dump_rules(out);
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "morfo: " << e.what() << '\n';
    return kExitData;
  }
  return kExitUsage;
}

}  // namespace morfo::cli
