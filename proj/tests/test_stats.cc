#include <doctest.h>

#include <cmath>
#include <fstream>
#include <sstream>

#include "morfo/errors.h"
#include "morfo/stats.h"
#include "support.h"

using namespace morfo;

namespace {

VocabCount count(const std::string& s) {
  std::istringstream in(s);
  return vocab_count(in);
}

VocabReport report(const std::string& before, const std::string& after) {
  std::istringstream b(before), a(after);
  return reduction_report(b, a);
}

}  // namespace

TEST_CASE("vocab_count") {
  CHECK(count("makan makan\njalan\n") == VocabCount{2, 3, 2});
  CHECK(count("") == VocabCount{0, 0, 0});
  CHECK(count("a  b\t\tc\r\n\n") == VocabCount{3, 3, 2});
  CHECK_THROWS_AS(count("ok\n\xC3\n"), EncodingError);
}

TEST_CASE("vocab_count on the shipped sample") {
  // tr -s ' ' '\n' < sample.id | sed '/^$/d' | sort -u | wc -l ; wc -w ; wc -l
  std::ifstream f(testing::corpus_path());
  REQUIRE(f);
  CHECK(vocab_count(f) == VocabCount{18561, 93160, 10000});
}

TEST_CASE("reduction_report") {
  SUBCASE("identical corpora") {
    const auto r = report("makan ~an\njalan\n", "makan ~an\njalan\n");
    CHECK(r.reduction_pct == 0.0);
    CHECK(r.reduction_abs == 0);
    CHECK(r.pct_defined);
  }
  SUBCASE("fields") {
    const auto r = report("makanan memakan\ndimakan makan\n",
                          "makan ~an me~ makan\ndi~ makan makan\n");
    CHECK(r.tokens_before == 4);
    CHECK(r.tokens_after == 4);
    CHECK(r.sentences == 2);
    CHECK(r.avg_words_per_sentence == doctest::Approx(2.0));
    CHECK(r.mark_vocabulary == 3);
  }
  SUBCASE("growth gives a negative percentage") {
    const auto r = report("makanan\n", "makan ~an\n");
    CHECK(r.reduction_abs == -1);
    CHECK(r.reduction_pct == doctest::Approx(-100.0));
  }
  SUBCASE("empty before") {
    const auto r = report("", "");
    CHECK_FALSE(r.pct_defined);
    CHECK(r.reduction_pct == 0.0);
  }
  SUBCASE("published before/after counts") {
    const double pct = 100.0 * (1925245.0 - 822875.0) / 1925245.0;
    CHECK(std::round(pct * 100.0) / 100.0 == 57.26);
  }
}

TEST_CASE("counter merge equals one pass") {
  VocabCounter a, b, all;
  for (auto l : {"makan jalan", "jalan ~an"}) a.add_line(l), all.add_line(l);
  for (auto l : {"ter~ jamin", "makan"}) b.add_line(l), all.add_line(l);
  a.merge(b);
  CHECK(a.count() == all.count());
  CHECK(a.mark_vocabulary() == 2);
}

TEST_CASE("print_report") {
  std::ostringstream out;
  print_report(report("makanan makan\n", "makan ~an makan\n"), out);
  const auto s = out.str();
  CHECK(s.find("tokens_before=2\n") != std::string::npos);
  CHECK(s.find("tokens_after=2\n") != std::string::npos);
  CHECK(s.find("reduction_pct=0.00\n") != std::string::npos);
  CHECK(s.find("mark_vocabulary=1\n") != std::string::npos);
  CHECK(s.find("punctuation") != std::string::npos);
}
