#include <doctest.h>

#include "morfo/combiner.h"
#include "morfo/errors.h"
#include "morfo/pipeline.h"
#include "morfo/segmenter.h"
#include "support.h"

using namespace morfo;

namespace {

std::vector<std::string> combine(std::string_view wire) { return combine_tokens(parse_tokens(wire)); }

std::size_t dangling_at(std::string_view wire) {
  try {
    combine(wire);
  } catch (const DanglingAffix& e) {
    return e.position();
  }
  FAIL("expected DanglingAffix");
  return 0;
}

}  // namespace

TEST_CASE("combine_word") {
  CHECK(combine_word({{Prefix::se, Prefix::pe}, false, "makan", {}, {}, {}}) == "sepemakan");
  CHECK(combine_word({{Prefix::ber}, true, "jalan", {}, {}, {}}) == "berjalan-jalan");
  CHECK(combine_word({{}, true, "makan", DerivSuffix::an, {}, {}}) == "makan-makanan");
  CHECK(combine_word({{}, false, "benar", {}, {}, Particle::kah}) == "benarkah");
  CHECK(combine_word({{Prefix::me, Prefix::per}, false, "tahan", DerivSuffix::kan, {}, {}}) ==
        "mempertahankan");
  CHECK(combine_word({{Prefix::ke, Prefix::ber}, false, "untung", DerivSuffix::an, Possessive::mu,
                      Particle::lah}) == "keberuntunganmulah");
  CHECK(combine_word({{Prefix::me}, false, "kalkulasi", {}, {}, {}}) == "mengkalkulasi");
  CHECK_THROWS_AS(combine_word({{Prefix::ter}, false, "ajar", {}, {}, {}}), NoGenerationRule);
}

TEST_CASE("combine_tokens") {
  CHECK(combine("ter~ jamin") == std::vector<std::string>{"terjamin"});
  CHECK(combine("pokok ~nya ?") == std::vector<std::string>{"pokoknya", "?"});
  CHECK(combine("se~ pe~ makan") == std::vector<std::string>{"sepemakan"});
  CHECK(combine("ber~ prl~ jalan") == std::vector<std::string>{"berjalan-jalan"});
  CHECK(combine("prl~ makan ~an") == std::vector<std::string>{"makan-makanan"});
  CHECK(combine("aceh sudah") == std::vector<std::string>{"aceh", "sudah"});
  CHECK(combine("untung ~an ~mu ~lah") == std::vector<std::string>{"untunganmulah"});
  CHECK(combine("").empty());
}

TEST_CASE("dangling marks report their index") {
  CHECK(dangling_at("~kan") == 0);
  CHECK(dangling_at("makan ter~") == 1);
  CHECK(dangling_at("makan me~ ~kan") == 2);
  CHECK(dangling_at("me~ , makan") == 0);
  CHECK(dangling_at("makan ~nya ~kan") == 2);  // DS after PP
  CHECK(dangling_at("makan ~an ~an") == 2);    // slot used twice
  CHECK(dangling_at("prl~ prl~ makan") == 1);
  CHECK(dangling_at(", ~nya") == 1);
}

TEST_CASE("unknown marks are plain words") {
  CHECK(combine("xyz~ makan") == std::vector<std::string>{"xyz~", "makan"});
  CHECK(combine("makan ~xyz") == std::vector<std::string>{"makan", "~xyz"});
}

TEST_CASE("round trip on every word of the shipped lexicon with one affix") {
  const auto& lex = testing::shipped_lexicon();
  for (const auto& root : lex.sorted_roots()) {
    for (const char* suffix : {"kan", "i", "an", "nya", "lah"}) {
      const std::string w = root + suffix;
      const auto a = separate_word(w, lex);
      if (const auto* seg = std::get_if<Segmentation>(&a)) CHECK(combine_word(*seg) == w);
    }
  }
}
