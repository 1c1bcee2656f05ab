#include <doctest.h>

#include "golden.h"
#include "morfo/combiner.h"
#include "morfo/segmenter.h"
#include "morfo/token.h"
#include "support.h"

using namespace morfo;

namespace {

std::string sep(std::string_view word, const RootLexicon& lex = testing::shipped_lexicon(),
                RenderOptions opts = {}) {
  return join_tokens(render(separate_word(word, lex), opts));
}

void check_rows(const std::vector<golden::Row>& rows) {
  for (const auto& row : rows) {
    CAPTURE(row.word);
    CHECK(sep(row.word) == row.lossless);
    CHECK(sep(row.word, testing::shipped_lexicon(), {.paper_exact = true}) == row.paper_exact);
  }
}

}  // namespace

TEST_CASE("golden word variations") { check_rows(golden::kWordVariations); }
TEST_CASE("golden ber~ ter~ rows") { check_rows(golden::kBerTer); }
TEST_CASE("golden me~ rows") { check_rows(golden::kMe); }
TEST_CASE("golden pe~ rows") { check_rows(golden::kPe); }

TEST_CASE("separate_word") {
  const auto& lex = testing::shipped_lexicon();
  SUBCASE("sepemakan") {
    const auto seg = std::get<Segmentation>(separate_word("sepemakan", lex));
    CHECK(seg.prefixes == std::vector{Prefix::se, Prefix::pe});
    CHECK(seg.root == "makan");
  }
  SUBCASE("mempertahankan keeps per distinct") {
    const auto seg = std::get<Segmentation>(separate_word("mempertahankan", lex));
    CHECK(seg.prefixes == std::vector{Prefix::me, Prefix::per});
    CHECK(seg.root == "tahan");
    CHECK(seg.ds == DerivSuffix::kan);
  }
  SUBCASE("all four slots") {
    const auto seg = std::get<Segmentation>(separate_word("keberuntunganmulah", lex));
    CHECK(seg.prefixes == std::vector{Prefix::ke, Prefix::ber});
    CHECK(seg.root == "untung");
    CHECK(seg.ds == DerivSuffix::an);
    CHECK(seg.pp == Possessive::mu);
    CHECK(seg.p == Particle::lah);
  }
  SUBCASE("compound root") {
    CHECK(sep("mempertanggungjawabkannya") == "me~ per~ tanggungjawab ~kan ~nya");
  }
  SUBCASE("passthrough") {
    CHECK(std::get<Passthrough>(separate_word("makan", lex)).word == "makan");
    CHECK(std::get<Passthrough>(separate_word("xyzzy", lex)).word == "xyzzy");
    CHECK(std::holds_alternative<Passthrough>(separate_word("aceh", lex)));
    CHECK(std::holds_alternative<Passthrough>(separate_word("2019", lex)));
    CHECK(std::holds_alternative<Passthrough>(separate_word("", lex)));
    CHECK(std::holds_alternative<Passthrough>(separate_word("ter~", lex)));
    CHECK(std::holds_alternative<Passthrough>(separate_word("me", lex)));
  }
  SUBCASE("particles and possessives") {
    CHECK(sep("makanlah") == "makan ~lah");
    CHECK(sep("diakah") == "dia ~kah");
    CHECK(sep("bukuku") == "buku ~ku");
    CHECK(sep("bukumu") == "buku ~mu");
    CHECK(sep("bukunya") == "buku ~nya");
  }
}

TEST_CASE("disallowed pairs are never produced") {
  const auto lex = RootLexicon::from_words({"ajar", "jalan", "makan"});
  // ber~ ajar ~i is the only reading and it is blocked.
  CHECK(std::holds_alternative<Passthrough>(separate_word("belajari", lex)));
  // di~ makan ~an blocked.
  CHECK(std::holds_alternative<Passthrough>(separate_word("dimakanan", lex)));
  // me~ ... ~an blocked.
  CHECK(std::holds_alternative<Passthrough>(separate_word("memakanan", lex)));
  // ke~ ... ~kan blocked.
  CHECK(std::holds_alternative<Passthrough>(separate_word("kemakankan", lex)));
}

TEST_CASE("select tie-break") {
  const Segmentation one{{Prefix::me}, false, "nilai", {}, {}, {}};
  const Segmentation two{{Prefix::me}, false, "nila", DerivSuffix::i, {}, {}};
  const std::vector pool1{two, one};
  CHECK(select(pool1) == one);

  const Segmentation longer{{}, false, "makan", DerivSuffix::an, {}, {}};
  const Segmentation shorter{{Prefix::me}, false, "akan", {}, {}, {}};
  const std::vector pool2{shorter, longer};
  CHECK(select(pool2) == longer);

  const Segmentation a{{Prefix::di}, false, "abc", {}, {}, {}};
  const Segmentation b{{Prefix::ke}, false, "abc", {}, {}, {}};
  const std::vector pool3{b, a};
  CHECK(select(pool3) == a);
}

TEST_CASE("menilai versus an invalid tilai reading") {
  const auto lex = RootLexicon::from_words({"nilai"});
  const auto pool = candidates("menilai", lex);
  REQUIRE(pool.size() == 1);
  CHECK(pool[0].root == "nilai");
}

TEST_CASE("candidates are sound and recombine") {
  const auto& lex = testing::shipped_lexicon();
  for (std::string_view w : {"mempertanggungjawabkannya", "perjalanan", "kebutuhan",
                             "pengakuan", "penyesalannya", "memberikan", "disumbangkan"}) {
    for (const auto& seg : candidates(w, lex)) {
      CHECK(is_valid(seg, lex));
      CHECK(combine_word(seg) == w);
      CHECK(seg.affix_count() >= 1);
    }
  }
  CHECK(candidates("makan", lex).empty());
}

TEST_CASE("reduplication") {
  const auto& lex = testing::shipped_lexicon();
  SUBCASE("plain") {
    const auto seg = detect_reduplication("makan-makan", lex);
    REQUIRE(seg);
    CHECK(seg->redup);
    CHECK(seg->root == "makan");
    CHECK(seg->affix_count() == 1);
  }
  SUBCASE("prefix on the first copy") {
    const auto seg = detect_reduplication("berjalan-jalan", lex);
    REQUIRE(seg);
    CHECK(seg->prefixes == std::vector{Prefix::ber});
  }
  SUBCASE("suffix on the second copy") {
    const auto seg = detect_reduplication("makan-makanan", lex);
    REQUIRE(seg);
    CHECK(seg->ds == DerivSuffix::an);
    CHECK(sep("usaha-usahanya") == "prl~ usaha ~nya");
  }
  SUBCASE("not a reduplication") {
    CHECK_FALSE(detect_reduplication("meja-kursi", lex));
    CHECK_FALSE(detect_reduplication("makan", lex));
    CHECK_FALSE(detect_reduplication("makan-makan-makan", lex));
    CHECK_FALSE(detect_reduplication("-makan", lex));
    CHECK_FALSE(detect_reduplication("makanan-makan", lex));
    CHECK_FALSE(detect_reduplication("makan-memakan", lex));
    CHECK(sep("meja-kursi") == "meja-kursi");
    CHECK(sep("aceh-aceh") == "aceh-aceh");
  }
}

TEST_CASE("determinism") {
  const auto& lex = testing::shipped_lexicon();
  for (const auto& row : golden::kMe) CHECK(sep(row.word, lex) == sep(row.word, lex));
}
