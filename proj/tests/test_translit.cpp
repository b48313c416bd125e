#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "anuvad/translit.hpp"
#include "anuvad/unicode.hpp"
#include "doctest.h"

using namespace anuvad;

namespace {

const TranslitTable& table() {
  static TranslitTable t =
      load_translit_table(std::string(ANUVAD_DATA_DIR) + "/translit.tsv");
  return t;
}

}  // namespace

TEST_CASE("name transliterations") {
  CHECK(romanize("अजय", table()) == "ajay");
  CHECK(romanize("रमा", table()) == "rama");
  CHECK(romanize("मनाली", table()) == "manalee");
}

TEST_CASE("segmentation of a conjunct word") {
  // क्या = क + halant, य + ा
  auto units = segment("क्या", table());
  REQUIRE(units.size() == 2);
  CHECK(units[0].base == "क");
  CHECK(units[0].halant);
  CHECK(units[0].matra.empty());
  CHECK(units[1].base == "य");
  CHECK_FALSE(units[1].halant);
  CHECK(units[1].matra == "ा");
  CHECK(romanize("क्या", table()) == "kya");
}

TEST_CASE("independent vowels and matras") {
  CHECK(romanize("अब", table()) == "ab");       // vowel + final consonant
  CHECK(romanize("आम", table()) == "aam");
  CHECK(romanize("ईद", table()) == "eed");
  CHECK(romanize("सीता", table()) == "seeta");  // matra keeps final 'a'
}

TEST_CASE("word-final schwa deletion only on bare consonants") {
  CHECK(romanize("राम", table()) == "ram");    // bare final म -> m
  CHECK(romanize("रमा", table()) == "rama");   // final ा keeps the vowel
  CHECK(romanize("क", table()) == "k");        // single bare consonant
}

TEST_CASE("nukta consonants work precomposed and decomposed") {
  // precomposed U+095B vs ज + U+093C
  std::string pre, dec;
  append_utf8(pre, 0x095B);
  append_utf8(dec, 0x091C);
  append_utf8(dec, 0x093C);
  CHECK(romanize(pre, table()) == romanize(dec, table()));
  CHECK(romanize("बाज़ार", table()) == "bazar");
}

TEST_CASE("appenders attach to the previous unit") {
  CHECK(romanize("मां", table()) == "man");   // anusvara after matra
  CHECK(romanize("हां", table()) == "han");
}

TEST_CASE("segment rejects non-Devanagari and unknown glyphs") {
  CHECK_THROWS_AS(segment("abc", table()), TranslitError);
  try {
    segment("xयz", table());
    FAIL("expected TranslitError");
  } catch (const TranslitError& e) {
    // error names the offending code point
    CHECK(std::string(e.what()).find("U+0078") != std::string::npos);
  }
}

TEST_CASE("table loader validation") {
  CHECK_THROWS_AS(load_translit_table_text("क\tC\tk\n"), TranslitError);  // no 'a'
  CHECK_THROWS_AS(load_translit_table_text("क\tZ\tka\n"), TranslitError);
  CHECK_THROWS_AS(load_translit_table_text("क\tC\n"), TranslitError);
  CHECK_THROWS_AS(load_translit_table_text("\tC\tka\n"), TranslitError);
  CHECK_THROWS_AS(load_translit_table("/nonexistent/t.tsv"), TranslitError);
  auto t = load_translit_table_text("# comment\nक\tC\tka\n");
  CHECK(t.consonants.at("क") == "ka");
}

TEST_CASE("matra-final words never lose their vowel") {
  // for every matra in the table, श + matra romanizes to "sh" + matra sound
  for (const auto& [matra, latin] : table().matras) {
    std::string word = "श" + matra;
    auto out = romanize(word, table());
    CHECK(out == "sh" + latin);
  }
}

TEST_CASE("romanization is deterministic") {
  for (int i = 0; i < 5; ++i) CHECK(romanize("मनाली", table()) == "manalee");
}
