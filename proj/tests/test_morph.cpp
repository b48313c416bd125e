#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "anuvad/morph.hpp"
#include "anuvad/text_pipeline.hpp"

using namespace anuvad;

namespace {

Lexicon seed() {
  return load_lexicon(std::string(ANUVAD_DATA_DIR) + "/lexicon.tsv");
}

std::vector<Token> tag(const std::string& text, const Lexicon& lex) {
  return tag_tokens(tokenize_text(text), lex);
}

std::vector<std::string> tags_of(const std::vector<Token>& toks) {
  std::vector<std::string> out;
  for (const auto& t : toks) out.emplace_back(pos_name(*t.pos));
  return out;
}

}  // namespace

TEST_CASE("paper POS sequence for सीता बहुत अच्छी लड़की है") {
  auto lex = seed();
  auto toks = tag("सीता बहुत अच्छी लड़की है", lex);
  CHECK(tags_of(toks) ==
        std::vector<std::string>{"NOUN", "ADV", "ADJ", "NOUN", "AUX"});
  CHECK(*toks[2].root == "अच्छा");
}

TEST_CASE("empty token list tags to empty") {
  auto lex = seed();
  CHECK(tag_tokens({}, lex).empty());
}

TEST_CASE("OOV token gets UNK with root = surface") {
  auto lex = seed();
  auto toks = tag("अजय", lex);
  REQUIRE(toks.size() == 1);
  CHECK(*toks[0].pos == POSTag::UNK);
  CHECK(*toks[0].root == "अजय");
}

TEST_CASE("digit tokens get NUM") {
  auto lex = seed();
  auto toks = tag("१२३ 42", lex);
  CHECK(*toks[0].pos == POSTag::NUM);
  CHECK(*toks[1].pos == POSTag::NUM);
}

TEST_CASE("tag_tokens is idempotent") {
  auto lex = seed();
  auto once = tag("सीता बहुत अच्छी लड़की है", lex);
  auto twice = tag_tokens(once, lex);
  CHECK(once == twice);
}

TEST_CASE("tag_combinations enumerates ambiguous tags, first-entry first") {
  auto lex = load_lexicon_text("सोना\tसोना\tNOUN\tgold\tSG\n"
                               "सोना\tसो\tVERB\tsleep\tANY\n"
                               "है\tहै\tAUX\tis\tSG\n");
  auto toks = tokenize_text("सोना है");
  auto combos = tag_combinations(toks, lex, 32);
  REQUIRE(combos.size() == 2);
  CHECK(*combos[0][0].pos == POSTag::NOUN);
  CHECK(*combos[1][0].pos == POSTag::VERB);
  CHECK(combos[0] == tag_tokens(toks, lex));
}

TEST_CASE("tag_combinations respects the bound") {
  auto lex = load_lexicon_text("सोना\tसोना\tNOUN\tgold\tSG\n"
                               "सोना\tसो\tVERB\tsleep\tANY\n");
  // 2^6 = 64 combinations capped at 32
  auto toks = tokenize_text("सोना सोना सोना सोना सोना सोना");
  CHECK(tag_combinations(toks, lex, 32).size() == 32);
}

TEST_CASE("detect_number: exhaustive plural pronoun set") {
  auto lex = seed();
  for (const char* p : {"मैं", "तुम", "वे", "हम"}) {
    auto toks = tag(std::string(p) + " खाना खाता है", lex);
    CHECK(detect_number(toks) == Number::PL);
  }
}

TEST_CASE("detect_number: singular subjects") {
  auto lex = seed();
  CHECK(detect_number(tag("सीता खाना खाती है", lex)) == Number::SG);
  CHECK(detect_number(tag("जवाहर लाल नेहरु भारत के प्रथम प्रधानमंत्री थे", lex)) ==
        Number::SG);
}

TEST_CASE("detect_number: या/ये/यो suffix on unknown subjects") {
  auto lex = seed();
  CHECK(detect_number(tag("लड़कियो खाना खाती है", lex)) == Number::PL);
}

TEST_CASE("detect_number: lexicon number beats suffix (रिया is singular)") {
  auto lex = seed();
  CHECK(detect_number(tag("रिया काफी पी रही है", lex)) == Number::SG);
}

TEST_CASE("detect_number: subject moves past क्या") {
  auto lex = seed();
  CHECK(detect_number(tag("क्या तुम पढ़ रहे हो", lex)) == Number::PL);
  CHECK(detect_number(tag("क्या सीता खाना खाती है", lex)) == Number::SG);
}

TEST_CASE("detect_number: coordinated subject is plural") {
  auto lex = seed();
  CHECK(detect_number(tag("राम मोहन और श्याम दोस्त है", lex)) == Number::PL);
}

TEST_CASE("detect_tense cases") {
  auto lex = seed();
  CHECK(detect_tense(tag("क्या सीता खाना खाती है", lex)) ==
        Tense::PRESENT_INDEFINITE);
  CHECK(detect_tense(tag("क्या तुम पढ़ रहे हो", lex)) ==
        Tense::PRESENT_CONTINUOUS);
  CHECK(detect_tense(tag("जवाहर लाल नेहरु भारत के प्रथम प्रधानमंत्री थे", lex)) ==
        Tense::PAST_COPULA);
  CHECK(detect_tense(tag("सीता लड़की है", lex)) == Tense::UNKNOWN);
}

TEST_CASE("detect_tense: indefinite suffix needs a following auxiliary") {
  auto lex = seed();
  // no auxiliary after the suffixed verb: stays UNKNOWN
  CHECK(detect_tense(tag("मोहन दौड़ता", lex)) == Tense::UNKNOWN);
}

TEST_CASE("detect_tense never crashes without verb-like tokens") {
  auto lex = seed();
  CHECK(detect_tense(tag("राम मोहन", lex)) == Tense::UNKNOWN);
  CHECK(detect_tense({}) == Tense::UNKNOWN);
}

TEST_CASE("detect_interrogative") {
  auto lex = seed();
  CHECK(detect_interrogative(tag("क्या सीता खाना खाती है", lex),
                             Terminator::NONE));
  CHECK_FALSE(detect_interrogative(tag("सीता लड़की है", lex), Terminator::DANDA));
  CHECK(detect_interrogative(tag("मोहन तेज दौड़ता है", lex),
                             Terminator::QUESTION));
}

TEST_CASE("analyze bundles sentence features") {
  auto lex = seed();
  auto s = analyze(tag("क्या सीता खाना खाती है", lex), Terminator::NONE);
  CHECK(s.interrogative);
  CHECK(s.tense == Tense::PRESENT_INDEFINITE);
  CHECK(s.subject_number == Number::SG);
  CHECK(s.subject_surface == "सीता");
}
