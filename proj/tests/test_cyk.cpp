#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "anuvad/cyk.hpp"
#include "anuvad/grammar.hpp"
#include "anuvad/lexicon.hpp"
#include "anuvad/morph.hpp"
#include "anuvad/text_pipeline.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace anuvad;

namespace {

std::vector<Token> make_tokens(const std::vector<std::string>& surfaces) {
  std::vector<Token> out;
  for (std::size_t i = 0; i < surfaces.size(); ++i) {
    Token t;
    t.surface = surfaces[i];
    t.position = static_cast<int>(i + 1);
    out.push_back(std::move(t));
  }
  return out;
}

CnfGrammar fig3_cnf() {
  auto g = parse_grammar_file(std::string(ANUVAD_DATA_DIR) +
                              "/fig3_grammar.cfg");
  return to_cnf(g);
}

}  // namespace

TEST_CASE("chart facts for the four-word example") {
  auto cnf = fig3_cnf();
  auto tokens = make_tokens({"वह", "बाज़ार", "जाती", "है"});
  auto chart = cyk_recognize(tokens, cnf);

  CHECK(chart.contains(1, 2, "NP"));
  CHECK(chart.contains(3, 4, "VP"));
  CHECK(chart.contains(1, 4, "S"));
  CHECK(chart.cell(2, 3).empty());

  // diagonal
  CHECK(chart.contains(1, 1, "PRON"));
  CHECK(chart.contains(2, 2, "NOUN"));
  CHECK(chart.contains(3, 3, "VP"));
  CHECK(chart.contains(4, 4, "AUX"));

  CHECK(recognized(chart, cnf));
  CHECK(chart_invariants_hold(chart));
}

TEST_CASE("extract_tree rebuilds the original structure") {
  auto cnf = fig3_cnf();
  auto tokens = make_tokens({"वह", "बाज़ार", "जाती", "है"});
  auto chart = cyk_recognize(tokens, cnf);
  auto tree = extract_tree(chart, cnf, tokens);
  REQUIRE(tree.has_value());
  CHECK(tree_to_string(*tree) ==
        "S(NP(PRON(वह),NOUN(बाज़ार)),VP(VP(जाती),AUX(है)))");
  auto lvs = leaves(*tree);
  REQUIRE(lvs.size() == tokens.size());
  for (std::size_t i = 0; i < lvs.size(); ++i)
    CHECK(lvs[i].surface == tokens[i].surface);
}

TEST_CASE("single-token sentence") {
  auto cnf = to_cnf(parse_grammar("start: S\nS -> a\n"));
  auto chart = cyk_recognize(make_tokens({"a"}), cnf);
  CHECK(chart.n == 1);
  CHECK(recognized(chart, cnf));
  auto chart2 = cyk_recognize(make_tokens({"b"}), cnf);
  CHECK_FALSE(recognized(chart2, cnf));
}

TEST_CASE("empty input is rejected") {
  auto cnf = to_cnf(parse_grammar("S -> a\n"));
  CHECK_THROWS_AS(cyk_recognize({}, cnf), ParseError);
}

TEST_CASE("terminals match either the POS tag or the raw surface") {
  auto cnf = to_cnf(parse_grammar("start: S\nS -> NOUN AUX\n"));
  auto tokens = make_tokens({"घर", "है"});
  tokens[0].pos = POSTag::NOUN;
  tokens[1].pos = POSTag::AUX;
  CHECK(recognized(cyk_recognize(tokens, cnf), cnf));

  auto lexicalized = to_cnf(parse_grammar("start: S\nS -> घर है\n"));
  CHECK(recognized(cyk_recognize(tokens, lexicalized), lexicalized));
}

TEST_CASE("ambiguous grammar keeps the lowest split as the canonical parse") {
  auto cnf = to_cnf(parse_grammar("start: S\nS -> S S | a\n"));
  auto tokens = make_tokens({"a", "a", "a"});
  auto chart = cyk_recognize(tokens, cnf);
  REQUIRE(recognized(chart, cnf));
  int i = chart.find(1, 3, cnf.start);
  REQUIRE(i >= 0);
  const auto& root = chart.cell(1, 3)[i];
  CHECK(root.backs.size() >= 2);       // both bracketings recorded
  CHECK(root.backs[0].k == 1);         // canonical = leftmost split
  auto all = extract_trees(chart, cnf, tokens);
  CHECK(all.size() >= 2);
  auto one = extract_tree(chart, cnf, tokens);
  REQUIRE(one.has_value());
  CHECK(tree_to_string(*one) == tree_to_string(all[0]));
}

TEST_CASE("back-pointer fan-in is bounded") {
  // heavily ambiguous grammar on a longer string
  auto cnf = to_cnf(parse_grammar("start: S\nS -> S S | a\n"));
  auto tokens = make_tokens(std::vector<std::string>(10, "a"));
  auto chart = cyk_recognize(tokens, cnf);
  for (int p = 1; p <= chart.n; ++p)
    for (int q = p; q <= chart.n; ++q)
      for (const auto& e : chart.cell(p, q)) CHECK(e.backs.size() <= 16);
  CHECK(chart_invariants_hold(chart));
}

TEST_CASE("unit chains reappear as unary spines in the tree") {
  auto cnf = to_cnf(parse_grammar(
      "start: S\n"
      "S -> A B\n"
      "A -> X\n"
      "X -> a\n"
      "B -> b\n"));
  auto tokens = make_tokens({"a", "b"});
  auto chart = cyk_recognize(tokens, cnf);
  auto tree = extract_tree(chart, cnf, tokens);
  REQUIRE(tree.has_value());
  CHECK(tree_to_string(*tree) == "S(A(X(a)),B(b))");
}

TEST_CASE("render_chart shows words on the bottom row and € for gaps") {
  auto cnf = fig3_cnf();
  auto tokens = make_tokens({"वह", "बाज़ार", "जाती", "है"});
  auto chart = cyk_recognize(tokens, cnf);
  auto text = render_chart(chart);
  CHECK(text.find("€") != std::string::npos);
  CHECK(text.find("S") != std::string::npos);
  // last line is the word row
  auto last_nl = text.find_last_of('\n', text.size() - 2);
  std::string bottom = text.substr(last_nl + 1);
  CHECK(bottom.find("वह") != std::string::npos);
  CHECK(bottom.find("है") != std::string::npos);
}

TEST_CASE("recognition agrees with the derivation-enumeration oracle") {
  std::mt19937 rng(20260827);
  int pairs = 0;
  while (pairs < 150) {
    auto g = oracle::random_cnf_grammar(rng);
    auto w = oracle::random_string(rng, 5);
    bool expect = oracle::derives(oracle::simplify(g), w);
    auto chart = cyk_recognize(make_tokens(w), g);
    CHECK(recognized(chart, g) == expect);
    CHECK(chart_invariants_hold(chart));
    if (recognized(chart, g)) {
      auto tree = extract_tree(chart, g, make_tokens(w));
      REQUIRE(tree.has_value());
      auto lvs = leaves(*tree);
      REQUIRE(lvs.size() == w.size());
      for (std::size_t i = 0; i < w.size(); ++i)
        CHECK(lvs[i].surface == w[i]);
    }
    ++pairs;
  }
}

TEST_CASE("tagged project sentence parses with the POS grammar") {
  auto lex = load_lexicon(std::string(ANUVAD_DATA_DIR) + "/lexicon.tsv");
  auto g = parse_grammar_file(std::string(ANUVAD_DATA_DIR) + "/grammar.cfg");
  auto cnf = to_cnf(g);
  auto tokens = tag_tokens(tokenize_text("यह किताब बहुत अच्छी है"), lex);
  auto chart = cyk_recognize(tokens, cnf);
  CHECK(recognized(chart, cnf));
}
