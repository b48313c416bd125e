#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "anuvad/cyk.hpp"
#include "anuvad/generator.hpp"
#include "anuvad/grammar.hpp"
#include "anuvad/lexicon.hpp"
#include "anuvad/morph.hpp"
#include "anuvad/text_pipeline.hpp"
#include "anuvad/transfer.hpp"
#include "anuvad/translit.hpp"

namespace anuvad {

struct EngineConfig {
  std::string lexicon_path;
  std::string grammar_path;
  std::string rules_path;
  std::string translit_table_path;
  SynonymPolicy synonym_policy = SynonymPolicy::FIRST;
  bool trace = false;
  bool dump_chart = false;
  std::size_t max_tag_combinations = 32;
};

struct Resources {
  Lexicon lexicon;
  Grammar grammar;
  CnfGrammar cnf;
  TransferRules rules;
  TranslitTable translit;
};

inline Resources load_resources(const EngineConfig& cfg) {
  Resources r;
  r.lexicon = load_lexicon(cfg.lexicon_path);
  r.grammar = parse_grammar_file(cfg.grammar_path);
  r.cnf = to_cnf(r.grammar);
  r.rules = load_transfer_rules(cfg.rules_path);
  r.translit = load_translit_table(cfg.translit_table_path);
  return r;
}

struct MethodSpan {
  int start = 0;
  int end = 0;
  TransferMethod method = TransferMethod::WORD_TO_WORD;
};

struct SentenceReport {
  std::string source;
  std::string output;
  std::vector<std::string> tags;
  std::vector<std::string> oov;
  std::vector<std::string> warnings;
  std::vector<MethodSpan> spans;
  bool parsed = false;
  bool tree_transfer = false;
  int tag_retries = 0;
  std::string chart_render;  // filled when dump_chart is set
};

struct TranslationReport {
  std::vector<SentenceReport> sentences;
};

inline std::string_view method_name(TransferMethod m) {
  switch (m) {
    case TransferMethod::TREE: return "tree";
    case TransferMethod::SENTENCE_SEQ: return "sentence";
    case TransferMethod::PHRASE_SEQ: return "phrase";
    case TransferMethod::WORD_TO_WORD: return "word";
  }
  return "word";
}

// One sentence through the Fig-4 pipeline: tag (with parse-driven retry over
// ambiguous tags), replicative collapse, tree transfer when a parse and a
// tree rule are available, otherwise the sequence cascade, then generation.
inline SentenceReport translate_sentence(const Sentence& sentence,
                                         const Resources& res,
                                         const EngineConfig& cfg) {
  SentenceReport report;
  report.source = sentence.text;
  std::vector<Token> raw = tokenize(sentence);
  if (raw.empty()) {
    report.warnings.push_back("no tokens");
    return report;
  }

  std::vector<Token> tagged = tag_tokens(raw, res.lexicon);
  std::vector<Token> collapsed = handle_replicative(tagged);

  // parse-success-driven disambiguation over bounded tag combinations
  auto combos =
      tag_combinations(collapsed, res.lexicon, cfg.max_tag_combinations);
  std::optional<ParseChart> chart;
  std::vector<Token> chosen = combos.front();
  for (std::size_t i = 0; i < combos.size(); ++i) {
    ParseChart c = cyk_recognize(combos[i], res.cnf);
    if (recognized(c, res.cnf)) {
      chart = std::move(c);
      chosen = combos[i];
      report.parsed = true;
      report.tag_retries = static_cast<int>(i);
      break;
    }
    if (i == 0 && cfg.dump_chart) report.chart_render = render_chart(c);
  }
  if (chart && cfg.dump_chart) report.chart_render = render_chart(*chart);

  // replicative collapse may apply per the first tagging; re-apply in case
  // the chosen combination changed NOUN-hood
  chosen = handle_replicative(chosen);

  TaggedSentence analysis = analyze(chosen, sentence.terminator);
  for (const auto& t : analysis.tokens) {
    report.tags.emplace_back(pos_name(*t.pos));
    if (t.pos == POSTag::UNK && is_devanagari_word(t.surface))
      report.oov.push_back(t.surface);
  }

  GenerationContext ctx;
  ctx.tense = analysis.tense;
  ctx.interrogative = analysis.interrogative;
  ctx.subject_number = analysis.subject_number;
  ctx.synonym_policy = cfg.synonym_policy;
  ctx.first_person = analysis.subject_surface == "मैं";

  std::vector<Token> ordered;
  if (report.parsed) {
    auto tree = extract_tree(*chart, res.cnf, chosen);
    if (tree) {
      auto [moved, changed] = apply_tree_transfer(std::move(*tree), res.rules.tree);
      if (changed) {
        ordered = leaves(moved);
        report.tree_transfer = true;
        report.spans.push_back(MethodSpan{
            0, static_cast<int>(ordered.size()) - 1, TransferMethod::TREE});
      }
    }
  }
  if (!report.tree_transfer) {
    TransferResult tr = apply_sequence_transfer(chosen, res.rules.sequence);
    ordered = std::move(tr.tokens);
    for (const auto& s : tr.spans)
      report.spans.push_back(MethodSpan{s.start, s.end, s.method});
  }

  EnglishSentence english = render(ordered, ctx, res.lexicon, res.translit);
  report.output = english.text;
  return report;
}

inline TranslationReport translate_document(const RawDocument& doc,
                                            const Resources& res,
                                            const EngineConfig& cfg) {
  TranslationReport report;
  RawDocument clean = preprocess(doc);
  for (const Sentence& s : split_sentences(clean)) {
    try {
      report.sentences.push_back(translate_sentence(s, res, cfg));
    } catch (const std::exception& e) {
      // degrade to word-to-word, never abort the batch
      SentenceReport r;
      r.source = s.text;
      r.warnings.push_back(std::string("sentence failed: ") + e.what());
      GenerationContext ctx;
      ctx.synonym_policy = cfg.synonym_policy;
      try {
        auto tokens = tag_tokens(tokenize(s), res.lexicon);
        r.output = render(tokens, ctx, res.lexicon, res.translit).text;
      } catch (const std::exception&) {
        r.output.clear();
      }
      report.sentences.push_back(std::move(r));
    }
  }
  return report;
}

inline nlohmann::json trace_record(const SentenceReport& r) {
  nlohmann::json spans = nlohmann::json::array();
  for (const auto& s : r.spans)
    spans.push_back({{"start", s.start},
                     {"end", s.end},
                     {"method", std::string(method_name(s.method))}});
  return nlohmann::json{{"source", r.source},
                        {"output", r.output},
                        {"tags", r.tags},
                        {"oov", r.oov},
                        {"warnings", r.warnings},
                        {"parsed", r.parsed},
                        {"tree_transfer", r.tree_transfer},
                        {"tag_retries", r.tag_retries},
                        {"spans", spans}};
}

struct Diagnostic {
  enum class Severity { WARNING, ERROR } severity = Severity::WARNING;
  std::string message;
};

// Resource lint: loads everything independently and reports format errors,
// grammar reachability warnings, rule invariant violations, and gaps in the
// transliteration table's consonant coverage.
inline std::vector<Diagnostic> lint_resources(const EngineConfig& cfg) {
  std::vector<Diagnostic> out;
  auto error = [&](std::string m) {
    out.push_back(Diagnostic{Diagnostic::Severity::ERROR, std::move(m)});
  };
  auto warning = [&](std::string m) {
    out.push_back(Diagnostic{Diagnostic::Severity::WARNING, std::move(m)});
  };

  try {
    load_lexicon(cfg.lexicon_path);
  } catch (const std::exception& e) {
    error(e.what());
  }
  try {
    Grammar g = parse_grammar_file(cfg.grammar_path);
    for (const auto& w : g.warnings) warning(w);
    to_cnf(g);
  } catch (const std::exception& e) {
    error(e.what());
  }
  try {
    load_transfer_rules(cfg.rules_path);
  } catch (const std::exception& e) {
    error(e.what());
  }
  try {
    TranslitTable t = load_translit_table(cfg.translit_table_path);
    for (CodePoint cp = 0x0915; cp <= 0x0939; ++cp) {  // क .. ह
      std::string gl;
      append_utf8(gl, cp);
      if (!t.consonants.count(gl))
        warning("transliteration table has no row for consonant '" + gl + "'");
    }
  } catch (const std::exception& e) {
    error(e.what());
  }
  return out;
}

}  // namespace anuvad
