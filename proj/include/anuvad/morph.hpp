#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include "anuvad/lexicon.hpp"
#include "anuvad/token.hpp"
#include "anuvad/unicode.hpp"

namespace anuvad {

struct TaggedSentence {
  std::vector<Token> tokens;
  Tense tense = Tense::UNKNOWN;
  bool interrogative = false;
  Number subject_number = Number::SG;
  std::string subject_surface;
};

namespace detail {

inline bool all_digits(std::string_view surface) {
  auto cps = to_codepoints(surface);
  if (cps.empty()) return false;
  for (CodePoint cp : cps)
    if (!(is_devanagari_digit(cp) || (cp >= U'0' && cp <= U'9'))) return false;
  return true;
}

inline void fill_from_entry(Token& t, const LexiconEntry& e) {
  t.pos = e.pos;
  t.root = e.root;
  t.number = e.number;
  t.english = e.english;
}

}  // namespace detail

// Fills pos/root/number/english from the lexicon. Out-of-lexicon tokens get
// UNK with root = surface; digit strings get NUM. When a surface is
// POS-ambiguous the first lexicon entry wins here; the parser-driven retry
// lives in tag_combinations below.
inline std::vector<Token> tag_tokens(std::vector<Token> tokens, const Lexicon& lex) {
  for (Token& t : tokens) {
    auto entries = lex.lookup(t.surface);
    if (!entries.empty()) {
      detail::fill_from_entry(t, entries.front());
    } else if (detail::all_digits(t.surface)) {
      t.pos = POSTag::NUM;
      t.root = t.surface;
      t.number = Number::ANY;
      t.english = {t.surface};
    } else {
      t.pos = POSTag::UNK;
      t.root = t.surface;
      t.number = Number::ANY;
      t.english.clear();
    }
  }
  return tokens;
}

// Enumerates tag assignments for POS-ambiguous surfaces, first-entry choice
// first, bounded at max_combinations. Element 0 always equals
// tag_tokens(tokens, lex).
inline std::vector<std::vector<Token>> tag_combinations(
    const std::vector<Token>& tokens, const Lexicon& lex,
    std::size_t max_combinations = 32) {
  std::vector<std::vector<LexiconEntry>> options(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i)
    options[i] = lex.lookup(tokens[i].surface);

  std::vector<std::vector<Token>> out;
  std::vector<std::size_t> choice(tokens.size(), 0);
  while (out.size() < max_combinations) {
    std::vector<Token> combo = tokens;
    for (std::size_t i = 0; i < combo.size(); ++i) {
      if (!options[i].empty()) {
        detail::fill_from_entry(combo[i], options[i][choice[i]]);
      } else if (detail::all_digits(combo[i].surface)) {
        combo[i].pos = POSTag::NUM;
        combo[i].root = combo[i].surface;
        combo[i].number = Number::ANY;
        combo[i].english = {combo[i].surface};
      } else {
        combo[i].pos = POSTag::UNK;
        combo[i].root = combo[i].surface;
        combo[i].number = Number::ANY;
      }
    }
    out.push_back(std::move(combo));
    // odometer increment over the ambiguous positions
    bool carried = true;
    std::size_t i = tokens.size();
    while (i > 0 && carried) {
      --i;
      if (options[i].size() <= 1) continue;
      if (++choice[i] < options[i].size()) {
        carried = false;
      } else {
        choice[i] = 0;
      }
    }
    if (carried) break;  // every combination emitted
  }
  return out;
}

namespace detail {

// Subject for number/person checks: the first token, or the one after क्या.
inline std::size_t subject_index(const std::vector<Token>& tokens) {
  if (tokens.size() > 1 &&
      (tokens[0].surface == "क्या" || tokens[0].pos == POSTag::QWORD))
    return 1;
  return 0;
}

inline bool is_plural_pronoun(std::string_view s) {
  return s == "मैं" || s == "तुम" || s == "वे" || s == "हम";
}

inline bool has_plural_suffix(std::string_view s) {
  // या / ये / यो are two code points each (य + matra)
  return ends_with_codepoints(s, "या") || ends_with_codepoints(s, "ये") ||
         ends_with_codepoints(s, "यो");
}

}  // namespace detail

// Subject-number heuristic: the four plural pronouns and a coordinated
// subject (CONJ before the verb area) count as plural; then the lexicon's
// number feature decides for known subjects; the या/ये/यो suffix handles
// the rest. Everything else is singular.
inline Number detect_number(const std::vector<Token>& tokens) {
  if (tokens.empty()) return Number::SG;
  std::size_t s = detail::subject_index(tokens);
  const std::string& subj = tokens[s].surface;
  if (detail::is_plural_pronoun(subj)) return Number::PL;
  for (std::size_t i = s; i < tokens.size(); ++i) {
    if (tokens[i].pos == POSTag::VERB || tokens[i].pos == POSTag::AUX) break;
    if (tokens[i].pos == POSTag::CONJ) return Number::PL;
  }
  // a dictionary-marked number beats the suffix heuristic (रिया is singular
  // despite its या ending)
  if (tokens[s].number == Number::PL) return Number::PL;
  if (tokens[s].number == Number::SG) return Number::SG;
  if (detail::has_plural_suffix(subj)) return Number::PL;
  return Number::SG;
}

// Suffix-based tense test on the verb area at the end of the sentence.
inline Tense detect_tense(const std::vector<Token>& tokens) {
  if (tokens.empty()) return Tense::UNKNOWN;
  const std::string& last = tokens.back().surface;
  if (last == "था" || last == "थी" || last == "थे") return Tense::PAST_COPULA;

  // last non-AUX token = the verb candidate
  std::size_t v = tokens.size();
  for (std::size_t i = tokens.size(); i > 0; --i) {
    if (tokens[i - 1].pos != POSTag::AUX) {
      v = i - 1;
      break;
    }
  }
  if (v == tokens.size()) return Tense::UNKNOWN;  // all AUX

  auto is_raha = [](std::string_view s) {
    return s == "रहा" || s == "रही" || s == "रहे";
  };
  for (std::size_t i = v; i < tokens.size(); ++i)
    if (is_raha(tokens[i].surface)) return Tense::PRESENT_CONTINUOUS;

  const std::string& verb = tokens[v].surface;
  bool indefinite_suffix = ends_with_codepoints(verb, "ता") ||
                           ends_with_codepoints(verb, "ती") ||
                           ends_with_codepoints(verb, "ते");
  bool aux_follows = v + 1 < tokens.size();
  if (indefinite_suffix && aux_follows) return Tense::PRESENT_INDEFINITE;
  return Tense::UNKNOWN;
}

inline bool detect_interrogative(const std::vector<Token>& tokens,
                                 Terminator terminator) {
  if (terminator == Terminator::QUESTION) return true;
  return !tokens.empty() && tokens.front().surface == "क्या";
}

inline TaggedSentence analyze(std::vector<Token> tagged, Terminator terminator) {
  TaggedSentence s;
  s.interrogative = detect_interrogative(tagged, terminator);
  s.subject_number = detect_number(tagged);
  s.tense = detect_tense(tagged);
  if (!tagged.empty())
    s.subject_surface = tagged[detail::subject_index(tagged)].surface;
  s.tokens = std::move(tagged);
  return s;
}

}  // namespace anuvad
