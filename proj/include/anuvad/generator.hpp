#pragma once

#include <algorithm>
#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "anuvad/lexicon.hpp"
#include "anuvad/morph.hpp"
#include "anuvad/token.hpp"
#include "anuvad/translit.hpp"

namespace anuvad {

enum class SynonymPolicy { FIRST, ALL };

struct GenerationContext {
  Tense tense = Tense::UNKNOWN;
  bool interrogative = false;
  Number subject_number = Number::SG;
  SynonymPolicy synonym_policy = SynonymPolicy::FIRST;
  bool first_person = false;  // subject is मैं
};

enum class GlossKind {
  Lexicon,
  Transliterated,
  Copula,
  FunctionWord,   // inserted do/does
  Silent,         // empty gloss or dropped copula
  PassThrough,    // digits, Latin tokens, untransliterable words
};

struct WordAnnotation {
  int token_index = -1;  // -1 for inserted function words
  GlossKind kind = GlossKind::Lexicon;
  std::string text;
};

struct EnglishSentence {
  std::string text;
  std::vector<WordAnnotation> annotations;
};

// Copula form over the number x tense grid, with the first-person override.
inline std::string select_copula(const GenerationContext& ctx) {
  if (ctx.tense == Tense::PAST_COPULA)
    return ctx.subject_number == Number::PL ? "were" : "was";
  if (ctx.first_person) return "am";
  return ctx.subject_number == Number::PL ? "are" : "is";
}

namespace detail {

inline bool is_copula_word(std::string_view w) {
  return w == "is" || w == "are" || w == "am" || w == "was" || w == "were";
}

inline std::string join_synonyms(const std::vector<std::string>& syns) {
  std::string out;
  for (std::size_t i = 0; i < syns.size(); ++i) {
    if (i) out += "|";
    out += syns[i];
  }
  return out;
}

}  // namespace detail

// English gloss for one token: lexicon gloss per the synonym policy, copula
// selection for auxiliaries, transliteration for OOV Devanagari.
inline std::string gloss_token(const Token& t, const Lexicon& lex,
                               const TranslitTable& table,
                               const GenerationContext& ctx,
                               GlossKind* kind_out = nullptr) {
  auto set_kind = [&](GlossKind k) {
    if (kind_out) *kind_out = k;
  };
  std::vector<std::string> english = t.english;
  if (english.empty() && t.pos != POSTag::UNK && t.pos != POSTag::NUM) {
    auto entries = lex.lookup(t.surface);
    if (!entries.empty()) english = entries.front().english;
  }
  if (t.pos == POSTag::UNK) {
    if (is_devanagari_word(t.surface)) {
      try {
        set_kind(GlossKind::Transliterated);
        return romanize(t.surface, table);
      } catch (const TranslitError&) {
        set_kind(GlossKind::PassThrough);
        return t.surface;
      }
    }
    set_kind(GlossKind::PassThrough);
    return t.surface;  // Latin / mixed-script tokens pass through
  }
  if (t.pos == POSTag::NUM) {
    set_kind(GlossKind::PassThrough);
    return t.surface;
  }
  if (t.pos == POSTag::AUX) {
    bool silent = english.empty() || english.front().empty();
    if (silent) {
      set_kind(GlossKind::Silent);
      return "";
    }
    set_kind(GlossKind::Copula);
    return select_copula(ctx);
  }
  if (english.empty() || (english.size() == 1 && english.front().empty())) {
    set_kind(GlossKind::Silent);
    return "";
  }
  set_kind(GlossKind::Lexicon);
  if (ctx.synonym_policy == SynonymPolicy::ALL && english.size() > 1)
    return detail::join_synonyms(english);
  return english.front();
}

// Interrogative surface adjustments on an English word list:
// present indefinite takes do-support (copula removed), continuous fronts
// the copula, unknown tense fronts a copula if one exists.
inline std::vector<std::string> apply_do_support(std::vector<std::string> words,
                                                 const GenerationContext& ctx) {
  auto copula_at = [&]() -> std::ptrdiff_t {
    for (std::size_t i = 0; i < words.size(); ++i)
      if (detail::is_copula_word(words[i])) return static_cast<std::ptrdiff_t>(i);
    return -1;
  };
  std::string do_word =
      (ctx.subject_number == Number::PL || ctx.first_person) ? "do" : "does";
  if (ctx.tense == Tense::PRESENT_INDEFINITE) {
    auto c = copula_at();
    if (c >= 0) words.erase(words.begin() + c);
    words.insert(words.begin(), do_word);
    return words;
  }
  auto c = copula_at();
  if (c >= 0) {
    std::string cop = words[c];
    words.erase(words.begin() + c);
    words.insert(words.begin(), cop);
    return words;
  }
  if (ctx.tense != Tense::PRESENT_CONTINUOUS)
    words.insert(words.begin(), do_word);
  return words;
}

// Final assembly: gloss in transfer order, copula/do-support handling,
// replicative rendering, commas in coordinations, casing and terminator.
inline EnglishSentence render(const std::vector<Token>& tokens,
                              const GenerationContext& ctx, const Lexicon& lex,
                              const TranslitTable& table) {
  EnglishSentence out;
  bool has_main_verb = std::any_of(tokens.begin(), tokens.end(), [](const Token& t) {
    return t.pos == POSTag::VERB;
  });

  struct Slot {
    int token_index;
    std::string word;
    GlossKind kind;
  };
  std::vector<Slot> slots;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    GlossKind kind = GlossKind::Lexicon;
    std::string g = gloss_token(tokens[i], lex, table, ctx, &kind);
    if (tokens[i].replicative && !g.empty()) g = "every " + g;
    slots.push_back(Slot{static_cast<int>(i), std::move(g), kind});
  }

  // है has no surface reflex in present-indefinite declaratives with a verb
  if (ctx.tense == Tense::PRESENT_INDEFINITE && !ctx.interrogative &&
      has_main_verb) {
    for (auto& s : slots)
      if (s.kind == GlossKind::Copula) {
        s.word.clear();
        s.kind = GlossKind::Silent;
      }
  }

  // comma between consecutive NOUNs that lead up to a CONJ
  for (std::size_t i = 0; i + 1 < tokens.size(); ++i) {
    if (tokens[i].pos != POSTag::NOUN || tokens[i + 1].pos != POSTag::NOUN)
      continue;
    std::size_t j = i + 1;
    while (j < tokens.size() && tokens[j].pos == POSTag::NOUN) ++j;
    if (j < tokens.size() && tokens[j].pos == POSTag::CONJ &&
        !slots[i].word.empty())
      slots[i].word += ",";
  }

  std::vector<std::string> words;
  std::vector<int> word_token;  // parallel to words
  for (auto& s : slots) {
    out.annotations.push_back(WordAnnotation{s.token_index, s.kind, s.word});
    if (!s.word.empty()) {
      words.push_back(s.word);
      word_token.push_back(s.token_index);
    }
  }

  if (ctx.interrogative) {
    std::size_t before = words.size();
    words = apply_do_support(std::move(words), ctx);
    if (words.size() > before)
      out.annotations.push_back(
          WordAnnotation{-1, GlossKind::FunctionWord, words.front()});
  }

  std::string text;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i) text += ' ';
    text += words[i];
  }
  if (!text.empty() &&
      std::isalpha(static_cast<unsigned char>(text[0])))
    text[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  text += ctx.interrogative ? "?" : ".";
  out.text = std::move(text);
  return out;
}

}  // namespace anuvad
