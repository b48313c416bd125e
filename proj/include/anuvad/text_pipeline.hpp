#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "anuvad/token.hpp"
#include "anuvad/unicode.hpp"

namespace anuvad {

struct RawDocument {
  std::string content;  // UTF-8
};

// Cleans raw input: strips a BOM, drops zero-width (non-)joiners, isolates
// commas so the tokenizer sees them as delimiters, and collapses whitespace
// runs to single spaces. Devanagari digits pass through unchanged.
inline RawDocument preprocess(const RawDocument& doc) {
  std::vector<CodePoint> cps = to_codepoints(doc.content);
  std::vector<CodePoint> out;
  out.reserve(cps.size());
  bool pending_space = false;
  auto push = [&](CodePoint cp) {
    if (pending_space && !out.empty()) out.push_back(U' ');
    pending_space = false;
    out.push_back(cp);
  };
  for (std::size_t i = 0; i < cps.size(); ++i) {
    CodePoint cp = cps[i];
    if (cp == kBom || cp == kZwj || cp == kZwnj) continue;
    if (cp == U' ' || cp == U'\t' || cp == U'\n' || cp == U'\r' ||
        cp == 0x00A0) {
      pending_space = true;
      continue;
    }
    if (cp == U',') {
      // comma becomes its own token-sized unit
      pending_space = true;
      push(U',');
      pending_space = true;
      continue;
    }
    push(cp);
  }
  return RawDocument{from_codepoints(out)};
}

inline bool is_sentence_terminator(CodePoint cp) {
  return cp == kDanda || cp == kDoubleDanda || cp == U'.' || cp == U'?';
}

// Splits on danda (and the '.'/'?' equivalents). A trailing segment with no
// terminator becomes a Sentence with Terminator::NONE; whitespace-only
// segments are dropped.
inline std::vector<Sentence> split_sentences(const RawDocument& doc) {
  std::vector<Sentence> out;
  std::vector<CodePoint> cps = to_codepoints(doc.content);
  std::vector<CodePoint> current;
  auto flush = [&](Terminator term) {
    std::size_t b = 0, e = current.size();
    while (b < e && current[b] == U' ') ++b;
    while (e > b && current[e - 1] == U' ') --e;
    if (e > b) {
      Sentence s;
      s.text = from_codepoints({current.begin() + b, current.begin() + e});
      s.terminator = term;
      s.index = static_cast<int>(out.size());
      out.push_back(std::move(s));
    }
    current.clear();
  };
  for (CodePoint cp : cps) {
    if (is_sentence_terminator(cp)) {
      flush(cp == U'?' ? Terminator::QUESTION : Terminator::DANDA);
    } else {
      current.push_back(cp);
    }
  }
  flush(Terminator::NONE);
  return out;
}

// Space-delimited segmentation; commas served as delimiters during
// preprocessing and are dropped from the token stream here.
inline std::vector<Token> tokenize(const Sentence& s) {
  std::vector<Token> out;
  std::vector<CodePoint> cps = to_codepoints(s.text);
  std::vector<CodePoint> current;
  auto flush = [&] {
    if (current.empty()) return;
    std::string surface = from_codepoints(current);
    current.clear();
    if (surface == ",") return;
    Token t;
    t.surface = std::move(surface);
    t.position = static_cast<int>(out.size());
    out.push_back(std::move(t));
  };
  for (CodePoint cp : cps) {
    if (cp == U' ') {
      flush();
    } else {
      current.push_back(cp);
    }
  }
  flush();
  return out;
}

inline std::vector<Token> tokenize_text(const std::string& text) {
  return tokenize(Sentence{text, Terminator::NONE, 0});
}

}  // namespace anuvad
