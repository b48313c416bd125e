#pragma once

#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "anuvad/unicode.hpp"

namespace anuvad {

class TranslitError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Letter/matra table. Consonant mappings carry the inherent 'a' (ज -> "ja");
// matra mappings replace that 'a'; X rows are appenders (anusvara etc.)
// except the halant, which suppresses the inherent vowel.
struct TranslitTable {
  std::map<std::string, std::string> consonants;
  std::map<std::string, std::string> vowels;  // independent vowels
  std::map<std::string, std::string> matras;
  std::map<std::string, std::string> specials;  // anusvara, candrabindu, ...
  std::string source_path;

  bool has(const std::string& glyph) const {
    return consonants.count(glyph) || vowels.count(glyph) ||
           matras.count(glyph) || specials.count(glyph) || glyph == "्";
  }
};

// TSV rows: glyph \t class \t latin, class in {C, V, M, X}.
inline TranslitTable load_translit_table_text(std::string_view text,
                                              const std::string& name = "<memory>") {
  TranslitTable t;
  t.source_path = name;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto where = name + ":" + std::to_string(lineno);
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      auto p = line.find('\t', start);
      if (p == std::string::npos) {
        fields.push_back(line.substr(start));
        break;
      }
      fields.push_back(line.substr(start, p - start));
      start = p + 1;
    }
    if (fields.size() != 3)
      throw TranslitError(where + ": expected 3 tab-separated fields");
    const std::string& glyph = fields[0];
    const std::string& cls = fields[1];
    const std::string& latin = fields[2];
    if (glyph.empty()) throw TranslitError(where + ": empty glyph");
    if (cls == "C") {
      if (latin.empty() || latin.back() != 'a')
        throw TranslitError(where + ": consonant mapping must end in 'a'");
      t.consonants[glyph] = latin;
    } else if (cls == "V") {
      t.vowels[glyph] = latin;
    } else if (cls == "M") {
      if (latin.empty())
        throw TranslitError(where + ": empty matra mapping");
      t.matras[glyph] = latin;
    } else if (cls == "X") {
      t.specials[glyph] = latin;
    } else {
      throw TranslitError(where + ": unknown class '" + cls + "'");
    }
  }
  // mirror nukta consonants so both the precomposed (U+0958..U+095F) and
  // decomposed (base + U+093C) spellings resolve
  static constexpr CodePoint nukta_pairs[][2] = {
      {0x0958, 0x0915}, {0x0959, 0x0916}, {0x095A, 0x0917}, {0x095B, 0x091C},
      {0x095C, 0x0921}, {0x095D, 0x0922}, {0x095E, 0x092B}, {0x095F, 0x092F}};
  for (const auto& pair : nukta_pairs) {
    std::string pre, dec;
    append_utf8(pre, pair[0]);
    append_utf8(dec, pair[1]);
    append_utf8(dec, 0x093C);
    auto p = t.consonants.find(pre);
    auto d = t.consonants.find(dec);
    if (p != t.consonants.end() && d == t.consonants.end())
      t.consonants[dec] = p->second;
    else if (d != t.consonants.end() && p == t.consonants.end())
      t.consonants[pre] = d->second;
  }
  return t;
}

inline TranslitTable load_translit_table(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw TranslitError("cannot open transliteration table: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return load_translit_table_text(ss.str(), path);
}

// One consonant-or-vowel unit: base glyph plus an optional matra or halant,
// plus trailing appenders (anusvara/candrabindu/visarga).
struct SyllableUnit {
  std::string base;     // UTF-8 glyph, possibly base+nukta
  std::string matra;    // empty = none
  bool halant = false;
  bool is_vowel = false;
  std::string trailing;  // accumulated Latin from X-class marks
};

constexpr CodePoint kHalant = 0x094D;
constexpr CodePoint kNukta = 0x093C;

inline std::vector<SyllableUnit> segment(std::string_view word,
                                         const TranslitTable& table) {
  std::vector<SyllableUnit> units;
  auto cps = to_codepoints(word);
  std::size_t i = 0;
  auto glyph = [](CodePoint cp) {
    std::string s;
    append_utf8(s, cp);
    return s;
  };
  while (i < cps.size()) {
    CodePoint cp = cps[i];
    if (!is_devanagari(cp))
      throw TranslitError("non-Devanagari code point U+" +
                          [](CodePoint c) {
                            char buf[8];
                            std::snprintf(buf, sizeof buf, "%04X",
                                          static_cast<unsigned>(c));
                            return std::string(buf);
                          }(cp));
    std::string gl = glyph(cp);
    if (table.consonants.count(gl) ||
        (i + 1 < cps.size() && cps[i + 1] == kNukta)) {
      SyllableUnit u;
      u.base = gl;
      ++i;
      if (i < cps.size() && cps[i] == kNukta) {
        u.base += glyph(kNukta);  // combined key, e.g. ड + nukta
        ++i;
      }
      if (!table.consonants.count(u.base))
        throw TranslitError("no table row for consonant '" + u.base + "'");
      if (i < cps.size() && cps[i] == kHalant) {
        u.halant = true;
        ++i;
      } else if (i < cps.size() && table.matras.count(glyph(cps[i]))) {
        u.matra = glyph(cps[i]);
        ++i;
      }
      units.push_back(std::move(u));
    } else if (table.vowels.count(gl)) {
      SyllableUnit u;
      u.base = gl;
      u.is_vowel = true;
      ++i;
      units.push_back(std::move(u));
    } else if (table.specials.count(gl)) {
      if (units.empty()) {
        SyllableUnit u;
        u.base = gl;
        u.is_vowel = true;  // standalone mark, rendered via trailing below
        u.trailing = table.specials.at(gl);
        units.push_back(std::move(u));
      } else {
        units.back().trailing += table.specials.at(gl);
      }
      ++i;
    } else {
      throw TranslitError("no table row for code point '" + gl + "'");
    }
  }
  return units;
}

// Romanization with the word-final inherent-vowel rule: a bare final
// consonant (no matra) drops its trailing 'a'.
inline std::string romanize(std::string_view word, const TranslitTable& table) {
  auto units = segment(word, table);
  std::string out;
  for (std::size_t i = 0; i < units.size(); ++i) {
    const SyllableUnit& u = units[i];
    bool is_last = i + 1 == units.size();
    if (u.is_vowel) {
      auto it = table.vowels.find(u.base);
      if (it != table.vowels.end()) out += it->second;
    } else {
      std::string latin = table.consonants.at(u.base);
      if (u.halant) {
        latin.pop_back();  // halant suppresses the inherent vowel
      } else if (!u.matra.empty()) {
        latin.pop_back();
        latin += table.matras.at(u.matra);
      } else if (is_last) {
        latin.pop_back();  // word-final schwa deletion
      }
      out += latin;
    }
    out += u.trailing;
  }
  return out;
}

}  // namespace anuvad
