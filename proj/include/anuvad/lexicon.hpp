#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "anuvad/token.hpp"
#include "anuvad/unicode.hpp"

namespace anuvad {

class LexiconError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct LexiconEntry {
  std::string hindi;   // surface or root form, the lookup key
  std::string root;
  POSTag pos = POSTag::NOUN;
  std::vector<std::string> english;  // >= 1 synonym; "" marks a silent word
  Number number = Number::ANY;
  int line = 0;  // source line, for diagnostics
};

// Bilingual dictionary. Immutable after load; (hindi, pos) pairs are unique.
class Lexicon {
public:
  void add(LexiconEntry e) {
    auto key = e.hindi + "\x1f" + std::string(pos_name(e.pos));
    auto it = by_key_.find(key);
    if (it != by_key_.end()) {
      throw LexiconError("duplicate lexicon key (" + e.hindi + ", " +
                         std::string(pos_name(e.pos)) + "): lines " +
                         std::to_string(entries_[it->second].line) + " and " +
                         std::to_string(e.line));
    }
    by_key_[key] = entries_.size();
    by_surface_[e.hindi].push_back(entries_.size());
    entries_.push_back(std::move(e));
  }

  // All POS-distinct entries for a surface (or root) form, in file order.
  // Empty result signals out-of-vocabulary.
  std::vector<LexiconEntry> lookup(std::string_view surface) const {
    std::vector<LexiconEntry> out;
    auto it = by_surface_.find(std::string(surface));
    if (it == by_surface_.end()) return out;
    for (std::size_t i : it->second) out.push_back(entries_[i]);
    return out;
  }

  const std::vector<LexiconEntry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }

  const std::string& source_path() const { return source_path_; }
  void set_source_path(std::string p) { source_path_ = std::move(p); }

private:
  std::vector<LexiconEntry> entries_;
  std::unordered_map<std::string, std::size_t> by_key_;
  std::unordered_map<std::string, std::vector<std::size_t>> by_surface_;
  std::string source_path_;
};

namespace detail {

inline std::vector<std::string> split_on(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t p = s.find(sep, start);
    if (p == std::string_view::npos) {
      out.emplace_back(s.substr(start));
      break;
    }
    out.emplace_back(s.substr(start, p - start));
    start = p + 1;
  }
  return out;
}

inline std::string strip(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace detail

// Parses the TSV lexicon format: surface \t root \t POS \t syn;syn \t number.
// '#' starts a comment line; blank lines are ignored.
inline Lexicon load_lexicon_text(std::string_view text,
                                 const std::string& name = "<memory>") {
  if (!is_valid_utf8(text))
    throw LexiconError(name + ": not valid UTF-8");
  Lexicon lex;
  lex.set_source_path(name);
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string stripped = detail::strip(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    auto fields = detail::split_on(line, '\t');
    if (fields.size() != 5)
      throw LexiconError(name + ":" + std::to_string(lineno) +
                         ": expected 5 tab-separated fields, got " +
                         std::to_string(fields.size()));
    LexiconEntry e;
    e.hindi = detail::strip(fields[0]);
    e.root = detail::strip(fields[1]);
    auto pos = parse_pos(detail::strip(fields[2]));
    auto num = parse_number(detail::strip(fields[4]));
    if (e.hindi.empty())
      throw LexiconError(name + ":" + std::to_string(lineno) + ": empty surface field");
    if (e.root.empty()) e.root = e.hindi;
    if (!pos)
      throw LexiconError(name + ":" + std::to_string(lineno) +
                         ": unknown POS tag '" + fields[2] + "'");
    if (*pos == POSTag::UNK)
      throw LexiconError(name + ":" + std::to_string(lineno) +
                         ": UNK is not storable in the lexicon");
    if (!num)
      throw LexiconError(name + ":" + std::to_string(lineno) +
                         ": unknown number feature '" + fields[4] + "'");
    e.pos = *pos;
    e.number = *num;
    e.english = detail::split_on(fields[3], ';');
    // one empty synonym string means "silent in English"
    for (std::size_t i = 0; i < e.english.size(); ++i) {
      for (std::size_t j = i + 1; j < e.english.size(); ++j) {
        if (e.english[i] == e.english[j])
          throw LexiconError(name + ":" + std::to_string(lineno) +
                             ": duplicate synonym '" + e.english[i] + "'");
      }
    }
    e.line = lineno;
    lex.add(std::move(e));
  }
  return lex;
}

inline Lexicon load_lexicon(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LexiconError("cannot open lexicon file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return load_lexicon_text(ss.str(), path);
}

inline std::string serialize_lexicon(const Lexicon& lex) {
  std::string out;
  for (const auto& e : lex.entries()) {
    out += e.hindi;
    out += '\t';
    out += e.root;
    out += '\t';
    out += pos_name(e.pos);
    out += '\t';
    for (std::size_t i = 0; i < e.english.size(); ++i) {
      if (i) out += ';';
      out += e.english[i];
    }
    out += '\t';
    out += number_name(e.number);
    out += '\n';
  }
  return out;
}

}  // namespace anuvad
