#pragma once

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "anuvad/cyk.hpp"
#include "anuvad/token.hpp"

namespace anuvad {

class RuleError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Pattern tree over node labels with named variable slots. A childless
// pattern node binds (or anchors) a whole subtree of that label.
struct PatternNode {
  std::string label;
  std::string var;  // empty = pure anchor
  std::vector<PatternNode> children;
};

struct TreeTransferRule {
  std::string name;
  PatternNode source;
  PatternNode target;
};

enum class RuleLevel { SENTENCE, PHRASE };

struct SequenceTransferRule {
  std::string name;
  RuleLevel level = RuleLevel::PHRASE;
  std::vector<POSTag> source_tags;
  std::vector<int> alignment;  // target[j] = source[alignment[j]-1], 1-based
};

enum class TransferMethod { TREE, SENTENCE_SEQ, PHRASE_SEQ, WORD_TO_WORD };

struct TransferSpan {
  int start = 0;  // token indexes in the OUTPUT order, 0-based inclusive
  int end = 0;
  TransferMethod method = TransferMethod::WORD_TO_WORD;
};

struct TransferResult {
  std::vector<Token> tokens;
  std::vector<TransferSpan> spans;
};

namespace detail {

struct PatternParser {
  std::string_view s;
  std::size_t i = 0;
  const std::string& rule;

  void skip_ws() {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw RuleError("rule '" + rule + "': " + what);
  }
  std::string ident() {
    skip_ws();
    std::size_t b = i;
    while (i < s.size() && s[i] != '(' && s[i] != ')' && s[i] != ',' &&
           s[i] != ':' && s[i] != ' ' && s[i] != '\t')
      ++i;
    if (i == b) fail("expected a symbol at position " + std::to_string(i));
    return std::string(s.substr(b, i - b));
  }
  PatternNode parse() {
    PatternNode node;
    node.label = ident();
    skip_ws();
    if (i < s.size() && s[i] == ':') {
      ++i;
      node.var = ident();
      skip_ws();
    }
    if (i < s.size() && s[i] == '(') {
      ++i;
      while (true) {
        node.children.push_back(parse());
        skip_ws();
        if (i < s.size() && s[i] == ',') {
          ++i;
          continue;
        }
        if (i < s.size() && s[i] == ')') {
          ++i;
          break;
        }
        fail("expected ',' or ')' in pattern");
      }
    }
    return node;
  }
};

inline PatternNode parse_pattern(std::string_view text, const std::string& rule) {
  PatternParser p{text, 0, rule};
  PatternNode n = p.parse();
  p.skip_ws();
  if (p.i != text.size())
    throw RuleError("rule '" + rule + "': trailing input after pattern");
  return n;
}

inline void collect_vars(const PatternNode& n, std::vector<std::string>& out) {
  if (!n.var.empty()) out.push_back(n.var);
  for (const auto& c : n.children) collect_vars(c, out);
}

inline void validate_tree_rule(const TreeTransferRule& r) {
  std::vector<std::string> src, tgt;
  collect_vars(r.source, src);
  collect_vars(r.target, tgt);
  auto sorted = [](std::vector<std::string> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  auto ss = sorted(src), ts = sorted(tgt);
  for (std::size_t i = 1; i < ss.size(); ++i)
    if (ss[i] == ss[i - 1])
      throw RuleError("rule '" + r.name + "': variable '" + ss[i] +
                      "' bound more than once");
  if (ss != ts)
    throw RuleError("rule '" + r.name +
                    "': source and target variable sets differ");
}

inline void validate_alignment(const SequenceTransferRule& r) {
  const std::size_t n = r.source_tags.size();
  if (r.alignment.size() != n)
    throw RuleError("rule '" + r.name + "': alignment length " +
                    std::to_string(r.alignment.size()) + " != pattern length " +
                    std::to_string(n));
  std::vector<bool> seen(n, false);
  for (int a : r.alignment) {
    if (a < 1 || a > static_cast<int>(n) || seen[a - 1])
      throw RuleError("rule '" + r.name +
                      "': alignment is not a permutation of 1.." +
                      std::to_string(n));
    seen[a - 1] = true;
  }
}

}  // namespace detail

struct TransferRules {
  std::vector<TreeTransferRule> tree;
  std::vector<SequenceTransferRule> sequence;
};

// Line-oriented rule file:
//   tree <name>: VP(ADV:x, Y(ADJ:y, AUX:z)) => VP(AUX:z, Y(ADV:x, ADJ:y))
//   sentence|phrase <name>: TAG TAG ... => i j k
inline TransferRules load_transfer_rules_text(std::string_view text,
                                              const std::string& name = "<memory>") {
  TransferRules rules;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::string stripped = detail::strip_ws(line);
    if (stripped.empty()) continue;
    auto where = name + ":" + std::to_string(lineno);

    auto sp = stripped.find(' ');
    auto colon = stripped.find(':');
    if (sp == std::string::npos || colon == std::string::npos || colon < sp)
      throw RuleError(where + ": expected '<kind> <name>: ...'");
    std::string kind = stripped.substr(0, sp);
    std::string rname = detail::strip_ws(stripped.substr(sp + 1, colon - sp - 1));
    std::string rest = detail::strip_ws(stripped.substr(colon + 1));
    auto arrow = rest.find("=>");
    if (arrow == std::string::npos)
      throw RuleError(where + ": missing '=>'");
    std::string lhs = detail::strip_ws(rest.substr(0, arrow));
    std::string rhs = detail::strip_ws(rest.substr(arrow + 2));
    if (rname.empty()) throw RuleError(where + ": missing rule name");

    if (kind == "tree") {
      TreeTransferRule r;
      r.name = rname;
      r.source = detail::parse_pattern(lhs, rname);
      r.target = detail::parse_pattern(rhs, rname);
      detail::validate_tree_rule(r);
      rules.tree.push_back(std::move(r));
    } else if (kind == "sentence" || kind == "phrase") {
      SequenceTransferRule r;
      r.name = rname;
      r.level = kind == "sentence" ? RuleLevel::SENTENCE : RuleLevel::PHRASE;
      for (const auto& sym : detail::split_symbols(lhs)) {
        auto tag = parse_pos(sym);
        if (!tag) throw RuleError(where + ": unknown POS tag '" + sym + "'");
        r.source_tags.push_back(*tag);
      }
      if (r.source_tags.empty())
        throw RuleError(where + ": empty tag pattern");
      for (const auto& sym : detail::split_symbols(rhs)) {
        try {
          r.alignment.push_back(std::stoi(sym));
        } catch (const std::exception&) {
          throw RuleError(where + ": bad alignment index '" + sym + "'");
        }
      }
      detail::validate_alignment(r);
      rules.sequence.push_back(std::move(r));
    } else {
      throw RuleError(where + ": unknown rule kind '" + kind + "'");
    }
  }
  return rules;
}

inline TransferRules load_transfer_rules(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw RuleError("cannot open rules file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return load_transfer_rules_text(ss.str(), path);
}

namespace detail {

inline bool match_pattern(const PatternNode& pat, const ParseTree& node,
                          std::map<std::string, const ParseTree*>& bind) {
  if (pat.label != node.label) return false;
  if (pat.children.empty()) {
    if (!pat.var.empty()) bind[pat.var] = &node;
    return true;
  }
  if (node.children.size() != pat.children.size()) return false;
  for (std::size_t i = 0; i < pat.children.size(); ++i)
    if (!match_pattern(pat.children[i], node.children[i], bind)) return false;
  return true;
}

inline ParseTree instantiate(const PatternNode& pat,
                             const std::map<std::string, const ParseTree*>& bind) {
  if (pat.children.empty() && !pat.var.empty()) return *bind.at(pat.var);
  ParseTree node;
  node.label = pat.label;
  for (const auto& c : pat.children)
    node.children.push_back(instantiate(c, bind));
  return node;
}

}  // namespace detail

// Top-down, leftmost-first, single pass: each node is rewritten at most once
// (by the first matching rule), then recursion continues into the rewritten
// node's children. Returns the tree and whether anything matched.
inline std::pair<ParseTree, bool> apply_tree_transfer(
    ParseTree tree, const std::vector<TreeTransferRule>& rules) {
  bool changed = false;
  for (const auto& r : rules) {
    std::map<std::string, const ParseTree*> bind;
    if (detail::match_pattern(r.source, tree, bind)) {
      tree = detail::instantiate(r.target, bind);
      changed = true;
      break;
    }
  }
  for (auto& c : tree.children) {
    auto [sub, sub_changed] = apply_tree_transfer(std::move(c), rules);
    c = std::move(sub);
    changed = changed || sub_changed;
  }
  return {std::move(tree), changed};
}

namespace detail {

inline bool tags_match_at(const std::vector<Token>& tokens, std::size_t at,
                          const std::vector<POSTag>& tags) {
  if (at + tags.size() > tokens.size()) return false;
  for (std::size_t i = 0; i < tags.size(); ++i)
    if (!tokens[at + i].pos || *tokens[at + i].pos != tags[i]) return false;
  return true;
}

inline std::vector<Token> permute(const std::vector<Token>& span,
                                  const std::vector<int>& alignment) {
  std::vector<Token> out;
  out.reserve(span.size());
  for (int a : alignment) out.push_back(span[a - 1]);
  return out;
}

}  // namespace detail

// The matching cascade: full-sentence rule, else greedy longest-match
// phrase coverage left to right, else word-to-word passthrough.
inline TransferResult apply_sequence_transfer(
    const std::vector<Token>& tokens,
    const std::vector<SequenceTransferRule>& rules) {
  TransferResult result;

  for (const auto& r : rules) {
    if (r.level != RuleLevel::SENTENCE) continue;
    if (r.source_tags.size() != tokens.size()) continue;
    if (!detail::tags_match_at(tokens, 0, r.source_tags)) continue;
    result.tokens = detail::permute(tokens, r.alignment);
    result.spans.push_back(TransferSpan{0, static_cast<int>(tokens.size()) - 1,
                                        TransferMethod::SENTENCE_SEQ});
    return result;
  }

  std::size_t i = 0;
  int w2w_start = -1;
  auto flush_w2w = [&] {
    if (w2w_start < 0) return;
    result.spans.push_back(TransferSpan{
        w2w_start, static_cast<int>(result.tokens.size()) - 1,
        TransferMethod::WORD_TO_WORD});
    w2w_start = -1;
  };
  while (i < tokens.size()) {
    const SequenceTransferRule* best = nullptr;
    for (const auto& r : rules) {
      if (r.level != RuleLevel::PHRASE) continue;
      if (best && r.source_tags.size() <= best->source_tags.size()) continue;
      if (detail::tags_match_at(tokens, i, r.source_tags)) best = &r;
    }
    if (best) {
      flush_w2w();
      int start = static_cast<int>(result.tokens.size());
      std::vector<Token> span(tokens.begin() + i,
                              tokens.begin() + i + best->source_tags.size());
      for (auto& t : detail::permute(span, best->alignment))
        result.tokens.push_back(std::move(t));
      result.spans.push_back(TransferSpan{
          start, static_cast<int>(result.tokens.size()) - 1,
          TransferMethod::PHRASE_SEQ});
      i += best->source_tags.size();
    } else {
      if (w2w_start < 0) w2w_start = static_cast<int>(result.tokens.size());
      result.tokens.push_back(tokens[i]);
      ++i;
    }
  }
  flush_w2w();
  return result;
}

// Collapses each maximal pair of identical adjacent NOUN tokens into one
// token marked replicative ("every N" in the generator). A triple keeps its
// third copy as an ordinary noun.
inline std::vector<Token> handle_replicative(const std::vector<Token>& tokens) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < tokens.size()) {
    if (i + 1 < tokens.size() && tokens[i].pos == POSTag::NOUN &&
        tokens[i + 1].pos == POSTag::NOUN &&
        tokens[i].surface == tokens[i + 1].surface &&
        !tokens[i].replicative && !tokens[i + 1].replicative) {
      Token t = tokens[i];
      t.replicative = true;
      out.push_back(std::move(t));
      i += 2;
    } else {
      out.push_back(tokens[i]);
      ++i;
    }
  }
  for (std::size_t k = 0; k < out.size(); ++k)
    out[k].position = static_cast<int>(k);
  return out;
}

}  // namespace anuvad
