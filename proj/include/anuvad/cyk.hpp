#pragma once

#include <algorithm>
#include <cassert>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "anuvad/grammar.hpp"
#include "anuvad/token.hpp"

namespace anuvad {

class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct ParseTree {
  std::string label;
  std::vector<ParseTree> children;
  std::optional<Token> token;  // set at leaves

  bool is_leaf() const { return token.has_value(); }
};

inline void collect_leaves(const ParseTree& t, std::vector<Token>& out) {
  if (t.is_leaf()) {
    out.push_back(*t.token);
    return;
  }
  for (const auto& c : t.children) collect_leaves(c, out);
}

inline std::vector<Token> leaves(const ParseTree& t) {
  std::vector<Token> out;
  collect_leaves(t, out);
  return out;
}

inline std::string tree_to_string(const ParseTree& t) {
  if (t.is_leaf()) return t.label + "(" + t.token->surface + ")";
  std::string out = t.label + "(";
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    if (i) out += ",";
    out += tree_to_string(t.children[i]);
  }
  return out + ")";
}

// One derivation step for an entry: a split point plus the child entries,
// or a terminal leaf (left < 0).
struct BackPointer {
  int k = 0;            // split: left child covers (p,k), right (k+1,q)
  int left = -1;        // entry indexes within the child cells
  int right = -1;
  const CnfProduction* prod = nullptr;
};

struct ChartEntry {
  std::string symbol;
  int p = 0, q = 0;  // 1-based, inclusive span
  std::vector<BackPointer> backs;  // backs[0] is the canonical derivation
};

// Triangular matrix of cells Z(p,q). Empty entry sets are the paper's "€".
struct ParseChart {
  int n = 0;
  std::vector<std::string> words;  // surfaces, for rendering
  // cells[p][q], 1-based; each cell is an ordered entry list
  std::vector<std::vector<std::vector<ChartEntry>>> cells;
  // preterminal display names for synthetic symbols (render only)
  std::unordered_map<std::string, std::string> display;

  const std::vector<ChartEntry>& cell(int p, int q) const { return cells[p][q]; }
  std::vector<ChartEntry>& cell(int p, int q) { return cells[p][q]; }

  int find(int p, int q, const std::string& symbol) const {
    const auto& c = cells[p][q];
    for (std::size_t i = 0; i < c.size(); ++i)
      if (c[i].symbol == symbol) return static_cast<int>(i);
    return -1;
  }
  bool contains(int p, int q, const std::string& symbol) const {
    return find(p, q, symbol) >= 0;
  }
};

namespace detail {

// A CNF terminal matches a token when it names the token's POS tag or
// equals its surface ("AUX -> है" style lexicalized rules).
inline bool terminal_matches(const std::string& terminal, const Token& t) {
  if (t.pos && terminal == pos_name(*t.pos)) return true;
  return terminal == t.surface;
}

constexpr std::size_t kMaxBacksPerEntry = 16;

}  // namespace detail

// Bottom-up table filling over spans of increasing length.
inline ParseChart cyk_recognize(const std::vector<Token>& tokens,
                                const CnfGrammar& g) {
  if (tokens.empty()) throw ParseError("empty sentence");
  const int n = static_cast<int>(tokens.size());
  ParseChart chart;
  chart.n = n;
  for (const auto& t : tokens) chart.words.push_back(t.surface);
  chart.cells.assign(n + 1, std::vector<std::vector<ChartEntry>>(n + 1));
  for (const auto& [sym, kind] : g.synthetic) {
    if (kind == SyntheticKind::Preterminal) {
      // X#t -> x : display as the terminal itself
      for (const auto& p : g.productions)
        if (p.head == sym && p.body.size() == 1) chart.display[sym] = p.body[0];
    }
  }

  // diagonal: preterminal rules A -> word/tag
  for (int p = 1; p <= n; ++p) {
    for (const auto& prod : g.productions) {
      if (prod.body.size() != 1 || !g.is_terminal(prod.body[0])) continue;
      if (!detail::terminal_matches(prod.body[0], tokens[p - 1])) continue;
      if (chart.contains(p, p, prod.head)) continue;
      ChartEntry e;
      e.symbol = prod.head;
      e.p = e.q = p;
      e.backs.push_back(BackPointer{0, -1, -1, &prod});
      chart.cell(p, p).push_back(std::move(e));
    }
  }

  // longer spans: ascending split k, production-file order
  for (int len = 2; len <= n; ++len) {
    for (int p = 1; p + len - 1 <= n; ++p) {
      int q = p + len - 1;
      auto& cell = chart.cell(p, q);
      for (int k = p; k < q; ++k) {
        for (const auto& prod : g.productions) {
          if (prod.body.size() != 2) continue;
          int li = chart.find(p, k, prod.body[0]);
          if (li < 0) continue;
          int ri = chart.find(k + 1, q, prod.body[1]);
          if (ri < 0) continue;
          int ei = chart.find(p, q, prod.head);
          BackPointer bp{k, li, ri, &prod};
          if (ei < 0) {
            ChartEntry e;
            e.symbol = prod.head;
            e.p = p;
            e.q = q;
            e.backs.push_back(bp);
            cell.push_back(std::move(e));
          } else if (cell[ei].backs.size() < detail::kMaxBacksPerEntry) {
            cell[ei].backs.push_back(bp);
          }
        }
      }
    }
  }
  return chart;
}

inline bool recognized(const ParseChart& chart, const CnfGrammar& g) {
  return chart.n > 0 && chart.contains(1, chart.n, g.start);
}

namespace detail {

inline ParseTree build_tree(const ParseChart& chart,
                            const std::vector<Token>& tokens,
                            const ChartEntry& e, std::size_t back_index) {
  const BackPointer& bp = e.backs[back_index];
  ParseTree inner;
  if (bp.left < 0) {
    inner.label = e.symbol;
    inner.token = tokens[e.p - 1];
  } else {
    inner.label = e.symbol;
    inner.children.push_back(
        build_tree(chart, tokens, chart.cell(e.p, bp.k)[bp.left], 0));
    inner.children.push_back(
        build_tree(chart, tokens, chart.cell(bp.k + 1, e.q)[bp.right], 0));
  }
  // rebuild the unary spine collapsed by UNIT elimination
  const auto& via = bp.prod->via;
  if (!via.empty()) {
    ParseTree node = std::move(inner);
    node.label = via.back();
    for (std::size_t i = via.size(); i-- > 1;) {
      ParseTree wrap;
      wrap.label = via[i - 1];
      wrap.children.push_back(std::move(node));
      node = std::move(wrap);
    }
    ParseTree top;
    top.label = e.symbol;
    top.children.push_back(std::move(node));
    return top;
  }
  return inner;
}

// Splice out synthetic binarization nodes, collapse TERM preterminals to
// terminal-labeled leaves, and drop the fresh start wrapper.
inline ParseTree debinarize(ParseTree t, const CnfGrammar& g) {
  if (t.is_leaf()) {
    auto it = g.synthetic.find(t.label);
    if (it != g.synthetic.end() && it->second == SyntheticKind::Preterminal) {
      // relabel X#t to its terminal
      for (const auto& p : g.productions)
        if (p.head == t.label && p.body.size() == 1) t.label = p.body[0];
    }
    return t;
  }
  std::vector<ParseTree> flat;
  for (auto& c : t.children) {
    ParseTree d = debinarize(std::move(c), g);
    auto it = g.synthetic.find(d.label);
    if (it != g.synthetic.end() && it->second == SyntheticKind::Binarized) {
      for (auto& gc : d.children) flat.push_back(std::move(gc));
    } else {
      flat.push_back(std::move(d));
    }
  }
  t.children = std::move(flat);
  auto it = g.synthetic.find(t.label);
  if (it != g.synthetic.end() &&
      (it->second == SyntheticKind::Start) && t.children.size() == 1)
    return std::move(t.children[0]);
  return t;
}

}  // namespace detail

// One parse tree via back-pointers, de-binarized; absent when the chart
// does not recognize the sentence.
inline std::optional<ParseTree> extract_tree(const ParseChart& chart,
                                             const CnfGrammar& g,
                                             const std::vector<Token>& tokens) {
  int i = chart.n > 0 ? chart.find(1, chart.n, g.start) : -1;
  if (i < 0) return std::nullopt;
  ParseTree raw =
      detail::build_tree(chart, tokens, chart.cell(1, chart.n)[i], 0);
  return detail::debinarize(std::move(raw), g);
}

// Bounded enumeration of alternative parses (debug aid for --all-parses).
inline std::vector<ParseTree> extract_trees(const ParseChart& chart,
                                            const CnfGrammar& g,
                                            const std::vector<Token>& tokens,
                                            std::size_t max_trees = 16) {
  std::vector<ParseTree> out;
  int i = chart.n > 0 ? chart.find(1, chart.n, g.start) : -1;
  if (i < 0) return out;
  const ChartEntry& root = chart.cell(1, chart.n)[i];
  for (std::size_t b = 0; b < root.backs.size() && out.size() < max_trees; ++b)
    out.push_back(detail::debinarize(
        detail::build_tree(chart, tokens, root, b), g));
  return out;
}

// Checks the split invariant p <= k < q on every recorded back-pointer.
inline bool chart_invariants_hold(const ParseChart& chart) {
  for (int p = 1; p <= chart.n; ++p) {
    for (int q = p; q <= chart.n; ++q) {
      for (const auto& e : chart.cell(p, q)) {
        if (e.p != p || e.q != q || p > q) return false;
        for (const auto& bp : e.backs) {
          if (bp.left < 0) {
            if (p != q) return false;
          } else if (!(p <= bp.k && bp.k < q)) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

// Triangular rendering in the Fig 2 orientation: longest span on top,
// preterminal row above the words, "€" in empty cells.
inline std::string render_chart(const ParseChart& chart) {
  const int n = chart.n;
  auto cell_text = [&](int p, int q) -> std::string {
    std::string s;
    for (const auto& e : chart.cell(p, q)) {
      auto it = chart.display.find(e.symbol);
      std::string name = it != chart.display.end() ? it->second : e.symbol;
      if (!s.empty()) s += ",";
      s += name;
    }
    return s.empty() ? "€" : s;
  };
  std::vector<std::size_t> width(n + 1, 0);
  auto utf8_len = [](const std::string& s) {
    std::size_t len = 0;
    for (char c : s)
      if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) ++len;
    return len;
  };
  for (int p = 1; p <= n; ++p) {
    width[p] = utf8_len(chart.words[p - 1]);
    for (int q = p; q <= n; ++q)
      width[p] = std::max(width[p], utf8_len(cell_text(p, q)));
  }
  std::ostringstream os;
  for (int len = n; len >= 1; --len) {
    for (int p = 1; p + len - 1 <= n; ++p) {
      std::string s = cell_text(p, p + len - 1);
      os << s << std::string(width[p] - utf8_len(s) + 2, ' ');
    }
    os << "\n";
  }
  for (int p = 1; p <= n; ++p)
    os << chart.words[p - 1]
       << std::string(width[p] - utf8_len(chart.words[p - 1]) + 2, ' ');
  os << "\n";
  return os.str();
}

}  // namespace anuvad
