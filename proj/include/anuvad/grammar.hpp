#pragma once

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace anuvad {

class GrammarError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Production {
  std::string head;
  std::vector<std::string> body;  // empty = explicit epsilon

  bool operator==(const Production& o) const {
    return head == o.head && body == o.body;
  }
};

// CFG as the 4-tuple (V, T, P, S). V holds every production head; T every
// body symbol that never appears as a head.
struct Grammar {
  std::vector<std::string> variables;  // insertion order
  std::set<std::string> terminals;
  std::vector<Production> productions;
  std::string start;
  std::vector<std::string> warnings;  // unreachable / unproductive symbols

  bool is_variable(std::string_view s) const {
    return std::find(variables.begin(), variables.end(), s) != variables.end();
  }
  bool is_terminal(std::string_view s) const {
    return terminals.count(std::string(s)) != 0;
  }
};

enum class SyntheticKind {
  Start,        // fresh start symbol introduced by START
  Preterminal,  // X#t -> x introduced by TERM
  Binarized,    // X#i introduced by BIN
};

struct CnfProduction {
  std::string head;
  std::vector<std::string> body;  // [B, C], [terminal], or [] (start epsilon)
  // Unit chain recorded by UNIT elimination: intermediate heads from just
  // below `head` down to the original production's head. Used to rebuild
  // the unary spine when extracting trees.
  std::vector<std::string> via;
};

struct CnfGrammar {
  std::vector<std::string> variables;
  std::set<std::string> terminals;
  std::vector<CnfProduction> productions;
  std::string start;
  std::unordered_map<std::string, SyntheticKind> synthetic;

  bool is_synthetic(std::string_view s) const {
    return synthetic.count(std::string(s)) != 0;
  }
  bool is_terminal(std::string_view s) const {
    return terminals.count(std::string(s)) != 0;
  }
};

inline bool is_cnf_shape(const CnfGrammar& g, const CnfProduction& p) {
  if (p.body.size() == 2)
    return !g.is_terminal(p.body[0]) && !g.is_terminal(p.body[1]);
  if (p.body.size() == 1) return g.is_terminal(p.body[0]);
  return p.body.empty() && p.head == g.start;  // start epsilon only
}

namespace detail {

inline std::vector<std::string> split_symbols(std::string_view s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ' ' || c == '\t') {
      if (!cur.empty()) out.push_back(std::move(cur)), cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

inline std::string strip_ws(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

// Symbols deriving some terminal string.
inline std::set<std::string> productive_symbols(const Grammar& g) {
  std::set<std::string> productive(g.terminals.begin(), g.terminals.end());
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& p : g.productions) {
      if (productive.count(p.head)) continue;
      bool all = true;
      for (const auto& s : p.body)
        if (!productive.count(s)) { all = false; break; }
      if (all) {
        productive.insert(p.head);
        changed = true;
      }
    }
  }
  return productive;
}

inline std::set<std::string> reachable_symbols(const Grammar& g) {
  std::set<std::string> reach{g.start};
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& p : g.productions) {
      if (!reach.count(p.head)) continue;
      for (const auto& s : p.body)
        if (reach.insert(s).second) changed = true;
    }
  }
  return reach;
}

}  // namespace detail

// One production per line: "HEAD -> SYM SYM | SYM ...". '#' starts a
// comment; "start: SYM" overrides the default start (the first head).
// "ε" or "EPSILON" as the whole body marks an explicit epsilon production.
inline Grammar parse_grammar(std::string_view text,
                             const std::string& name = "<memory>") {
  Grammar g;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  std::set<std::string> seen_vars;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::string stripped = detail::strip_ws(line);
    if (stripped.empty()) continue;
    if (stripped.rfind("start:", 0) == 0) {
      g.start = detail::strip_ws(stripped.substr(6));
      if (g.start.empty())
        throw GrammarError(name + ":" + std::to_string(lineno) +
                           ": empty start directive");
      continue;
    }
    auto arrow = stripped.find("->");
    if (arrow == std::string::npos)
      throw GrammarError(name + ":" + std::to_string(lineno) +
                         ": expected 'HEAD -> body'");
    std::string head = detail::strip_ws(stripped.substr(0, arrow));
    if (head.empty())
      throw GrammarError(name + ":" + std::to_string(lineno) +
                         ": missing production head");
    if (detail::split_symbols(head).size() != 1)
      throw GrammarError(name + ":" + std::to_string(lineno) +
                         ": production head must be a single symbol");
    if (seen_vars.insert(head).second) g.variables.push_back(head);
    std::string rhs = stripped.substr(arrow + 2);
    std::size_t start = 0;
    while (start <= rhs.size()) {
      std::size_t bar = rhs.find('|', start);
      std::string alt = bar == std::string::npos ? rhs.substr(start)
                                                 : rhs.substr(start, bar - start);
      auto body = detail::split_symbols(alt);
      if (body.size() == 1 && (body[0] == "ε" || body[0] == "EPSILON"))
        body.clear();
      else if (body.empty())
        throw GrammarError(name + ":" + std::to_string(lineno) +
                           ": empty production body (use ε explicitly)");
      g.productions.push_back(Production{head, std::move(body)});
      if (bar == std::string::npos) break;
      start = bar + 1;
    }
    if (g.start.empty()) g.start = head;
  }
  if (g.productions.empty())
    throw GrammarError(name + ": no productions");
  // T = body symbols never used as heads
  for (const auto& p : g.productions)
    for (const auto& s : p.body)
      if (!seen_vars.count(s)) g.terminals.insert(s);

  auto productive = detail::productive_symbols(g);
  auto reachable = detail::reachable_symbols(g);
  for (const auto& v : g.variables) {
    if (!productive.count(v))
      g.warnings.push_back("unproductive nonterminal: " + v);
    if (!reachable.count(v))
      g.warnings.push_back("unreachable nonterminal: " + v);
  }
  return g;
}

inline Grammar parse_grammar_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GrammarError("cannot open grammar file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_grammar(ss.str(), path);
}

// CNF conversion: START, TERM, BIN (right-associative), DEL, UNIT.
// Synthetic symbols use '#' which cannot occur in grammar files (comment
// character), so they never collide with user symbols.
inline CnfGrammar to_cnf(const Grammar& g) {
  auto productive = detail::productive_symbols(g);
  if (!productive.count(g.start))
    throw GrammarError("no derivable terminal strings from start");

  std::string start = g.start;
  std::vector<Production> prods = g.productions;
  std::unordered_map<std::string, SyntheticKind> synthetic;

  // START: fresh start symbol if the old one occurs in any body
  bool start_in_body = false;
  for (const auto& p : prods)
    for (const auto& s : p.body)
      if (s == g.start) start_in_body = true;
  if (start_in_body) {
    std::string fresh = g.start + "#0";
    prods.insert(prods.begin(), Production{fresh, {g.start}});
    synthetic[fresh] = SyntheticKind::Start;
    start = fresh;
  }

  auto is_term = [&](const std::string& s) { return g.terminals.count(s) != 0; };

  // TERM: replace terminals inside bodies of length >= 2 by preterminals
  std::map<std::string, std::string> preterm;
  std::vector<Production> term_prods;
  for (auto& p : prods) {
    if (p.body.size() < 2) continue;
    for (auto& s : p.body) {
      if (!is_term(s)) continue;
      auto it = preterm.find(s);
      if (it == preterm.end()) {
        std::string fresh = s + "#t";
        preterm[s] = fresh;
        synthetic[fresh] = SyntheticKind::Preterminal;
        term_prods.push_back(Production{fresh, {s}});
        s = fresh;
      } else {
        s = it->second;
      }
    }
  }
  prods.insert(prods.end(), term_prods.begin(), term_prods.end());

  // BIN: right-associative binarization, synthetic symbols HEAD#i
  std::unordered_map<std::string, int> bin_counter;
  std::vector<Production> binned;
  for (const auto& p : prods) {
    if (p.body.size() <= 2) {
      binned.push_back(p);
      continue;
    }
    std::string head = p.head;
    for (std::size_t i = 0; i + 2 < p.body.size(); ++i) {
      std::string fresh = p.head + "#" + std::to_string(++bin_counter[p.head]);
      synthetic[fresh] = SyntheticKind::Binarized;
      binned.push_back(Production{head, {p.body[i], fresh}});
      head = fresh;
    }
    binned.push_back(
        Production{head, {p.body[p.body.size() - 2], p.body.back()}});
  }
  prods = std::move(binned);

  // DEL: epsilon elimination (bodies are length <= 2 here)
  std::set<std::string> nullable;
  {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& p : prods) {
        if (nullable.count(p.head)) continue;
        bool all_null = true;
        for (const auto& s : p.body)
          if (!nullable.count(s)) { all_null = false; break; }
        if (all_null) {
          nullable.insert(p.head);
          changed = true;
        }
      }
    }
  }
  {
    std::set<std::pair<std::string, std::vector<std::string>>> seen;
    std::vector<Production> expanded;
    auto add = [&](Production p) {
      if (seen.insert({p.head, p.body}).second) expanded.push_back(std::move(p));
    };
    for (const auto& p : prods) {
      if (p.body.empty()) continue;  // dropped; start epsilon re-added below
      add(p);
      if (p.body.size() == 2) {
        if (nullable.count(p.body[0])) add(Production{p.head, {p.body[1]}});
        if (nullable.count(p.body[1])) add(Production{p.head, {p.body[0]}});
      }
    }
    prods = std::move(expanded);
    if (nullable.count(start)) prods.push_back(Production{start, {}});
  }

  // UNIT: collapse unit chains, recording the chain for tree extraction
  CnfGrammar out;
  out.start = start;
  out.synthetic = std::move(synthetic);
  out.terminals = g.terminals;
  {
    std::set<std::string> heads;
    for (const auto& p : prods) heads.insert(p.head);
    // deterministic variable order: original file order, then synthetics
    std::vector<std::string> var_order;
    for (const auto& v : g.variables)
      if (heads.count(v)) var_order.push_back(v);
    for (const auto& h : heads)
      if (std::find(var_order.begin(), var_order.end(), h) == var_order.end())
        var_order.push_back(h);

    // unit-reachable targets (with shortest chains) per variable, BFS order
    std::map<std::string, std::vector<std::pair<std::string, std::vector<std::string>>>>
        reach;  // a -> [(target, chain ending at target), ...]
    for (const auto& a : var_order) {
      std::vector<std::pair<std::string, std::vector<std::string>>> frontier{
          {a, {}}};
      std::set<std::string> visited{a};
      std::size_t qi = 0;
      while (qi < frontier.size()) {
        auto [sym, chain] = frontier[qi++];
        for (const auto& p : prods) {
          if (p.head != sym) continue;
          if (p.body.size() == 1 && !is_term(p.body[0]) &&
              heads.count(p.body[0]) && visited.insert(p.body[0]).second) {
            auto next = chain;
            next.push_back(p.body[0]);
            frontier.push_back({p.body[0], next});
          }
        }
      }
      reach[a] = std::move(frontier);
    }

    // emit in production-file order so downstream tie-breaks stay stable
    std::set<std::pair<std::string, std::vector<std::string>>> emitted;
    for (const auto& p : prods) {
      bool is_unit = p.body.size() == 1 && !is_term(p.body[0]) &&
                     heads.count(p.body[0]);
      if (is_unit) continue;
      for (const auto& a : var_order) {
        for (const auto& [target, chain] : reach[a]) {
          if (target != p.head) continue;
          if (p.body.empty() && a != start) continue;  // epsilon only at start
          if (!emitted.insert({a, p.body}).second) continue;
          CnfProduction cp;
          cp.head = a;
          cp.body = p.body;
          cp.via = chain;  // ends at the producing head when non-empty
          out.productions.push_back(std::move(cp));
        }
      }
    }
  }

  // Recompute V; keep original ordering first, synthetics after
  std::set<std::string> vset;
  for (const auto& p : out.productions) vset.insert(p.head);
  for (const auto& v : g.variables)
    if (vset.count(v)) out.variables.push_back(v);
  for (const auto& v : vset)
    if (std::find(out.variables.begin(), out.variables.end(), v) ==
        out.variables.end())
      out.variables.push_back(v);

  // Drop productions whose body mentions symbols with no productions left
  // (unproductive after the pipeline), keeping the grammar tidy.
  std::vector<CnfProduction> kept;
  for (auto& p : out.productions) {
    bool ok = true;
    for (const auto& s : p.body)
      if (!out.is_terminal(s) && !vset.count(s)) ok = false;
    if (ok) kept.push_back(std::move(p));
  }
  out.productions = std::move(kept);
  return out;
}

}  // namespace anuvad
