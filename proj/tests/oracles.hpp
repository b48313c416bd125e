// Test-only oracles, independent of the CYK/CNF implementation paths they
// check: breadth-first leftmost derivation enumeration plus random grammar
// generators.
#pragma once

#include <map>
#include <queue>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "anuvad/grammar.hpp"

namespace oracle {

struct SimpleProduction {
  std::string head;
  std::vector<std::string> body;
};

struct SimpleGrammar {
  std::vector<SimpleProduction> productions;
  std::string start;
  std::set<std::string> terminals;

  bool is_terminal(const std::string& s) const { return terminals.count(s) != 0; }
};

inline SimpleGrammar simplify(const anuvad::Grammar& g) {
  SimpleGrammar out;
  out.start = g.start;
  out.terminals = g.terminals;
  for (const auto& p : g.productions)
    out.productions.push_back({p.head, p.body});
  return out;
}

inline SimpleGrammar simplify(const anuvad::CnfGrammar& g) {
  SimpleGrammar out;
  out.start = g.start;
  out.terminals = g.terminals;
  for (const auto& p : g.productions)
    out.productions.push_back({p.head, p.body});
  return out;
}

// Minimum terminal yield per symbol; absent = unproductive.
inline std::map<std::string, std::size_t> min_yields(const SimpleGrammar& g) {
  std::map<std::string, std::size_t> y;
  for (const auto& t : g.terminals) y[t] = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& p : g.productions) {
      std::size_t total = 0;
      bool known = true;
      for (const auto& s : p.body) {
        auto it = y.find(s);
        if (it == y.end()) {
          known = false;
          break;
        }
        total += it->second;
      }
      if (!known) continue;
      auto it = y.find(p.head);
      if (it == y.end() || total < it->second) {
        y[p.head] = total;
        changed = true;
      }
    }
  }
  return y;
}

// All terminal strings of length <= max_len derivable from the start symbol,
// by exhaustive bottom-up generation: per-symbol string sets grown to a
// fixpoint, concatenations filtered by length. Exact and always terminating.
// Strings are space-joined symbol sequences; the empty string is "".
inline std::set<std::string> enumerate_language(const SimpleGrammar& g,
                                                std::size_t max_len) {
  using Str = std::vector<std::string>;
  std::map<std::string, std::set<Str>> derivable;
  if (max_len >= 1)
    for (const auto& t : g.terminals) derivable[t] = {{t}};

  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& p : g.productions) {
      std::set<Str> combos{{}};
      bool ok = true;
      for (const auto& sym : p.body) {
        auto it = derivable.find(sym);
        if (it == derivable.end()) {
          ok = false;
          break;
        }
        std::set<Str> next;
        for (const auto& a : combos) {
          for (const auto& b : it->second) {
            if (a.size() + b.size() > max_len) continue;
            Str c = a;
            c.insert(c.end(), b.begin(), b.end());
            next.insert(std::move(c));
          }
        }
        combos = std::move(next);
        if (combos.empty()) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      auto& dst = derivable[p.head];
      for (const auto& s : combos)
        if (dst.insert(s).second) changed = true;
    }
  }

  std::set<std::string> language;
  auto it = derivable.find(g.start);
  if (it == derivable.end()) return language;
  for (const auto& s : it->second) {
    std::string joined;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i) joined += ' ';
      joined += s[i];
    }
    language.insert(joined);
  }
  return language;
}

// Membership by leftmost derivation search. Same brute-force idea as
// enumerate_language, but prunes sentential forms whose terminal prefix
// already disagrees with the target string.
inline bool derives(const SimpleGrammar& g, const std::vector<std::string>& w) {
  auto yields = min_yields(g);
  if (!yields.count(g.start)) return false;

  auto min_total = [&](const std::vector<std::string>& form) -> std::size_t {
    std::size_t total = 0;
    for (const auto& s : form) {
      auto it = yields.find(s);
      if (it == yields.end()) return w.size() + 1;
      total += it->second;
    }
    return total;
  };
  // index of the leftmost nonterminal, or npos if all-terminal; rejects
  // forms whose terminal prefix is not a prefix of w
  auto viable = [&](const std::vector<std::string>& form,
                    std::size_t& nt) -> bool {
    nt = form.size();
    for (std::size_t i = 0; i < form.size(); ++i) {
      if (!g.is_terminal(form[i])) {
        nt = i;
        break;
      }
      if (i >= w.size() || form[i] != w[i]) return false;
    }
    return true;
  };

  std::set<std::vector<std::string>> visited;
  std::queue<std::vector<std::string>> frontier;
  frontier.push({g.start});
  visited.insert({g.start});
  while (!frontier.empty()) {
    auto form = frontier.front();
    frontier.pop();
    std::size_t nt;
    if (!viable(form, nt)) continue;
    if (nt == form.size()) {
      if (form == w) return true;
      continue;
    }
    for (const auto& p : g.productions) {
      if (p.head != form[nt]) continue;
      std::vector<std::string> next;
      next.reserve(form.size() + p.body.size());
      next.insert(next.end(), form.begin(), form.begin() + nt);
      next.insert(next.end(), p.body.begin(), p.body.end());
      next.insert(next.end(), form.begin() + nt + 1, form.end());
      if (min_total(next) > w.size()) continue;
      std::size_t next_nt;
      if (!viable(next, next_nt)) continue;
      if (visited.insert(next).second) frontier.push(next);
    }
  }
  return false;
}

// Random general CFG: <= 6 nonterminals, <= 10 productions, alphabet <= 3,
// body length 0..3.
inline anuvad::Grammar random_grammar(std::mt19937& rng) {
  static const std::vector<std::string> nts{"S", "A", "B", "C", "D", "E"};
  static const std::vector<std::string> ts{"a", "b", "c"};
  std::uniform_int_distribution<int> n_nts(1, 6), n_prods(1, 10);
  int vn = n_nts(rng);
  int pn = n_prods(rng);
  std::string text = "start: S\n";
  std::uniform_int_distribution<int> body_len(0, 3);
  std::uniform_int_distribution<int> head_pick(0, vn - 1);
  for (int i = 0; i < pn; ++i) {
    std::string head = nts[head_pick(rng)];
    int len = body_len(rng);
    std::string body;
    for (int k = 0; k < len; ++k) {
      // bias toward terminals so languages stay finite-ish at small lengths
      std::uniform_int_distribution<int> coin(0, 2);
      if (coin(rng) == 0) {
        body += " " + nts[head_pick(rng)];
      } else {
        std::uniform_int_distribution<int> t_pick(0, int(ts.size()) - 1);
        body += " " + ts[t_pick(rng)];
      }
    }
    text += head + " ->" + (len == 0 ? " ε" : body) + "\n";
  }
  // guarantee S appears as a head
  text += "S -> a\n";
  return anuvad::parse_grammar(text, "<random>");
}

// Random grammar already in CNF (plus terminal alphabet), for the CYK oracle.
inline anuvad::CnfGrammar random_cnf_grammar(std::mt19937& rng) {
  static const std::vector<std::string> nts{"S", "A", "B", "C", "D", "E"};
  static const std::vector<std::string> ts{"a", "b", "c"};
  anuvad::CnfGrammar g;
  g.start = "S";
  std::uniform_int_distribution<int> n_nts(1, 6), n_prods(2, 12);
  int vn = n_nts(rng);
  for (int i = 0; i < vn; ++i) g.variables.push_back(nts[i]);
  for (const auto& t : ts) g.terminals.insert(t);
  std::uniform_int_distribution<int> head_pick(0, vn - 1), t_pick(0, 2),
      kind(0, 1);
  int pn = n_prods(rng);
  for (int i = 0; i < pn; ++i) {
    anuvad::CnfProduction p;
    p.head = nts[head_pick(rng)];
    if (kind(rng) == 0) {
      p.body = {ts[t_pick(rng)]};
    } else {
      p.body = {nts[head_pick(rng)], nts[head_pick(rng)]};
    }
    g.productions.push_back(std::move(p));
  }
  // keep S productive so recognition is not vacuously false everywhere
  anuvad::CnfProduction base;
  base.head = "S";
  base.body = {ts[t_pick(rng)]};
  g.productions.push_back(std::move(base));
  return g;
}

inline std::vector<std::string> random_string(std::mt19937& rng,
                                              std::size_t max_len) {
  static const std::vector<std::string> ts{"a", "b", "c"};
  std::uniform_int_distribution<std::size_t> len(1, max_len);
  std::uniform_int_distribution<int> t_pick(0, 2);
  std::vector<std::string> w(len(rng));
  for (auto& s : w) s = ts[t_pick(rng)];
  return w;
}

}  // namespace oracle
