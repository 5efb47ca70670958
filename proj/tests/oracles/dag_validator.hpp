#pragma once

// Re-checks a refutation printed by the built-in engine:
//
//   [c12] ~p(X0) | q(X0) <- input demo__ax
//   [c13] q(a) <- resolution c11 c12
//   [c14] p(X0) <- factoring c9
//
// Every resolution line must be a binary resolvent of its parents and every
// factoring line a factor of its parent, up to variable renaming and
// duplicate literals. Unification here is an independent syntactic
// implementation over tptp::Term.

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hammer/tptp/ast.hpp"
#include "hammer/tptp/parser.hpp"
#include "model_finder.hpp"

namespace oracle {

struct Lit {
  bool positive = true;
  std::string pred;  // "=" for equality
  std::vector<hammer::tptp::Term> args;

  bool operator==(const Lit&) const = default;
};

using LitClause = std::vector<Lit>;

struct DagLine {
  std::string id;
  std::string text;
  std::string rule;                // input | eq_axiom | resolution | factoring
  std::vector<std::string> args;   // parents, or the input label
  LitClause clause;
};

struct DagReport {
  bool ok = true;
  std::string error;
  std::vector<DagLine> lines;
  std::set<std::string> used_inputs;  // input labels reachable from $false
};

namespace dag {

using hammer::tptp::Connective;
using hammer::tptp::Formula;
using hammer::tptp::Term;
using Subst = std::map<std::string, Term>;

inline void flatten(const Formula& f, LitClause& out) {
  if (f.kind == Connective::Or) {
    flatten(f.lhs(), out);
    flatten(f.rhs(), out);
    return;
  }
  bool positive = true;
  const Formula* atom = &f;
  if (f.kind == Connective::Not) {
    positive = false;
    atom = &f.body();
  }
  if (atom->kind == Connective::Equal) {
    out.push_back({positive, "=", atom->args});
  } else if (atom->kind == Connective::Atom) {
    out.push_back({positive, atom->predicate, atom->args});
  } else {
    throw std::runtime_error("not a clause");
  }
}

inline LitClause parse_clause(const std::string& text) {
  if (text == "$false") return {};
  LitClause c;
  flatten(hammer::tptp::parse_formula(text), c);
  return c;
}

inline Term walk(const Term& t, const Subst& s) {
  if (t.is_variable()) {
    auto it = s.find(t.name);
    return it == s.end() ? t : walk(it->second, s);
  }
  return t;
}

inline bool occurs(const std::string& v, const Term& t, const Subst& s) {
  const Term w = walk(t, s);
  if (w.is_variable()) return w.name == v;
  for (const auto& a : w.args) {
    if (occurs(v, a, s)) return true;
  }
  return false;
}

inline bool unify(const Term& a, const Term& b, Subst& s) {
  const Term x = walk(a, s), y = walk(b, s);
  if (x.is_variable() && y.is_variable() && x.name == y.name) return true;
  if (x.is_variable()) {
    if (occurs(x.name, y, s)) return false;
    s[x.name] = y;
    return true;
  }
  if (y.is_variable()) return unify(y, x, s);
  if (x.name != y.name || x.args.size() != y.args.size()) return false;
  for (std::size_t i = 0; i < x.args.size(); ++i) {
    if (!unify(x.args[i], y.args[i], s)) return false;
  }
  return true;
}

inline Term substitute(const Term& t, const Subst& s) {
  const Term w = walk(t, s);
  if (w.is_variable()) return w;
  Term out = w;
  for (auto& a : out.args) a = substitute(a, s);
  return out;
}

inline Lit substitute(const Lit& l, const Subst& s) {
  Lit out = l;
  for (auto& a : out.args) a = substitute(a, s);
  return out;
}

inline void rename(Term& t, const std::string& suffix) {
  if (t.is_variable()) {
    t.name += suffix;
    return;
  }
  for (auto& a : t.args) rename(a, suffix);
}

inline LitClause renamed(LitClause c, const std::string& suffix) {
  for (auto& l : c) {
    for (auto& a : l.args) rename(a, suffix);
  }
  return c;
}

inline bool unify_atoms(const Lit& a, const Lit& b, Subst& s) {
  if (a.pred != b.pred || a.args.size() != b.args.size()) return false;
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (!unify(a.args[i], b.args[i], s)) return false;
  }
  return true;
}

inline LitClause dedupe(const LitClause& c) {
  LitClause out;
  for (const auto& l : c) {
    if (std::find(out.begin(), out.end(), l) == out.end()) out.push_back(l);
  }
  return out;
}

// Variable renaming check: bijection between literals and between variables.
inline bool match_term(const Term& a, const Term& b, std::map<std::string, std::string>& fwd,
                       std::map<std::string, std::string>& bwd) {
  if (a.is_variable() != b.is_variable()) return false;
  if (a.is_variable()) {
    auto f = fwd.find(a.name);
    auto g = bwd.find(b.name);
    if (f == fwd.end() && g == bwd.end()) {
      fwd[a.name] = b.name;
      bwd[b.name] = a.name;
      return true;
    }
    return f != fwd.end() && g != bwd.end() && f->second == b.name && g->second == a.name;
  }
  if (a.name != b.name || a.args.size() != b.args.size()) return false;
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (!match_term(a.args[i], b.args[i], fwd, bwd)) return false;
  }
  return true;
}

inline bool variant_from(const LitClause& a, const LitClause& b, std::size_t i,
                         std::vector<bool>& taken, std::map<std::string, std::string> fwd,
                         std::map<std::string, std::string> bwd) {
  if (i == a.size()) return true;
  for (std::size_t j = 0; j < b.size(); ++j) {
    if (taken[j] || a[i].positive != b[j].positive || a[i].pred != b[j].pred ||
        a[i].args.size() != b[j].args.size()) {
      continue;
    }
    auto f = fwd;
    auto g = bwd;
    bool same = true;
    for (std::size_t k = 0; same && k < a[i].args.size(); ++k) {
      same = match_term(a[i].args[k], b[j].args[k], f, g);
    }
    if (!same) continue;
    taken[j] = true;
    if (variant_from(a, b, i + 1, taken, f, g)) return true;
    taken[j] = false;
  }
  return false;
}

inline bool variant(const LitClause& a, const LitClause& b) {
  const auto x = dedupe(a), y = dedupe(b);
  if (x.size() != y.size()) return false;
  std::vector<bool> taken(y.size(), false);
  return variant_from(x, y, 0, taken, {}, {});
}

inline bool is_resolvent(const LitClause& p, const LitClause& q, const LitClause& child) {
  const auto a = renamed(p, "_l"), b = renamed(q, "_r");
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (a[i].positive == b[j].positive) continue;
      Subst s;
      if (!unify_atoms(a[i], b[j], s)) continue;
      LitClause r;
      for (std::size_t k = 0; k < a.size(); ++k) {
        if (k != i) r.push_back(substitute(a[k], s));
      }
      for (std::size_t k = 0; k < b.size(); ++k) {
        if (k != j) r.push_back(substitute(b[k], s));
      }
      if (variant(r, child)) return true;
    }
  }
  return false;
}

inline bool is_factor(const LitClause& p, const LitClause& child) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (p[i].positive != p[j].positive) continue;
      Subst s;
      if (!unify_atoms(p[i], p[j], s)) continue;
      LitClause r;
      for (const auto& l : p) r.push_back(substitute(l, s));
      if (variant(r, child)) return true;
    }
  }
  return false;
}

inline Formula to_formula(const LitClause& c) {
  if (c.empty()) return Formula::falsum();
  std::optional<Formula> out;
  for (const auto& l : c) {
    Formula atom = l.pred == "=" ? Formula::equal(l.args[0], l.args[1]) : Formula::atom(l.pred, l.args);
    if (!l.positive) atom = Formula::negate(std::move(atom));
    out = out ? Formula::binary(Connective::Or, std::move(*out), std::move(atom)) : std::move(atom);
  }
  return hammer::tptp::universal_closure(*out);
}

}  // namespace dag

/// Validates the proof block of builtin-dialect output. `labels` are the
/// problem names leaves may cite.
inline DagReport validate_refutation(const std::string& output, const std::set<std::string>& labels) {
  DagReport report;
  auto fail = [&](std::string why) {
    report.ok = false;
    report.error = std::move(why);
    return report;
  };
  static const std::regex line_re(R"(^\[(c\d+)\] (.*) <- (\w+)((?: \S+)*)$)");
  std::istringstream in(output);
  std::string line;
  bool inside = false;
  std::map<std::string, std::size_t> index;
  while (std::getline(in, line)) {
    if (line.rfind("% SZS output start", 0) == 0) {
      inside = true;
      continue;
    }
    if (line.rfind("% SZS output end", 0) == 0) break;
    if (!inside) continue;
    std::smatch m;
    if (!std::regex_match(line, m, line_re)) return fail("unreadable line: " + line);
    DagLine d;
    d.id = m[1];
    d.text = m[2];
    d.rule = m[3];
    std::istringstream rest(m[4].str());
    for (std::string a; rest >> a;) d.args.push_back(a);
    try {
      d.clause = dag::parse_clause(d.text);
    } catch (const std::exception& e) {
      return fail("bad clause in " + d.id + ": " + e.what());
    }
    if (index.count(d.id)) return fail("duplicate node " + d.id);
    index[d.id] = report.lines.size();
    report.lines.push_back(std::move(d));
  }
  if (report.lines.empty()) return fail("no derivation");

  std::mt19937_64 rng(7);
  for (const auto& d : report.lines) {
    std::vector<const DagLine*> parents;
    if (d.rule == "resolution" || d.rule == "factoring") {
      for (const auto& p : d.args) {
        auto it = index.find(p);
        if (it == index.end() || it->second >= index[d.id]) {
          return fail(d.id + " cites " + p + " which is not an earlier node");
        }
        parents.push_back(&report.lines[it->second]);
      }
    }
    if (d.rule == "input") {
      if (d.args.size() != 1 || !labels.count(d.args[0])) return fail(d.id + ": unknown input label");
    } else if (d.rule == "eq_axiom") {
      // Must hold in every structure that reads `=` as identity.
      for (int n = 1; n <= 3; ++n) {
        ModelFinder probe({dag::to_formula(d.clause)}, n);
        for (int trial = 0; trial < 20; ++trial) {
          if (!probe.all_true_under_random(rng)) return fail(d.id + ": not an equality axiom");
        }
      }
    } else if (d.rule == "resolution") {
      if (parents.size() != 2 || !dag::is_resolvent(parents[0]->clause, parents[1]->clause, d.clause)) {
        return fail(d.id + ": not a resolvent of its parents");
      }
    } else if (d.rule == "factoring") {
      if (parents.size() != 1 || !dag::is_factor(parents[0]->clause, d.clause)) {
        return fail(d.id + ": not a factor of its parent");
      }
    } else {
      return fail(d.id + ": unknown rule " + d.rule);
    }
  }

  std::size_t empties = 0;
  for (const auto& d : report.lines) empties += d.clause.empty() ? 1 : 0;
  if (empties != 1 || !report.lines.back().clause.empty()) {
    return fail("derivation must end in exactly one $false");
  }

  // Input leaves reachable from $false.
  std::vector<std::size_t> stack{report.lines.size() - 1};
  std::set<std::size_t> seen;
  while (!stack.empty()) {
    const auto i = stack.back();
    stack.pop_back();
    if (!seen.insert(i).second) continue;
    const auto& d = report.lines[i];
    if (d.rule == "input") report.used_inputs.insert(d.args[0]);
    if (d.rule == "resolution" || d.rule == "factoring") {
      for (const auto& p : d.args) stack.push_back(index[p]);
    }
  }
  return report;
}

}  // namespace oracle
