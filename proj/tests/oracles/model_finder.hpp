#pragma once

// Exhaustive finite-model search over a fixed domain {0..n-1}. Formulas are
// evaluated in three-valued (Kleene) logic under a partial interpretation;
// the search assigns one table cell at a time and backtracks as soon as some
// formula is definitely false. Equality is identity on the domain.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "hammer/tptp/ast.hpp"

namespace oracle {

class ModelFinder {
 public:
  ModelFinder(std::vector<hammer::tptp::Formula> formulas, int domain)
      : formulas_(std::move(formulas)), n_(domain) {
    for (const auto& f : formulas_) collect(f);
    for (auto& [name, sym] : symbols_) {
      sym.offset = cells_.size();
      std::size_t size = 1;
      for (std::size_t i = 0; i < sym.arity; ++i) size *= static_cast<std::size_t>(n_);
      for (std::size_t i = 0; i < size; ++i) cells_.push_back({sym.predicate ? 2 : n_});
    }
    values_.assign(cells_.size(), kUnknown);
  }

  bool satisfiable() {
    nodes_ = 0;
    return search(0);
  }

  std::size_t nodes() const { return nodes_; }
  std::size_t cells() const { return cells_.size(); }

  /// Evaluates every formula under a uniformly random total interpretation.
  bool all_true_under_random(std::mt19937_64& rng) {
    for (std::size_t i = 0; i < cells_.size(); ++i) {
      values_[i] = std::uniform_int_distribution<int>(0, cells_[i].values - 1)(rng);
    }
    for (const auto& f : formulas_) {
      std::map<std::string, int> env;
      if (eval(f, env) != kTrue) return false;
    }
    return true;
  }

 private:
  using Formula = hammer::tptp::Formula;
  using Term = hammer::tptp::Term;
  using Connective = hammer::tptp::Connective;

  static constexpr int kUnknown = -1;
  static constexpr int kFalse = 0;
  static constexpr int kTrue = 1;
  static constexpr int kMaybe = 2;

  struct Sym {
    std::size_t arity = 0;
    bool predicate = false;
    std::size_t offset = 0;
  };
  struct Cell {
    int values;
  };

  void note(const std::string& name, std::size_t arity, bool predicate) {
    auto [it, fresh] = symbols_.try_emplace(name, Sym{arity, predicate, 0});
    if (!fresh && (it->second.arity != arity || it->second.predicate != predicate)) {
      throw std::runtime_error("model finder: inconsistent use of " + name);
    }
  }

  void collect(const Term& t) {
    if (t.is_variable()) return;
    note(t.name, t.args.size(), false);
    for (const auto& a : t.args) collect(a);
  }

  void collect(const Formula& f) {
    if (f.kind == Connective::Atom && !f.is_verum() && !f.is_falsum()) {
      note(f.predicate, f.args.size(), true);
    }
    for (const auto& a : f.args) collect(a);
    for (const auto& c : f.children) collect(c);
  }

  std::size_t cell_index(const Sym& sym, const std::vector<int>& args) const {
    std::size_t index = 0;
    for (int a : args) index = index * static_cast<std::size_t>(n_) + static_cast<std::size_t>(a);
    return sym.offset + index;
  }

  // Domain element or kUnknown.
  int eval(const Term& t, const std::map<std::string, int>& env) const {
    if (t.is_variable()) {
      auto it = env.find(t.name);
      if (it == env.end()) throw std::runtime_error("model finder: free variable " + t.name);
      return it->second;
    }
    std::vector<int> args;
    for (const auto& a : t.args) {
      const int v = eval(a, env);
      if (v == kUnknown) return kUnknown;
      args.push_back(v);
    }
    return values_[cell_index(symbols_.at(t.name), args)];
  }

  static int negate(int v) { return v == kMaybe ? kMaybe : 1 - v; }
  static int conj(int a, int b) {
    if (a == kFalse || b == kFalse) return kFalse;
    return a == kTrue && b == kTrue ? kTrue : kMaybe;
  }
  static int disj(int a, int b) { return negate(conj(negate(a), negate(b))); }

  int eval(const Formula& f, std::map<std::string, int>& env) const {
    switch (f.kind) {
      case Connective::Atom: {
        if (f.is_verum()) return kTrue;
        if (f.is_falsum()) return kFalse;
        std::vector<int> args;
        for (const auto& a : f.args) {
          const int v = eval(a, env);
          if (v == kUnknown) return kMaybe;
          args.push_back(v);
        }
        const int v = values_[cell_index(symbols_.at(f.predicate), args)];
        return v == kUnknown ? kMaybe : v;
      }
      case Connective::Equal: {
        const int l = eval(f.args[0], env), r = eval(f.args[1], env);
        if (l == kUnknown || r == kUnknown) return kMaybe;
        return l == r ? kTrue : kFalse;
      }
      case Connective::Not:
        return negate(eval(f.body(), env));
      case Connective::And:
        return conj(eval(f.lhs(), env), eval(f.rhs(), env));
      case Connective::Or:
        return disj(eval(f.lhs(), env), eval(f.rhs(), env));
      case Connective::Implies:
        return disj(negate(eval(f.lhs(), env)), eval(f.rhs(), env));
      case Connective::Iff: {
        const int l = eval(f.lhs(), env), r = eval(f.rhs(), env);
        if (l == kMaybe || r == kMaybe) return kMaybe;
        return l == r ? kTrue : kFalse;
      }
      case Connective::Forall:
      case Connective::Exists:
        return quantify(f, 0, env);
    }
    return kMaybe;
  }

  int quantify(const Formula& f, std::size_t var, std::map<std::string, int>& env) const {
    if (var == f.vars.size()) return eval(f.body(), env);
    const bool universal = f.kind == Connective::Forall;
    const auto& name = f.vars[var];
    auto saved = env.find(name) == env.end() ? std::optional<int>{} : std::optional<int>{env[name]};
    int acc = universal ? kTrue : kFalse;
    for (int d = 0; d < n_; ++d) {
      env[name] = d;
      const int v = quantify(f, var + 1, env);
      acc = universal ? conj(acc, v) : disj(acc, v);
      if (acc == (universal ? kFalse : kTrue)) break;
    }
    if (saved) env[name] = *saved; else env.erase(name);
    return acc;
  }

  // kTrue when every formula holds, kFalse when one fails, else kMaybe.
  int status() const {
    int acc = kTrue;
    for (const auto& f : formulas_) {
      std::map<std::string, int> env;
      acc = conj(acc, eval(f, env));
      if (acc == kFalse) return kFalse;
    }
    return acc;
  }

  bool search(std::size_t next) {
    ++nodes_;
    const int s = status();
    if (s == kFalse) return false;
    if (s == kTrue) return true;
    while (next < cells_.size() && values_[next] != kUnknown) ++next;
    if (next == cells_.size()) return false;  // total and not true: cannot happen
    for (int v = 0; v < cells_[next].values; ++v) {
      values_[next] = v;
      if (search(next + 1)) {
        values_[next] = kUnknown;
        return true;
      }
    }
    values_[next] = kUnknown;
    return false;
  }

  std::vector<Formula> formulas_;
  int n_;
  std::map<std::string, Sym> symbols_;
  std::vector<Cell> cells_;
  std::vector<int> values_;
  std::size_t nodes_ = 0;
};

/// Satisfiable over a domain of exactly `n` elements.
inline bool satisfiable_at(const std::vector<hammer::tptp::Formula>& formulas, int n) {
  return ModelFinder(formulas, n).satisfiable();
}

}  // namespace oracle
