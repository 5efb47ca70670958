#include "hammer/tptp/ast.hpp"

#include <algorithm>

namespace hammer::tptp {

Formula Formula::atom(std::string predicate, std::vector<Term> args) {
  Formula f;
  f.kind = Connective::Atom;
  f.predicate = std::move(predicate);
  f.args = std::move(args);
  return f;
}

Formula Formula::equal(Term lhs, Term rhs) {
  Formula f;
  f.kind = Connective::Equal;
  f.args.push_back(std::move(lhs));
  f.args.push_back(std::move(rhs));
  return f;
}

Formula Formula::negate(Formula body) {
  Formula f;
  f.kind = Connective::Not;
  f.children.push_back(std::move(body));
  return f;
}

Formula Formula::binary(Connective op, Formula lhs, Formula rhs) {
  Formula f;
  f.kind = op;
  f.children.push_back(std::move(lhs));
  f.children.push_back(std::move(rhs));
  return f;
}

Formula Formula::quantified(Connective quantifier, std::vector<std::string> vars,
                            Formula body) {
  Formula f;
  f.kind = quantifier;
  f.vars = std::move(vars);
  f.children.push_back(std::move(body));
  return f;
}

namespace {

void collect_term_vars(const Term& t, const std::vector<std::string>& bound,
                       std::vector<std::string>& out) {
  if (t.is_variable()) {
    if (std::find(bound.begin(), bound.end(), t.name) == bound.end() &&
        std::find(out.begin(), out.end(), t.name) == out.end()) {
      out.push_back(t.name);
    }
    return;
  }
  for (const auto& a : t.args) collect_term_vars(a, bound, out);
}

void collect_free(const Formula& f, std::vector<std::string>& bound,
                  std::vector<std::string>& out) {
  switch (f.kind) {
    case Connective::Atom:
    case Connective::Equal:
      for (const auto& a : f.args) collect_term_vars(a, bound, out);
      return;
    case Connective::Forall:
    case Connective::Exists: {
      const auto mark = bound.size();
      bound.insert(bound.end(), f.vars.begin(), f.vars.end());
      collect_free(f.body(), bound, out);
      bound.resize(mark);
      return;
    }
    default:
      for (const auto& c : f.children) collect_free(c, bound, out);
  }
}

void term_var_names(const Term& t, std::set<std::string>& out) {
  if (t.is_variable()) {
    out.insert(t.name);
    return;
  }
  for (const auto& a : t.args) term_var_names(a, out);
}

void term_symbols(const Term& t, std::set<Symbol>& out) {
  if (t.is_variable()) return;
  out.insert(Symbol{SymbolKind::Function, t.name, t.args.size()});
  for (const auto& a : t.args) term_symbols(a, out);
}

void formula_symbols(const Formula& f, std::set<Symbol>& out) {
  switch (f.kind) {
    case Connective::Atom:
      if (f.predicate != "$true" && f.predicate != "$false") {
        out.insert(Symbol{SymbolKind::Predicate, f.predicate, f.args.size()});
      }
      [[fallthrough]];
    case Connective::Equal:
      for (const auto& a : f.args) term_symbols(a, out);
      return;
    default:
      for (const auto& c : f.children) formula_symbols(c, out);
  }
}

}  // namespace

std::vector<std::string> free_variables(const Formula& f) {
  std::vector<std::string> bound;
  std::vector<std::string> out;
  collect_free(f, bound, out);
  return out;
}

std::set<std::string> all_variable_names(const Formula& f) {
  std::set<std::string> out;
  out.insert(f.vars.begin(), f.vars.end());
  for (const auto& a : f.args) term_var_names(a, out);
  for (const auto& c : f.children) {
    auto sub = all_variable_names(c);
    out.insert(sub.begin(), sub.end());
  }
  return out;
}

std::set<Symbol> symbols_of(const Formula& f) {
  std::set<Symbol> out;
  formula_symbols(f, out);
  return out;
}

std::set<std::string> symbol_names(const Formula& f) {
  std::set<std::string> out;
  for (const auto& s : symbols_of(f)) out.insert(s.name);
  return out;
}

Formula universal_closure(const Formula& f) {
  auto free = free_variables(f);
  if (free.empty()) return f;
  return Formula::quantified(Connective::Forall, std::move(free), f);
}

}  // namespace hammer::tptp
