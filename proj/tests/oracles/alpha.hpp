#pragma once

// Alpha-equivalence of FOF formulas. Quantifier blocks are compared one
// binder at a time, so `![X,Y]: p` and `![X]: ![Y]: p` agree.

#include <optional>
#include <string>
#include <vector>

#include "hammer/tptp/ast.hpp"

namespace oracle {

namespace detail {

using hammer::tptp::Connective;
using hammer::tptp::Formula;
using hammer::tptp::Term;

struct Binders {
  std::vector<std::string> names;  // innermost last

  std::optional<std::size_t> depth_of(const std::string& v) const {
    for (std::size_t i = names.size(); i-- > 0;) {
      if (names[i] == v) return names.size() - 1 - i;
    }
    return std::nullopt;
  }
};

inline bool alpha_term(const Term& a, const Binders& ea, const Term& b, const Binders& eb) {
  if (a.is_variable() != b.is_variable()) return false;
  if (a.is_variable()) {
    const auto da = ea.depth_of(a.name), db = eb.depth_of(b.name);
    if (da.has_value() != db.has_value()) return false;
    return da ? *da == *db : a.name == b.name;
  }
  if (a.name != b.name || a.args.size() != b.args.size()) return false;
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (!alpha_term(a.args[i], ea, b.args[i], eb)) return false;
  }
  return true;
}

// Peels one binder off a quantified formula: returns the variable and the
// remaining formula (a smaller block, or the body).
inline std::pair<std::string, Formula> peel(const Formula& f) {
  Formula rest;
  if (f.vars.size() > 1) {
    rest = f;
    rest.vars.erase(rest.vars.begin());
  } else {
    rest = f.body();
  }
  return {f.vars.front(), rest};
}

inline bool alpha(const Formula& a, Binders& ea, const Formula& b, Binders& eb) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Connective::Atom:
    case Connective::Equal:
      if (a.predicate != b.predicate || a.args.size() != b.args.size()) return false;
      for (std::size_t i = 0; i < a.args.size(); ++i) {
        if (!alpha_term(a.args[i], ea, b.args[i], eb)) return false;
      }
      return true;
    case Connective::Forall:
    case Connective::Exists: {
      if (a.vars.empty() || b.vars.empty()) return false;
      auto [va, ra] = peel(a);
      auto [vb, rb] = peel(b);
      ea.names.push_back(va);
      eb.names.push_back(vb);
      const bool same = alpha(ra, ea, rb, eb);
      ea.names.pop_back();
      eb.names.pop_back();
      return same;
    }
    default:
      if (a.children.size() != b.children.size()) return false;
      for (std::size_t i = 0; i < a.children.size(); ++i) {
        if (!alpha(a.children[i], ea, b.children[i], eb)) return false;
      }
      return true;
  }
}

}  // namespace detail

inline bool alpha_equivalent(const hammer::tptp::Formula& a, const hammer::tptp::Formula& b) {
  detail::Binders ea, eb;
  return detail::alpha(a, ea, b, eb);
}

}  // namespace oracle
