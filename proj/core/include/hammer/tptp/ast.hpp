#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace hammer::tptp {

/// First-order term: a variable or a functor applied to arguments
/// (arity 0 is a constant).
struct Term {
  enum class Kind { Variable, Application };

  Kind kind = Kind::Application;
  std::string name;
  std::vector<Term> args;

  static Term variable(std::string name) {
    return Term{Kind::Variable, std::move(name), {}};
  }
  static Term constant(std::string name) {
    return Term{Kind::Application, std::move(name), {}};
  }
  static Term apply(std::string functor, std::vector<Term> args) {
    return Term{Kind::Application, std::move(functor), std::move(args)};
  }

  bool is_variable() const { return kind == Kind::Variable; }

  bool operator==(const Term&) const = default;
};

enum class Connective {
  Atom,
  Equal,
  Not,
  And,
  Or,
  Implies,
  Iff,
  Forall,
  Exists,
};

/// FOF formula. Atoms carry `predicate` + `args`; equality carries exactly
/// two `args`; connectives carry `children` (one for negation, two for the
/// binary ones, one body for quantifiers); quantifiers carry `vars`.
/// `$true` and `$false` are nullary atoms.
struct Formula {
  Connective kind = Connective::Atom;
  std::string predicate;
  std::vector<Term> args;
  std::vector<std::string> vars;
  std::vector<Formula> children;

  static Formula atom(std::string predicate, std::vector<Term> args = {});
  static Formula equal(Term lhs, Term rhs);
  static Formula negate(Formula body);
  static Formula binary(Connective op, Formula lhs, Formula rhs);
  static Formula quantified(Connective quantifier, std::vector<std::string> vars,
                            Formula body);
  static Formula verum() { return atom("$true"); }
  static Formula falsum() { return atom("$false"); }

  bool is_binary() const {
    return kind == Connective::And || kind == Connective::Or ||
           kind == Connective::Implies || kind == Connective::Iff;
  }
  bool is_quantifier() const {
    return kind == Connective::Forall || kind == Connective::Exists;
  }
  bool is_falsum() const {
    return kind == Connective::Atom && predicate == "$false";
  }
  bool is_verum() const { return kind == Connective::Atom && predicate == "$true"; }

  const Formula& lhs() const { return children.at(0); }
  const Formula& rhs() const { return children.at(1); }
  const Formula& body() const { return children.at(0); }

  bool operator==(const Formula&) const = default;
};

enum class SymbolKind { Predicate, Function };

/// A non-logical symbol occurrence with its arity.
struct Symbol {
  SymbolKind kind;
  std::string name;
  std::size_t arity;

  auto operator<=>(const Symbol&) const = default;
};

/// Free variables of `f`, in first-occurrence order.
std::vector<std::string> free_variables(const Formula& f);

/// Every variable name occurring in `f`, bound or free.
std::set<std::string> all_variable_names(const Formula& f);

/// Predicate and function symbols of `f` (excluding `=`, `$true`, `$false`).
std::set<Symbol> symbols_of(const Formula& f);

/// Names of the predicate and function symbols of `f`.
std::set<std::string> symbol_names(const Formula& f);

/// Universal closure over the free variables, or `f` itself when closed.
Formula universal_closure(const Formula& f);

}  // namespace hammer::tptp
