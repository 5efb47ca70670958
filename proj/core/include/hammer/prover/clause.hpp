#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "hammer/prover/term_bank.hpp"
#include "hammer/tptp/ast.hpp"

namespace hammer::prover {

using ClauseId = std::uint32_t;

struct Literal {
  bool positive = true;
  TermId atom = 0;

  bool operator==(const Literal&) const = default;
};

/// Where a clause came from. Input clauses name the problem formula they
/// were clausified from; equality axioms are tagged separately so that they
/// never count as used premises.
struct Origin {
  enum class Kind { Input, NegatedGoal, EqAxiom, Resolution, Factoring };

  Kind kind = Kind::Input;
  std::string source;              // Input / NegatedGoal: problem label
  std::vector<ClauseId> parents;   // Resolution / Factoring

  bool is_leaf() const {
    return kind == Kind::Input || kind == Kind::NegatedGoal || kind == Kind::EqAxiom;
  }
};

std::string_view rule_name(Origin::Kind kind);

struct Clause {
  ClauseId id = 0;
  std::vector<Literal> literals;
  std::uint32_t num_vars = 0;
  std::uint32_t weight = 0;
  Origin origin;

  bool is_empty() const { return literals.empty(); }
};

/// Clauses sharing one term bank and symbol table.
struct ClauseSet {
  std::shared_ptr<SymbolTable> symbols = std::make_shared<SymbolTable>();
  std::shared_ptr<TermBank> bank = std::make_shared<TermBank>();
  std::vector<Clause> clauses;
};

/// Renames variables to 0..k-1 in order of first occurrence, drops
/// duplicate literals and recomputes weight and variable count.
void normalize(TermBank& bank, Clause& clause);

bool is_tautology(const Clause& clause);

std::string render_term(const SymbolTable& symbols, const TermBank& bank, TermId t);
std::string render_literal(const SymbolTable& symbols, const TermBank& bank, const Literal& lit);
/// `p(X0) | ~q(X0)`, or `$false` for the empty clause.
std::string render_clause(const SymbolTable& symbols, const TermBank& bank, const Clause& c);

/// Term/literal in prover-independent syntax; variables become `X<n>`.
tptp::Term to_ast_term(const SymbolTable& symbols, const TermBank& bank, TermId t);

}  // namespace hammer::prover
