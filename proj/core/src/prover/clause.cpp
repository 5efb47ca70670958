#include "hammer/prover/clause.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace hammer::prover {

std::string_view rule_name(Origin::Kind kind) {
  switch (kind) {
    case Origin::Kind::Input: return "input";
    case Origin::Kind::NegatedGoal: return "negated_goal";
    case Origin::Kind::EqAxiom: return "eq_axiom";
    case Origin::Kind::Resolution: return "resolution";
    case Origin::Kind::Factoring: return "factoring";
  }
  return "input";
}

namespace {

TermId rename(TermBank& bank, TermId t, std::unordered_map<std::uint32_t, std::uint32_t>& map) {
  if (bank.is_ground(t)) return t;
  if (bank.is_variable(t)) {
    auto [it, inserted] =
        map.emplace(bank.var_index(t), static_cast<std::uint32_t>(map.size()));
    return bank.variable(it->second);
  }
  std::vector<TermId> args;
  const auto src = bank.args(t);
  args.reserve(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) args.push_back(rename(bank, bank.args(t)[i], map));
  return bank.apply(bank.functor(t), args);
}

}  // namespace

void normalize(TermBank& bank, Clause& clause) {
  std::unordered_map<std::uint32_t, std::uint32_t> map;
  std::vector<Literal> out;
  out.reserve(clause.literals.size());
  std::uint32_t weight = 0;
  for (const auto& lit : clause.literals) {
    Literal renamed{lit.positive, rename(bank, lit.atom, map)};
    if (std::find(out.begin(), out.end(), renamed) != out.end()) continue;
    weight += bank.weight(renamed.atom);
    out.push_back(renamed);
  }
  clause.literals = std::move(out);
  clause.num_vars = static_cast<std::uint32_t>(map.size());
  clause.weight = weight;
}

bool is_tautology(const Clause& clause) {
  for (std::size_t i = 0; i < clause.literals.size(); ++i) {
    for (std::size_t j = i + 1; j < clause.literals.size(); ++j) {
      if (clause.literals[i].atom == clause.literals[j].atom &&
          clause.literals[i].positive != clause.literals[j].positive) {
        return true;
      }
    }
  }
  return false;
}

std::string render_term(const SymbolTable& symbols, const TermBank& bank, TermId t) {
  if (bank.is_variable(t)) return "X" + std::to_string(bank.var_index(t));
  std::string out = symbols.name(bank.functor(t));
  const auto args = bank.args(t);
  if (args.empty()) return out;
  out += '(';
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i != 0) out += ',';
    out += render_term(symbols, bank, args[i]);
  }
  out += ')';
  return out;
}

std::string render_literal(const SymbolTable& symbols, const TermBank& bank, const Literal& lit) {
  if (bank.functor(lit.atom) == SymbolTable::kEquality) {
    const auto args = bank.args(lit.atom);
    return render_term(symbols, bank, args[0]) + (lit.positive ? " = " : " != ") +
           render_term(symbols, bank, args[1]);
  }
  return (lit.positive ? "" : "~") + render_term(symbols, bank, lit.atom);
}

std::string render_clause(const SymbolTable& symbols, const TermBank& bank, const Clause& c) {
  if (c.literals.empty()) return "$false";
  std::string out;
  for (std::size_t i = 0; i < c.literals.size(); ++i) {
    if (i != 0) out += " | ";
    out += render_literal(symbols, bank, c.literals[i]);
  }
  return out;
}

tptp::Term to_ast_term(const SymbolTable& symbols, const TermBank& bank, TermId t) {
  if (bank.is_variable(t)) return tptp::Term::variable("X" + std::to_string(bank.var_index(t)));
  std::vector<tptp::Term> args;
  for (auto a : bank.args(t)) args.push_back(to_ast_term(symbols, bank, a));
  return tptp::Term::apply(symbols.name(bank.functor(t)), std::move(args));
}

}  // namespace hammer::prover
