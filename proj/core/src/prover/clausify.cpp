#include "hammer/prover/clausify.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace hammer::prover {

namespace {

using tptp::Connective;
using tptp::Formula;
using tptp::Term;

Formula nnf(const Formula& f, bool positive) {
  switch (f.kind) {
    case Connective::Atom:
      if (f.is_verum() || f.is_falsum()) {
        return (f.is_verum() == positive) ? Formula::verum() : Formula::falsum();
      }
      [[fallthrough]];
    case Connective::Equal:
      return positive ? f : Formula::negate(f);
    case Connective::Not:
      return nnf(f.body(), !positive);
    case Connective::And:
      return Formula::binary(positive ? Connective::And : Connective::Or, nnf(f.lhs(), positive),
                             nnf(f.rhs(), positive));
    case Connective::Or:
      return Formula::binary(positive ? Connective::Or : Connective::And, nnf(f.lhs(), positive),
                             nnf(f.rhs(), positive));
    case Connective::Implies:
      return positive ? Formula::binary(Connective::Or, nnf(f.lhs(), false), nnf(f.rhs(), true))
                      : Formula::binary(Connective::And, nnf(f.lhs(), true), nnf(f.rhs(), false));
    case Connective::Iff:
      if (positive) {
        return Formula::binary(
            Connective::And,
            Formula::binary(Connective::Or, nnf(f.lhs(), false), nnf(f.rhs(), true)),
            Formula::binary(Connective::Or, nnf(f.lhs(), true), nnf(f.rhs(), false)));
      }
      return Formula::binary(
          Connective::And, Formula::binary(Connective::Or, nnf(f.lhs(), true), nnf(f.rhs(), true)),
          Formula::binary(Connective::Or, nnf(f.lhs(), false), nnf(f.rhs(), false)));
    case Connective::Forall:
    case Connective::Exists: {
      const bool universal = (f.kind == Connective::Forall) == positive;
      return Formula::quantified(universal ? Connective::Forall : Connective::Exists, f.vars,
                                 nnf(f.body(), positive));
    }
  }
  return f;
}

void term_variable_names(const Term& t, std::set<std::string>& out) {
  if (t.is_variable()) {
    out.insert(t.name);
    return;
  }
  for (const auto& a : t.args) term_variable_names(a, out);
}

Term substitute(const Term& t, const std::map<std::string, Term>& env) {
  if (t.is_variable()) {
    auto it = env.find(t.name);
    return it == env.end() ? t : it->second;
  }
  std::vector<Term> args;
  args.reserve(t.args.size());
  for (const auto& a : t.args) args.push_back(substitute(a, env));
  return Term::apply(t.name, std::move(args));
}

class Skolemizer {
 public:
  explicit Skolemizer(std::set<std::string> taken) : taken_(std::move(taken)) {}

  // Input is in NNF; output is quantifier-free with universal variables
  // renamed apart (`V<n>`) and existentials replaced by Skolem terms.
  Formula run(const Formula& f) {
    std::map<std::string, Term> env;
    std::vector<std::string> universals;
    return walk(f, env, universals);
  }

 private:
  Formula walk(const Formula& f, std::map<std::string, Term>& env,
               std::vector<std::string>& universals) {
    switch (f.kind) {
      case Connective::Atom:
      case Connective::Equal: {
        Formula out = f;
        for (auto& a : out.args) a = substitute(a, env);
        return out;
      }
      case Connective::Not:
        return Formula::negate(walk(f.body(), env, universals));
      case Connective::And:
      case Connective::Or:
        return Formula::binary(f.kind, walk(f.lhs(), env, universals),
                               walk(f.rhs(), env, universals));
      case Connective::Forall: {
        auto saved = env;
        const auto mark = universals.size();
        for (const auto& v : f.vars) {
          std::string fresh = "V" + std::to_string(next_var_++);
          env[v] = Term::variable(fresh);
          universals.push_back(fresh);
        }
        Formula out = walk(f.body(), env, universals);
        universals.resize(mark);
        env = std::move(saved);
        return out;
      }
      case Connective::Exists: {
        // Arguments: universal variables in scope that the existential's
        // subformula actually depends on, in binding order.
        std::set<std::string> depends;
        for (const auto& name : tptp::free_variables(f)) {
          auto it = env.find(name);
          if (it != env.end()) term_variable_names(it->second, depends);
        }
        std::vector<Term> args;
        for (const auto& u : universals) {
          if (depends.contains(u)) args.push_back(Term::variable(u));
        }
        auto saved = env;
        for (const auto& v : f.vars) env[v] = Term::apply(fresh_skolem(), args);
        Formula out = walk(f.body(), env, universals);
        env = std::move(saved);
        return out;
      }
      default:
        return f;  // implications were removed by nnf()
    }
  }

  std::string fresh_skolem() {
    for (;;) {
      std::string name = "sk" + std::to_string(++next_skolem_);
      if (!taken_.contains(name)) return name;
    }
  }

  std::set<std::string> taken_;
  std::size_t next_var_ = 0;
  std::size_t next_skolem_ = 0;
};

struct AstLiteral {
  bool positive;
  Formula atom;  // Atom or Equal
};
using AstClause = std::vector<AstLiteral>;
using AstCnf = std::vector<AstClause>;  // {} = true, {{}} = false

AstCnf to_cnf(const Formula& f) {
  switch (f.kind) {
    case Connective::Atom:
      if (f.is_verum()) return {};
      if (f.is_falsum()) return {AstClause{}};
      return {AstClause{AstLiteral{true, f}}};
    case Connective::Equal:
      return {AstClause{AstLiteral{true, f}}};
    case Connective::Not:
      return {AstClause{AstLiteral{false, f.body()}}};
    case Connective::And: {
      auto out = to_cnf(f.lhs());
      auto rhs = to_cnf(f.rhs());
      out.insert(out.end(), rhs.begin(), rhs.end());
      return out;
    }
    case Connective::Or: {
      auto lhs = to_cnf(f.lhs());
      auto rhs = to_cnf(f.rhs());
      AstCnf out;
      out.reserve(lhs.size() * rhs.size());
      for (const auto& a : lhs) {
        for (const auto& b : rhs) {
          AstClause c = a;
          c.insert(c.end(), b.begin(), b.end());
          out.push_back(std::move(c));
        }
      }
      return out;
    }
    default:
      return {};
  }
}

class ClauseBuilder {
 public:
  explicit ClauseBuilder(ClauseSet& set) : set_(set) {}

  void add(const AstClause& lits, Origin origin) {
    Clause c;
    c.id = static_cast<ClauseId>(set_.clauses.size());
    c.origin = std::move(origin);
    std::map<std::string, std::uint32_t> vars;
    for (const auto& lit : lits) c.literals.push_back({lit.positive, atom(lit.atom, vars)});
    normalize(*set_.bank, c);
    set_.clauses.push_back(std::move(c));
  }

  void add_raw(std::vector<Literal> lits, Origin origin) {
    Clause c;
    c.id = static_cast<ClauseId>(set_.clauses.size());
    c.origin = std::move(origin);
    c.literals = std::move(lits);
    normalize(*set_.bank, c);
    set_.clauses.push_back(std::move(c));
  }

 private:
  TermId atom(const Formula& f, std::map<std::string, std::uint32_t>& vars) {
    std::vector<TermId> args;
    for (const auto& a : f.args) args.push_back(term(a, vars));
    if (f.kind == Connective::Equal) return set_.bank->apply(SymbolTable::kEquality, args);
    const auto sym = set_.symbols->intern(f.predicate, static_cast<std::uint32_t>(args.size()), true);
    return set_.bank->apply(sym, args);
  }

  TermId term(const Term& t, std::map<std::string, std::uint32_t>& vars) {
    if (t.is_variable()) {
      auto [it, inserted] = vars.emplace(t.name, static_cast<std::uint32_t>(vars.size()));
      return set_.bank->variable(it->second);
    }
    std::vector<TermId> args;
    for (const auto& a : t.args) args.push_back(term(a, vars));
    const auto sym = set_.symbols->intern(t.name, static_cast<std::uint32_t>(args.size()), false);
    return set_.bank->apply(sym, args);
  }

  ClauseSet& set_;
};

bool mentions_equality(const Formula& f) {
  if (f.kind == Connective::Equal) return true;
  return std::any_of(f.children.begin(), f.children.end(), mentions_equality);
}

void append_equality_axioms(ClauseSet& set) {
  auto& bank = *set.bank;
  const auto& symbols = *set.symbols;
  ClauseBuilder builder(set);
  const Origin eq{Origin::Kind::EqAxiom, "eq_axiom", {}};
  auto var = [&](std::uint32_t i) { return bank.variable(i); };
  auto eq_atom = [&](TermId a, TermId b) {
    const TermId args[] = {a, b};
    return bank.apply(SymbolTable::kEquality, args);
  };

  builder.add_raw({{true, eq_atom(var(0), var(0))}}, eq);
  builder.add_raw({{false, eq_atom(var(0), var(1))}, {true, eq_atom(var(1), var(0))}}, eq);
  builder.add_raw({{false, eq_atom(var(0), var(1))},
                   {false, eq_atom(var(1), var(2))},
                   {true, eq_atom(var(0), var(2))}},
                  eq);

  // Congruence for symbols that occur in the problem (snapshot the table:
  // nothing new is interned below).
  const std::size_t n_symbols = symbols.size();
  for (SymbolId s = 1; s < n_symbols; ++s) {
    const auto arity = symbols.arity(s);
    for (std::uint32_t pos = 0; pos < arity; ++pos) {
      std::vector<TermId> left, right;
      for (std::uint32_t k = 0; k < arity; ++k) {
        if (k == pos) {
          left.push_back(var(0));
          right.push_back(var(1));
        } else {
          left.push_back(var(k + 2));
          right.push_back(var(k + 2));
        }
      }
      const TermId l = bank.apply(s, left);
      const TermId r = bank.apply(s, right);
      if (symbols.is_predicate(s)) {
        builder.add_raw({{false, eq_atom(var(0), var(1))}, {false, l}, {true, r}}, eq);
      } else {
        builder.add_raw({{false, eq_atom(var(0), var(1))}, {true, eq_atom(l, r)}}, eq);
      }
    }
  }
}

ClauseSet build(const std::vector<std::pair<LabeledFormula, Origin::Kind>>& inputs) {
  std::set<std::string> taken;
  bool equality = false;
  for (const auto& [lf, kind] : inputs) {
    auto names = tptp::symbol_names(lf.formula);
    taken.insert(names.begin(), names.end());
    equality = equality || mentions_equality(lf.formula);
  }

  ClauseSet set;
  ClauseBuilder builder(set);
  Skolemizer skolemizer(std::move(taken));
  for (const auto& [lf, kind] : inputs) {
    const bool negate = kind == Origin::Kind::NegatedGoal;
    const Formula closed = tptp::universal_closure(lf.formula);
    const Formula prepared = skolemizer.run(nnf(closed, !negate));
    for (const auto& clause : to_cnf(prepared)) {
      builder.add(clause, Origin{kind, lf.label, {}});
    }
  }
  if (equality) append_equality_axioms(set);
  return set;
}

}  // namespace

ClauseSet clausify(const std::vector<LabeledFormula>& premises, const LabeledFormula& goal) {
  std::vector<std::pair<LabeledFormula, Origin::Kind>> inputs;
  for (const auto& p : premises) inputs.emplace_back(p, Origin::Kind::Input);
  inputs.emplace_back(goal, Origin::Kind::NegatedGoal);
  return build(inputs);
}

ClauseSet clausify_formulas(const std::vector<LabeledFormula>& formulas) {
  std::vector<std::pair<LabeledFormula, Origin::Kind>> inputs;
  for (const auto& f : formulas) inputs.emplace_back(f, Origin::Kind::Input);
  return build(inputs);
}

}  // namespace hammer::prover
