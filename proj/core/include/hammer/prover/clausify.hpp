#pragma once

#include <string>
#include <vector>

#include "hammer/prover/clause.hpp"
#include "hammer/tptp/ast.hpp"

namespace hammer::prover {

/// A closed problem formula and the label it is reported under.
struct LabeledFormula {
  std::string label;
  tptp::Formula formula;
};

/// Turns premises plus the negated goal into clauses: implication and
/// equivalence elimination, negation normal form, variable standardization,
/// Skolemization (fresh `skN` functors over the enclosing universal
/// variables that occur in the existential's scope), then distribution to
/// CNF. When `=` occurs anywhere, reflexivity, symmetry, transitivity and
/// congruence axioms for every occurring symbol are appended with origin
/// EqAxiom. Input clauses carry their label; goal clauses are NegatedGoal.
ClauseSet clausify(const std::vector<LabeledFormula>& premises, const LabeledFormula& goal);

/// Clausifies formulas without negating anything (all origins Input).
ClauseSet clausify_formulas(const std::vector<LabeledFormula>& formulas);

}  // namespace hammer::prover
