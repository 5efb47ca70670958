#include "hammer/tptp/problem.hpp"

#include <sstream>

#include "hammer/error.hpp"
#include "hammer/tptp/printer.hpp"

namespace hammer::tptp {

std::string qualified_label(std::string_view article, std::string_view label) {
  std::string out(article);
  out += kQualifiedSeparator;
  out += label;
  return out;
}

Problem render_problem(const ProblemFormula& conjecture,
                       const std::vector<ProblemFormula>& premises) {
  Problem problem;
  std::ostringstream os;
  auto emit = [&](const ProblemFormula& pf, std::string_view role) {
    auto name = qualified_label(pf.article, pf.label);
    auto [it, inserted] = problem.names.emplace(name, std::make_pair(pf.article, pf.label));
    if (!inserted) {
      throw Error(ErrorKind::LabelCollision,
                  "qualified name " + name + " produced by both " + it->second.first + ":" +
                      it->second.second + " and " + pf.article + ":" + pf.label);
    }
    os << "fof(" << name << ", " << role << ", " << render_formula(pf.formula) << ").\n";
  };
  for (const auto& p : premises) emit(p, "axiom");
  emit(conjecture, "conjecture");
  problem.text = os.str();
  return problem;
}

}  // namespace hammer::tptp
