#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hammer/tptp/ast.hpp"

namespace hammer::tptp {

/// Separator between article and label in generated problem names.
inline constexpr std::string_view kQualifiedSeparator = "__";

std::string qualified_label(std::string_view article, std::string_view label);

struct ProblemFormula {
  std::string article;
  std::string label;
  Formula formula;
};

/// A standalone TPTP problem plus the map from the emitted names back to
/// (article, label).
struct Problem {
  std::string text;
  std::map<std::string, std::pair<std::string, std::string>> names;
};

/// Emits each premise as `axiom` and the goal as `conjecture`, all names
/// corpus-qualified. Throws hammer::Error{LabelCollision} when two inputs
/// qualify to the same name.
Problem render_problem(const ProblemFormula& conjecture,
                       const std::vector<ProblemFormula>& premises);

}  // namespace hammer::tptp
