#pragma once

// Naive-Bayes premise score evaluated straight from raw training examples,
// without going through the model's count tables:
//
//   score(f) = ln((uses+mu)/(N+2mu)) + sum over goal symbols s of
//              ln((cooc(s)+mu)/(uses+2mu))

#include <cmath>
#include <set>
#include <string>
#include <vector>

#include "hammer/selection/advisor.hpp"

namespace oracle {

inline double advisor_score(const std::vector<hammer::selection::TrainingExample>& examples,
                            double mu, const std::string& fact,
                            const std::set<std::string>& goal_symbols) {
  const double n = static_cast<double>(examples.size());
  double uses = 0;
  for (const auto& e : examples) uses += e.used_facts.count(fact) ? 1 : 0;
  double score = std::log((uses + mu) / (n + 2 * mu));
  for (const auto& s : goal_symbols) {
    double cooc = 0;
    for (const auto& e : examples) {
      if (e.used_facts.count(fact) && e.goal_symbols.count(s)) cooc += 1;
    }
    score += std::log((cooc + mu) / (uses + 2 * mu));
  }
  return score;
}

}  // namespace oracle
