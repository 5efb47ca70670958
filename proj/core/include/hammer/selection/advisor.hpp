#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hammer::selection {

/// One solved goal: the symbols of its statement and the facts its proof used.
struct TrainingExample {
  std::set<std::string> goal_symbols;
  std::set<std::string> used_facts;  // `article:label`
};

struct Hint {
  std::string fact;
  double score = 0.0;

  bool operator==(const Hint&) const = default;
};

inline constexpr int kAdvisorModelVersion = 1;

/// Naive-Bayes premise advisor over (fact, goal-symbol) co-occurrence counts.
///
///   score(f) = ln((uses(f)+mu)/(N+2mu)) + sum_s ln((cooc(f,s)+mu)/(uses(f)+2mu))
class AdvisorModel {
 public:
  AdvisorModel() = default;
  explicit AdvisorModel(double smoothing);

  /// Order-independent: the model depends only on the multiset of examples.
  static AdvisorModel train(const std::vector<TrainingExample>& examples, double smoothing = 1.0);

  std::size_t proofs() const { return proofs_; }
  double smoothing() const { return smoothing_; }
  std::size_t uses(const std::string& fact) const;
  std::size_t cooccurrences(const std::string& fact, const std::string& symbol) const;
  const std::map<std::string, std::size_t>& use_counts() const { return uses_; }
  const std::map<std::pair<std::string, std::string>, std::size_t>& cooccurrence_counts() const {
    return cooc_;
  }

  double score(const std::string& fact, const std::set<std::string>& goal_symbols) const;

  /// Top-k candidates by descending score, ties by fact id.
  std::vector<Hint> advise(const std::set<std::string>& goal_symbols,
                           const std::vector<std::string>& candidates, std::size_t k) const;

  /// Versioned text: header, smoothing, proof count, then `uses` and
  /// `cooc` count lines.
  std::string serialize() const;
  static AdvisorModel deserialize(std::string_view text);

  bool operator==(const AdvisorModel&) const = default;

 private:
  std::size_t proofs_ = 0;
  double smoothing_ = 1.0;
  std::map<std::string, std::size_t> uses_;
  std::map<std::pair<std::string, std::string>, std::size_t> cooc_;
};

}  // namespace hammer::selection
