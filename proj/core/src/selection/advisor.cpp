#include "hammer/selection/advisor.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "hammer/error.hpp"

namespace hammer::selection {

AdvisorModel::AdvisorModel(double smoothing) : smoothing_(smoothing) {
  if (!(smoothing > 0.0)) throw Error(ErrorKind::InvalidArgument, "smoothing must be positive");
}

AdvisorModel AdvisorModel::train(const std::vector<TrainingExample>& examples, double smoothing) {
  AdvisorModel model(smoothing);
  model.proofs_ = examples.size();
  for (const auto& ex : examples) {
    for (const auto& f : ex.used_facts) {
      ++model.uses_[f];
      for (const auto& s : ex.goal_symbols) ++model.cooc_[{f, s}];
    }
  }
  return model;
}

std::size_t AdvisorModel::uses(const std::string& fact) const {
  auto it = uses_.find(fact);
  return it == uses_.end() ? 0 : it->second;
}

std::size_t AdvisorModel::cooccurrences(const std::string& fact, const std::string& symbol) const {
  auto it = cooc_.find({fact, symbol});
  return it == cooc_.end() ? 0 : it->second;
}

double AdvisorModel::score(const std::string& fact, const std::set<std::string>& goal_symbols) const {
  const double mu = smoothing_;
  const double used = static_cast<double>(uses(fact));
  double s = std::log((used + mu) / (static_cast<double>(proofs_) + 2 * mu));
  for (const auto& sym : goal_symbols) {
    s += std::log((static_cast<double>(cooccurrences(fact, sym)) + mu) / (used + 2 * mu));
  }
  return s;
}

std::vector<Hint> AdvisorModel::advise(const std::set<std::string>& goal_symbols,
                                       const std::vector<std::string>& candidates,
                                       std::size_t k) const {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "k must be at least 1");
  std::vector<Hint> ranked;
  std::set<std::string> seen;
  for (const auto& c : candidates) {
    if (seen.insert(c).second) ranked.push_back({c, score(c, goal_symbols)});
  }
  std::sort(ranked.begin(), ranked.end(), [](const Hint& a, const Hint& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.fact < b.fact;
  });
  if (ranked.size() > k) ranked.resize(k);
  return ranked;
}

std::string AdvisorModel::serialize() const {
  std::ostringstream os;
  char mu[64];
  std::snprintf(mu, sizeof mu, "%.17g", smoothing_);
  os << "% naive-Bayes premise advisor\n";
  os << "version " << kAdvisorModelVersion << "\n";
  os << "smoothing " << mu << "\n";
  os << "proofs " << proofs_ << "\n";
  for (const auto& [f, n] : uses_) os << "uses " << f << ' ' << n << "\n";
  for (const auto& [key, n] : cooc_) os << "cooc " << key.first << ' ' << key.second << ' ' << n << "\n";
  return os.str();
}

AdvisorModel AdvisorModel::deserialize(std::string_view text) {
  AdvisorModel model;
  std::istringstream in{std::string(text)};
  bool versioned = false;
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (line.empty() || line[0] == '%') continue;
    std::istringstream words(line);
    std::string tag;
    words >> tag;
    auto bad = [&]() {
      return Error(ErrorKind::Syntax, "advisor model line " + std::to_string(line_no) + ": " + line);
    };
    if (tag == "version") {
      int v = 0;
      if (!(words >> v) || v != kAdvisorModelVersion) throw bad();
      versioned = true;
    } else if (tag == "smoothing") {
      if (!(words >> model.smoothing_) || !(model.smoothing_ > 0)) throw bad();
    } else if (tag == "proofs") {
      if (!(words >> model.proofs_)) throw bad();
    } else if (tag == "uses") {
      std::string f;
      std::size_t n = 0;
      if (!(words >> f >> n)) throw bad();
      model.uses_[f] = n;
    } else if (tag == "cooc") {
      std::string f, s;
      std::size_t n = 0;
      if (!(words >> f >> s >> n)) throw bad();
      model.cooc_[{f, s}] = n;
    } else {
      throw bad();
    }
  }
  if (!versioned) throw Error(ErrorKind::Syntax, "advisor model without version line");
  return model;
}

}  // namespace hammer::selection
