#include "hammer/selection/sine.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <vector>

namespace hammer::selection {

void SineParams::validate() const {
  if (!(tolerance >= 1.0)) {
    throw Error(ErrorKind::InvalidArgument, "SInE tolerance must be >= 1");
  }
  if (depth && *depth < 1) throw Error(ErrorKind::InvalidArgument, "SInE depth must be >= 1");
}

SineParams SineParams::parse(std::string_view text) {
  SineParams p;
  const auto comma = text.find(',');
  try {
    p.tolerance = std::stod(std::string(text.substr(0, comma)));
    if (comma != std::string_view::npos) {
      const std::string depth(text.substr(comma + 1));
      if (depth == "inf" || depth == "unbounded") {
        p.depth.reset();
      } else {
        const long d = std::stol(depth);
        if (d < 1) throw Error(ErrorKind::InvalidArgument, "SInE depth must be >= 1");
        p.depth = static_cast<std::size_t>(d);
      }
    }
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::InvalidArgument, "expected --sine t,d, got '" + std::string(text) + "'");
  }
  p.validate();
  return p;
}

std::string SineParams::to_string() const {
  std::string t = std::to_string(tolerance);
  t.erase(t.find_last_not_of('0') + 1);
  if (!t.empty() && t.back() == '.') t.pop_back();
  return t + "," + (depth ? std::to_string(*depth) : std::string("inf"));
}

corpus::FactList sine_select(const tptp::Formula& goal, const corpus::FactList& candidates,
                             const OccurrenceMap& occ, const SineParams& params) {
  params.validate();
  auto count = [&](const std::string& s) -> std::size_t {
    auto it = occ.find(s);
    return it == occ.end() ? 0 : it->second;
  };

  // symbol -> candidate indices it triggers
  std::map<std::string, std::vector<std::size_t>> triggers;
  std::vector<std::set<std::string>> symbols(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    symbols[i] = tptp::symbol_names(candidates[i]->formula);
    if (symbols[i].empty()) continue;
    std::size_t rarest = std::numeric_limits<std::size_t>::max();
    for (const auto& s : symbols[i]) rarest = std::min(rarest, count(s));
    const double bound = params.tolerance * static_cast<double>(rarest);
    for (const auto& s : symbols[i]) {
      if (static_cast<double>(count(s)) <= bound) triggers[s].push_back(i);
    }
  }

  std::vector<bool> selected(candidates.size(), false);
  std::set<std::string> reached = tptp::symbol_names(goal);
  std::vector<std::string> frontier(reached.begin(), reached.end());
  for (std::size_t level = 0; !frontier.empty(); ++level) {
    if (params.depth && level >= *params.depth) break;
    std::vector<std::string> next;
    for (const auto& s : frontier) {
      auto it = triggers.find(s);
      if (it == triggers.end()) continue;
      for (auto i : it->second) {
        if (selected[i]) continue;
        selected[i] = true;
        for (const auto& t : symbols[i]) {
          if (reached.insert(t).second) next.push_back(t);
        }
      }
    }
    frontier = std::move(next);
  }

  corpus::FactList out;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (selected[i]) out.push_back(candidates[i]);
  }
  return out;
}

}  // namespace hammer::selection
