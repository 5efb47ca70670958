#pragma once

// Brute-force trigger fixpoint. Recomputes the trigger relation from scratch
// at every level instead of keeping any index.

#include <algorithm>
#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "hammer/corpus/snapshot.hpp"
#include "hammer/tptp/ast.hpp"

namespace oracle {

namespace detail {

inline void term_symbols(const hammer::tptp::Term& t, std::set<std::string>& out) {
  if (t.is_variable()) return;
  out.insert(t.name);
  for (const auto& a : t.args) term_symbols(a, out);
}

inline void formula_symbols(const hammer::tptp::Formula& f, std::set<std::string>& out) {
  using hammer::tptp::Connective;
  if (f.kind == Connective::Atom && f.predicate != "$true" && f.predicate != "$false") {
    out.insert(f.predicate);
  }
  for (const auto& a : f.args) term_symbols(a, out);
  for (const auto& c : f.children) formula_symbols(c, out);
}

}  // namespace detail

inline std::set<std::string> symbols(const hammer::tptp::Formula& f) {
  std::set<std::string> out;
  detail::formula_symbols(f, out);
  return out;
}

/// Per-fact symbol counts, recomputed directly.
inline std::map<std::string, std::size_t> recount(const hammer::corpus::FactList& facts) {
  std::map<std::string, std::size_t> occ;
  for (const auto& f : facts) {
    if (!f->counts_for_occurrences()) continue;
    for (const auto& s : symbols(f->formula)) ++occ[s];
  }
  return occ;
}

/// Labels selected by the trigger fixpoint; `depth` unset = unbounded.
inline std::set<std::string> sine_fixpoint(const hammer::tptp::Formula& goal,
                                           const hammer::corpus::FactList& candidates,
                                           const std::map<std::string, std::size_t>& occ,
                                           double tolerance, std::optional<std::size_t> depth) {
  auto count = [&](const std::string& s) -> double {
    auto it = occ.find(s);
    return it == occ.end() ? 0.0 : static_cast<double>(it->second);
  };
  auto triggers = [&](const std::string& s, const std::set<std::string>& fact_symbols) {
    if (!fact_symbols.count(s)) return false;
    double least = std::numeric_limits<double>::infinity();
    for (const auto& other : fact_symbols) least = std::min(least, count(other));
    return count(s) <= tolerance * least;
  };

  std::set<std::string> reached = symbols(goal);
  std::set<std::string> selected;
  for (std::size_t level = 1; !depth || level <= *depth; ++level) {
    std::set<std::string> next_symbols = reached;
    bool grew = false;
    for (const auto& f : candidates) {
      if (selected.count(f->id.to_string())) continue;
      const auto fs = symbols(f->formula);
      bool hit = false;
      for (const auto& s : reached) hit = hit || triggers(s, fs);
      if (hit) {
        selected.insert(f->id.to_string());
        next_symbols.insert(fs.begin(), fs.end());
        grew = true;
      }
    }
    reached = std::move(next_symbols);
    if (!grew) break;
  }
  return selected;
}

}  // namespace oracle
