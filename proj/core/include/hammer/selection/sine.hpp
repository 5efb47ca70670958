#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>

#include "hammer/corpus/snapshot.hpp"

namespace hammer::selection {

/// Trigger-based premise selection parameters. `depth` unset means iterate
/// to the fixpoint.
struct SineParams {
  double tolerance = 1.5;
  std::optional<std::size_t> depth = 3;

  /// Throws InvalidArgument unless tolerance >= 1 and depth >= 1.
  void validate() const;

  /// Parses `t,d` (`d` may be `inf`).
  static SineParams parse(std::string_view text);
  std::string to_string() const;

  bool operator==(const SineParams&) const = default;
};

using OccurrenceMap = std::map<std::string, std::size_t>;

/// Symbol `s` triggers fact F when s occurs in F and
/// occ(s) <= tolerance * min occ over F's symbols. Starting from the goal's
/// symbols, each round selects every candidate triggered by a symbol reached
/// so far and adds the selected facts' symbols; at most `depth` rounds.
/// Symbols missing from `occ` count as 0. Result keeps candidate order.
corpus::FactList sine_select(const tptp::Formula& goal, const corpus::FactList& candidates,
                             const OccurrenceMap& occ, const SineParams& params);

}  // namespace hammer::selection
