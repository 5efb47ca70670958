#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hammer/corpus/snapshot.hpp"

namespace hammer::selection {

using corpus::CorpusSnapshot;
using corpus::FactId;
using corpus::FactList;
using corpus::FactRef;

/// The four premise-selection contexts a solve can draw from.
struct SliceMode {
  enum class Kind { FullLibrary, ImportsOnly, CurrentArticle, ByList };

  Kind kind = Kind::FullLibrary;
  std::vector<FactRef> refs;  // ByList only

  static SliceMode full_library() { return {Kind::FullLibrary, {}}; }
  static SliceMode imports_only() { return {Kind::ImportsOnly, {}}; }
  static SliceMode current_article() { return {Kind::CurrentArticle, {}}; }
  static SliceMode by_list(std::vector<FactRef> refs) { return {Kind::ByList, std::move(refs)}; }

  bool operator==(const SliceMode&) const = default;
};

/// `full`, `imports`, `current`, `by`.
std::string_view to_string(SliceMode::Kind kind);
SliceMode::Kind slice_kind_from_string(std::string_view text);

/// Candidate premises for `goal` under `mode`, always joined with the type
/// and background facts in scope. Never contains the goal or anything after
/// it in its own article. Full-library mode skips articles that (transitively)
/// import the goal's article. Result is in load order without duplicates.
/// Throws on unresolvable or non-preceding by-list references.
FactList slice(const CorpusSnapshot& snapshot, const FactId& goal, const SliceMode& mode);

/// Type and background facts visible from `goal`.
FactList implicit_facts_in_scope(const CorpusSnapshot& snapshot, const FactId& goal);

}  // namespace hammer::selection
