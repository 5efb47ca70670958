#include "hammer/selection/slice.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace hammer::selection {

std::string_view to_string(SliceMode::Kind kind) {
  switch (kind) {
    case SliceMode::Kind::FullLibrary: return "full";
    case SliceMode::Kind::ImportsOnly: return "imports";
    case SliceMode::Kind::CurrentArticle: return "current";
    case SliceMode::Kind::ByList: return "by";
  }
  return "full";
}

SliceMode::Kind slice_kind_from_string(std::string_view text) {
  if (text == "full" || text == "full_library") return SliceMode::Kind::FullLibrary;
  if (text == "imports" || text == "imports_only") return SliceMode::Kind::ImportsOnly;
  if (text == "current" || text == "current_article") return SliceMode::Kind::CurrentArticle;
  if (text == "by" || text == "by_list") return SliceMode::Kind::ByList;
  throw Error(ErrorKind::InvalidArgument,
              "unknown slice mode '" + std::string(text) + "' (full|imports|current|by)");
}

namespace {

// Collects facts keyed by (article load index, position) so the result is in
// load order and duplicate-free.
class OrderedFacts {
 public:
  explicit OrderedFacts(const CorpusSnapshot& snap) {
    for (std::size_t i = 0; i < snap.articles().size(); ++i) {
      rank_.emplace(snap.articles()[i].name, i);
    }
  }

  void add(const corpus::FactPtr& f) {
    items_.emplace(std::make_pair(rank_.at(f->id.article), f->position), f);
  }

  FactList take() const {
    FactList out;
    for (const auto& [key, f] : items_) out.push_back(f);
    return out;
  }

 private:
  std::map<std::string, std::size_t> rank_;
  std::map<std::pair<std::size_t, std::size_t>, corpus::FactPtr> items_;
};

}  // namespace

FactList implicit_facts_in_scope(const CorpusSnapshot& snapshot, const FactId& goal) {
  OrderedFacts out(snapshot);
  for (const auto& name : snapshot.import_closure(goal.article)) {
    if (name == goal.article) continue;
    for (const auto& f : snapshot.article(name).facts) {
      if (f->is_implicit()) out.add(f);
    }
  }
  for (const auto& f : snapshot.context_before(goal)) {
    if (f->is_implicit()) out.add(f);
  }
  return out.take();
}

FactList slice(const CorpusSnapshot& snapshot, const FactId& goal_id, const SliceMode& mode) {
  auto goal = snapshot.fact(goal_id);
  OrderedFacts out(snapshot);
  for (const auto& f : implicit_facts_in_scope(snapshot, goal_id)) out.add(f);

  switch (mode.kind) {
    case SliceMode::Kind::FullLibrary:
      for (const auto& art : snapshot.articles()) {
        if (art.name == goal_id.article) continue;
        if (snapshot.import_closure(art.name).contains(goal_id.article)) continue;
        for (const auto& f : art.facts) out.add(f);
      }
      for (const auto& f : snapshot.context_before(goal_id)) out.add(f);
      break;
    case SliceMode::Kind::ImportsOnly:
      for (const auto& name : snapshot.import_closure(goal_id.article)) {
        if (name == goal_id.article) continue;
        for (const auto& f : snapshot.article(name).facts) out.add(f);
      }
      for (const auto& f : snapshot.context_before(goal_id)) out.add(f);
      break;
    case SliceMode::Kind::CurrentArticle:
      for (const auto& f : snapshot.context_before(goal_id)) out.add(f);
      break;
    case SliceMode::Kind::ByList:
      for (const auto& ref : mode.refs) {
        auto f = snapshot.resolve_reference(goal_id.article, ref);
        if (f->id.article == goal_id.article && f->position >= goal->position) {
          throw Error(ErrorKind::UnresolvedReference,
                      "reference " + ref.to_string() + " does not precede " + goal_id.to_string());
        }
        out.add(f);
      }
      break;
  }
  return out.take();
}

}  // namespace hammer::selection
