#include "hammer/prover/term_bank.hpp"

namespace hammer::prover {

SymbolTable::SymbolTable() {
  entries_.push_back({"=", 2, true});
  by_key_.emplace("P=/2", kEquality);
}

SymbolId SymbolTable::intern(const std::string& name, std::uint32_t arity, bool predicate) {
  std::string key = (predicate ? "P" : "F") + name + "/" + std::to_string(arity);
  auto it = by_key_.find(key);
  if (it != by_key_.end()) return it->second;
  const auto id = static_cast<SymbolId>(entries_.size());
  entries_.push_back({name, arity, predicate});
  by_key_.emplace(std::move(key), id);
  return id;
}

bool SymbolTable::contains_name(const std::string& name) const {
  for (const auto& e : entries_) {
    if (e.name == name) return true;
  }
  return false;
}

std::size_t TermBank::KeyHash::operator()(const std::vector<std::uint32_t>& key) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto v : key) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

TermId TermBank::variable(std::uint32_t index) {
  if (index >= variables_.size()) variables_.resize(index + 1, kVariableTag);
  if (variables_[index] != kVariableTag) return variables_[index];
  const auto id = static_cast<TermId>(nodes_.size());
  nodes_.push_back(Node{kVariableTag, index, 0, 0, 1, false});
  variables_[index] = id;
  return id;
}

TermId TermBank::apply(SymbolId functor, std::span<const TermId> args) {
  std::vector<std::uint32_t> key;
  key.reserve(args.size() + 1);
  key.push_back(functor);
  key.insert(key.end(), args.begin(), args.end());
  auto it = interned_.find(key);
  if (it != interned_.end()) return it->second;

  Node n{functor, 0, static_cast<std::uint32_t>(arg_pool_.size()),
         static_cast<std::uint32_t>(args.size()), 1, true};
  for (auto a : args) {
    n.weight += nodes_[a].weight;
    n.ground = n.ground && nodes_[a].ground;
  }
  arg_pool_.insert(arg_pool_.end(), args.begin(), args.end());
  const auto id = static_cast<TermId>(nodes_.size());
  nodes_.push_back(n);
  interned_.emplace(std::move(key), id);
  return id;
}

}  // namespace hammer::prover
