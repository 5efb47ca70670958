#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace hammer::prover {

using TermId = std::uint32_t;
using SymbolId = std::uint32_t;

/// Interned predicate/function symbols of one problem.
class SymbolTable {
 public:
  static constexpr SymbolId kEquality = 0;

  SymbolTable();

  SymbolId intern(const std::string& name, std::uint32_t arity, bool predicate);
  const std::string& name(SymbolId s) const { return entries_[s].name; }
  std::uint32_t arity(SymbolId s) const { return entries_[s].arity; }
  bool is_predicate(SymbolId s) const { return entries_[s].predicate; }
  std::size_t size() const { return entries_.size(); }
  bool contains_name(const std::string& name) const;

 private:
  struct Entry {
    std::string name;
    std::uint32_t arity;
    bool predicate;
  };
  std::vector<Entry> entries_;
  std::unordered_map<std::string, SymbolId> by_key_;
};

/// Hash-consed term store: structurally equal terms share one id, so term
/// equality is id equality. Atoms are stored as terms whose head is a
/// predicate symbol.
class TermBank {
 public:
  TermId variable(std::uint32_t index);
  TermId apply(SymbolId functor, std::span<const TermId> args);

  bool is_variable(TermId t) const { return nodes_[t].functor == kVariableTag; }
  std::uint32_t var_index(TermId t) const { return nodes_[t].var; }
  SymbolId functor(TermId t) const { return nodes_[t].functor; }
  std::span<const TermId> args(TermId t) const {
    const auto& n = nodes_[t];
    return {arg_pool_.data() + n.args_begin, n.arity};
  }
  /// Symbol count (variables count 1).
  std::uint32_t weight(TermId t) const { return nodes_[t].weight; }
  bool is_ground(TermId t) const { return nodes_[t].ground; }
  std::size_t size() const { return nodes_.size(); }

 private:
  static constexpr SymbolId kVariableTag = 0xFFFFFFFFu;

  struct Node {
    SymbolId functor;
    std::uint32_t var;
    std::uint32_t args_begin;
    std::uint32_t arity;
    std::uint32_t weight;
    bool ground;
  };

  struct KeyHash {
    std::size_t operator()(const std::vector<std::uint32_t>& key) const noexcept;
  };

  std::vector<Node> nodes_;
  std::vector<TermId> arg_pool_;
  std::vector<TermId> variables_;
  std::unordered_map<std::vector<std::uint32_t>, TermId, KeyHash> interned_;
};

}  // namespace hammer::prover
