#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "hammer/error.hpp"
#include "hammer/tptp/article.hpp"
#include "hammer/tptp/ast.hpp"

namespace hammer::corpus {

using tptp::FactRef;
using tptp::Formula;
using tptp::Justification;
using tptp::Role;

/// Name of the article holding global implicit facts; every other article
/// imports it implicitly.
inline constexpr std::string_view kBackgroundArticle = "background";

/// Version written into snapshot manifests.
inline constexpr int kSnapshotVersion = 1;

struct FactId {
  std::string article;
  std::string label;

  std::string to_string() const { return article + ":" + label; }
  static FactId parse(std::string_view text);  // `article:label`

  auto operator<=>(const FactId&) const = default;
};

enum class FactStatus { Accepted, Assumed, Unjustified };

std::string_view to_string(FactStatus status);

struct Fact {
  FactId id;
  Role role = Role::Axiom;
  Formula formula;
  std::optional<Justification> justification;
  FactStatus status = FactStatus::Accepted;
  std::size_t position = 0;  // index inside its article

  /// Type and background facts join every slice implicitly and are never
  /// cited in `by` clauses.
  bool is_implicit() const { return role == Role::Type || role == Role::Background; }

  /// Roles counted by the symbol-occurrence index.
  bool counts_for_occurrences() const {
    return role == Role::Axiom || role == Role::Definition || is_implicit();
  }
};

using FactPtr = std::shared_ptr<const Fact>;
using FactList = std::vector<FactPtr>;

struct Article {
  std::string name;
  std::vector<std::string> imports;  // as declared
  FactList facts;
  std::map<std::string, std::size_t> index;  // label -> position
};

/// Raised by load_snapshot; carries every problem found, one per line.
class CorpusError : public Error {
 public:
  CorpusError(ErrorKind kind, std::vector<std::string> diagnostics);

  const std::vector<std::string>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<std::string> diagnostics_;
};

/// Immutable multi-article library. All queries are const and safe to run
/// concurrently; share it as `std::shared_ptr<const CorpusSnapshot>`.
class CorpusSnapshot {
 public:
  /// Parses and links the given article texts (load order preserved).
  /// Throws CorpusError on syntax errors, import cycles, unresolved
  /// references and arity clashes.
  static CorpusSnapshot load(const std::vector<std::string>& article_texts);

  const std::vector<Article>& articles() const { return articles_; }
  bool has_article(std::string_view name) const;
  const Article& article(std::string_view name) const;

  FactPtr find(const FactId& id) const;
  FactPtr fact(const FactId& id) const;  // throws UnknownFact

  FactPtr resolve_reference(std::string_view current_article, const FactRef& ref) const;

  /// Facts of the same article strictly before `id`, in article order.
  FactList context_before(const FactId& id) const;

  /// Reflexive-transitive import closure, including the background article.
  std::set<std::string> import_closure(std::string_view article) const;

  /// Number of axiom/definition/type/background facts mentioning each
  /// symbol, counted once per fact.
  const std::map<std::string, std::size_t>& symbol_occurrences() const { return occurrences_; }

  /// Every fact, articles in load order, facts in article order.
  FactList all_facts() const;

  /// Versioned single-file text form: manifest line + canonical articles.
  std::string serialize() const;
  static CorpusSnapshot deserialize(std::string_view text);

  /// Canonical text of one article.
  std::string render_article(std::string_view name) const;

 private:
  std::vector<Article> articles_;
  std::map<std::string, std::size_t, std::less<>> by_name_;
  std::map<std::string, std::set<std::string>, std::less<>> closures_;
  std::map<std::string, std::size_t> occurrences_;
};

using SnapshotPtr = std::shared_ptr<const CorpusSnapshot>;

std::map<std::string, std::size_t> count_symbol_occurrences(const FactList& facts);

/// Loads every `*.art` file of a directory, ordered so that imports come
/// first (ties broken by file name).
CorpusSnapshot load_directory(const std::string& directory);

/// Loads either a directory of articles or a serialized snapshot file.
CorpusSnapshot load_path(const std::string& path);

}  // namespace hammer::corpus
