#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hammer/tptp/ast.hpp"

namespace hammer::tptp {

enum class Role {
  Axiom,
  Definition,
  Type,
  Background,
  Lemma,
  Theorem,
  Conjecture,
  NegatedConjecture,
};

std::string_view to_string(Role role);
std::optional<Role> role_from_string(std::string_view text);

/// Reference to a fact: `label` (current article) or `article:label`.
struct FactRef {
  std::optional<std::string> article;
  std::string label;

  std::string to_string() const {
    return article ? *article + ":" + label : label;
  }

  auto operator<=>(const FactRef&) const = default;
};

struct Justification {
  enum class Kind { By, Assumed };

  Kind kind = Kind::By;
  std::vector<FactRef> refs;

  static Justification by(std::vector<FactRef> refs) {
    return Justification{Kind::By, std::move(refs)};
  }
  static Justification assumed() { return Justification{Kind::Assumed, {}}; }

  bool operator==(const Justification&) const = default;
};

struct SourcePosition {
  std::size_t line = 1;
  std::size_t column = 1;

  bool operator==(const SourcePosition&) const = default;
};

struct Diagnostic {
  SourcePosition position;
  std::string message;

  std::string to_string() const;
};

struct AnnotatedFormula {
  std::string label;
  Role role = Role::Axiom;
  Formula formula;
  std::optional<Justification> justification;
  SourcePosition position;
};

struct ArticleHeader {
  std::string name;
  std::vector<std::string> imports;
};

/// Result of parsing one article file. Parsing never stops at the first
/// error: each malformed statement yields a diagnostic and is skipped.
struct ArticleParse {
  ArticleHeader header;
  std::vector<AnnotatedFormula> facts;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return diagnostics.empty(); }
};

}  // namespace hammer::tptp
