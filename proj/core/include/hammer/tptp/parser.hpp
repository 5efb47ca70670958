#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hammer/tptp/article.hpp"
#include "hammer/tptp/ast.hpp"

namespace hammer::tptp {

/// Parses a FOF formula body, e.g. `![X]: (p(X) => q(X))`. Free variables
/// are allowed here (clause bodies in prover output use them). Throws
/// hammer::Error{Syntax} carrying `line:column` and the expected tokens.
Formula parse_formula(std::string_view text);

/// Parses an article: an `article(Name, [imports([...])]).` header followed
/// by `fof(label, role, formula[, by([...]) | assumed]).` statements.
/// Enforces closed formulas, unique labels and the role/justification rules.
ArticleParse parse_article(std::string_view text);

/// A TPTP general term as it appears in annotation slots
/// (`file('p', ax1)`, `inference(resolution, [status(thm)], [c1, c2])`).
struct GeneralTerm {
  enum class Kind { Word, List };

  Kind kind = Kind::Word;
  std::string functor;
  std::vector<GeneralTerm> args;

  bool is_list() const { return kind == Kind::List; }
};

/// Annotated formula with the formula slot kept as raw text; used for
/// derivations read from prover output.
struct RawAnnotated {
  std::string language;  // fof | cnf | tff ...
  std::string name;
  std::string role;
  std::string formula_text;
  std::optional<GeneralTerm> source;
};

/// Parses a block of annotated formulas; lines starting with `%` are
/// comments. Throws hammer::Error{Syntax} on malformed input.
std::vector<RawAnnotated> parse_annotated_block(std::string_view text);

}  // namespace hammer::tptp
