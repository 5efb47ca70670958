#pragma once

#include <string>

#include "hammer/tptp/article.hpp"
#include "hammer/tptp/ast.hpp"

namespace hammer::tptp {

std::string render_term(const Term& t);

/// Deterministic TPTP rendering. Bound variables that shadow an enclosing
/// binder are renamed (`X` -> `X1`, ...) so that names are unique along
/// every root-to-leaf path; the result reparses to an alpha-equivalent
/// formula.
std::string render_formula(const Formula& f);

std::string render_fact_ref(const FactRef& ref);

/// Canonical `fof(...)` statement for an article fact.
std::string render_annotated(const AnnotatedFormula& fact);

/// Canonical article text: header line then one statement per line.
std::string render_article(const ArticleHeader& header,
                           const std::vector<AnnotatedFormula>& facts);

}  // namespace hammer::tptp
