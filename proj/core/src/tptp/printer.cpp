#include "hammer/tptp/printer.hpp"

#include <map>
#include <set>
#include <sstream>
#include <vector>

namespace hammer::tptp {

namespace {

class Renderer {
 public:
  explicit Renderer(const Formula& root) : taken_(all_variable_names(root)) {}

  void term(std::ostream& os, const Term& t) const {
    if (t.is_variable()) {
      os << lookup(t.name);
      return;
    }
    os << t.name;
    if (t.args.empty()) return;
    os << '(';
    for (std::size_t i = 0; i < t.args.size(); ++i) {
      if (i != 0) os << ',';
      term(os, t.args[i]);
    }
    os << ')';
  }

  // Renders a formula in a position where a binary formula must be
  // parenthesized (operand of a connective, quantifier body).
  void unit(std::ostream& os, const Formula& f) {
    if (f.is_binary()) {
      os << '(';
      top(os, f);
      os << ')';
    } else {
      top(os, f);
    }
  }

  void top(std::ostream& os, const Formula& f) {
    switch (f.kind) {
      case Connective::Atom:
        term(os, Term::apply(f.predicate, f.args));
        return;
      case Connective::Equal:
        term(os, f.args[0]);
        os << " = ";
        term(os, f.args[1]);
        return;
      case Connective::Not:
        if (f.body().kind == Connective::Equal) {
          term(os, f.body().args[0]);
          os << " != ";
          term(os, f.body().args[1]);
          return;
        }
        os << '~';
        unit(os, f.body());
        return;
      case Connective::And:
      case Connective::Or: {
        // Left-nested chains of the same associative connective print flat.
        if (f.lhs().kind == f.kind) {
          top(os, f.lhs());
        } else {
          unit(os, f.lhs());
        }
        os << (f.kind == Connective::And ? " & " : " | ");
        unit(os, f.rhs());
        return;
      }
      case Connective::Implies:
      case Connective::Iff:
        unit(os, f.lhs());
        os << (f.kind == Connective::Implies ? " => " : " <=> ");
        unit(os, f.rhs());
        return;
      case Connective::Forall:
      case Connective::Exists: {
        os << (f.kind == Connective::Forall ? "![" : "?[");
        const auto mark = scope_.size();
        for (std::size_t i = 0; i < f.vars.size(); ++i) {
          if (i != 0) os << ',';
          os << bind(f.vars[i]);
        }
        os << "]: ";
        unit(os, f.body());
        scope_.resize(mark);
        return;
      }
    }
  }

 private:
  std::string lookup(const std::string& name) const {
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it) {
      if (it->first == name) return it->second;
    }
    return name;
  }

  std::string bind(const std::string& name) {
    bool visible = false;
    for (const auto& [orig, shown] : scope_) {
      if (shown == name || orig == name) visible = true;
    }
    std::string shown = name;
    if (visible) {
      for (int k = 1;; ++k) {
        shown = name + std::to_string(k);
        if (!taken_.contains(shown)) break;
      }
      taken_.insert(shown);
    }
    scope_.emplace_back(name, shown);
    return shown;
  }

  std::set<std::string> taken_;
  std::vector<std::pair<std::string, std::string>> scope_;
};

}  // namespace

std::string render_term(const Term& t) {
  std::ostringstream os;
  Renderer(Formula::atom("$true")).term(os, t);
  return os.str();
}

std::string render_formula(const Formula& f) {
  std::ostringstream os;
  Renderer(f).top(os, f);
  return os.str();
}

std::string render_fact_ref(const FactRef& ref) { return ref.to_string(); }

std::string render_annotated(const AnnotatedFormula& fact) {
  std::ostringstream os;
  os << "fof(" << fact.label << ", " << to_string(fact.role) << ", "
     << render_formula(fact.formula);
  if (fact.justification) {
    if (fact.justification->kind == Justification::Kind::Assumed) {
      os << ", assumed";
    } else {
      os << ", by([";
      const auto& refs = fact.justification->refs;
      for (std::size_t i = 0; i < refs.size(); ++i) {
        if (i != 0) os << ", ";
        os << render_fact_ref(refs[i]);
      }
      os << "])";
    }
  }
  os << ").";
  return os.str();
}

std::string render_article(const ArticleHeader& header,
                           const std::vector<AnnotatedFormula>& facts) {
  std::ostringstream os;
  os << "article(" << header.name << ", [imports([";
  for (std::size_t i = 0; i < header.imports.size(); ++i) {
    if (i != 0) os << ", ";
    os << header.imports[i];
  }
  os << "])]).\n";
  for (const auto& fact : facts) os << render_annotated(fact) << '\n';
  return os.str();
}

}  // namespace hammer::tptp
