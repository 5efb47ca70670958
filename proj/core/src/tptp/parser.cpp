#include "hammer/tptp/parser.hpp"

#include <algorithm>
#include <set>

#include "hammer/error.hpp"
#include "lexer.hpp"

namespace hammer::tptp {

using detail::Token;
using detail::TokenKind;

std::string Diagnostic::to_string() const {
  return std::to_string(position.line) + ":" + std::to_string(position.column) + ": " + message;
}

std::string_view to_string(Role role) {
  switch (role) {
    case Role::Axiom: return "axiom";
    case Role::Definition: return "definition";
    case Role::Type: return "type";
    case Role::Background: return "background";
    case Role::Lemma: return "lemma";
    case Role::Theorem: return "theorem";
    case Role::Conjecture: return "conjecture";
    case Role::NegatedConjecture: return "negated_conjecture";
  }
  return "axiom";
}

std::optional<Role> role_from_string(std::string_view text) {
  static const std::pair<std::string_view, Role> kRoles[] = {
      {"axiom", Role::Axiom},
      {"definition", Role::Definition},
      {"type", Role::Type},
      {"background", Role::Background},
      {"lemma", Role::Lemma},
      {"theorem", Role::Theorem},
      {"conjecture", Role::Conjecture},
      {"negated_conjecture", Role::NegatedConjecture},
  };
  for (const auto& [name, role] : kRoles) {
    if (name == text) return role;
  }
  return std::nullopt;
}

namespace {

class SyntaxError : public std::exception {
 public:
  SyntaxError(SourcePosition pos, std::string message)
      : diagnostic_{pos, std::move(message)}, what_(diagnostic_.to_string()) {}

  const Diagnostic& diagnostic() const { return diagnostic_; }
  const char* what() const noexcept override { return what_.c_str(); }

  // Raised after the closing `.` was read; recovery must not skip further.
  bool statement_complete = false;

 private:
  Diagnostic diagnostic_;
  std::string what_;
};

bool is_lower_word(std::string_view s) {
  if (s.empty() || std::islower(static_cast<unsigned char>(s[0])) == 0) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
  });
}

class Parser {
 public:
  Parser(std::string_view source, std::vector<Token> tokens)
      : source_(source), tokens_(std::move(tokens)) {}

  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  const Token& next() {
    const Token& t = peek();
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return t;
  }
  bool at_end() const { return peek().kind == TokenKind::End; }
  std::size_t position() const { return pos_; }
  std::string_view source() const { return source_; }

  [[noreturn]] void fail(const std::string& expected) const {
    throw SyntaxError(peek().position, "expected " + expected + ", found " + describe(peek()));
  }

  void expect(std::string_view punct) {
    if (!peek().is(punct)) fail("'" + std::string(punct) + "'");
    next();
  }

  bool accept(std::string_view punct) {
    if (!peek().is(punct)) return false;
    next();
    return true;
  }

  std::string expect_lower_word(const std::string& what) {
    const auto& t = peek();
    if (t.kind == TokenKind::LowerWord) return next().text;
    if (t.kind == TokenKind::SingleQuoted && is_lower_word(t.text)) return next().text;
    fail(what);
  }

  std::string expect_name(const std::string& what) {
    const auto& t = peek();
    if (t.kind == TokenKind::Integer) return next().text;
    return expect_lower_word(what);
  }

  // --- formulas -----------------------------------------------------------

  Formula formula() {
    Formula lhs = unit_formula();
    const Token& op = peek();
    if (op.is("&") || op.is("|")) {
      const std::string sym = op.text;
      const Connective kind = sym == "&" ? Connective::And : Connective::Or;
      while (accept(sym)) {
        lhs = Formula::binary(kind, std::move(lhs), unit_formula());
      }
      if (is_binary_connective(peek())) {
        fail("')' or '" + sym + "' (mixed connectives need parentheses)");
      }
      return lhs;
    }
    if (!is_binary_connective(op)) return lhs;
    const std::string sym = next().text;
    Formula rhs = unit_formula();
    Formula out;
    if (sym == "=>") {
      out = Formula::binary(Connective::Implies, std::move(lhs), std::move(rhs));
    } else if (sym == "<=") {
      out = Formula::binary(Connective::Implies, std::move(rhs), std::move(lhs));
    } else if (sym == "<=>") {
      out = Formula::binary(Connective::Iff, std::move(lhs), std::move(rhs));
    } else if (sym == "<~>") {
      out = Formula::negate(Formula::binary(Connective::Iff, std::move(lhs), std::move(rhs)));
    } else if (sym == "~|") {
      out = Formula::negate(Formula::binary(Connective::Or, std::move(lhs), std::move(rhs)));
    } else {
      out = Formula::negate(Formula::binary(Connective::And, std::move(lhs), std::move(rhs)));
    }
    if (is_binary_connective(peek())) fail("')' (non-associative connective needs parentheses)");
    return out;
  }

  Formula unit_formula() {
    const Token& t = peek();
    if (t.is("~")) {
      next();
      return Formula::negate(unit_formula());
    }
    if (t.is("!") || t.is("?")) {
      const Connective q = next().text == "!" ? Connective::Forall : Connective::Exists;
      expect("[");
      std::vector<std::string> vars;
      do {
        if (peek().kind != TokenKind::UpperWord) fail("variable");
        vars.push_back(next().text);
      } while (accept(","));
      expect("]");
      expect(":");
      return Formula::quantified(q, std::move(vars), unit_formula());
    }
    if (t.is("(")) {
      next();
      Formula inner = formula();
      expect(")");
      return inner;
    }
    return atomic_formula();
  }

  Formula atomic_formula() {
    const Token& t = peek();
    if (t.kind == TokenKind::DollarWord && (t.text == "$true" || t.text == "$false")) {
      return Formula::atom(next().text);
    }
    if (t.kind == TokenKind::UpperWord) {
      Term lhs = term();
      return infix_rest(std::move(lhs), true);
    }
    if (t.kind != TokenKind::LowerWord && t.kind != TokenKind::SingleQuoted &&
        t.kind != TokenKind::DoubleQuoted) {
      fail("formula");
    }
    Term head = term();
    if (peek().is("=") || peek().is("!=")) return infix_rest(std::move(head), true);
    return Formula::atom(std::move(head.name), std::move(head.args));
  }

  Formula infix_rest(Term lhs, bool required) {
    if (accept("=")) return Formula::equal(std::move(lhs), term());
    if (accept("!=")) return Formula::negate(Formula::equal(std::move(lhs), term()));
    if (required) fail("'=' or '!='");
    return Formula::atom(std::move(lhs.name), std::move(lhs.args));
  }

  Term term() {
    const Token& t = peek();
    if (t.kind == TokenKind::UpperWord) return Term::variable(next().text);
    std::string name;
    if (t.kind == TokenKind::LowerWord) {
      name = next().text;
    } else if (t.kind == TokenKind::SingleQuoted) {
      name = is_lower_word(t.text) ? t.text : "'" + t.text + "'";
      next();
    } else if (t.kind == TokenKind::DoubleQuoted) {
      name = "\"" + t.text + "\"";
      next();
    } else {
      fail("term");
    }
    std::vector<Term> args;
    if (accept("(")) {
      do {
        args.push_back(term());
      } while (accept(","));
      expect(")");
    }
    return Term::apply(std::move(name), std::move(args));
  }

  // --- general terms --------------------------------------------------------

  GeneralTerm general_term() {
    GeneralTerm out;
    if (accept("[")) {
      out.kind = GeneralTerm::Kind::List;
      if (!peek().is("]")) {
        do {
          out.args.push_back(general_term());
        } while (accept(","));
      }
      expect("]");
      return out;
    }
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::LowerWord:
      case TokenKind::UpperWord:
      case TokenKind::DollarWord:
      case TokenKind::SingleQuoted:
      case TokenKind::DoubleQuoted:
      case TokenKind::Integer:
        out.functor = next().text;
        break;
      default:
        fail("general term");
    }
    if (accept("(")) {
      // Skip embedded formulas such as `$fot(...)` or `bind(X, $fot(t))`
      // by nesting; every argument is itself read as a general term.
      do {
        out.args.push_back(general_term_or_formula());
      } while (accept(","));
      expect(")");
    }
    if (accept(":")) {
      GeneralTerm pair;
      pair.functor = ":";
      pair.args.push_back(std::move(out));
      pair.args.push_back(general_term());
      return pair;
    }
    return out;
  }

  GeneralTerm general_term_or_formula() {
    const auto start = position();
    try {
      return general_term();
    } catch (const SyntaxError&) {
      pos_ = start;
      skip_balanced_until_comma_or_close();
      return GeneralTerm{};
    }
  }

  /// Advances to the next top-level `,` or `)` and returns the raw text.
  std::string skip_balanced_until_comma_or_close() {
    int depth = 0;
    const std::size_t begin = peek().begin;
    std::size_t end = begin;
    while (!at_end()) {
      const Token& t = peek();
      if (depth == 0 && (t.is(",") || t.is(")"))) break;
      if (t.is("(") || t.is("[")) ++depth;
      if (t.is(")") || t.is("]")) --depth;
      end = t.end;
      next();
    }
    return std::string(source_.substr(begin, end - begin));
  }

  /// Error recovery: skip past the next statement terminator.
  void skip_statement() {
    while (!at_end()) {
      if (next().is(".")) return;
    }
  }

 private:
  static bool is_binary_connective(const Token& t) {
    return t.is("=>") || t.is("<=") || t.is("<=>") || t.is("<~>") || t.is("~|") ||
           t.is("~&") || t.is("&") || t.is("|");
  }

  std::string_view source_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

FactRef fact_ref(Parser& p) {
  FactRef ref;
  std::string first = p.expect_name("fact reference");
  if (p.accept(":")) {
    ref.article = std::move(first);
    ref.label = p.expect_name("label after ':'");
  } else {
    ref.label = std::move(first);
  }
  return ref;
}

ArticleHeader article_header(Parser& p) {
  ArticleHeader header;
  if (!(p.peek().kind == TokenKind::LowerWord && p.peek().text == "article")) {
    p.fail("article(Name, [imports([...])]) header");
  }
  p.next();
  p.expect("(");
  header.name = p.expect_lower_word("article name");
  if (p.accept(",")) {
    p.expect("[");
    if (!p.peek().is("]")) {
      do {
        if (!(p.peek().kind == TokenKind::LowerWord && p.peek().text == "imports")) {
          p.fail("imports(...)");
        }
        p.next();
        p.expect("(");
        const bool bracketed = p.accept("[");
        if (!(bracketed && p.peek().is("]"))) {
          do {
            header.imports.push_back(p.expect_lower_word("imported article name"));
          } while (p.accept(","));
        }
        if (bracketed) p.expect("]");
        p.expect(")");
      } while (p.accept(","));
    }
    p.expect("]");
  }
  p.expect(")");
  p.expect(".");
  return header;
}

AnnotatedFormula annotated_fact(Parser& p) {
  AnnotatedFormula fact;
  const Token& start = p.peek();
  fact.position = start.position;
  if (!(start.kind == TokenKind::LowerWord && start.text == "fof")) p.fail("'fof'");
  p.next();
  p.expect("(");
  fact.label = p.expect_name("label");
  p.expect(",");
  const Token& role_tok = p.peek();
  auto role = role_tok.kind == TokenKind::LowerWord ? role_from_string(role_tok.text) : std::nullopt;
  if (!role) p.fail("role");
  if (*role == Role::Conjecture || *role == Role::NegatedConjecture) {
    throw SyntaxError(role_tok.position,
                      "role '" + role_tok.text + "' is reserved for generated problems");
  }
  p.next();
  fact.role = *role;
  p.expect(",");
  const SourcePosition formula_pos = p.peek().position;
  fact.formula = p.formula();
  if (p.accept(",")) {
    const Token& j = p.peek();
    if (j.kind == TokenKind::LowerWord && j.text == "assumed") {
      p.next();
      fact.justification = Justification::assumed();
    } else if (j.kind == TokenKind::LowerWord && j.text == "by") {
      p.next();
      p.expect("(");
      p.expect("[");
      std::vector<FactRef> refs;
      if (!p.peek().is("]")) {
        do {
          refs.push_back(fact_ref(p));
        } while (p.accept(","));
      }
      p.expect("]");
      p.expect(")");
      fact.justification = Justification::by(std::move(refs));
    } else {
      p.fail("by([...]) or assumed");
    }
  }
  p.expect(")");
  p.expect(".");

  auto reject = [](SourcePosition pos, std::string message) {
    SyntaxError e(pos, std::move(message));
    e.statement_complete = true;
    throw e;
  };
  if (auto free = free_variables(fact.formula); !free.empty()) {
    reject(formula_pos, "free variable " + free.front() + " in fact " + fact.label);
  }
  if (fact.justification) {
    const bool provable = fact.role == Role::Theorem || fact.role == Role::Lemma;
    if (!provable) {
      reject(fact.position, "fact " + fact.label + " with role " +
                                std::string(to_string(fact.role)) + " cannot carry a justification");
    }
  }
  return fact;
}

}  // namespace

Formula parse_formula(std::string_view text) {
  Parser p(text, detail::tokenize(text));
  try {
    Formula f = p.formula();
    if (!p.at_end()) p.fail("end of formula");
    return f;
  } catch (const SyntaxError& e) {
    throw Error(ErrorKind::Syntax, e.diagnostic().to_string());
  }
}

ArticleParse parse_article(std::string_view text) {
  ArticleParse out;
  Parser p(text, detail::tokenize(text));
  try {
    out.header = article_header(p);
  } catch (const SyntaxError& e) {
    out.diagnostics.push_back(e.diagnostic());
    p.skip_statement();
  }
  std::set<std::string> labels;
  while (!p.at_end()) {
    try {
      AnnotatedFormula fact = annotated_fact(p);
      if (!labels.insert(fact.label).second) {
        out.diagnostics.push_back(
            {fact.position, "duplicate label " + fact.label + " in article " + out.header.name});
        continue;
      }
      out.facts.push_back(std::move(fact));
    } catch (const SyntaxError& e) {
      out.diagnostics.push_back(e.diagnostic());
      if (!e.statement_complete) p.skip_statement();
    }
  }
  return out;
}

std::vector<RawAnnotated> parse_annotated_block(std::string_view text) {
  std::vector<RawAnnotated> out;
  Parser p(text, detail::tokenize(text));
  try {
    while (!p.at_end()) {
      RawAnnotated a;
      if (p.peek().kind != TokenKind::LowerWord) p.fail("annotated formula");
      a.language = p.next().text;
      p.expect("(");
      a.name = p.expect_name("formula name");
      p.expect(",");
      a.role = p.expect_lower_word("role");
      p.expect(",");
      a.formula_text = p.skip_balanced_until_comma_or_close();
      if (a.formula_text.empty()) p.fail("formula");
      if (p.accept(",")) {
        a.source = p.general_term();
        while (p.accept(",")) p.general_term();  // useful info
      }
      p.expect(")");
      p.expect(".");
      out.push_back(std::move(a));
    }
  } catch (const SyntaxError& e) {
    throw Error(ErrorKind::Syntax, e.diagnostic().to_string());
  }
  return out;
}

}  // namespace hammer::tptp
