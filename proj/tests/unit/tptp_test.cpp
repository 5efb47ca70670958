#include "doctest.h"

#include <set>

#include "hammer/error.hpp"
#include "hammer/tptp/parser.hpp"
#include "hammer/tptp/printer.hpp"
#include "hammer/tptp/problem.hpp"
#include "hammer/tptp/szs.hpp"
#include "oracles/alpha.hpp"
#include "oracles/generators.hpp"

using namespace hammer;
using namespace hammer::tptp;

TEST_CASE("parse_formula builds the expected tree") {
  const auto f = parse_formula("![X]: (p(X) => q(X))");
  const auto expected = Formula::quantified(
      Connective::Forall, {"X"},
      Formula::binary(Connective::Implies, Formula::atom("p", {Term::variable("X")}),
                      Formula::atom("q", {Term::variable("X")})));
  CHECK(f == expected);

  CHECK(parse_formula("?[X]: X = a") ==
        Formula::quantified(Connective::Exists, {"X"},
                            Formula::equal(Term::variable("X"), Term::constant("a"))));
}

TEST_CASE("unclosed bracket is a positioned syntax error") {
  try {
    parse_formula("![X: (p(X)");
    FAIL("expected a syntax error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Syntax);
    CHECK(std::string(e.what()).find("1:") != std::string::npos);
  }
}

TEST_CASE("render_formula canonical text") {
  CHECK(render_formula(parse_formula("![X]:(p(X)=>q(X))")) == "![X]: (p(X) => q(X))");
  CHECK(render_formula(Formula::equal(Term::constant("a"), Term::constant("a"))) == "a = a");
}

TEST_CASE("shadowed binders are freshened and stay alpha-equivalent") {
  const auto f = parse_formula("![X]: (p(X) & ?[X]: (q(X) | ![X]: r(X)))");
  const auto text = render_formula(f);
  const auto back = parse_formula(text);
  CHECK(oracle::alpha_equivalent(f, back));
  // No binder shadows another along any path.
  CHECK(text.find("?[X]") == std::string::npos);
}

TEST_CASE("alpha oracle rejects capture and distinguishes binders") {
  CHECK(oracle::alpha_equivalent(parse_formula("![X]: p(X)"), parse_formula("![Y]: p(Y)")));
  CHECK(oracle::alpha_equivalent(parse_formula("![X,Y]: r(X,Y)"),
                                 parse_formula("![A]: ![B]: r(A,B)")));
  CHECK_FALSE(oracle::alpha_equivalent(parse_formula("![X,Y]: r(X,Y)"),
                                       parse_formula("![X,Y]: r(Y,X)")));
  CHECK_FALSE(oracle::alpha_equivalent(parse_formula("![X]: ?[Y]: r(X,Y)"),
                                       parse_formula("![X]: ?[X]: r(X,X)")));
}

TEST_CASE("render is deterministic") {
  const auto f = parse_formula("![X,Y]: (r(X,Y) <=> ~(?[Z]: (r(X,Z) & Z != Y)))");
  CHECK(render_formula(f) == render_formula(parse_formula(render_formula(f))));
}

TEST_CASE("round trip on random formulas") {
  oracle::Rng rng(20240611);
  for (int i = 0; i < 300; ++i) {
    oracle::FormulaGen gen(rng, oracle::random_signature(rng, 4));
    const auto f = gen.closed(1 + oracle::pick(rng, 6));
    const auto text = render_formula(f);
    INFO(text);
    CHECK(oracle::alpha_equivalent(f, parse_formula(text)));
  }
}

TEST_CASE("parse_article reads header, justifications and assumed facts") {
  const auto a = parse_article(
      "article(demo, [imports([base_sets])]).\n"
      "fof(pair_in, axiom, ![X,Y,Z]: (member(Z,upair(X,Y)) <=> (Z = X | Z = Y))).\n"
      "fof(sub3, theorem, member(a,upair(a,b)), by([pair_in, base_sets:subset_def])).\n"
      "fof(sg1, theorem, p(a), assumed).\n");
  REQUIRE(a.ok());
  CHECK(a.header.name == "demo");
  CHECK(a.header.imports == std::vector<std::string>{"base_sets"});
  REQUIRE(a.facts.size() == 3);
  CHECK(a.facts[0].role == Role::Axiom);
  REQUIRE(a.facts[1].justification);
  const auto& refs = a.facts[1].justification->refs;
  REQUIRE(refs.size() == 2);
  CHECK(refs[0].to_string() == "pair_in");
  CHECK(refs[1].article == std::optional<std::string>("base_sets"));
  CHECK(a.facts[2].justification->kind == Justification::Kind::Assumed);
}

TEST_CASE("article errors are reported and parsing continues") {
  const auto a = parse_article(
      "article(t, []).\n"
      "fof(a1, axiom, p(X)).\n"
      "fof(a2, axiom, p(a).\n"
      "fof(a3, axiom, q(a)).\n"
      "fof(a3, axiom, q(b)).\n"
      "fof(a4, axiom, r(a)).\n");
  CHECK_FALSE(a.ok());
  CHECK(a.diagnostics.size() == 3);
  for (const auto& d : a.diagnostics) CHECK(d.position.line >= 2);
  std::set<std::string> labels;
  for (const auto& f : a.facts) labels.insert(f.label);
  CHECK(labels.count("a4"));
}

TEST_CASE("article render round trip") {
  const auto text =
      "article(demo, [imports([base_sets])]).\n"
      "fof(t1, type, ![X]: set(sing(X))).\n"
      "fof(d, theorem, subset(sing(x0),l0), by([a, base_sets:sing_subset])).\n"
      "fof(e, lemma, p, assumed).\n";
  const auto a = parse_article(text);
  REQUIRE(a.ok());
  const auto b = parse_article(render_article(a.header, a.facts));
  REQUIRE(b.ok());
  REQUIRE(b.facts.size() == a.facts.size());
  for (std::size_t i = 0; i < a.facts.size(); ++i) {
    CHECK(a.facts[i].label == b.facts[i].label);
    CHECK(a.facts[i].justification == b.facts[i].justification);
    CHECK(oracle::alpha_equivalent(a.facts[i].formula, b.facts[i].formula));
  }
}

TEST_CASE("render_problem qualifies labels") {
  const auto p = render_problem({"demo", "g", parse_formula("q(a)")},
                                {{"demo", "a1", parse_formula("p(a)")}});
  CHECK(p.text == "fof(demo__a1, axiom, p(a)).\nfof(demo__g, conjecture, q(a)).\n");
  CHECK(p.names.at("demo__g") == std::pair<std::string, std::string>{"demo", "g"});

  const auto lone = render_problem({"demo", "g", parse_formula("q(a)")}, {});
  CHECK(lone.text == "fof(demo__g, conjecture, q(a)).\n");
}

TEST_CASE("clashing short labels stay unique after qualification") {
  const auto p = render_problem({"demo", "t1", parse_formula("q")},
                                {{"a", "t1", parse_formula("p1")},
                                 {"b", "t1", parse_formula("p2")},
                                 {"c", "t1", parse_formula("p3")}});
  CHECK(p.names.size() == 4);
  const auto again = parse_annotated_block(p.text);
  std::set<std::string> names;
  for (const auto& r : again) names.insert(r.name);
  CHECK(names.size() == 4);

  CHECK_THROWS_AS(render_problem({"a", "x", parse_formula("q")}, {{"a", "x", parse_formula("p")}}),
                  Error);
}

TEST_CASE("prover output: TSTP leaves") {
  const auto v = parse_prover_output(
      "% SZS status Theorem for mtest\n"
      "% SZS output start CNFRefutation for mtest\n"
      "fof(c1, axiom, p(a), file('mtest.p', t16_wellord2)).\n"
      "fof(c2, axiom, ![X]: (p(X) => q(X)), file('mtest.p', d1_wellord2)).\n"
      "fof(c3, negated_conjecture, ~q(a), file('mtest.p', mtest)).\n"
      "cnf(c4, plain, q(a), inference(resolution, [status(thm)], [c1, c2])).\n"
      "cnf(c5, plain, $false, inference(resolution, [status(thm)], [c3, c4])).\n"
      "% SZS output end CNFRefutation for mtest\n",
      OutputDialect::Tstp);
  CHECK(v.status == SzsStatus::Theorem);
  REQUIRE(v.derivation);
  const auto leaves = v.leaf_labels();
  CHECK(std::find(leaves.begin(), leaves.end(), "t16_wellord2") != leaves.end());
  CHECK(std::find(leaves.begin(), leaves.end(), "d1_wellord2") != leaves.end());
}

TEST_CASE("prover output: status only, empty, malformed") {
  const auto csa = parse_prover_output("% SZS status CounterSatisfiable for x\n", OutputDialect::Tstp);
  CHECK(csa.status == SzsStatus::CounterSatisfiable);
  CHECK_FALSE(csa.derivation);

  const auto empty = parse_prover_output("", OutputDialect::Tstp);
  CHECK(empty.status == SzsStatus::Error);

  const auto broken = parse_prover_output(
      "% SZS status Theorem for x\n% SZS output start Proof for x\nfof(c1, plain, \n"
      "% SZS output end Proof for x\n",
      OutputDialect::Tstp);
  CHECK(broken.status == SzsStatus::Theorem);
  CHECK_FALSE(broken.derivation);
  CHECK_FALSE(broken.warnings.empty());
}

TEST_CASE("derivation check: parents precede, one falsum") {
  DerivationNode a{"c1", "p", DerivationNode::Source::Leaf, "ax", "", {}};
  DerivationNode b{"c2", "$false", DerivationNode::Source::Inference, "", "resolution", {"c1", "c3"}};
  CHECK(check_derivation({a, b}, SzsStatus::Theorem).has_value());
  b.parents = {"c1"};
  CHECK_FALSE(check_derivation({a, b}, SzsStatus::Theorem).has_value());
  CHECK(check_derivation({a}, SzsStatus::Theorem).has_value());
}
