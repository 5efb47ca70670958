#include "doctest.h"

#include <signal.h>
#include <unistd.h>

#include <cstdio>
#include <fstream>
#include <set>
#include <thread>

#include "hammer/prover/clausify.hpp"
#include "hammer/prover/prove.hpp"
#include "hammer/prover/saturation.hpp"
#include "hammer/tptp/parser.hpp"
#include "hammer/tptp/printer.hpp"
#include "hammer/tptp/problem.hpp"
#include "oracles/clause_bridge.hpp"
#include "oracles/dag_validator.hpp"
#include "oracles/generators.hpp"
#include "oracles/model_finder.hpp"

using namespace hammer;
using prover::LabeledFormula;
using tptp::SzsStatus;

namespace {

prover::SaturationOutcome run(std::vector<std::string> premises, std::string goal,
                              prover::SaturationLimits limits = {}) {
  std::vector<LabeledFormula> ps;
  int i = 0;
  for (const auto& p : premises) ps.push_back({"p" + std::to_string(i++), tptp::parse_formula(p)});
  return prover::saturate(prover::clausify(ps, {"goal", tptp::parse_formula(goal)}), limits);
}

}  // namespace

TEST_CASE("chain of two resolutions") {
  auto out = run({"p(a)", "![X]: (p(X) => q(X))"}, "q(a)");
  REQUIRE(out.status == SzsStatus::Theorem);
  CHECK(out.refutation.back().is_empty());
  int resolutions = 0;
  for (const auto& c : out.refutation) {
    if (c.origin.kind == prover::Origin::Kind::Resolution) ++resolutions;
  }
  CHECK(resolutions == 2);
}

TEST_CASE("disjoint signatures saturate") {
  CHECK(run({"p(a)", "q(b)"}, "r(c)").status == SzsStatus::CounterSatisfiable);
}

TEST_CASE("reflexivity closes a = a") {
  auto out = run({}, "a = a");
  CHECK(out.status == SzsStatus::Theorem);
}

TEST_CASE("explosive set hits the time limit") {
  prover::SaturationLimits limits;
  limits.time_limit = std::chrono::milliseconds(1);
  limits.clause_limit = 10'000'000;
  auto out = run({"![X]: (p(X) => p(f(X)))", "![X]: (p(X) => p(g(X)))", "p(a)",
                  "![X,Y]: (r(X,Y) => r(f(Y),g(X)))", "r(a,a)"},
                 "q(a)", limits);
  CHECK(out.status == SzsStatus::Timeout);
}

TEST_CASE("equality via congruence") {
  auto out = run({"a = b", "p(a)"}, "p(b)");
  CHECK(out.status == SzsStatus::Theorem);
}

TEST_CASE("existential goal") {
  auto out = run({"![X]: (man(X) => mortal(X))", "man(socrates)"}, "?[Y]: mortal(Y)");
  CHECK(out.status == SzsStatus::Theorem);
}

namespace {

std::string clause_texts(const prover::ClauseSet& set) {
  std::string out;
  for (const auto& c : set.clauses) out += prover::render_clause(*set.symbols, *set.bank, c) + "\n";
  return out;
}

corpus::FactPtr fact(const std::string& label, const std::string& text) {
  return oracle::make_fact("t", label, tptp::parse_formula(text));
}

// A zombie is dead: it only waits for a parent (possibly a non-reaping init)
// to collect it.
bool process_alive(pid_t pid) {
  std::ifstream stat("/proc/" + std::to_string(pid) + "/stat");
  std::string pid_field, comm, state;
  if (!(stat >> pid_field >> comm >> state)) return false;
  return state != "Z" && state != "X";
}

std::set<std::string> problem_labels(const corpus::FactList& premises, const corpus::Fact& goal) {
  std::set<std::string> out{tptp::qualified_label(goal.id.article, goal.id.label)};
  for (const auto& p : premises) out.insert(tptp::qualified_label(p->id.article, p->id.label));
  return out;
}

}  // namespace

TEST_CASE("clausify: implication, Skolem constant, negated goal") {
  const auto a = prover::clausify_formulas({{"ax", tptp::parse_formula("![X]: (p(X) => q(X))")}});
  CHECK(clause_texts(a) == "~p(X0) | q(X0)\n");

  const auto b = prover::clausify_formulas({{"ax", tptp::parse_formula("?[X]: p(X)")}});
  CHECK(clause_texts(b) == "p(sk1)\n");

  const auto c = prover::clausify({}, {"goal", tptp::parse_formula("p(a)")});
  REQUIRE(c.clauses.size() == 1);
  CHECK(clause_texts(c) == "~p(a)\n");
  CHECK(c.clauses[0].origin.kind == prover::Origin::Kind::NegatedGoal);
  CHECK(c.clauses[0].origin.source == "goal");
}

TEST_CASE("clausify: equality axioms only for occurring symbols") {
  const auto set = prover::clausify({{"ax", tptp::parse_formula("f(a) = b")}},
                                    {"goal", tptp::parse_formula("p(b)")});
  std::size_t eq = 0;
  for (const auto& cl : set.clauses) eq += cl.origin.kind == prover::Origin::Kind::EqAxiom;
  CHECK(eq > 0);
  const auto text = clause_texts(set);
  CHECK(text.find("f(X0) = f(X1)") != std::string::npos);
  CHECK(text.find("g(") == std::string::npos);

  const auto none = prover::clausify({{"ax", tptp::parse_formula("p(a)")}},
                                     {"goal", tptp::parse_formula("p(b)")});
  for (const auto& cl : none.clauses) CHECK(cl.origin.kind != prover::Origin::Kind::EqAxiom);
}

TEST_CASE("clausification preserves satisfiability on small EPR sets") {
  oracle::Rng rng(777);
  for (int round = 0; round < 40; ++round) {
    oracle::FormulaGen gen(rng, oracle::random_signature(rng, 4), false, true);
    std::vector<tptp::Formula> originals;
    std::vector<LabeledFormula> labeled;
    for (std::size_t i = 0, n = 1 + oracle::pick(rng, 2); i < n; ++i) {
      originals.push_back(gen.closed(1 + oracle::pick(rng, 4)));
      labeled.push_back({"f" + std::to_string(i), originals.back()});
    }
    const auto clauses = oracle::clause_formulas(prover::clausify_formulas(labeled));
    for (int n = 1; n <= 2; ++n) {
      INFO(tptp::render_formula(originals.front()));
      CHECK(oracle::satisfiable_at(originals, n) == oracle::satisfiable_at(clauses, n));
    }
  }
}

TEST_CASE("model finder sanity") {
  const auto f = tptp::parse_formula("?[X,Y]: X != Y");
  CHECK_FALSE(oracle::satisfiable_at({f}, 1));
  CHECK(oracle::satisfiable_at({f}, 2));
  CHECK_FALSE(oracle::satisfiable_at({tptp::parse_formula("p(a)"), tptp::parse_formula("~p(a)")}, 3));
  CHECK(oracle::satisfiable_at({tptp::parse_formula("![X]: ?[Y]: r(X,Y)"),
                                tptp::parse_formula("![X]: ~r(X,X)")}, 2));
  CHECK_FALSE(oracle::satisfiable_at({tptp::parse_formula("![X]: ?[Y]: r(X,Y)"),
                                      tptp::parse_formula("![X]: ~r(X,X)")}, 1));
}

TEST_CASE("prove: refutation DAG re-validates and used premises are reachable leaves") {
  const corpus::FactList premises{fact("a1", "p(a)"), fact("a2", "![X]: (p(X) => q(X))"),
                                  fact("a3", "r(b)"), fact("a4", "![X]: (r(X) => s(X))"),
                                  fact("a5", "![X]: (q(X) => t(X))")};
  const auto goal = fact("g", "t(a)");
  const auto proof = prover::prove(premises, *goal, {});
  REQUIRE(proof.proved());
  const auto report = oracle::validate_refutation(proof.output, problem_labels(premises, *goal));
  INFO(report.error);
  REQUIRE(report.ok);
  std::set<std::string> used;
  for (const auto& id : proof.used) used.insert(tptp::qualified_label(id.article, id.label));
  auto expected = report.used_inputs;
  expected.erase("t__g");
  CHECK(used == expected);
  CHECK(used == std::set<std::string>{"t__a1", "t__a2", "t__a5"});
}

TEST_CASE("prove: goal equal to a premise, reflexive equality") {
  const auto same = prover::prove({fact("a", "![X]: p(X)"), fact("b", "q")}, *fact("g", "![Y]: p(Y)"), {});
  REQUIRE(same.proved());
  CHECK(same.used == std::vector<corpus::FactId>{{"t", "a"}});

  const auto refl = prover::prove({}, *fact("g", "a = a"), {});
  REQUIRE(refl.proved());
  CHECK(refl.used.empty());
}

TEST_CASE("prove is deterministic") {
  const corpus::FactList premises{fact("a", "![X,Y]: (r(X,Y) => r(Y,X))"), fact("b", "r(c,d)"),
                                  fact("c", "![X,Y,Z]: ((r(X,Y) & r(Y,Z)) => r(X,Z))")};
  const auto goal = fact("g", "r(c,c)");
  const auto one = prover::prove(premises, *goal, {});
  const auto two = prover::prove(premises, *goal, {});
  REQUIRE(one.proved());
  CHECK(one.output == two.output);
  CHECK(one.used == two.used);
}

TEST_CASE("prover config rejects non-positive limits") {
  prover::ProverConfig config;
  config.time_limit = std::chrono::milliseconds(0);
  CHECK_THROWS_AS(config.validate(), Error);
}

TEST_CASE("external: TSTP theorem leaves map to facts") {
  prover::ProverConfig config;
  config.external = prover::ExternalProver{"mock", "sh " HAMMER_FIXTURE_DIR "/provers/theorem_tstp.sh {problem}"};
  const auto proof = prover::prove({fact("a", "p"), fact("b", "q"), fact("c", "r")}, *fact("g", "s"), config);
  REQUIRE(proof.proved());
  CHECK(proof.used_minimal);
  CHECK(proof.used == std::vector<corpus::FactId>{{"t", "a"}, {"t", "b"}});
}

TEST_CASE("external: Theorem without derivation falls back to all premises") {
  prover::ProverConfig config;
  config.external = prover::ExternalProver{"mock", "sh " HAMMER_FIXTURE_DIR "/provers/status_only.sh"};
  const auto proof = prover::prove({fact("a", "p"), fact("b", "q")}, *fact("g", "s"), config);
  REQUIRE(proof.proved());
  CHECK_FALSE(proof.used_minimal);
  CHECK(proof.used.size() == 2);
}

TEST_CASE("external: sleeper is killed at the limit") {
  const std::string pidfile = "/tmp/hammer_sleeper_" + std::to_string(::getpid());
  const prover::ExternalProver sleeper{"sleeper", "sh " HAMMER_FIXTURE_DIR "/provers/sleeper.sh {problem} " + pidfile};
  const auto start = std::chrono::steady_clock::now();
  const auto run = prover::run_external(sleeper, "fof(g, conjecture, p).\n", std::chrono::milliseconds(300));
  const auto took = std::chrono::steady_clock::now() - start;
  CHECK(run.verdict.status == SzsStatus::Timeout);
  CHECK(run.killed);
  CHECK(took < std::chrono::seconds(2));
  std::ifstream in(pidfile);
  pid_t pid = 0;
  in >> pid;
  REQUIRE(pid > 0);
  CHECK_FALSE(process_alive(pid));
  std::remove(pidfile.c_str());
}

TEST_CASE("external: cancellation gives up promptly") {
  const std::string pidfile = "/tmp/hammer_cancel_" + std::to_string(::getpid());
  const prover::ExternalProver sleeper{"sleeper", "sh " HAMMER_FIXTURE_DIR "/provers/sleeper.sh {problem} " + pidfile};
  std::stop_source stop;
  std::thread canceller([&] {
    std::this_thread::sleep_for(std::chrono::milliseconds(200));
    stop.request_stop();
  });
  const auto run = prover::run_external(sleeper, "fof(g, conjecture, p).\n", std::chrono::seconds(20),
                                        stop.get_token());
  canceller.join();
  CHECK(run.verdict.status == SzsStatus::GaveUp);
  CHECK(run.elapsed < std::chrono::milliseconds(400));
  std::remove(pidfile.c_str());
}

TEST_CASE("external: garbage output and spawn failure are errors") {
  const auto junk = prover::run_external({"junk", "sh " HAMMER_FIXTURE_DIR "/provers/garbage.sh"},
                                         "fof(g, conjecture, p).\n", std::chrono::seconds(5));
  CHECK(junk.verdict.status == SzsStatus::Error);
  CHECK(junk.verdict.excerpt.find("segmentation fault") != std::string::npos);

  const auto missing = prover::run_external({"missing", "/nonexistent/prover {problem}"},
                                            "fof(g, conjecture, p).\n", std::chrono::seconds(5));
  CHECK(missing.verdict.status == SzsStatus::Error);
}

TEST_CASE("command templates quote the problem path") {
  CHECK(prover::expand_command("eprover --cpu-limit={timeout_s} {problem}", "/tmp/a b.p",
                               std::chrono::milliseconds(1500)) == "eprover --cpu-limit=2 '/tmp/a b.p'");
}
