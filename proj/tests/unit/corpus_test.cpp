#include "doctest.h"

#include <algorithm>
#include <set>

#include "hammer/corpus/snapshot.hpp"
#include "oracles/generators.hpp"
#include "oracles/sine_oracle.hpp"

using namespace hammer;
using corpus::CorpusSnapshot;
using corpus::FactId;

namespace {

std::vector<std::string> labels(const corpus::FactList& facts) {
  std::vector<std::string> out;
  for (const auto& f : facts) out.push_back(f->id.label);
  return out;
}

ErrorKind load_error(const std::vector<std::string>& texts) {
  try {
    CorpusSnapshot::load(texts);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("load succeeded");
  return ErrorKind::Io;
}

}  // namespace

TEST_CASE("background plus demo loads two articles") {
  const auto snap = CorpusSnapshot::load({
      "article(background, []).\nfof(bg, background, set(empty)).\n",
      "article(demo, []).\nfof(a, axiom, member(x,l)).\n",
  });
  CHECK(snap.articles().size() == 2);
  CHECK(snap.import_closure("demo") == std::set<std::string>{"background", "demo"});
}

TEST_CASE("self import is a cycle") {
  CHECK(load_error({"article(a, [imports([a])]).\nfof(x, axiom, p).\n"}) == ErrorKind::ImportCycle);
}

TEST_CASE("arity clash names both sites") {
  try {
    CorpusSnapshot::load({
        "article(base, []).\nfof(s2, axiom, ![X,Y]: subset(X,Y)).\n",
        "article(other, []).\nfof(s3, axiom, ![X,Y,Z]: subset(X,Y,Z)).\n",
    });
    FAIL("expected an arity clash");
  } catch (const corpus::CorpusError& e) {
    CHECK(e.kind() == ErrorKind::ArityClash);
    std::string all;
    for (const auto& d : e.diagnostics()) all += d + "\n";
    CHECK(all.find("base:s2") != std::string::npos);
    CHECK(all.find("other:s3") != std::string::npos);
  }
}

TEST_CASE("reference resolution: local, qualified, not imported, unknown") {
  const auto snap = CorpusSnapshot::load({
      "article(base_sets, []).\nfof(subset_def, axiom, p(a)).\n",
      "article(other, []).\nfof(x, axiom, q(a)).\n",
      "article(demo, [imports([base_sets])]).\nfof(pair_in, axiom, r(a)).\n",
  });
  CHECK(snap.resolve_reference("demo", {std::nullopt, "pair_in"})->id.to_string() == "demo:pair_in");
  CHECK(snap.resolve_reference("demo", {"base_sets", "subset_def"})->id.to_string() ==
        "base_sets:subset_def");
  try {
    snap.resolve_reference("demo", {"other", "x"});
    FAIL("expected not imported");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotImported);
    CHECK(std::string(e.what()).find("not imported") != std::string::npos);
  }
  CHECK_THROWS_AS(snap.resolve_reference("demo", {std::nullopt, "nope"}), Error);
}

TEST_CASE("unresolved by reference fails the load") {
  CHECK(load_error({"article(a, []).\nfof(t, theorem, p, by([missing])).\n"}) ==
        ErrorKind::UnresolvedReference);
}

TEST_CASE("context_before") {
  std::string text = "article(a, []).\n";
  for (int i = 1; i <= 10; ++i) text += "fof(f" + std::to_string(i) + ", axiom, p" + std::to_string(i) + ").\n";
  const auto snap = CorpusSnapshot::load({text});
  CHECK(labels(snap.context_before({"a", "f3"})) == std::vector<std::string>{"f1", "f2"});
  CHECK(snap.context_before({"a", "f1"}).empty());
  CHECK(labels(snap.context_before({"a", "f7"})) ==
        std::vector<std::string>{"f1", "f2", "f3", "f4", "f5", "f6"});
  CHECK_THROWS_AS(snap.context_before({"a", "f11"}), Error);
}

TEST_CASE("import closure over a diamond") {
  const auto snap = CorpusSnapshot::load({
      "article(d, []).\nfof(x, axiom, p).\n",
      "article(b, [imports([d])]).\nfof(x, axiom, p).\n",
      "article(c, [imports([d])]).\nfof(x, axiom, p).\n",
      "article(a, [imports([b, c])]).\nfof(x, axiom, p).\n",
  });
  CHECK(snap.import_closure("a") == std::set<std::string>{"a", "b", "c", "d"});
  CHECK(snap.import_closure("d") == std::set<std::string>{"d"});
}

TEST_CASE("symbol occurrences count facts, not occurrences") {
  const auto snap = CorpusSnapshot::load({
      "article(a, []).\nfof(ax1, axiom, p(a)).\nfof(ax2, axiom, ![X]: (p(X) => q(X))).\n"
      "fof(ax3, axiom, r(b,b)).\nfof(t, theorem, q(a), by([ax1, ax2])).\n",
  });
  const auto& occ = snap.symbol_occurrences();
  CHECK(occ.at("p") == 2);
  CHECK(occ.at("q") == 1);
  CHECK(occ.at("a") == 1);
  CHECK(occ.at("b") == 1);
  CHECK(corpus::count_symbol_occurrences({}).empty());
}

TEST_CASE("symbol index equals an independent recount") {
  oracle::Rng rng(99);
  for (int round = 0; round < 100; ++round) {
    auto c = oracle::random_selection_case(rng, 20, 8);
    const auto roles = {tptp::Role::Axiom, tptp::Role::Definition, tptp::Role::Type, tptp::Role::Theorem};
    corpus::FactList facts;
    for (auto& f : c.candidates) {
      auto copy = std::make_shared<corpus::Fact>(*f);
      copy->role = *(roles.begin() + oracle::pick(rng, roles.size()));
      facts.push_back(copy);
    }
    CHECK(corpus::count_symbol_occurrences(facts) == oracle::recount(facts));
  }
}

TEST_CASE("context_before never reaches the fact or beyond") {
  oracle::Rng rng(5);
  for (int round = 0; round < 30; ++round) {
    const std::size_t n = 1 + oracle::pick(rng, 15);
    std::string text = "article(r, []).\n";
    for (std::size_t i = 0; i < n; ++i) text += "fof(g" + std::to_string(i) + ", axiom, p).\n";
    const auto snap = CorpusSnapshot::load({text});
    const std::size_t q = oracle::pick(rng, n);
    const auto before = snap.context_before({"r", "g" + std::to_string(q)});
    REQUIRE(before.size() == q);
    for (std::size_t i = 0; i < q; ++i) CHECK(before[i]->position == i);
  }
}

TEST_CASE("demo corpus: snapshot serialization round trip") {
  const auto snap = corpus::load_directory(HAMMER_CORPUS_DIR "/demo");
  CHECK(snap.articles().size() == 3);
  const auto text = snap.serialize();
  CHECK(text.rfind("snapshot(1, [", 0) == 0);
  const auto back = CorpusSnapshot::deserialize(text);
  CHECK(back.serialize() == text);
  CHECK(back.symbol_occurrences() == snap.symbol_occurrences());
  for (const auto& f : snap.all_facts()) {
    CHECK(back.fact(f->id)->status == f->status);
  }
}

TEST_CASE("fact status and implicit roles") {
  const auto snap = CorpusSnapshot::load({
      "article(a, []).\nfof(t0, type, ![X]: s(f(X))).\nfof(x, axiom, p).\n"
      "fof(l, lemma, p, assumed).\nfof(m, theorem, p, by([x])).\nfof(u, theorem, p).\n",
  });
  CHECK(snap.fact({"a", "t0"})->is_implicit());
  CHECK(snap.fact({"a", "l"})->status == corpus::FactStatus::Assumed);
  CHECK(snap.fact({"a", "m"})->status == corpus::FactStatus::Accepted);
  CHECK(snap.fact({"a", "u"})->status == corpus::FactStatus::Unjustified);
}
