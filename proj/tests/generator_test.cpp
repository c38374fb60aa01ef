#include <gtest/gtest.h>

#include <set>
#include <string>
#include <vector>

#include "ctkit/entail.hpp"
#include "ctkit/generator.hpp"
#include "ctkit/harness.hpp"
#include "ctkit/induce.hpp"
#include "ctkit/parser.hpp"
#include "ctkit/subsume.hpp"
#include "ctkit/term.hpp"

using namespace ctkit;

namespace {

std::string fingerprint(const GeneratedInstance& inst) {
  std::string out = to_text(inst.program.background);
  out += "|" + to_string(inst.example) + "|" + to_text(inst.hypothesis) + "|";
  for (const PredicateSignature& s : inst.program.abducibles)
    out += s.name + "/" + std::to_string(s.arity) + ",";
  for (const DefiniteGoal& g : inst.program.constraints) out += to_string(g);
  return out;
}

int herbrand_base_size(const Theory& t) {
  std::set<std::string> constants;
  t.collect_constants(constants);
  SignatureTable table;
  std::set<std::pair<std::string, int>> preds;
  for (const Clause& c : t.clauses()) {
    preds.insert({c.head().predicate(), c.head().arity()});
    for (const Atom& a : c.body()) preds.insert({a.predicate(), a.arity()});
  }
  int n = static_cast<int>(constants.size());
  int total = 0;
  for (const auto& [name, arity] : preds) {
    (void)name;
    int tuples = 1;
    for (int i = 0; i < arity; ++i) tuples *= n;
    total += tuples;
  }
  return total;
}

}  // namespace

TEST(InstanceGeneratorTest, SameSeedSameSequence) {
  InstanceGenerator a(123), b(123);
  for (int i = 0; i < 25; ++i) EXPECT_EQ(fingerprint(a.next()), fingerprint(b.next()));
}

TEST(InstanceGeneratorTest, SeedsActuallyChangeTheDraws) {
  InstanceGenerator a(1), b(2);
  bool any_difference = false;
  for (int i = 0; i < 10; ++i)
    if (fingerprint(a.next()) != fingerprint(b.next())) any_difference = true;
  EXPECT_TRUE(any_difference);
}

TEST(InstanceGeneratorTest, StaysInsideItsAdvertisedBounds) {
  InstanceGenerator gen(9);
  for (int i = 0; i < 200; ++i) {
    GeneratedInstance inst = gen.next();

    EXPECT_GE(inst.program.background.size(), 1u);
    EXPECT_LE(inst.program.background.size(), 6u);
    EXPECT_GE(inst.hypothesis.size(), 1u);
    EXPECT_LE(inst.hypothesis.size(), 3u);

    std::set<std::string> constants;
    inst.program.background.collect_constants(constants);
    inst.hypothesis.collect_constants(constants);
    EXPECT_LE(constants.size(), 4u);

    std::set<std::pair<std::string, int>> preds;
    const Theory combined = inst.program.background.united(inst.hypothesis);
    for (const Clause& c : combined.clauses()) {
      preds.insert({c.head().predicate(), c.head().arity()});
      EXPECT_LE(c.head().arity(), 2);
      for (const Atom& a : c.body()) {
        preds.insert({a.predicate(), a.arity()});
        EXPECT_LE(a.arity(), 2);
      }
    }
    EXPECT_LE(preds.size(), 4u);

    // Hypothesis heads stay abducible; no functors anywhere.
    for (const Clause& c : inst.hypothesis.clauses()) {
      PredicateSignature sig{c.head().predicate(), c.head().arity()};
      EXPECT_TRUE(inst.program.abducibles.count(sig)) << to_string(c);
    }
    std::map<std::string, int> functors;
    inst.program.background.collect_functors(functors);
    inst.hypothesis.collect_functors(functors);
    EXPECT_TRUE(functors.empty());
  }
}

TEST(InstanceGeneratorTest, EveryInstanceIsAnInductiveSolution) {
  InstanceGenerator gen(321);
  for (int i = 0; i < 200; ++i) {
    GeneratedInstance inst = gen.next();
    EXPECT_TRUE(check_inductive_solution(inst.program, inst.example, inst.hypothesis));
    // The background alone must not already explain the example.
    UniverseScope scope;
    scope.add(inst.program.background).add(inst.hypothesis).add(inst.example);
    EXPECT_FALSE(entails_atom_in(inst.program.background, inst.example, scope));
  }
}

TEST(SmallProgramTest, StaysWithinTheExhaustiveCheckerBounds) {
  Rng rng(64);
  for (int i = 0; i < 200; ++i) {
    Theory t = random_small_program(rng);
    EXPECT_LE(herbrand_base_size(t), 12) << to_text(t);
    EXPECT_GE(t.size(), 1u);
  }
}

TEST(ClausePairTest, StaysWithinBoundsAndMixesOutcomes) {
  Rng rng(8);
  int subsumed = 0, not_subsumed = 0;
  for (int i = 0; i < 300; ++i) {
    auto [c, d] = random_clause_pair(rng);
    EXPECT_LE(c.variables().size(), 4u);
    std::set<Term> subterms;
    auto note = [&](const Term& t) {
      std::vector<Term> all;
      t.collect_subterms(all);
      subterms.insert(all.begin(), all.end());
    };
    for (const Term& t : d.head().args()) note(t);
    for (const Atom& a : d.body())
      for (const Term& t : a.args()) note(t);
    EXPECT_LE(subterms.size(), 8u);

    if (clause_subsumes(c, d))
      ++subsumed;
    else
      ++not_subsumed;
  }
  EXPECT_GT(subsumed, 60);
  EXPECT_GT(not_subsumed, 60);
}

TEST(HarnessTest, AllRunsPassAndCountsAddUp) {
  HarnessResult r = run_theorem_harness({200, 17});
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.runs, 200);
  EXPECT_EQ(r.passed, 200);
  EXPECT_EQ(r.failed_run, -1);
  EXPECT_TRUE(r.failure.empty());
}

TEST(HarnessTest, DifferentSeedsStillPass) {
  for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
    HarnessResult r = run_theorem_harness({60, seed});
    EXPECT_TRUE(r.ok()) << "seed " << seed << ": " << r.failure;
  }
}
