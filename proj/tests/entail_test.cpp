#include <gtest/gtest.h>

#include <set>

#include "ctkit/entail.hpp"
#include "ctkit/generator.hpp"
#include "ctkit/parser.hpp"
#include "ctkit/subsume.hpp"
#include "ctkit/term.hpp"

using namespace ctkit;

TEST(LeastModelTest, TwoStepChain) {
  LeastModel m = least_model(parse_theory("q. p :- q."));
  EXPECT_EQ(m.atoms.size(), 2u);
  EXPECT_EQ(m.depth.at(parse_atom("q")), 1);
  EXPECT_EQ(m.depth.at(parse_atom("p")), 2);

  EXPECT_TRUE(least_model(Theory{}).atoms.empty());
  EXPECT_TRUE(least_model(parse_theory("p :- q.")).atoms.empty());
}

TEST(LeastModelTest, TransitiveClosure) {
  Theory t = parse_theory(
      "e(a, b). e(b, c)."
      "r(X, Y) :- e(X, Y)."
      "r(X, Z) :- e(X, Y), r(Y, Z).");
  LeastModel m = least_model(t);
  EXPECT_TRUE(m.contains(parse_atom("r(a, c)")));
  EXPECT_TRUE(m.contains(parse_atom("r(a, b)")));
  EXPECT_FALSE(m.contains(parse_atom("r(c, a)")));
  EXPECT_EQ(m.depth.at(parse_atom("r(a, c)")), 3);
}

TEST(LeastModelTest, FactsAreDepthOneWithThemselvesAsProvenance) {
  LeastModel m = least_model(parse_theory("bird(a). flies(X) :- bird(X)."));
  EXPECT_EQ(m.depth.at(parse_atom("bird(a)")), 1);
  EXPECT_EQ(m.provenance.at(parse_atom("bird(a)")), parse_clause("bird(a)."));
  EXPECT_EQ(m.provenance.at(parse_atom("flies(a)")), parse_clause("flies(a) :- bird(a)."));
}

TEST(LeastModelTest, DepthCoherenceOnRandomPrograms) {
  Rng rng(31);
  for (int i = 0; i < 150; ++i) {
    Theory t = random_small_program(rng);
    LeastModel m = least_model(t);
    for (const Atom& a : m.atoms) {
      int d = m.depth.at(a);
      EXPECT_GE(d, 1);
      const Clause& via = m.provenance.at(a);
      EXPECT_EQ(via.head(), a);
      int max_body = 0;
      for (const Atom& b : via.body()) {
        EXPECT_LT(m.depth.at(b), d) << to_string(b) << " under " << to_string(a);
        max_body = std::max(max_body, m.depth.at(b));
      }
      if (!via.body().empty()) {
        EXPECT_EQ(max_body, d - 1);
      }
    }
  }
}

TEST(LeastModelTest, ModelIsClosedUnderTheRules) {
  Rng rng(77);
  for (int i = 0; i < 60; ++i) {
    Theory t = random_small_program(rng);
    LeastModel m = least_model(t);
    UniverseScope scope;
    scope.add(t);
    std::set<Term> universe = herbrand_universe(scope, {});
    for (const Clause& c : t.clauses())
      for (const Clause& g : ground_instances(c, universe)) {
        bool body_holds = true;
        for (const Atom& b : g.body())
          if (!m.contains(b)) body_holds = false;
        if (body_holds) {
          EXPECT_TRUE(m.contains(g.head())) << to_string(g);
        }
      }
  }
}

TEST(LeastModelTest, MonotoneUnderTheoryGrowth) {
  Rng rng(13);
  for (int i = 0; i < 80; ++i) {
    Theory t = random_small_program(rng);
    Theory bigger = t.united(random_small_program(rng));
    std::set<Atom> small = least_model(t).atoms;
    // The joint program can ground over more constants, so evaluate the
    // smaller theory inside the joint universe before comparing.
    UniverseScope scope;
    scope.add(bigger);
    std::set<Atom> small_in = least_model_in(t, scope, {}).atoms;
    std::set<Atom> large = least_model_in(bigger, scope, {}).atoms;
    // Growing the universe and growing the theory are both monotone.
    for (const Atom& a : small) EXPECT_TRUE(small_in.count(a)) << to_string(a);
    for (const Atom& a : small_in) EXPECT_TRUE(large.count(a)) << to_string(a);
  }
}

TEST(EntailsAtomTest, Basics) {
  EXPECT_TRUE(entails_atom(parse_theory("p."), parse_atom("p")));
  EXPECT_FALSE(entails_atom(Theory{}, parse_atom("p")));
  Theory chain = parse_theory(
      "e(a, b). e(b, c)."
      "r(X, Y) :- e(X, Y)."
      "r(X, Z) :- e(X, Y), r(Y, Z).");
  EXPECT_TRUE(entails_atom(chain, parse_atom("r(a, c)")));
}

TEST(EntailsAtomTest, QueriesOverForeignConstantsAreLegal) {
  Theory t = parse_theory("p(X) :- q(X). q(a).");
  EXPECT_FALSE(entails_atom(t, parse_atom("p(zzz)")));
  EXPECT_THROW(entails_atom(t, parse_atom("p(Y)")), EngineError);
}

TEST(EntailsGroundClauseTest, InstanceAndChainedFirings) {
  EXPECT_TRUE(entails_ground_clause(parse_theory("p(X) :- q(X)."),
                                    parse_clause("p(a) :- q(a).")));
  EXPECT_FALSE(entails_ground_clause(Theory{}, parse_clause("p(a).")));

  // Two firings of the same recursive clause, within a depth-2 universe.
  Theory rec = parse_theory("p(f(X)) :- p(X).");
  EXPECT_TRUE(entails_ground_clause(rec, parse_clause("p(f(f(a))) :- p(a)."), EvalOptions{2}));
}

TEST(EntailsGroundClauseTest, RejectsNonGroundClauses) {
  EXPECT_THROW(entails_ground_clause(parse_theory("p(a)."), parse_clause("p(X).")), EngineError);
}

TEST(ConsistencyTest, GoalViolationAndSatisfaction) {
  // A goal with a variable sweeps every grounding.
  EXPECT_FALSE(is_consistent(parse_theory("p(a)."), Theory{}, parse_constraints(":- p(X).")));
  EXPECT_TRUE(is_consistent(parse_theory("p(a)."), Theory{}, {}));
  EXPECT_TRUE(is_consistent(parse_theory("q(a)."), parse_theory("p(X) :- q(X)."),
                            parse_constraints(":- p(b).")));
  EXPECT_FALSE(is_consistent(parse_theory("q(a)."), parse_theory("p(X) :- q(X)."),
                             parse_constraints(":- p(a).")));
}

TEST(ConsistencyTest, ConjunctiveGoalsNeedEveryLiteral) {
  Theory b = parse_theory("p(a). q(b).");
  EXPECT_TRUE(is_consistent(b, Theory{}, parse_constraints(":- p(X), q(X).")));
  EXPECT_FALSE(is_consistent(parse_theory("p(a). q(a)."), Theory{},
                             parse_constraints(":- p(X), q(X).")));
}

TEST(GroundSupportTest, CollectsTheProvenanceTree) {
  Theory t = parse_theory("bird(a). flies(X) :- bird(X).");
  Theory s = ground_support(t, parse_atom("flies(a)"));
  EXPECT_EQ(s, parse_theory("bird(a). flies(a) :- bird(a)."));

  EXPECT_EQ(ground_support(parse_theory("p."), parse_atom("p")), parse_theory("p."));
}

TEST(GroundSupportTest, RequiresTheAtomToBeEntailed) {
  EXPECT_THROW(ground_support(parse_theory("p(a)."), parse_atom("q(a)")), EngineError);
}

TEST(GroundSupportTest, SupportEntailsAndInstantiates) {
  Rng rng(101);
  int checked = 0;
  while (checked < 120) {
    Theory t = random_small_program(rng);
    LeastModel m = least_model(t);
    if (m.atoms.empty()) continue;
    ++checked;
    // Exercise a mix of shallow and deep targets.
    const Atom& e = *std::next(m.atoms.begin(),
                               static_cast<long>(rng.below(static_cast<int>(m.atoms.size()))));
    Theory s = ground_support(t, e);
    EXPECT_TRUE(entails_atom(s, e)) << to_text(s) << " |- " << to_string(e);
    for (const Clause& g : s.clauses()) {
      EXPECT_TRUE(g.ground());
      bool instance_of_some = false;
      for (const Clause& c : t.clauses())
        if (is_instance(c, g)) instance_of_some = true;
      EXPECT_TRUE(instance_of_some) << to_string(g);
    }
  }
}

TEST(UniverseTest, FunctorProgramsNeedADepthBound) {
  Theory nat = parse_theory("nat(z). nat(s(X)) :- nat(X).");
  EXPECT_THROW(least_model(nat), EngineError);

  LeastModel m = least_model(nat, EvalOptions{2});
  EXPECT_TRUE(m.contains(parse_atom("nat(s(s(z)))")));
  EXPECT_EQ(m.atoms.size(), 3u);
}

TEST(UniverseTest, ABoundedFalseMeansNotDerivableWithinTheBound) {
  Theory nat = parse_theory("nat(z). nat(s(X)) :- nat(X).");
  LeastModel shallow = least_model(nat, EvalOptions{1});
  EXPECT_FALSE(shallow.contains(parse_atom("nat(s(s(z)))")));
  EXPECT_TRUE(shallow.contains(parse_atom("nat(s(z))")));
}

TEST(UniverseTest, GroundInputTermsSurviveTheDepthCap) {
  // The query's own ground term joins the universe even past the bound.
  Theory nat = parse_theory("nat(z). nat(s(X)) :- nat(X).");
  EXPECT_TRUE(entails_atom(nat, parse_atom("nat(s(s(z)))"), EvalOptions{1}));
}

TEST(UniverseTest, JointScopePoolsConstantsOfAllParticipants) {
  Theory t = parse_theory("p(X) :- q(X).");
  UniverseScope scope;
  scope.add(t).add(parse_theory("q(a). q(b)."));
  std::set<Term> u = herbrand_universe(scope, {});
  EXPECT_EQ(u.size(), 2u);
  EXPECT_TRUE(u.count(Term::constant("a")));
  EXPECT_TRUE(u.count(Term::constant("b")));
}

TEST(UniverseTest, VariablesOverAnEmptyUniverseAreRejected) {
  Theory t = parse_theory("p(X) :- q(X).");
  EXPECT_THROW(least_model(t), EngineError);
  // Propositional programs have no grounding problem.
  EXPECT_EQ(least_model(parse_theory("p :- q. q.")).atoms.size(), 2u);
}
