#include <gtest/gtest.h>

#include <set>
#include <string>
#include <vector>

#include "ctkit/generator.hpp"
#include "ctkit/parser.hpp"
#include "ctkit/term.hpp"

using namespace ctkit;

TEST(TermTest, KindsAndGroundness) {
  Term x = Term::variable("X");
  Term a = Term::constant("a");
  Term fa = Term::compound("f", {a});

  EXPECT_TRUE(x.is_variable());
  EXPECT_FALSE(x.ground());
  EXPECT_TRUE(a.is_constant());
  EXPECT_TRUE(a.ground());
  EXPECT_TRUE(fa.is_compound());
  EXPECT_FALSE(fa.is_constant());
  EXPECT_TRUE(fa.ground());
  EXPECT_FALSE(Term::compound("f", {x}).ground());
}

TEST(TermTest, Depth) {
  Term a = Term::constant("a");
  EXPECT_EQ(a.depth(), 0);
  EXPECT_EQ(Term::compound("f", {a}).depth(), 1);
  EXPECT_EQ(Term::compound("f", {Term::compound("f", {a})}).depth(), 2);
  EXPECT_EQ(Term::compound("g", {a, Term::compound("f", {a})}).depth(), 2);
}

TEST(TermTest, Printing) {
  Term t = Term::compound("f", {Term::variable("X"), Term::constant("a")});
  EXPECT_EQ(to_string(t), "f(X,a)");
  EXPECT_EQ(to_string(Term::constant("a")), "a");
  EXPECT_EQ(to_string(Term::variable("Xs")), "Xs");
}

TEST(ClauseTest, BodyIsASet) {
  Clause c = parse_clause("p :- q, q, q.");
  EXPECT_EQ(c.body().size(), 1u);

  Clause d = parse_clause("p(X) :- q(X), q(X), r(X).");
  EXPECT_EQ(d.body().size(), 2u);
}

TEST(ClauseTest, VariablesInFirstOccurrenceOrder) {
  Clause c = parse_clause("p(Y, X) :- q(X, Z).");
  EXPECT_EQ(c.variables(), (std::vector<std::string>{"Y", "X", "Z"}));
}

TEST(ClauseTest, CanonicalRenamingDefinesEquality) {
  Clause a = parse_clause("p(X, Y) :- q(Y, X).");
  Clause b = parse_clause("p(A, B) :- q(B, A).");
  EXPECT_EQ(canonical_clause(a), canonical_clause(b));
  EXPECT_EQ(to_string(canonical_clause(a)), "p(V0,V1) :- q(V1,V0).");

  Clause ground = parse_clause("p(a).");
  EXPECT_EQ(canonical_clause(ground), ground);
}

TEST(TheoryTest, InsertDeduplicatesUpToRenaming) {
  Theory t;
  t.insert(parse_clause("p(X) :- q(X)."));
  t.insert(parse_clause("p(Y) :- q(Y)."));
  EXPECT_EQ(t.size(), 1u);
  EXPECT_TRUE(t.contains(parse_clause("p(Z) :- q(Z).")));
}

TEST(TheoryTest, UnitedKeepsBothSides) {
  Theory a = parse_theory("p(a). q(a).");
  Theory b = parse_theory("q(a). r(a).");
  Theory u = a.united(b);
  EXPECT_EQ(u.size(), 3u);
}

TEST(TheoryTest, HeadAndBodyProjectionsMatchPerClauseUnion) {
  Theory t = parse_theory("p(a) :- q(a), r(b). s(c). q(a) :- r(b).");
  std::set<Atom> heads;
  std::set<Atom> bodies;
  for (const Clause& c : t.clauses()) {
    heads.insert(c.head());
    bodies.insert(c.body().begin(), c.body().end());
  }
  EXPECT_EQ(theory_heads(t), heads);
  EXPECT_EQ(theory_bodies(t), bodies);
}

TEST(GroundInstancesTest, CountIsUniverseSizeToTheVariablePower) {
  Clause c = parse_clause("p(X, Y) :- q(X, Y).");
  std::set<Term> universe{Term::constant("a"), Term::constant("b"), Term::constant("c")};
  EXPECT_EQ(ground_instances(c, universe).size(), 9u);

  Clause one_var = parse_clause("p(X) :- q(X).");
  EXPECT_EQ(ground_instances(one_var, universe).size(), 3u);

  Clause ground = parse_clause("p(a).");
  EXPECT_EQ(ground_instances(ground, universe).size(), 1u);
}

TEST(GroundInstancesTest, EmptyUniverseWithVariablesIsRejected) {
  Clause c = parse_clause("p(X).");
  EXPECT_THROW(ground_instances(c, {}), EngineError);
  EXPECT_EQ(ground_instances(parse_clause("p(a)."), {}).size(), 1u);
}

TEST(ParserTest, FactsRulesCommentsAndWhitespace) {
  Theory t = parse_theory(
      "% a comment line\n"
      "bird(a).  % trailing comment\n"
      "flies(X) :-\n"
      "    bird(X).\n");
  EXPECT_EQ(t.size(), 2u);
  EXPECT_TRUE(t.contains(parse_clause("bird(a).")));
  EXPECT_TRUE(t.contains(parse_clause("flies(Y) :- bird(Y).")));
}

TEST(ParserTest, AtomAndSignature) {
  Atom a = parse_atom("flies(a)");
  EXPECT_EQ(a.predicate(), "flies");
  EXPECT_EQ(a.arity(), 1);
  EXPECT_EQ(parse_atom("flies(a)."), a);

  PredicateSignature s = parse_signature("flies/1");
  EXPECT_EQ(s.name, "flies");
  EXPECT_EQ(s.arity, 1);
}

TEST(ParserTest, ProgramFilesCarryAbducibleDeclarations) {
  ParsedProgram p = parse_program(
      "bird(a).\n"
      "#abducible flies/1.\n"
      "#abducible swims/2.\n");
  EXPECT_EQ(p.theory.size(), 1u);
  EXPECT_EQ(p.abducibles.size(), 2u);
  EXPECT_TRUE(p.abducibles.count(PredicateSignature{"flies", 1}));
  EXPECT_TRUE(p.abducibles.count(PredicateSignature{"swims", 2}));
}

TEST(ParserTest, ConstraintFilesHoldOnlyGoals) {
  std::set<DefiniteGoal> goals = parse_constraints(":- flies(b).\n:- p(X), q(X).\n");
  EXPECT_EQ(goals.size(), 2u);
  EXPECT_THROW(parse_constraints("bird(a)."), ParseError);
}

TEST(ParserTest, MisplacedConstructsAreRejected) {
  EXPECT_THROW(parse_theory(":- p(a)."), ParseError);
  EXPECT_THROW(parse_theory("#abducible p/1."), ParseError);
  EXPECT_THROW(parse_constraints("#abducible p/1."), ParseError);
}

TEST(ParserTest, ErrorsCarryLineAndColumn) {
  try {
    parse_theory("p(a).\nq(b)\nr(c).");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
    EXPECT_GT(e.column(), 0);
  }
  EXPECT_THROW(parse_clause("p("), ParseError);
  EXPECT_THROW(parse_atom(""), ParseError);
  EXPECT_THROW(parse_clause("X :- p(a)."), ParseError);
}

TEST(ParserTest, LayerFilesSplitOnSeparators) {
  std::vector<Theory> layers = parse_layers(
      "c :- b.\n"
      "#layer\n"
      "b :- a.\n");
  ASSERT_EQ(layers.size(), 2u);
  EXPECT_TRUE(layers[0].contains(parse_clause("c :- b.")));
  EXPECT_TRUE(layers[1].contains(parse_clause("b :- a.")));

  std::vector<Theory> with_empty = parse_layers("c.\n#layer\n#layer\nb.\n");
  ASSERT_EQ(with_empty.size(), 3u);
  EXPECT_TRUE(with_empty[1].empty());
}

TEST(ParserTest, RoundTripOnHandwrittenTheories) {
  const char* sources[] = {
      "p(a).",
      "p(X) :- q(X), r(X, b).",
      "edge(a, b). edge(b, c). path(X, Y) :- edge(X, Y). path(X, Z) :- edge(X, Y), path(Y, Z).",
      "nat(z). nat(s(X)) :- nat(X).",
  };
  for (const char* src : sources) {
    Theory t = parse_theory(src);
    EXPECT_EQ(parse_theory(to_text(t)), t) << src;
  }
}

TEST(ParserTest, RoundTripOnGeneratedTheories) {
  Rng rng(42);
  for (int i = 0; i < 100; ++i) {
    Theory t = random_small_program(rng);
    EXPECT_EQ(parse_theory(to_text(t)), t) << to_text(t);
  }
}

TEST(SignatureTableTest, ArityClashesAreReported) {
  SignatureTable table;
  EXPECT_EQ(table.absorb_predicate("p", 1), "");
  EXPECT_NE(table.absorb_predicate("p", 2), "");
  EXPECT_EQ(table.absorb_functor("p", 3), "");  // separate namespace
  EXPECT_NE(table.absorb_functor("p", 1), "");
}

TEST(RenameApartTest, FreshensEveryVariable) {
  Clause c = parse_clause("p(X, Y) :- q(Y).");
  Clause r = rename_apart(c, "W");
  EXPECT_EQ(r.variables(), (std::vector<std::string>{"W0", "W1"}));
  EXPECT_EQ(canonical_clause(r), canonical_clause(c));
}

TEST(FactsTest, BuildsOneFactPerAtom) {
  std::set<Atom> atoms{parse_atom("p(a)"), parse_atom("q(b)")};
  Theory t = facts(atoms);
  EXPECT_EQ(t.size(), 2u);
  EXPECT_TRUE(t.contains(parse_clause("p(a).")));
  EXPECT_TRUE(t.contains(parse_clause("q(b).")));
}
