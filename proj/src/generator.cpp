#include "ctkit/generator.hpp"

#include <algorithm>
#include <vector>

#include "ctkit/entail.hpp"
#include "ctkit/induce.hpp"
#include "ctkit/subsume.hpp"

namespace ctkit {

namespace {

const char* const kConstants[] = {"a", "b", "c", "d"};
const char* const kPredicates[] = {"p", "q", "r", "s"};
const char* const kVariables[] = {"X", "Y", "Z"};

Term random_arg(Rng& rng, int n_consts, int n_vars) {
  if (n_vars > 0 && rng.chance(2, 5)) return Term::variable(kVariables[rng.below(n_vars)]);
  return Term::constant(kConstants[rng.below(n_consts)]);
}

Atom random_atom(Rng& rng, const std::vector<PredicateSignature>& preds, int n_consts,
                 int n_vars) {
  const PredicateSignature& s = preds[static_cast<std::size_t>(rng.below(
      static_cast<int>(preds.size())))];
  std::vector<Term> args;
  args.reserve(static_cast<std::size_t>(s.arity));
  for (int i = 0; i < s.arity; ++i) args.push_back(random_arg(rng, n_consts, n_vars));
  return Atom(s.name, std::move(args));
}

bool theory_has_variables(const Theory& t) {
  for (const Clause& c : t.clauses())
    if (!c.ground()) return true;
  return false;
}

}  // namespace

GeneratedInstance InstanceGenerator::next() {
  for (int attempt = 0; attempt < 10000; ++attempt) {
    const int n_consts = 1 + rng_.below(4);
    const int n_preds = 2 + rng_.below(3);
    std::vector<PredicateSignature> preds;
    for (int i = 0; i < n_preds; ++i) preds.push_back({kPredicates[i], rng_.below(3)});

    // Split the vocabulary: the tail predicates become abducible, the rest
    // belong to the background.
    const int n_abducible = 1 + rng_.below(std::min(2, n_preds - 1));
    const std::vector<PredicateSignature> defined(preds.begin(), preds.end() - n_abducible);
    const std::vector<PredicateSignature> abducible(preds.end() - n_abducible, preds.end());
    std::set<PredicateSignature> u(abducible.begin(), abducible.end());

    Theory background;
    const int n_b = 1 + rng_.below(6);
    for (int k = 0; k < n_b; ++k) {
      // The first clause is a ground fact so derivations have a floor.
      const int vars = k == 0 ? 0 : 2;
      Atom head = random_atom(rng_, defined, n_consts, vars);
      std::set<Atom> body;
      if (k > 0) {
        const int n_body = rng_.below(3);
        for (int j = 0; j < n_body; ++j) body.insert(random_atom(rng_, preds, n_consts, vars));
      }
      background.insert(Clause(std::move(head), std::move(body)));
    }

    Theory hypothesis;
    const int n_h = 1 + rng_.below(3);
    for (int k = 0; k < n_h; ++k) {
      Atom head = random_atom(rng_, abducible, n_consts, 2);
      std::set<Atom> body;
      const int n_body = rng_.below(3);
      for (int j = 0; j < n_body; ++j) body.insert(random_atom(rng_, preds, n_consts, 2));
      hypothesis.insert(Clause(std::move(head), std::move(body)));
    }

    std::set<DefiniteGoal> constraints;
    if (rng_.chance(1, 2)) {
      const int n_goals = 1 + rng_.below(2);
      for (int k = 0; k < n_goals; ++k) {
        std::set<Atom> body;
        const int n_body = 1 + rng_.below(2);
        for (int j = 0; j < n_body; ++j) body.insert(random_atom(rng_, preds, n_consts, 1));
        constraints.insert(DefiniteGoal(std::move(body)));
      }
    }

    // Grounding a variable needs at least one constant in the background's
    // own vocabulary, or later verification stages run out of universe.
    std::set<std::string> bg_consts;
    background.collect_constants(bg_consts);
    if ((theory_has_variables(background) || theory_has_variables(hypothesis)) &&
        bg_consts.empty())
      continue;

    try {
      UniverseScope scope;
      scope.add(background).add(hypothesis);
      const LeastModel alone = least_model_in(background, scope, {});
      const LeastModel combined = least_model_in(background.united(hypothesis), scope, {});
      std::vector<Atom> fresh;
      for (const Atom& a : combined.atoms)
        if (!alone.contains(a)) fresh.push_back(a);
      if (fresh.empty()) continue;
      const Atom example = fresh[static_cast<std::size_t>(
          rng_.below(static_cast<int>(fresh.size())))];

      OpenProgram program{background, u, constraints};
      if (!check_inductive_solution(program, example, hypothesis)) continue;
      return {std::move(program), example, std::move(hypothesis)};
    } catch (const EngineError&) {
      continue;
    }
  }
  throw EngineError("instance generator exhausted its attempts");
}

Theory random_small_program(Rng& rng) {
  const int n_consts = 1 + rng.below(3);
  const int n_preds = 2 + rng.below(2);
  std::vector<PredicateSignature> preds;
  for (int i = 0; i < n_preds; ++i) preds.push_back({kPredicates[i], rng.below(2)});

  Theory t;
  const int n_clauses = 2 + rng.below(5);
  for (int k = 0; k < n_clauses; ++k) {
    const int vars = k == 0 ? 0 : 1;
    Atom head = random_atom(rng, preds, n_consts, vars);
    std::set<Atom> body;
    if (k > 0) {
      const int n_body = rng.below(3);
      for (int j = 0; j < n_body; ++j) body.insert(random_atom(rng, preds, n_consts, vars));
    }
    t.insert(Clause(std::move(head), std::move(body)));
  }

  // A program with variables but no constant cannot be grounded; anchor it.
  std::set<std::string> consts;
  t.collect_constants(consts);
  if (theory_has_variables(t) && consts.empty()) {
    for (const PredicateSignature& s : preds) {
      if (s.arity != 1) continue;
      t.insert(Clause(Atom(s.name, {Term::constant(kConstants[0])})));
      break;
    }
  }
  return t;
}

namespace {

Term random_pair_term(Rng& rng, int n_consts, int n_vars, bool allow_f) {
  if (n_vars > 0 && rng.chance(2, 5)) return Term::variable(kVariables[rng.below(n_vars)]);
  Term c = Term::constant(kConstants[rng.below(n_consts)]);
  if (allow_f && rng.chance(1, 3)) return Term::compound("f", {std::move(c)});
  return c;
}

Clause random_pair_clause(Rng& rng, int n_consts, int n_vars, bool allow_f) {
  // Fixed arities here so random pairs never clash on signature.
  const std::vector<PredicateSignature> preds{{"p", 2}, {"q", 1}, {"r", 2}};
  const auto draw_atom = [&]() {
    const PredicateSignature& s =
        preds[static_cast<std::size_t>(rng.below(static_cast<int>(preds.size())))];
    std::vector<Term> args;
    for (int i = 0; i < s.arity; ++i)
      args.push_back(random_pair_term(rng, n_consts, n_vars, allow_f));
    return Atom(s.name, std::move(args));
  };
  Atom head = draw_atom();
  std::set<Atom> body;
  const int n_body = rng.below(3);
  for (int j = 0; j < n_body; ++j) body.insert(draw_atom());
  return Clause(std::move(head), std::move(body));
}

std::size_t distinct_subterms(const Clause& d) {
  std::vector<Term> all;
  for (const Term& t : d.head().args()) t.collect_subterms(all);
  for (const Atom& a : d.body())
    for (const Term& t : a.args()) t.collect_subterms(all);
  return std::set<Term>(all.begin(), all.end()).size();
}

}  // namespace

std::pair<Clause, Clause> random_clause_pair(Rng& rng) {
  while (true) {
    const int mode = rng.below(3);
    const int n_consts = 1 + rng.below(3);
    const bool allow_f = rng.chance(1, 3);

    Clause c = random_pair_clause(rng, n_consts, 3, allow_f);
    Clause d = c;
    if (mode == 0 || mode == 2) {
      // Instantiate c, then pad the body a little.
      Substitution theta;
      for (const std::string& v : c.variables())
        theta.bind(v, random_pair_term(rng, n_consts, 0, allow_f));
      Clause image = theta(c);
      std::set<Atom> body = image.body();
      const int extra = rng.below(2);
      for (int j = 0; j < extra; ++j) {
        Clause filler = random_pair_clause(rng, n_consts, 0, allow_f);
        body.insert(filler.head());
      }
      d = Clause(image.head(), std::move(body));
      if (mode == 2) {
        // Damage the instance: usually breaks subsumption, not always.
        const int hit = rng.below(3);
        if (hit == 0) {
          d = Clause(Atom("t", d.head().args()), d.body());
        } else if (hit == 1 && !d.body().empty()) {
          std::set<Atom> smaller = d.body();
          smaller.erase(smaller.begin());
          d = Clause(d.head(), std::move(smaller));
        } else if (!d.head().args().empty()) {
          std::vector<Term> args = d.head().args();
          args[0] = Term::constant("d");
          d = Clause(Atom(d.head().predicate(), std::move(args)), d.body());
        }
      }
    } else {
      d = random_pair_clause(rng, n_consts, 1, allow_f);
    }

    if (c.variables().size() > 4) continue;
    if (distinct_subterms(d) > 8) continue;
    return {std::move(c), std::move(d)};
  }
}

}  // namespace ctkit
