#include "ctkit/entail.hpp"

#include <algorithm>
#include <optional>
#include <vector>

#include "ctkit/subsume.hpp"

namespace ctkit {

namespace {

constexpr std::size_t kUniverseCap = 20000;

void note_ground_subterms(const Term& t, std::set<Term>& out) {
  if (!t.ground()) {
    // A non-ground compound can still contain ground subterms.
    for (const Term& a : t.args()) note_ground_subterms(a, out);
    return;
  }
  std::vector<Term> subs;
  t.collect_subterms(subs);
  out.insert(subs.begin(), subs.end());
}

}  // namespace

UniverseScope& UniverseScope::add(const Term& t) {
  t.collect_constants(constants_);
  t.collect_functors(functors_);
  note_ground_subterms(t, ground_terms_);
  return *this;
}

UniverseScope& UniverseScope::add(const Atom& a) {
  for (const Term& t : a.args()) add(t);
  return *this;
}

UniverseScope& UniverseScope::add(const Clause& c) {
  add(c.head());
  for (const Atom& a : c.body()) add(a);
  return *this;
}

UniverseScope& UniverseScope::add(const Theory& t) {
  for (const Clause& c : t.clauses()) add(c);
  return *this;
}

UniverseScope& UniverseScope::add(const DefiniteGoal& g) {
  for (const Atom& a : g.body()) add(a);
  return *this;
}

UniverseScope& UniverseScope::add(const std::set<DefiniteGoal>& goals) {
  for (const DefiniteGoal& g : goals) add(g);
  return *this;
}

std::set<Term> herbrand_universe(const UniverseScope& scope, const EvalOptions& opts) {
  std::set<Term> universe;
  for (const std::string& c : scope.constants()) universe.insert(Term::constant(c));
  universe.insert(scope.ground_terms().begin(), scope.ground_terms().end());
  if (scope.functors().empty()) return universe;

  if (!opts.depth_bound)
    throw EngineError(
        "the vocabulary contains function symbols; a depth bound is required to ground "
        "variables");
  const int bound = *opts.depth_bound;
  if (bound < 0) throw EngineError("depth bound must be nonnegative");

  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Term> pool(universe.begin(), universe.end());
    for (const auto& [functor, arity] : scope.functors()) {
      std::vector<std::size_t> pick(static_cast<std::size_t>(arity), 0);
      if (pool.empty()) break;
      while (true) {
        std::vector<Term> args;
        args.reserve(pick.size());
        for (std::size_t i : pick) args.push_back(pool[i]);
        Term t = Term::compound(functor, std::move(args));
        if (t.depth() <= bound && universe.insert(std::move(t)).second) grew = true;
        std::size_t i = 0;
        while (i < pick.size()) {
          if (++pick[i] < pool.size()) break;
          pick[i] = 0;
          ++i;
        }
        if (i == pick.size()) break;
      }
    }
    if (universe.size() > kUniverseCap)
      throw EngineError("Herbrand universe exceeds the engine bound of 20000 terms");
  }
  return universe;
}

namespace {

struct GroundRule {
  Atom head;
  std::vector<Atom> body;
};

int clause_term_depth(const Clause& c) {
  int d = 0;
  const auto scan = [&d](const Atom& a) {
    for (const Term& t : a.args()) d = std::max(d, t.depth());
  };
  scan(c.head());
  for (const Atom& a : c.body()) scan(a);
  return d;
}

// Grounds every clause over the scope's universe. Instances whose terms
// grow past the depth cap are dropped; ground input clauses always stay.
std::vector<GroundRule> ground_rules(const Theory& t, const UniverseScope& scope,
                                     const EvalOptions& opts) {
  const bool has_functors = !scope.functors().empty();
  int depth_cap = 0;
  if (has_functors && opts.depth_bound) {
    depth_cap = *opts.depth_bound;
    for (const Term& g : scope.ground_terms()) depth_cap = std::max(depth_cap, g.depth());
  }

  std::optional<std::set<Term>> universe;
  std::set<Clause> instances;
  for (const Clause& c : t.clauses()) {
    if (c.ground()) {
      instances.insert(c);
      continue;
    }
    if (!universe) universe = herbrand_universe(scope, opts);
    for (const Clause& g : ground_instances(c, *universe)) {
      if (has_functors && clause_term_depth(g) > depth_cap) continue;
      instances.insert(g);
    }
  }

  std::vector<GroundRule> rules;
  rules.reserve(instances.size());
  for (const Clause& c : instances)
    rules.push_back(GroundRule{c.head(), {c.body().begin(), c.body().end()}});
  return rules;
}

// Synchronous round-based fixpoint. Round r adds every head whose rule
// body holds after round r-1; the first rule in clause order that fires
// for an atom becomes its provenance.
LeastModel fixpoint(const std::vector<GroundRule>& rules) {
  LeastModel m;
  int round = 1;
  while (true) {
    std::vector<const GroundRule*> firing;
    std::set<Atom> new_heads;
    for (const GroundRule& r : rules) {
      if (m.depth.count(r.head) != 0 || new_heads.count(r.head) != 0) continue;
      bool ready = true;
      bool touches_last_round = false;
      for (const Atom& b : r.body) {
        auto it = m.depth.find(b);
        if (it == m.depth.end()) {
          ready = false;
          break;
        }
        if (it->second == round - 1) touches_last_round = true;
      }
      if (!ready) continue;
      // A rule is new at this round when a body atom only just appeared;
      // facts are new exactly at round 1.
      if (r.body.empty() ? round != 1 : !touches_last_round) continue;
      firing.push_back(&r);
      new_heads.insert(r.head);
    }
    if (firing.empty()) break;
    for (const GroundRule* r : firing) {
      m.atoms.insert(r->head);
      m.depth.emplace(r->head, round);
      m.provenance.emplace(r->head, Clause(r->head, {r->body.begin(), r->body.end()}));
    }
    ++round;
  }
  return m;
}

bool embed_goal(const std::vector<Atom>& literals, std::size_t i, const MatchBindings& b,
                const std::vector<Atom>& pool) {
  if (i == literals.size()) return true;
  for (const Atom& fact : pool) {
    MatchBindings trial = b;
    if (match_atom(literals[i], fact, trial) && embed_goal(literals, i + 1, trial, pool))
      return true;
  }
  return false;
}

bool goal_violated(const LeastModel& m, const DefiniteGoal& g) {
  std::vector<Atom> literals(g.body().begin(), g.body().end());
  std::vector<Atom> pool(m.atoms.begin(), m.atoms.end());
  return embed_goal(literals, 0, MatchBindings{}, pool);
}

}  // namespace

LeastModel least_model(const Theory& t, const EvalOptions& opts) {
  UniverseScope scope;
  scope.add(t);
  return least_model_in(t, scope, opts);
}

LeastModel least_model_in(const Theory& t, const UniverseScope& scope, const EvalOptions& opts) {
  return fixpoint(ground_rules(t, scope, opts));
}

bool entails_atom(const Theory& t, const Atom& a, const EvalOptions& opts) {
  UniverseScope scope;
  return entails_atom_in(t, a, scope, opts);
}

bool entails_atom_in(const Theory& t, const Atom& a, const UniverseScope& scope,
                     const EvalOptions& opts) {
  if (!a.ground()) throw EngineError("entails_atom: the query atom must be ground");
  UniverseScope full = scope;
  full.add(t).add(a);
  return least_model_in(t, full, opts).contains(a);
}

bool entails_ground_clause(const Theory& t, const Clause& d, const EvalOptions& opts) {
  UniverseScope scope;
  return entails_ground_clause_in(t, d, scope, opts);
}

bool entails_ground_clause_in(const Theory& t, const Clause& d, const UniverseScope& scope,
                              const EvalOptions& opts) {
  if (!d.ground()) throw EngineError("entails_ground_clause: the query clause must be ground");
  UniverseScope full = scope;
  full.add(t).add(d);
  Theory extended = t.united(facts(d.body()));
  return least_model_in(extended, full, opts).contains(d.head());
}

bool is_consistent(const Theory& background, const Theory& hypothesis,
                   const std::set<DefiniteGoal>& constraints, const EvalOptions& opts) {
  UniverseScope scope;
  return is_consistent_in(background, hypothesis, constraints, scope, opts);
}

bool is_consistent_in(const Theory& background, const Theory& hypothesis,
                      const std::set<DefiniteGoal>& constraints, const UniverseScope& scope,
                      const EvalOptions& opts) {
  UniverseScope full = scope;
  full.add(background).add(hypothesis).add(constraints);
  LeastModel m = least_model_in(background.united(hypothesis), full, opts);
  for (const DefiniteGoal& g : constraints)
    if (goal_violated(m, g)) return false;
  return true;
}

Theory provenance_support(const LeastModel& m, const Atom& e) {
  Theory support;
  std::set<Atom> visited;
  std::vector<Atom> stack{e};
  while (!stack.empty()) {
    Atom a = stack.back();
    stack.pop_back();
    if (!visited.insert(a).second) continue;
    auto it = m.provenance.find(a);
    if (it == m.provenance.end())
      throw EngineError("no derivation recorded for " + to_string(a));
    support.insert(it->second);
    for (const Atom& b : it->second.body()) stack.push_back(b);
  }
  return support;
}

Theory ground_support(const Theory& t, const Atom& e, const EvalOptions& opts) {
  UniverseScope scope;
  return ground_support_in(t, e, scope, opts);
}

Theory ground_support_in(const Theory& t, const Atom& e, const UniverseScope& scope,
                         const EvalOptions& opts) {
  if (!e.ground()) throw EngineError("ground_support: the example atom must be ground");
  UniverseScope full = scope;
  full.add(t).add(e);
  LeastModel m = least_model_in(t, full, opts);
  if (!m.contains(e))
    throw EngineError("ground_support: the theory does not entail " + to_string(e));
  return provenance_support(m, e);
}

}  // namespace ctkit
