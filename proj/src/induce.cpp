#include "ctkit/induce.hpp"

#include <algorithm>
#include <utility>

namespace ctkit {

bool CtisWitness::subsumption_total() const {
  for (const Theory& layer : theory.layers())
    for (const Clause& c : layer.clauses())
      if (subsumption_map.count(c) == 0) return false;
  return true;
}

bool CtisWitness::entailment_all() const {
  for (const Theory& layer : theory.layers())
    for (const Clause& c : layer.clauses()) {
      auto it = entailment_flags.find(c);
      if (it == entailment_flags.end() || !it->second) return false;
    }
  return true;
}

bool check_inductive_solution(const OpenProgram& p, const Atom& e, const Theory& hypothesis,
                              const EvalOptions& opts) {
  if (!e.ground()) throw EngineError("the example atom must be ground");
  UniverseScope scope;
  scope.add(p.background).add(hypothesis).add(e).add(p.constraints);
  return entails_atom_in(p.background.united(hypothesis), e, scope, opts) &&
         is_consistent_in(p.background, hypothesis, p.constraints, scope, opts);
}

CtisWitness evaluate_witness(const OpenProgram& p, const Atom& e, const Theory& hypothesis,
                             const LayeredTheory& lt, const EvalOptions& opts) {
  CtisWitness w{lt, {}, {}, verify_connected_theory(p, e, lt, opts)};

  UniverseScope scope;
  scope.add(p.background).add(hypothesis).add(e).add(p.constraints);
  const Theory t = lt.union_theory();
  scope.add(t);

  for (const Clause& d : t.clauses()) {
    for (const Clause& c : hypothesis.clauses()) {
      if (auto theta = clause_subsumes(c, d)) {
        w.subsumption_map.emplace(d, std::make_pair(c, *theta));
        break;
      }
    }
    w.entailment_flags.emplace(d, entails_ground_clause_in(hypothesis, d, scope, opts));
  }
  return w;
}

CtisWitness derive_ctg(const OpenProgram& p, const Atom& e, const Theory& hypothesis,
                       const EvalOptions& opts) {
  LayeredTheory lt = construct_connected_theory(p, hypothesis, e, opts);
  return evaluate_witness(p, e, hypothesis, lt, opts);
}

CtisWitness verify_ctis(const OpenProgram& p, const Atom& e, const Theory& hypothesis,
                        const EvalOptions& opts) {
  return derive_ctg(p, e, hypothesis, opts);
}

namespace {

// Internal search bounds; SearchConfig governs the user-visible knobs.
constexpr std::size_t kMaxBodyAtoms = 2;
constexpr std::size_t kMaxTheorySize = 3;
constexpr std::size_t kWorkCap = 50000;

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  std::size_t i = k;
  while (i > 0) {
    --i;
    if (idx[i] != i + n - k) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<Atom> abducible_atoms(const OpenProgram& p, const std::set<Term>& universe) {
  std::set<Atom> out;
  for (const auto& [name, arity] : p.abducibles) {
    if (arity == 0) {
      out.insert(Atom(name, {}));
      continue;
    }
    if (universe.empty()) continue;
    const std::vector<Term> pool(universe.begin(), universe.end());
    std::vector<std::size_t> pick(static_cast<std::size_t>(arity), 0);
    while (true) {
      std::vector<Term> args;
      args.reserve(pick.size());
      for (std::size_t i : pick) args.push_back(pool[i]);
      out.insert(Atom(name, std::move(args)));
      std::size_t i = 0;
      while (i < pick.size()) {
        if (++pick[i] < pool.size()) break;
        pick[i] = 0;
        ++i;
      }
      if (i == pick.size()) break;
    }
  }
  return {out.begin(), out.end()};
}

}  // namespace

std::vector<Theory> induce(const OpenProgram& p, const Atom& e, const SearchConfig& cfg,
                           const EvalOptions& opts) {
  if (!e.ground()) throw EngineError("the example atom must be ground");
  if (cfg.generalization_budget < 1) throw EngineError("generalization budget must be positive");
  if (cfg.max_candidates < 1) throw EngineError("candidate limit must be positive");
  if (cfg.max_clause_vars < 0) throw EngineError("variable limit must be nonnegative");

  UniverseScope scope;
  scope.add(p.background).add(e).add(p.constraints);
  const std::set<Term> universe = herbrand_universe(scope, opts);

  // With every abducible atom granted, the example must follow; otherwise
  // no abducible-headed hypothesis can ever reach it.
  const std::vector<Atom> heads = abducible_atoms(p, universe);
  const Theory ceiling =
      p.background.united(facts(std::set<Atom>(heads.begin(), heads.end())));
  const LeastModel widest = least_model_in(ceiling, scope, opts);
  if (!widest.contains(e))
    throw EngineError("the example cannot be reached through the abducible predicates");

  // Candidate ground clauses: an abducible head over any body drawn from
  // the widest reachable model.
  const std::vector<Atom> body_pool(widest.atoms.begin(), widest.atoms.end());
  std::vector<Clause> pool;
  for (const Atom& h : heads) {
    std::vector<std::set<Atom>> bodies{{}};
    for (std::size_t i = 0; i < body_pool.size(); ++i) {
      if (body_pool[i] == h) continue;
      bodies.push_back({body_pool[i]});
      if (kMaxBodyAtoms < 2) continue;
      for (std::size_t j = i + 1; j < body_pool.size(); ++j)
        if (body_pool[j] != h) bodies.push_back({body_pool[i], body_pool[j]});
    }
    for (std::set<Atom>& b : bodies) pool.emplace_back(h, std::move(b));
  }
  std::sort(pool.begin(), pool.end(), [](const Clause& a, const Clause& b) {
    if (a.body().size() != b.body().size()) return a.body().size() < b.body().size();
    return a < b;
  });

  std::vector<Theory> results;
  std::set<Theory> returned;
  std::set<Theory> tried;
  std::size_t work = 0;

  const auto try_theory = [&](const Theory& ground) {
    if (!tried.insert(ground).second) return;
    UniverseScope local = scope;
    local.add(ground);
    LeastModel m = least_model_in(p.background.united(ground), local, opts);
    if (!m.contains(e)) return;
    // Every candidate clause must sit on the example's derivation, else a
    // smaller theory already covers this case.
    const Theory support = provenance_support(m, e);
    for (const Clause& c : ground.clauses())
      if (!support.contains(c)) return;
    if (!is_consistent_in(p.background, ground, p.constraints, local, opts)) return;

    std::vector<std::vector<Clause>> choices;
    for (const Clause& d : ground.clauses())
      choices.push_back(generalize_clause(d, cfg.generalization_budget, cfg.max_clause_vars));
    for (const std::vector<Clause>& options : choices)
      if (options.empty()) return;

    std::vector<std::size_t> pick(choices.size(), 0);
    while (true) {
      Theory hypothesis;
      for (std::size_t i = 0; i < pick.size(); ++i) hypothesis.insert(choices[i][pick[i]]);
      if (returned.count(hypothesis) == 0) {
        ++work;
        if (check_inductive_solution(p, e, hypothesis, opts)) {
          returned.insert(hypothesis);
          results.push_back(hypothesis);
          if (results.size() >= static_cast<std::size_t>(cfg.max_candidates)) return;
        }
      }
      if (work >= kWorkCap) return;
      std::size_t i = 0;
      while (i < pick.size()) {
        if (++pick[i] < choices[i].size()) break;
        pick[i] = 0;
        ++i;
      }
      if (i == pick.size()) break;
    }
  };

  // Smallest theories first: singletons, then pairs, then triples.
  for (std::size_t size = 1; size <= std::min(kMaxTheorySize, pool.size()); ++size) {
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    do {
      if (results.size() >= static_cast<std::size_t>(cfg.max_candidates) || work >= kWorkCap)
        return results;
      ++work;
      Theory ground;
      for (std::size_t i : idx) ground.insert(pool[i]);
      try_theory(ground);
    } while (next_combination(idx, pool.size()));
  }
  return results;
}

}  // namespace ctkit
