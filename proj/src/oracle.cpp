#include "ctkit/oracle.hpp"

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace ctkit {

namespace {

// The oracle carries its own substitution code on purpose: it must not
// share logic with the machinery it cross-checks.
Term oracle_subst(const Term& t, const std::map<std::string, Term>& m) {
  if (t.is_variable()) {
    auto it = m.find(t.name());
    return it == m.end() ? t : it->second;
  }
  if (t.args().empty()) return t;
  std::vector<Term> args;
  args.reserve(t.args().size());
  for (const Term& a : t.args()) args.push_back(oracle_subst(a, m));
  return Term::compound(t.name(), std::move(args));
}

Atom oracle_subst(const Atom& a, const std::map<std::string, Term>& m) {
  std::vector<Term> args;
  args.reserve(a.args().size());
  for (const Term& t : a.args()) args.push_back(oracle_subst(t, m));
  return Atom(a.predicate(), std::move(args));
}

}  // namespace

std::set<Atom> brute_minimal_model(const Theory& t) {
  std::set<std::string> constant_names;
  t.collect_constants(constant_names);
  std::vector<Term> universe;
  for (const std::string& name : constant_names) universe.push_back(Term::constant(name));

  // Ground every clause by running an odometer over its variables.
  std::vector<std::pair<Atom, std::set<Atom>>> rules;
  for (const Clause& c : t.clauses()) {
    const std::vector<std::string> vars = c.variables();
    if (vars.empty()) {
      rules.emplace_back(c.head(), c.body());
      continue;
    }
    if (universe.empty())
      throw EngineError("oracle: cannot ground variables without any constant");
    std::vector<std::size_t> pick(vars.size(), 0);
    while (true) {
      std::map<std::string, Term> m;
      for (std::size_t i = 0; i < vars.size(); ++i) m.emplace(vars[i], universe[pick[i]]);
      std::set<Atom> body;
      for (const Atom& a : c.body()) body.insert(oracle_subst(a, m));
      rules.emplace_back(oracle_subst(c.head(), m), std::move(body));
      std::size_t i = 0;
      while (i < pick.size()) {
        if (++pick[i] < universe.size()) break;
        pick[i] = 0;
        ++i;
      }
      if (i == pick.size()) break;
    }
  }

  // Herbrand base: every predicate over every constant tuple, plus any
  // ground atom the rules mention directly (compound terms included).
  std::set<Atom> base;
  std::set<std::pair<std::string, int>> predicates;
  for (const Clause& c : t.clauses()) {
    predicates.emplace(c.head().predicate(), c.head().arity());
    for (const Atom& a : c.body()) predicates.emplace(a.predicate(), a.arity());
  }
  for (const auto& [name, arity] : predicates) {
    if (arity == 0) {
      base.insert(Atom(name, {}));
      continue;
    }
    if (universe.empty()) continue;
    std::vector<std::size_t> pick(static_cast<std::size_t>(arity), 0);
    while (true) {
      std::vector<Term> args;
      args.reserve(pick.size());
      for (std::size_t i : pick) args.push_back(universe[i]);
      base.insert(Atom(name, std::move(args)));
      std::size_t i = 0;
      while (i < pick.size()) {
        if (++pick[i] < universe.size()) break;
        pick[i] = 0;
        ++i;
      }
      if (i == pick.size()) break;
    }
  }
  for (const auto& [head, body] : rules) {
    base.insert(head);
    base.insert(body.begin(), body.end());
  }

  if (base.size() > 16)
    throw EngineError("oracle bound exceeded: Herbrand base larger than 16 atoms");

  std::vector<Atom> atoms(base.begin(), base.end());
  std::map<Atom, std::size_t> index;
  for (std::size_t i = 0; i < atoms.size(); ++i) index.emplace(atoms[i], i);

  // Index the rules once, then intersect all closed subsets.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> bit_rules;  // head bit, body mask
  for (const auto& [head, body] : rules) {
    std::uint32_t body_mask = 0;
    for (const Atom& a : body) body_mask |= std::uint32_t{1} << index.at(a);
    bit_rules.emplace_back(std::uint32_t{1} << index.at(head), body_mask);
  }

  const std::uint32_t limit = std::uint32_t{1} << atoms.size();
  std::uint32_t meet = limit - 1;  // the full base is always a model
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    bool closed = true;
    for (const auto& [head_bit, body_mask] : bit_rules) {
      if ((mask & body_mask) == body_mask && (mask & head_bit) == 0) {
        closed = false;
        break;
      }
    }
    if (closed) meet &= mask;
  }

  std::set<Atom> model;
  for (std::size_t i = 0; i < atoms.size(); ++i)
    if (meet & (std::uint32_t{1} << i)) model.insert(atoms[i]);
  return model;
}

std::optional<Substitution> brute_subsumes(const Clause& c, const Clause& d) {
  const std::vector<std::string> vars = c.variables();
  if (vars.size() > 4)
    throw EngineError("oracle bound exceeded: more than 4 variables in the left clause");

  // For theta(c) to land inside d, every variable image must be a subterm
  // of d, so enumerating that pool is exhaustive.
  std::vector<Term> all;
  for (const Term& t : d.head().args()) t.collect_subterms(all);
  for (const Atom& a : d.body())
    for (const Term& t : a.args()) t.collect_subterms(all);
  std::set<Term> pool_set(all.begin(), all.end());
  if (pool_set.size() > 8)
    throw EngineError("oracle bound exceeded: more than 8 distinct subterms in the right clause");
  const std::vector<Term> pool(pool_set.begin(), pool_set.end());

  const auto landed = [&](const std::map<std::string, Term>& m) {
    if (oracle_subst(c.head(), m) != d.head()) return false;
    for (const Atom& a : c.body())
      if (d.body().count(oracle_subst(a, m)) == 0) return false;
    return true;
  };
  const auto wrap = [&](const std::map<std::string, Term>& m) {
    Substitution s;
    for (const auto& [var, term] : m) s.bind(var, term);
    return s;
  };

  if (vars.empty())
    return landed({}) ? std::optional<Substitution>(Substitution{}) : std::nullopt;
  if (pool.empty()) return std::nullopt;

  // Lexicographic over the variable images, first variable most
  // significant, so the reported witness is a fixed representative.
  std::vector<std::size_t> pick(vars.size(), 0);
  while (true) {
    std::map<std::string, Term> m;
    for (std::size_t i = 0; i < vars.size(); ++i) m.emplace(vars[i], pool[pick[i]]);
    if (landed(m)) return wrap(m);
    std::size_t i = pick.size();
    while (i > 0) {
      --i;
      if (++pick[i] < pool.size()) break;
      pick[i] = 0;
      if (i == 0) return std::nullopt;
    }
  }
}

}  // namespace ctkit
