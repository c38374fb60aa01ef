#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ctkit/term.hpp"

namespace ctkit {

/// A finite map from variable names to terms, applied simultaneously.
/// Never binds a variable to itself.
class Substitution {
public:
  Substitution() = default;

  /// Adds a binding; an identity binding is dropped. Returns false when the
  /// variable is already bound to a different term.
  bool bind(const std::string& var, const Term& t);
  const Term* lookup(const std::string& var) const;

  bool empty() const { return bindings_.empty(); }
  std::size_t size() const { return bindings_.size(); }
  const std::map<std::string, Term>& bindings() const { return bindings_; }

  Term operator()(const Term& t) const;
  Atom operator()(const Atom& a) const;
  Clause operator()(const Clause& c) const;

private:
  std::map<std::string, Term> bindings_;
};

int compare(const Substitution& a, const Substitution& b);
bool operator==(const Substitution& a, const Substitution& b);
bool operator<(const Substitution& a, const Substitution& b);
std::string to_string(const Substitution& s);

/// One-way matcher state. Pattern variables commit to target terms;
/// identity commitments are kept internally so that later occurrences of
/// the same variable stay consistent.
class MatchBindings {
public:
  bool bind(const std::string& var, const Term& t);
  const Term* lookup(const std::string& var) const;
  /// Drops identity commitments; applying the result reproduces the match.
  Substitution to_substitution() const;

private:
  std::map<std::string, Term> map_;
};

/// Matches pattern against target, binding only pattern variables.
/// Target variables are treated as opaque symbols.
bool match_term(const Term& pattern, const Term& target, MatchBindings& b);
bool match_atom(const Atom& pattern, const Atom& target, MatchBindings& b);

/// Theta-subsumption between definite clauses: a substitution theta with
/// theta(c).head == d.head and theta(c).body a subset of d.body. The
/// returned witness binds only variables of c. Deterministic: candidate
/// body literals of d are tried by predicate, arity, term size, then
/// canonical order.
std::optional<Substitution> clause_subsumes(const Clause& c, const Clause& d);

using TheorySubsumptionWitness = std::map<Clause, std::pair<Clause, Substitution>>;

/// S theory-subsumes T when every clause of T is subsumed by some clause
/// of S. Returns the per-clause witness map, or absence.
std::optional<TheorySubsumptionWitness> theory_subsumes(const Theory& s, const Theory& t);

/// Instance check: theta with theta(c) == d exactly (equal head, equal
/// body set). d must be ground.
std::optional<Substitution> is_instance(const Clause& c, const Clause& d);

/// Generalizations of a ground clause, every one of which subsumes it.
/// Emits inverse substitutions over the full body first (consistent
/// replacement of constant occurrences by shared or distinct fresh
/// variables, coarsest first), then the same over body-literal subsets,
/// smaller subsets first. No two emissions are equal up to renaming; stops
/// after `budget` emissions.
std::vector<Clause> generalize_clause(const Clause& d, int budget);

/// As above but drops candidates with more than max_vars distinct
/// variables before they count against the budget.
std::vector<Clause> generalize_clause(const Clause& d, int budget, int max_vars);

}  // namespace ctkit
