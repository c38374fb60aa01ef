#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>

#include "ctkit/term.hpp"

namespace ctkit {

struct EvalOptions {
  /// Maximum term depth admitted when the vocabulary contains function
  /// symbols. Without it, grounding a program with function symbols and
  /// variables is refused.
  std::optional<int> depth_bound;
};

/// Symbols that shape the Herbrand universe of an evaluation. Operations
/// that judge one theory inside a larger problem (program plus example
/// plus constraints) pool every participant's constants, function symbols,
/// and ground terms here before grounding.
class UniverseScope {
public:
  UniverseScope& add(const Term& t);
  UniverseScope& add(const Atom& a);
  UniverseScope& add(const Clause& c);
  UniverseScope& add(const Theory& t);
  UniverseScope& add(const DefiniteGoal& g);
  UniverseScope& add(const std::set<DefiniteGoal>& goals);

  const std::set<std::string>& constants() const { return constants_; }
  const std::map<std::string, int>& functors() const { return functors_; }
  const std::set<Term>& ground_terms() const { return ground_terms_; }

private:
  std::set<std::string> constants_;
  std::map<std::string, int> functors_;
  std::set<Term> ground_terms_;  // ground subterms seen in the inputs
};

/// The ground terms every variable may range over: all constants in scope,
/// closed under function application up to the depth bound, plus every
/// ground subterm that already appears in the inputs.
std::set<Term> herbrand_universe(const UniverseScope& scope, const EvalOptions& opts);

struct LeastModel {
  std::set<Atom> atoms;
  /// Round of the fixpoint iteration that first derived the atom; facts
  /// are round 1.
  std::map<Atom, int> depth;
  /// The ground clause instance that first derived the atom.
  std::map<Atom, Clause> provenance;

  bool contains(const Atom& a) const { return atoms.count(a) != 0; }
};

LeastModel least_model(const Theory& t, const EvalOptions& opts = {});
LeastModel least_model_in(const Theory& t, const UniverseScope& scope, const EvalOptions& opts = {});

/// Whether the theory derives the ground atom. The atom's symbols join the
/// universe, so queries over constants the theory never mentions are legal.
bool entails_atom(const Theory& t, const Atom& a, const EvalOptions& opts = {});
bool entails_atom_in(const Theory& t, const Atom& a, const UniverseScope& scope,
                     const EvalOptions& opts = {});

/// Whether the theory entails the ground clause d: its body atoms are
/// added as facts and the head must then be derivable.
bool entails_ground_clause(const Theory& t, const Clause& d, const EvalOptions& opts = {});
bool entails_ground_clause_in(const Theory& t, const Clause& d, const UniverseScope& scope,
                              const EvalOptions& opts = {});

/// Whether background plus hypothesis violates none of the constraints: a
/// goal is violated when some grounding of its body holds in the least
/// model.
bool is_consistent(const Theory& background, const Theory& hypothesis,
                   const std::set<DefiniteGoal>& constraints, const EvalOptions& opts = {});
bool is_consistent_in(const Theory& background, const Theory& hypothesis,
                      const std::set<DefiniteGoal>& constraints, const UniverseScope& scope,
                      const EvalOptions& opts = {});

/// The ground clause instances that the derivation of e actually used:
/// the provenance of e, then recursively of every body atom. Errors when
/// the theory does not entail e.
Theory ground_support(const Theory& t, const Atom& e, const EvalOptions& opts = {});
Theory ground_support_in(const Theory& t, const Atom& e, const UniverseScope& scope,
                         const EvalOptions& opts = {});

/// The support walk on an already computed model.
Theory provenance_support(const LeastModel& m, const Atom& e);

}  // namespace ctkit
