#pragma once

#include <map>
#include <vector>

#include "ctkit/connected.hpp"
#include "ctkit/entail.hpp"
#include "ctkit/subsume.hpp"
#include "ctkit/term.hpp"

namespace ctkit {

struct SearchConfig {
  /// Generalizations tried per clause of a candidate ground theory.
  int generalization_budget = 8;
  /// Hypotheses returned at most.
  int max_candidates = 8;
  /// Distinct variables allowed per hypothesis clause.
  int max_clause_vars = 3;
};

/// Evidence that a hypothesis derives, layer-checks, subsumes, and entails
/// a ground theory built for one example.
struct CtisWitness {
  LayeredTheory theory;
  /// Each ground clause mapped to the hypothesis clause subsuming it and
  /// the substitution witnessing that; partial when subsumption fails.
  TheorySubsumptionWitness subsumption_map;
  /// Whether the hypothesis alone entails each ground clause.
  std::map<Clause, bool> entailment_flags;
  VerificationReport report;

  bool subsumption_total() const;
  bool entailment_all() const;
  /// Hypothesis entails the theory and the layering conditions hold.
  bool ctg_holds() const { return report.pass() && entailment_all(); }
  /// Hypothesis theory-subsumes the theory and the layering conditions hold.
  bool ctis_holds() const { return report.pass() && subsumption_total(); }
};

/// Whether background plus hypothesis derives the example without breaking
/// a constraint.
bool check_inductive_solution(const OpenProgram& p, const Atom& e, const Theory& hypothesis,
                              const EvalOptions& opts = {});

/// Builds the subsumption and entailment evidence for a caller-supplied
/// layered theory, without constructing one.
CtisWitness evaluate_witness(const OpenProgram& p, const Atom& e, const Theory& hypothesis,
                             const LayeredTheory& lt, const EvalOptions& opts = {});

/// Constructs the connected theory for (p, e, hypothesis) and fills the
/// entailment flags; the hypothesis generalizes the theory clause-wise
/// exactly when every flag is true and the report passes.
CtisWitness derive_ctg(const OpenProgram& p, const Atom& e, const Theory& hypothesis,
                       const EvalOptions& opts = {});

/// Constructs the connected theory and finds a subsuming hypothesis clause
/// with substitution for every ground clause. A partial map on a passing
/// report signals an engine bug, not a property of the input.
CtisWitness verify_ctis(const OpenProgram& p, const Atom& e, const Theory& hypothesis,
                        const EvalOptions& opts = {});

/// Searches for hypotheses explaining the example: enumerates ground
/// theories with abducible heads, smallest first, keeps those whose every
/// clause sits on the example's derivation, generalizes each clause, and
/// returns the assembled hypotheses that pass check_inductive_solution.
/// Errors when the example is not derivable even with every abducible
/// atom granted.
std::vector<Theory> induce(const OpenProgram& p, const Atom& e, const SearchConfig& cfg,
                           const EvalOptions& opts = {});

}  // namespace ctkit
