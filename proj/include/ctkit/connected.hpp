#pragma once

#include <string>
#include <vector>

#include "ctkit/entail.hpp"
#include "ctkit/term.hpp"

namespace ctkit {

/// A ground theory split into layers. layers()[0] is layer 1, the one the
/// example sits on; the last layer rests on the background alone. Layers
/// are disjoint and may be empty, but at least one layer exists and at
/// least one clause overall.
class LayeredTheory {
public:
  explicit LayeredTheory(std::vector<Theory> layers);

  const std::vector<Theory>& layers() const { return layers_; }
  std::size_t layer_count() const { return layers_.size(); }
  const Theory& layer(std::size_t i) const { return layers_.at(i); }

  Theory union_theory() const;

private:
  std::vector<Theory> layers_;
};

struct ConditionFailure {
  std::string condition;
  std::string detail;
};

/// Outcome of checking the layering conditions, one flag per condition.
/// `condition_chain[i]` covers the step from layer i+2 down to layer i+1
/// (so it is empty for a single layer).
struct VerificationReport {
  bool condition_base = false;
  std::vector<bool> condition_chain;
  bool condition_example = false;
  bool condition_consistent = false;
  bool condition_abducible = false;
  std::vector<ConditionFailure> failures;

  bool chain_ok() const;
  bool pass() const;
};

/// Checks that lt is a connected theory for the program and example:
/// the deepest layer's bodies follow from the background, each layer's
/// bodies follow from the background plus the heads of deeper layers, the
/// example follows from the background plus all heads, the union respects
/// the integrity constraints, and every head predicate is abducible.
VerificationReport verify_connected_theory(const OpenProgram& p, const Atom& e,
                                           const LayeredTheory& lt,
                                           const EvalOptions& opts = {});

/// Builds a connected theory from an inductive solution: takes the ground
/// clause instances that derive e under background + hypothesis, keeps
/// those that are instances of hypothesis clauses, and layers them by
/// derivation depth. Errors when the preconditions fail or when the
/// derivation never uses the hypothesis.
LayeredTheory construct_connected_theory(const OpenProgram& p, const Theory& hypothesis,
                                         const Atom& e, const EvalOptions& opts = {});

/// Splits a ground theory into layers by the round at which each head is
/// derived in the least model of background + theory: heads derived first
/// land in the deepest layer, the last-derived heads form layer 1. Errors
/// when some head is never derived.
LayeredTheory assign_layers(const Theory& t, const Theory& background,
                            const EvalOptions& opts = {});
LayeredTheory assign_layers_in(const Theory& t, const Theory& background,
                               const UniverseScope& scope, const EvalOptions& opts = {});

std::string to_text(const LayeredTheory& lt);

}  // namespace ctkit
