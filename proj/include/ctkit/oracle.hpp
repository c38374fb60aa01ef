#pragma once

#include <optional>
#include <set>

#include "ctkit/subsume.hpp"
#include "ctkit/term.hpp"

namespace ctkit {

/// Minimal Herbrand model by exhaustive search, written independently of
/// the fixpoint evaluator: grounds the theory over its constants,
/// enumerates every subset of the Herbrand base, keeps those closed under
/// all ground rules, and intersects them. Variables range over constants
/// only; refuses bases larger than 16 atoms.
std::set<Atom> brute_minimal_model(const Theory& t);

/// Theta-subsumption by exhaustive search over every mapping from the
/// left clause's variables to subterms of the right clause, tried in
/// lexicographic order; the first hit is returned. Refuses more than 4
/// variables or more than 8 distinct subterms. Shares only the data model
/// with clause_subsumes, none of its search.
std::optional<Substitution> brute_subsumes(const Clause& c, const Clause& d);

}  // namespace ctkit
