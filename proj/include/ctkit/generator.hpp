#pragma once

#include <cstdint>
#include <random>
#include <utility>

#include "ctkit/term.hpp"

namespace ctkit {

/// Seeded random source. Draws go through the raw engine so sequences are
/// identical across standard libraries (std distributions are not pinned).
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform-ish draw in [0, n); n >= 1.
  int below(int n) { return static_cast<int>(engine_() % static_cast<std::uint64_t>(n)); }
  /// True with probability num/den.
  bool chance(int num, int den) { return below(den) < num; }

private:
  std::mt19937_64 engine_;
};

/// One generated problem: an open program, an example the background
/// alone does not explain, and a hypothesis that does.
struct GeneratedInstance {
  OpenProgram program;
  Atom example;
  Theory hypothesis;
};

/// Draws random inductive-solution instances: functor-free programs over
/// at most 4 predicates of arity <= 2, at most 4 constants, backgrounds of
/// at most 6 clauses, hypotheses of at most 3 clauses with abducible
/// heads. Samples are rejected until the hypothesis explains an example
/// the background does not, without breaking the constraints.
class InstanceGenerator {
public:
  explicit InstanceGenerator(std::uint64_t seed) : rng_(seed) {}

  GeneratedInstance next();

private:
  Rng rng_;
};

/// Functor-free program whose Herbrand base stays within 12 atoms, for
/// cross-checking the least model against exhaustive search.
Theory random_small_program(Rng& rng);

/// Clause pair inside the exhaustive subsumption checker's bounds. Mixes
/// three draws: D built by instantiating C (subsumption holds), unrelated
/// clauses (usually fails), and instantiations damaged afterwards.
std::pair<Clause, Clause> random_clause_pair(Rng& rng);

}  // namespace ctkit
