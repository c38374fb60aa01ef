#pragma once

#include <cstdint>
#include <string>

namespace ctkit {

struct HarnessOptions {
  int runs = 500;
  std::uint64_t seed = 0;
};

struct HarnessResult {
  int runs = 0;
  int passed = 0;
  /// Index of the first failing run, -1 when all passed.
  int failed_run = -1;
  /// Serialized counterexample bundle (program, example, hypothesis,
  /// constructed theory, reason); empty when all passed.
  std::string failure;

  bool ok() const { return failed_run < 0 && passed == runs; }
};

/// Generates random inductive solutions and, for each one, constructs the
/// connected theory and checks the whole evidence chain: the layering
/// report passes, the subsumption map is total and every witness
/// re-verifies by application, every theory clause is a ground instance
/// of a hypothesis clause, and the hypothesis entails every theory
/// clause. Stops at the first failure.
HarnessResult run_theorem_harness(const HarnessOptions& opts);

}  // namespace ctkit
