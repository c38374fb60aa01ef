#include "ctkit/harness.hpp"

#include <algorithm>
#include <optional>

#include "ctkit/generator.hpp"
#include "ctkit/induce.hpp"
#include "ctkit/json_io.hpp"
#include "ctkit/subsume.hpp"

namespace ctkit {

namespace {

// First complaint about the witness, empty when everything checks out.
// Re-verifies claims directly instead of trusting the flags that produced
// them.
std::string examine(const GeneratedInstance& inst, const CtisWitness& w) {
  if (!w.report.pass()) return "layering conditions failed";

  const Theory theory = w.theory.union_theory();
  for (const Clause& d : theory.clauses()) {
    auto it = w.subsumption_map.find(d);
    if (it == w.subsumption_map.end()) return "no subsumption witness for " + to_string(d);

    const auto& [c, theta] = it->second;
    if (!inst.hypothesis.contains(c))
      return "witness clause is not in the hypothesis: " + to_string(c);
    const Clause applied = theta(c);
    const bool head_ok = applied.head() == d.head();
    const bool body_ok = std::includes(d.body().begin(), d.body().end(),
                                       applied.body().begin(), applied.body().end());
    if (!head_ok || !body_ok) return "witness does not re-verify for " + to_string(d);

    bool instance_of_some = false;
    for (const Clause& hc : inst.hypothesis.clauses()) {
      if (is_instance(hc, d)) {
        instance_of_some = true;
        break;
      }
    }
    if (!instance_of_some) return "clause is not an instance of the hypothesis: " + to_string(d);

    auto flag = w.entailment_flags.find(d);
    if (flag == w.entailment_flags.end() || !flag->second)
      return "hypothesis does not entail " + to_string(d);
  }
  return "";
}

std::string bundle(int run, const std::string& reason, const GeneratedInstance& inst,
                   const CtisWitness* w) {
  ordered_json obj;
  obj["schema"] = kSchemaVersion;
  obj["run"] = run;
  obj["reason"] = reason;
  obj["instance"] = json_of(inst);
  obj["witness"] = w == nullptr ? ordered_json(nullptr) : json_of(*w);
  return obj.dump(2);
}

}  // namespace

HarnessResult run_theorem_harness(const HarnessOptions& opts) {
  if (opts.runs < 1) throw EngineError("the harness needs at least one run");
  HarnessResult result;
  result.runs = opts.runs;

  InstanceGenerator gen(opts.seed);
  for (int run = 0; run < opts.runs; ++run) {
    const GeneratedInstance inst = gen.next();
    std::optional<CtisWitness> witness;
    std::string reason;
    try {
      witness = verify_ctis(inst.program, inst.example, inst.hypothesis);
      reason = examine(inst, *witness);
    } catch (const EngineError& err) {
      reason = std::string("engine error: ") + err.what();
    }
    if (!reason.empty()) {
      result.failed_run = run;
      result.failure = bundle(run, reason, inst, witness ? &*witness : nullptr);
      return result;
    }
    ++result.passed;
  }
  return result;
}

}  // namespace ctkit
