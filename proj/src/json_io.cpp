#include "ctkit/json_io.hpp"

namespace ctkit {

ordered_json json_of(const Theory& t) {
  ordered_json arr = ordered_json::array();
  for (const Clause& c : t.clauses()) arr.push_back(to_string(c));
  return arr;
}

ordered_json json_of(const Substitution& s) {
  ordered_json obj = ordered_json::object();
  for (const auto& [var, term] : s.bindings()) obj[var] = to_string(term);
  return obj;
}

ordered_json json_of(const LeastModel& m) {
  ordered_json arr = ordered_json::array();
  for (const Atom& a : m.atoms) {
    ordered_json entry;
    entry["atom"] = to_string(a);
    entry["depth"] = m.depth.at(a);
    entry["provenance"] = to_string(m.provenance.at(a));
    arr.push_back(std::move(entry));
  }
  return arr;
}

ordered_json json_of(const LayeredTheory& lt) {
  ordered_json arr = ordered_json::array();
  for (const Theory& layer : lt.layers()) arr.push_back(json_of(layer));
  return arr;
}

ordered_json json_of(const VerificationReport& r) {
  ordered_json obj;
  obj["pass"] = r.pass();
  obj["base"] = r.condition_base;
  obj["chain"] = r.condition_chain;
  obj["example"] = r.condition_example;
  obj["consistent"] = r.condition_consistent;
  obj["abducible"] = r.condition_abducible;
  ordered_json fails = ordered_json::array();
  for (const ConditionFailure& f : r.failures) {
    ordered_json entry;
    entry["condition"] = f.condition;
    entry["detail"] = f.detail;
    fails.push_back(std::move(entry));
  }
  obj["failures"] = std::move(fails);
  return obj;
}

ordered_json json_of(const OpenProgram& p) {
  ordered_json obj;
  obj["background"] = json_of(p.background);
  ordered_json abd = ordered_json::array();
  for (const PredicateSignature& s : p.abducibles)
    abd.push_back(s.name + "/" + std::to_string(s.arity));
  obj["abducibles"] = std::move(abd);
  ordered_json goals = ordered_json::array();
  for (const DefiniteGoal& g : p.constraints) goals.push_back(to_string(g));
  obj["constraints"] = std::move(goals);
  return obj;
}

ordered_json json_of(const CtisWitness& w) {
  ordered_json obj;
  obj["theory"] = json_of(w.theory);
  ordered_json smap = ordered_json::object();
  for (const auto& [d, by] : w.subsumption_map) {
    ordered_json entry;
    entry["by"] = to_string(by.first);
    entry["substitution"] = json_of(by.second);
    smap[to_string(d)] = std::move(entry);
  }
  obj["subsumption"] = std::move(smap);
  ordered_json flags = ordered_json::object();
  for (const auto& [d, ok] : w.entailment_flags) flags[to_string(d)] = ok;
  obj["entailment"] = std::move(flags);
  obj["report"] = json_of(w.report);
  obj["ctg"] = w.ctg_holds();
  obj["ctis"] = w.ctis_holds();
  return obj;
}

ordered_json json_of(const GeneratedInstance& inst) {
  ordered_json obj;
  obj["program"] = json_of(inst.program);
  obj["example"] = to_string(inst.example);
  obj["hypothesis"] = json_of(inst.hypothesis);
  return obj;
}

}  // namespace ctkit
