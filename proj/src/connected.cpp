#include "ctkit/connected.hpp"

#include <algorithm>
#include <sstream>

#include "ctkit/subsume.hpp"

namespace ctkit {

LayeredTheory::LayeredTheory(std::vector<Theory> layers) : layers_(std::move(layers)) {
  if (layers_.empty()) throw EngineError("a layered theory needs at least one layer");
  std::size_t clauses = 0;
  std::set<Clause> seen;
  for (const Theory& layer : layers_) {
    for (const Clause& c : layer.clauses()) {
      if (!c.ground()) throw EngineError("layered theories are ground: " + to_string(c));
      if (!seen.insert(c).second)
        throw EngineError("clause appears in two layers: " + to_string(c));
      ++clauses;
    }
  }
  if (clauses == 0) throw EngineError("a layered theory needs at least one clause");
}

Theory LayeredTheory::union_theory() const {
  Theory u;
  for (const Theory& layer : layers_) u = u.united(layer);
  return u;
}

bool VerificationReport::chain_ok() const {
  return std::all_of(condition_chain.begin(), condition_chain.end(), [](bool b) { return b; });
}

bool VerificationReport::pass() const {
  return condition_base && chain_ok() && condition_example && condition_consistent &&
         condition_abducible;
}

namespace {

// Heads of the layers with index >= from, as facts.
Theory head_facts(const LayeredTheory& lt, std::size_t from) {
  std::set<Atom> heads;
  for (std::size_t i = from; i < lt.layer_count(); ++i)
    for (const Atom& h : theory_heads(lt.layer(i))) heads.insert(h);
  return facts(heads);
}

}  // namespace

VerificationReport verify_connected_theory(const OpenProgram& p, const Atom& e,
                                           const LayeredTheory& lt, const EvalOptions& opts) {
  if (!e.ground()) throw EngineError("the example atom must be ground");

  UniverseScope scope;
  scope.add(p.background).add(e).add(p.constraints);
  for (const Theory& layer : lt.layers()) scope.add(layer);

  const std::size_t n = lt.layer_count();
  VerificationReport r;

  // Deepest layer: its bodies follow from the background alone.
  {
    LeastModel m = least_model_in(p.background, scope, opts);
    r.condition_base = true;
    for (const Atom& a : theory_bodies(lt.layer(n - 1))) {
      if (m.contains(a)) continue;
      r.condition_base = false;
      r.failures.push_back({"base", "background does not derive " + to_string(a)});
    }
  }

  // Each remaining layer: its bodies follow from the background plus the
  // heads of all deeper layers.
  for (std::size_t i = n - 1; i >= 1; --i) {
    Theory supported = p.background.united(head_facts(lt, i));
    LeastModel m = least_model_in(supported, scope, opts);
    bool ok = true;
    for (const Atom& a : theory_bodies(lt.layer(i - 1))) {
      if (m.contains(a)) continue;
      ok = false;
      r.failures.push_back({"chain " + std::to_string(i),
                            "deeper heads do not derive " + to_string(a)});
    }
    r.condition_chain.push_back(ok);
  }
  std::reverse(r.condition_chain.begin(), r.condition_chain.end());

  // The example follows from the background plus all heads.
  {
    LeastModel m = least_model_in(p.background.united(head_facts(lt, 0)), scope, opts);
    r.condition_example = m.contains(e);
    if (!r.condition_example)
      r.failures.push_back({"example", "heads do not derive " + to_string(e)});
  }

  const Theory whole = lt.union_theory();
  r.condition_consistent = is_consistent_in(p.background, whole, p.constraints, scope, opts);
  if (!r.condition_consistent)
    r.failures.push_back({"consistent", "background plus theory violates a constraint"});

  r.condition_abducible = true;
  for (const Clause& c : whole.clauses()) {
    PredicateSignature sig{c.head().predicate(), c.head().arity()};
    if (p.abducibles.count(sig) != 0) continue;
    r.condition_abducible = false;
    r.failures.push_back(
        {"abducible", "head predicate " + sig.name + "/" + std::to_string(sig.arity) +
                          " is not abducible"});
  }

  return r;
}

LayeredTheory assign_layers(const Theory& t, const Theory& background, const EvalOptions& opts) {
  UniverseScope scope;
  return assign_layers_in(t, background, scope, opts);
}

LayeredTheory assign_layers_in(const Theory& t, const Theory& background,
                               const UniverseScope& scope, const EvalOptions& opts) {
  if (t.empty()) throw EngineError("cannot layer an empty theory");
  if (!t.ground()) throw EngineError("layer assignment requires a ground theory");

  UniverseScope full = scope;
  full.add(t).add(background);
  LeastModel m = least_model_in(background.united(t), full, opts);

  std::map<Clause, int> head_depth;
  int max_depth = 0;
  for (const Clause& c : t.clauses()) {
    auto it = m.depth.find(c.head());
    if (it == m.depth.end())
      throw EngineError("clause head is never derived, so no layer fits: " + to_string(c));
    head_depth.emplace(c, it->second);
    max_depth = std::max(max_depth, it->second);
  }

  // Depth max_depth lands on layer 1; earlier-derived heads sit deeper.
  // Middle layers can come out empty.
  int layer_total = 0;
  for (const auto& [c, d] : head_depth) layer_total = std::max(layer_total, max_depth - d + 1);
  std::vector<Theory> layers(static_cast<std::size_t>(layer_total));
  for (const auto& [c, d] : head_depth)
    layers[static_cast<std::size_t>(max_depth - d)].insert(c);
  return LayeredTheory(std::move(layers));
}

LayeredTheory construct_connected_theory(const OpenProgram& p, const Theory& hypothesis,
                                         const Atom& e, const EvalOptions& opts) {
  if (!e.ground()) throw EngineError("the example atom must be ground");

  UniverseScope scope;
  scope.add(p.background).add(hypothesis).add(e).add(p.constraints);

  const Theory combined = p.background.united(hypothesis);
  LeastModel m = least_model_in(combined, scope, opts);
  if (!m.contains(e))
    throw EngineError("precondition violated: background plus hypothesis does not derive " +
                      to_string(e));
  if (!is_consistent_in(p.background, hypothesis, p.constraints, scope, opts))
    throw EngineError("precondition violated: background plus hypothesis breaks a constraint");

  const Theory support = provenance_support(m, e);

  Theory t;
  for (const Clause& d : support.clauses()) {
    for (const Clause& c : hypothesis.clauses()) {
      if (is_instance(c, d)) {
        t.insert(d);
        break;
      }
    }
  }
  if (t.empty())
    throw EngineError(
        "the derivation never uses the hypothesis; the background alone explains the example");

  return assign_layers_in(t, p.background, scope, opts);
}

std::string to_text(const LayeredTheory& lt) {
  std::ostringstream out;
  for (std::size_t i = 0; i < lt.layer_count(); ++i) {
    if (i != 0) out << "#layer\n";
    out << to_text(lt.layer(i));
  }
  return out.str();
}

}  // namespace ctkit
