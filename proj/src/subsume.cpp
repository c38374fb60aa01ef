#include "ctkit/subsume.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <limits>
#include <set>
#include <sstream>

namespace ctkit {

namespace {

Term substitute(const Term& t, const std::map<std::string, Term>& m) {
  if (t.is_variable()) {
    auto it = m.find(t.name());
    return it == m.end() ? t : it->second;
  }
  if (t.args().empty()) return t;
  std::vector<Term> args;
  args.reserve(t.args().size());
  for (const Term& a : t.args()) args.push_back(substitute(a, m));
  return Term::compound(t.name(), std::move(args));
}

std::size_t atom_size(const Atom& a) {
  std::size_t n = 1;
  for (const Term& t : a.args()) n += t.node_count();
  return n;
}

}  // namespace

bool Substitution::bind(const std::string& var, const Term& t) {
  if (t.is_variable() && t.name() == var) return true;
  auto [it, inserted] = bindings_.emplace(var, t);
  return inserted || it->second == t;
}

const Term* Substitution::lookup(const std::string& var) const {
  auto it = bindings_.find(var);
  return it == bindings_.end() ? nullptr : &it->second;
}

Term Substitution::operator()(const Term& t) const { return substitute(t, bindings_); }

Atom Substitution::operator()(const Atom& a) const {
  std::vector<Term> args;
  args.reserve(a.args().size());
  for (const Term& t : a.args()) args.push_back(substitute(t, bindings_));
  return Atom(a.predicate(), std::move(args));
}

Clause Substitution::operator()(const Clause& c) const {
  std::set<Atom> body;
  for (const Atom& a : c.body()) body.insert((*this)(a));
  return Clause((*this)(c.head()), std::move(body));
}

int compare(const Substitution& a, const Substitution& b) {
  auto ia = a.bindings().begin(), ea = a.bindings().end();
  auto ib = b.bindings().begin(), eb = b.bindings().end();
  for (; ia != ea && ib != eb; ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first < ib->first ? -1 : 1;
    if (int c = compare(ia->second, ib->second)) return c;
  }
  if (ia != ea) return 1;
  if (ib != eb) return -1;
  return 0;
}

bool operator==(const Substitution& a, const Substitution& b) { return compare(a, b) == 0; }
bool operator<(const Substitution& a, const Substitution& b) { return compare(a, b) < 0; }

std::string to_string(const Substitution& s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const auto& [var, term] : s.bindings()) {
    if (!first) out << ", ";
    first = false;
    out << var << " -> " << to_string(term);
  }
  out << '}';
  return out.str();
}

bool MatchBindings::bind(const std::string& var, const Term& t) {
  auto [it, inserted] = map_.emplace(var, t);
  return inserted || it->second == t;
}

const Term* MatchBindings::lookup(const std::string& var) const {
  auto it = map_.find(var);
  return it == map_.end() ? nullptr : &it->second;
}

Substitution MatchBindings::to_substitution() const {
  Substitution s;
  for (const auto& [var, term] : map_) s.bind(var, term);
  return s;
}

bool match_term(const Term& pattern, const Term& target, MatchBindings& b) {
  if (pattern.is_variable()) return b.bind(pattern.name(), target);
  if (!target.is_compound()) return false;
  if (pattern.name() != target.name()) return false;
  if (pattern.args().size() != target.args().size()) return false;
  for (std::size_t i = 0; i < pattern.args().size(); ++i)
    if (!match_term(pattern.args()[i], target.args()[i], b)) return false;
  return true;
}

bool match_atom(const Atom& pattern, const Atom& target, MatchBindings& b) {
  if (pattern.predicate() != target.predicate()) return false;
  if (pattern.arity() != target.arity()) return false;
  for (std::size_t i = 0; i < pattern.args().size(); ++i)
    if (!match_term(pattern.args()[i], target.args()[i], b)) return false;
  return true;
}

namespace {

// Depth-first search for an embedding of pattern[i..] into candidates.
bool embed_body(const std::vector<Atom>& pattern, std::size_t i,
                const std::vector<Atom>& candidates, MatchBindings& b) {
  if (i == pattern.size()) return true;
  for (const Atom& cand : candidates) {
    MatchBindings trial = b;
    if (match_atom(pattern[i], cand, trial) && embed_body(pattern, i + 1, candidates, trial)) {
      b = std::move(trial);
      return true;
    }
  }
  return false;
}

}  // namespace

std::optional<Substitution> clause_subsumes(const Clause& c, const Clause& d) {
  MatchBindings b;
  if (!match_atom(c.head(), d.head(), b)) return std::nullopt;
  std::vector<Atom> pattern(c.body().begin(), c.body().end());
  std::vector<Atom> candidates(d.body().begin(), d.body().end());
  std::sort(candidates.begin(), candidates.end(), [](const Atom& x, const Atom& y) {
    if (x.predicate() != y.predicate()) return x.predicate() < y.predicate();
    if (x.arity() != y.arity()) return x.arity() < y.arity();
    const std::size_t nx = atom_size(x), ny = atom_size(y);
    if (nx != ny) return nx < ny;
    return compare(x, y) < 0;
  });
  if (!embed_body(pattern, 0, candidates, b)) return std::nullopt;
  return b.to_substitution();
}

std::optional<TheorySubsumptionWitness> theory_subsumes(const Theory& s, const Theory& t) {
  TheorySubsumptionWitness witness;
  for (const Clause& d : t.clauses()) {
    bool covered = false;
    for (const Clause& c : s.clauses()) {
      if (auto theta = clause_subsumes(c, d)) {
        witness.emplace(d, std::make_pair(c, *theta));
        covered = true;
        break;
      }
    }
    if (!covered) return std::nullopt;
  }
  return witness;
}

std::optional<Substitution> is_instance(const Clause& c, const Clause& d) {
  if (!d.ground()) throw EngineError("is_instance: the candidate instance must be ground");
  MatchBindings head_only;
  if (!match_atom(c.head(), d.head(), head_only)) return std::nullopt;

  std::vector<Atom> pattern(c.body().begin(), c.body().end());
  std::vector<Atom> targets(d.body().begin(), d.body().end());

  // Search every complete matching of the body: the first that maps the
  // clause exactly onto d wins. A subset embedding is not enough here.
  std::optional<Substitution> result;
  std::function<bool(std::size_t, const MatchBindings&)> search =
      [&](std::size_t i, const MatchBindings& b) {
        if (i == pattern.size()) {
          Substitution theta = b.to_substitution();
          if (theta(c) == d) {
            result = std::move(theta);
            return true;
          }
          return false;
        }
        for (const Atom& target : targets) {
          MatchBindings trial = b;
          if (match_atom(pattern[i], target, trial) && search(i + 1, trial)) return true;
        }
        return false;
      };
  search(0, head_only);
  return result;
}

namespace {

// Occurrences of constants are numbered by a pre-order walk over the head
// followed by the chosen body atoms. Rebuilding re-runs the same walk and
// swaps in variables where the assignment says so.
void collect_constants(const Term& t, std::vector<std::string>& out) {
  if (t.is_constant()) {
    out.push_back(t.name());
    return;
  }
  if (t.is_compound())
    for (const Term& a : t.args()) collect_constants(a, out);
}

void collect_constants(const Atom& a, std::vector<std::string>& out) {
  for (const Term& t : a.args()) collect_constants(t, out);
}

Term rebuild_term(const Term& t, const std::map<int, std::string>& var_at, int& next) {
  if (t.is_constant()) {
    const int id = next++;
    auto it = var_at.find(id);
    return it == var_at.end() ? t : Term::variable(it->second);
  }
  if (t.is_variable()) return t;
  std::vector<Term> args;
  args.reserve(t.args().size());
  for (const Term& a : t.args()) args.push_back(rebuild_term(a, var_at, next));
  return Term::compound(t.name(), std::move(args));
}

Atom rebuild_atom(const Atom& a, const std::map<int, std::string>& var_at, int& next) {
  std::vector<Term> args;
  args.reserve(a.args().size());
  for (const Term& t : a.args()) args.push_back(rebuild_term(t, var_at, next));
  return Atom(a.predicate(), std::move(args));
}

// Labelings of one constant's occurrences: 0 keeps the constant, positive
// labels name variable blocks. Restricted growth keeps one labeling per
// partition (label i+1 appears only after label i).
void group_labelings(int count, std::vector<std::vector<int>>& out) {
  std::vector<int> cur(static_cast<std::size_t>(count), 0);
  std::function<void(int, int)> rec = [&](int i, int max_used) {
    if (i == count) {
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= max_used + 1; ++v) {
      cur[static_cast<std::size_t>(i)] = v;
      rec(i + 1, std::max(max_used, v));
    }
  };
  rec(0, 0);
}

struct Candidate {
  int keeps = 0;
  int blocks = 0;
  Clause clause;
};

bool coarser(const Candidate& a, const Candidate& b) {
  if (a.keeps != b.keeps) return a.keeps < b.keeps;
  if (a.blocks != b.blocks) return a.blocks > b.blocks;
  return a.clause < b.clause;
}

constexpr std::size_t kAssignmentCap = 200000;

// All inverse-substitution variants of the clause (head, body), coarsest
// first. Bodies collapse to sets, so distinct assignments may merge.
std::vector<Candidate> skeleton_candidates(const Atom& head, const std::vector<Atom>& body) {
  std::vector<std::string> occ;
  collect_constants(head, occ);
  for (const Atom& a : body) collect_constants(a, occ);

  std::map<std::string, std::vector<int>> groups;
  for (std::size_t i = 0; i < occ.size(); ++i)
    groups[occ[i]].push_back(static_cast<int>(i));

  std::vector<std::vector<std::vector<int>>> options;  // per group
  std::vector<const std::vector<int>*> occ_of_group;
  for (const auto& [name, ids] : groups) {
    options.emplace_back();
    group_labelings(static_cast<int>(ids.size()), options.back());
    occ_of_group.push_back(&ids);
  }

  std::vector<Candidate> out;
  std::vector<std::size_t> pick(options.size(), 0);
  for (std::size_t produced = 0; produced < kAssignmentCap; ++produced) {
    std::map<int, std::string> var_at;
    int keeps = 0, blocks = 0;
    for (std::size_t g = 0; g < options.size(); ++g) {
      const std::vector<int>& labeling = options[g][pick[g]];
      int max_label = 0;
      for (std::size_t k = 0; k < labeling.size(); ++k) {
        const int label = labeling[k];
        if (label == 0) {
          ++keeps;
          continue;
        }
        max_label = std::max(max_label, label);
        var_at[(*occ_of_group[g])[k]] = "G" + std::to_string(g) + "_" + std::to_string(label);
      }
      blocks += max_label;
    }

    int next = 0;
    Atom new_head = rebuild_atom(head, var_at, next);
    std::set<Atom> new_body;
    for (const Atom& a : body) new_body.insert(rebuild_atom(a, var_at, next));
    out.push_back(Candidate{keeps, blocks, canonical_clause(Clause(new_head, std::move(new_body)))});

    // Advance the odometer over per-group labelings.
    std::size_t g = 0;
    while (g < pick.size()) {
      if (++pick[g] < options[g].size()) break;
      pick[g] = 0;
      ++g;
    }
    if (g == pick.size()) break;
  }
  std::sort(out.begin(), out.end(), coarser);
  return out;
}

void combinations(int n, int k, std::vector<std::vector<int>>& out) {
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

}  // namespace

std::vector<Clause> generalize_clause(const Clause& d, int budget) {
  return generalize_clause(d, budget, std::numeric_limits<int>::max());
}

std::vector<Clause> generalize_clause(const Clause& d, int budget, int max_vars) {
  if (!d.ground()) throw EngineError("generalize_clause: the seed clause must be ground");
  std::vector<Clause> out;
  std::set<Clause> seen;
  const auto emit = [&](const Candidate& c) {
    if (static_cast<int>(out.size()) >= budget) return;
    if (static_cast<int>(c.clause.variables().size()) > max_vars) return;
    if (!seen.insert(c.clause).second) return;
    out.push_back(c.clause);
  };

  const std::vector<Atom> body(d.body().begin(), d.body().end());

  // Full-body inverse substitutions first.
  for (const Candidate& c : skeleton_candidates(d.head(), body)) {
    if (static_cast<int>(out.size()) >= budget) return out;
    emit(c);
  }

  // Then proper body subsets, smaller (coarser) subsets first.
  const int n = static_cast<int>(body.size());
  for (int size = 0; size < n; ++size) {
    if (static_cast<int>(out.size()) >= budget) return out;
    std::vector<std::vector<int>> subsets;
    combinations(n, size, subsets);
    std::vector<Candidate> level;
    for (const std::vector<int>& subset : subsets) {
      std::vector<Atom> chosen;
      chosen.reserve(subset.size());
      for (int i : subset) chosen.push_back(body[static_cast<std::size_t>(i)]);
      for (Candidate& c : skeleton_candidates(d.head(), chosen)) level.push_back(std::move(c));
    }
    std::sort(level.begin(), level.end(), coarser);
    for (const Candidate& c : level) {
      if (static_cast<int>(out.size()) >= budget) return out;
      emit(c);
    }
  }
  return out;
}

}  // namespace ctkit
