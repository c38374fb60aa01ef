#include "ctkit/term.hpp"

#include <algorithm>
#include <sstream>

namespace ctkit {

namespace {

void check_identifier(const std::string& name, const char* what) {
  if (name.empty()) throw EngineError(std::string(what) + " name must be nonempty");
}

}  // namespace

Term::Term(Kind kind, std::string name, std::vector<Term> args)
    : kind_(kind), name_(std::move(name)), args_(std::move(args)) {}

Term Term::variable(std::string name) {
  check_identifier(name, "variable");
  return Term(Kind::Variable, std::move(name), {});
}

Term Term::constant(std::string name) {
  check_identifier(name, "constant");
  return Term(Kind::Compound, std::move(name), {});
}

Term Term::compound(std::string functor, std::vector<Term> args) {
  check_identifier(functor, "functor");
  return Term(Kind::Compound, std::move(functor), std::move(args));
}

bool Term::ground() const {
  if (is_variable()) return false;
  for (const Term& a : args_)
    if (!a.ground()) return false;
  return true;
}

int Term::depth() const {
  int d = 0;
  for (const Term& a : args_) d = std::max(d, a.depth() + 1);
  return d;
}

std::size_t Term::node_count() const {
  std::size_t n = 1;
  for (const Term& a : args_) n += a.node_count();
  return n;
}

void Term::collect_variables(std::vector<std::string>& out) const {
  if (is_variable()) {
    out.push_back(name_);
    return;
  }
  for (const Term& a : args_) a.collect_variables(out);
}

void Term::collect_constants(std::set<std::string>& out) const {
  if (is_constant()) {
    out.insert(name_);
    return;
  }
  for (const Term& a : args_) a.collect_constants(out);
}

void Term::collect_functors(std::map<std::string, int>& out) const {
  if (is_compound() && !args_.empty()) {
    out.emplace(name_, static_cast<int>(args_.size()));
    for (const Term& a : args_) a.collect_functors(out);
  }
}

void Term::collect_subterms(std::vector<Term>& out) const {
  out.push_back(*this);
  for (const Term& a : args_) a.collect_subterms(out);
}

int compare(const Term& a, const Term& b) {
  // Variables sort before compounds; then by name, then by arguments.
  if (a.kind() != b.kind()) return a.kind() == Term::Kind::Variable ? -1 : 1;
  if (int c = a.name().compare(b.name()); c != 0) return c < 0 ? -1 : 1;
  const auto& xa = a.args();
  const auto& xb = b.args();
  if (xa.size() != xb.size()) return xa.size() < xb.size() ? -1 : 1;
  for (std::size_t i = 0; i < xa.size(); ++i)
    if (int c = compare(xa[i], xb[i]); c != 0) return c;
  return 0;
}

bool operator==(const Term& a, const Term& b) { return compare(a, b) == 0; }
bool operator!=(const Term& a, const Term& b) { return compare(a, b) != 0; }
bool operator<(const Term& a, const Term& b) { return compare(a, b) < 0; }

Atom::Atom(std::string predicate, std::vector<Term> args)
    : predicate_(std::move(predicate)), args_(std::move(args)) {
  check_identifier(predicate_, "predicate");
}

bool Atom::ground() const {
  for (const Term& a : args_)
    if (!a.ground()) return false;
  return true;
}

std::size_t Atom::node_count() const {
  std::size_t n = 1;
  for (const Term& a : args_) n += a.node_count();
  return n;
}

void Atom::collect_variables(std::vector<std::string>& out) const {
  for (const Term& a : args_) a.collect_variables(out);
}

void Atom::collect_constants(std::set<std::string>& out) const {
  for (const Term& a : args_) a.collect_constants(out);
}

void Atom::collect_functors(std::map<std::string, int>& out) const {
  for (const Term& a : args_) a.collect_functors(out);
}

int compare(const Atom& a, const Atom& b) {
  if (int c = a.predicate().compare(b.predicate()); c != 0) return c < 0 ? -1 : 1;
  if (a.arity() != b.arity()) return a.arity() < b.arity() ? -1 : 1;
  for (int i = 0; i < a.arity(); ++i)
    if (int c = compare(a.args()[i], b.args()[i]); c != 0) return c;
  return 0;
}

bool operator==(const Atom& a, const Atom& b) { return compare(a, b) == 0; }
bool operator!=(const Atom& a, const Atom& b) { return compare(a, b) != 0; }
bool operator<(const Atom& a, const Atom& b) { return compare(a, b) < 0; }

Clause::Clause(Atom head, std::set<Atom> body)
    : head_(std::move(head)), body_(std::move(body)) {}

bool Clause::ground() const {
  if (!head_.ground()) return false;
  for (const Atom& a : body_)
    if (!a.ground()) return false;
  return true;
}

std::vector<std::string> Clause::variables() const {
  std::vector<std::string> occurrences;
  head_.collect_variables(occurrences);
  for (const Atom& a : body_) a.collect_variables(occurrences);
  std::vector<std::string> distinct;
  for (const std::string& v : occurrences)
    if (std::find(distinct.begin(), distinct.end(), v) == distinct.end())
      distinct.push_back(v);
  return distinct;
}

void Clause::collect_constants(std::set<std::string>& out) const {
  head_.collect_constants(out);
  for (const Atom& a : body_) a.collect_constants(out);
}

void Clause::collect_functors(std::map<std::string, int>& out) const {
  head_.collect_functors(out);
  for (const Atom& a : body_) a.collect_functors(out);
}

int compare(const Clause& a, const Clause& b) {
  if (int c = compare(a.head(), b.head()); c != 0) return c;
  auto ia = a.body().begin(), ib = b.body().begin();
  for (; ia != a.body().end() && ib != b.body().end(); ++ia, ++ib)
    if (int c = compare(*ia, *ib); c != 0) return c;
  if (ia != a.body().end()) return 1;
  if (ib != b.body().end()) return -1;
  return 0;
}

bool operator==(const Clause& a, const Clause& b) { return compare(a, b) == 0; }
bool operator!=(const Clause& a, const Clause& b) { return compare(a, b) != 0; }
bool operator<(const Clause& a, const Clause& b) { return compare(a, b) < 0; }

namespace {

Term rename_term(const Term& t, const std::map<std::string, std::string>& names) {
  if (t.is_variable()) {
    auto it = names.find(t.name());
    return Term::variable(it == names.end() ? t.name() : it->second);
  }
  std::vector<Term> args;
  args.reserve(t.args().size());
  for (const Term& a : t.args()) args.push_back(rename_term(a, names));
  return Term::compound(t.name(), std::move(args));
}

Atom rename_atom(const Atom& a, const std::map<std::string, std::string>& names) {
  std::vector<Term> args;
  args.reserve(a.args().size());
  for (const Term& t : a.args()) args.push_back(rename_term(t, names));
  return Atom(a.predicate(), std::move(args));
}

Clause rename_clause(const Clause& c, const std::map<std::string, std::string>& names) {
  std::set<Atom> body;
  for (const Atom& a : c.body()) body.insert(rename_atom(a, names));
  return Clause(rename_atom(c.head(), names), std::move(body));
}

Clause rename_first_occurrence(const Clause& c, const std::vector<std::string>& vars) {
  std::map<std::string, std::string> names;
  for (std::size_t i = 0; i < vars.size(); ++i)
    names.emplace(vars[i], "V" + std::to_string(i));
  return rename_clause(c, names);
}

}  // namespace

Clause canonical_clause(const Clause& c) {
  std::vector<std::string> vars = c.variables();
  if (vars.empty()) return c;

  // Renaming permutes the body set, so first-occurrence naming alone is not
  // stable across alpha-variants with symmetric bodies. Take the least
  // clause over all renamings instead; the variable counts here stay small.
  if (vars.size() <= 8) {
    std::vector<std::string> order(vars);
    std::sort(order.begin(), order.end());
    Clause best = rename_first_occurrence(c, order);
    while (std::next_permutation(order.begin(), order.end())) {
      Clause candidate = rename_first_occurrence(c, order);
      if (candidate < best) best = candidate;
    }
    return best;
  }
  return rename_first_occurrence(c, vars);
}

Clause rename_apart(const Clause& c, const std::string& prefix) {
  std::vector<std::string> vars = c.variables();
  std::map<std::string, std::string> names;
  for (std::size_t i = 0; i < vars.size(); ++i)
    names.emplace(vars[i], prefix + std::to_string(i));
  return rename_clause(c, names);
}

Theory::Theory(std::initializer_list<Clause> clauses) {
  for (const Clause& c : clauses) insert(c);
}

void Theory::insert(const Clause& c) { clauses_.insert(canonical_clause(c)); }

bool Theory::contains(const Clause& c) const {
  return clauses_.count(canonical_clause(c)) > 0;
}

bool Theory::ground() const {
  for (const Clause& c : clauses_)
    if (!c.ground()) return false;
  return true;
}

Theory Theory::united(const Theory& other) const {
  Theory result = *this;
  for (const Clause& c : other.clauses_) result.clauses_.insert(c);
  return result;
}

void Theory::collect_constants(std::set<std::string>& out) const {
  for (const Clause& c : clauses_) c.collect_constants(out);
}

void Theory::collect_functors(std::map<std::string, int>& out) const {
  for (const Clause& c : clauses_) c.collect_functors(out);
}

int compare(const Theory& a, const Theory& b) {
  auto ia = a.clauses().begin(), ib = b.clauses().begin();
  for (; ia != a.clauses().end() && ib != b.clauses().end(); ++ia, ++ib)
    if (int c = compare(*ia, *ib); c != 0) return c;
  if (ia != a.clauses().end()) return 1;
  if (ib != b.clauses().end()) return -1;
  return 0;
}

bool operator==(const Theory& a, const Theory& b) { return compare(a, b) == 0; }
bool operator!=(const Theory& a, const Theory& b) { return compare(a, b) != 0; }
bool operator<(const Theory& a, const Theory& b) { return compare(a, b) < 0; }

DefiniteGoal::DefiniteGoal(std::set<Atom> body) : body_(std::move(body)) {
  if (body_.empty()) throw EngineError("definite goal needs a nonempty body");
}

void DefiniteGoal::collect_constants(std::set<std::string>& out) const {
  for (const Atom& a : body_) a.collect_constants(out);
}

void DefiniteGoal::collect_functors(std::map<std::string, int>& out) const {
  for (const Atom& a : body_) a.collect_functors(out);
}

int compare(const DefiniteGoal& a, const DefiniteGoal& b) {
  auto ia = a.body().begin(), ib = b.body().begin();
  for (; ia != a.body().end() && ib != b.body().end(); ++ia, ++ib)
    if (int c = compare(*ia, *ib); c != 0) return c;
  if (ia != a.body().end()) return 1;
  if (ib != b.body().end()) return -1;
  return 0;
}

bool operator==(const DefiniteGoal& a, const DefiniteGoal& b) { return compare(a, b) == 0; }
bool operator<(const DefiniteGoal& a, const DefiniteGoal& b) { return compare(a, b) < 0; }

std::set<Atom> theory_heads(const Theory& t) {
  std::set<Atom> heads;
  for (const Clause& c : t.clauses()) heads.insert(c.head());
  return heads;
}

std::set<Atom> theory_bodies(const Theory& t) {
  std::set<Atom> bodies;
  for (const Clause& c : t.clauses())
    bodies.insert(c.body().begin(), c.body().end());
  return bodies;
}

Theory facts(const std::set<Atom>& atoms) {
  Theory t;
  for (const Atom& a : atoms) t.insert(Clause(a));
  return t;
}

namespace {

Term substitute_term(const Term& t, const std::map<std::string, Term>& binding) {
  if (t.is_variable()) {
    auto it = binding.find(t.name());
    return it == binding.end() ? t : it->second;
  }
  std::vector<Term> args;
  args.reserve(t.args().size());
  for (const Term& a : t.args()) args.push_back(substitute_term(a, binding));
  return Term::compound(t.name(), std::move(args));
}

Atom substitute_atom(const Atom& a, const std::map<std::string, Term>& binding) {
  std::vector<Term> args;
  args.reserve(a.args().size());
  for (const Term& t : a.args()) args.push_back(substitute_term(t, binding));
  return Atom(a.predicate(), std::move(args));
}

Clause substitute_clause(const Clause& c, const std::map<std::string, Term>& binding) {
  std::set<Atom> body;
  for (const Atom& a : c.body()) body.insert(substitute_atom(a, binding));
  return Clause(substitute_atom(c.head(), binding), std::move(body));
}

}  // namespace

std::set<Clause> ground_instances(const Clause& c, const std::set<Term>& universe) {
  std::vector<std::string> vars = c.variables();
  if (vars.empty()) return {c};
  if (universe.empty())
    throw EngineError("cannot ground a clause with variables over an empty universe");
  for (const Term& t : universe)
    if (!t.ground()) throw EngineError("universe terms must be ground");

  std::vector<Term> terms(universe.begin(), universe.end());
  std::set<Clause> out;
  std::map<std::string, Term> binding;
  // Odometer over |universe|^|vars| assignments.
  std::vector<std::size_t> idx(vars.size(), 0);
  while (true) {
    binding.clear();
    for (std::size_t i = 0; i < vars.size(); ++i) binding.emplace(vars[i], terms[idx[i]]);
    out.insert(substitute_clause(c, binding));
    std::size_t i = 0;
    while (i < idx.size() && ++idx[i] == terms.size()) idx[i++] = 0;
    if (i == idx.size()) break;
  }
  return out;
}

std::string SignatureTable::absorb_predicate(const std::string& name, int arity) {
  auto [it, inserted] = predicates_.emplace(name, arity);
  if (!inserted && it->second != arity) {
    std::ostringstream os;
    os << "arity clash for predicate " << name << ": " << it->second << " vs " << arity;
    return os.str();
  }
  return {};
}

std::string SignatureTable::absorb_functor(const std::string& name, int arity) {
  auto [it, inserted] = functors_.emplace(name, arity);
  if (!inserted && it->second != arity) {
    std::ostringstream os;
    os << "arity clash for functor " << name << ": " << it->second << " vs " << arity;
    return os.str();
  }
  return {};
}

void SignatureTable::absorb(const Term& t) {
  if (t.is_variable()) return;
  if (std::string err = absorb_functor(t.name(), static_cast<int>(t.args().size()));
      !err.empty())
    throw EngineError(err);
  for (const Term& a : t.args()) absorb(a);
}

void SignatureTable::absorb(const Atom& a) {
  if (std::string err = absorb_predicate(a.predicate(), a.arity()); !err.empty())
    throw EngineError(err);
  for (const Term& t : a.args()) absorb(t);
}

void SignatureTable::absorb(const Clause& c) {
  absorb(c.head());
  for (const Atom& a : c.body()) absorb(a);
}

void SignatureTable::absorb(const Theory& t) {
  for (const Clause& c : t.clauses()) absorb(c);
}

void SignatureTable::absorb(const DefiniteGoal& g) {
  for (const Atom& a : g.body()) absorb(a);
}

std::string to_string(const Term& t) {
  std::string s = t.name();
  if (!t.args().empty()) {
    s += '(';
    for (std::size_t i = 0; i < t.args().size(); ++i) {
      if (i) s += ',';
      s += to_string(t.args()[i]);
    }
    s += ')';
  }
  return s;
}

std::string to_string(const Atom& a) {
  std::string s = a.predicate();
  if (!a.args().empty()) {
    s += '(';
    for (std::size_t i = 0; i < a.args().size(); ++i) {
      if (i) s += ',';
      s += to_string(a.args()[i]);
    }
    s += ')';
  }
  return s;
}

std::string to_string(const Clause& c) {
  std::string s = to_string(c.head());
  if (!c.body().empty()) {
    s += " :- ";
    bool first = true;
    for (const Atom& a : c.body()) {
      if (!first) s += ", ";
      s += to_string(a);
      first = false;
    }
  }
  s += '.';
  return s;
}

std::string to_string(const DefiniteGoal& g) {
  std::string s = ":- ";
  bool first = true;
  for (const Atom& a : g.body()) {
    if (!first) s += ", ";
    s += to_string(a);
    first = false;
  }
  s += '.';
  return s;
}

std::string to_text(const Theory& t) {
  std::string s;
  for (const Clause& c : t.clauses()) {
    s += to_string(c);
    s += '\n';
  }
  return s;
}

}  // namespace ctkit
