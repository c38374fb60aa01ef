#pragma once

#include <cstddef>
#include <initializer_list>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace ctkit {

/// Raised on violated preconditions, signature clashes, exceeded engine
/// bounds, and other non-parse input errors.
class EngineError : public std::runtime_error {
public:
  explicit EngineError(const std::string& what) : std::runtime_error(what) {}
};

/// A first-order term: a variable or a compound. Constants are compounds
/// with zero arguments. Immutable after construction.
class Term {
public:
  enum class Kind { Variable, Compound };

  static Term variable(std::string name);
  static Term constant(std::string name);
  static Term compound(std::string functor, std::vector<Term> args);

  Kind kind() const { return kind_; }
  bool is_variable() const { return kind_ == Kind::Variable; }
  bool is_compound() const { return kind_ == Kind::Compound; }
  bool is_constant() const { return kind_ == Kind::Compound && args_.empty(); }

  /// Variable name or functor name; never empty.
  const std::string& name() const { return name_; }
  const std::vector<Term>& args() const { return args_; }

  bool ground() const;
  /// Constants have depth 0, f(c) has depth 1, f(f(c)) depth 2. Variables
  /// count as depth 0.
  int depth() const;
  std::size_t node_count() const;

  /// Appends every variable occurrence in pre-order.
  void collect_variables(std::vector<std::string>& out) const;
  void collect_constants(std::set<std::string>& out) const;
  void collect_functors(std::map<std::string, int>& out) const;
  /// Appends this term and all subterms, pre-order.
  void collect_subterms(std::vector<Term>& out) const;

private:
  Term(Kind kind, std::string name, std::vector<Term> args);

  Kind kind_;
  std::string name_;
  std::vector<Term> args_;
};

int compare(const Term& a, const Term& b);
bool operator==(const Term& a, const Term& b);
bool operator!=(const Term& a, const Term& b);
bool operator<(const Term& a, const Term& b);

/// An atom p(t1, ..., tn). Propositional atoms have no arguments.
class Atom {
public:
  Atom(std::string predicate, std::vector<Term> args);

  const std::string& predicate() const { return predicate_; }
  const std::vector<Term>& args() const { return args_; }
  int arity() const { return static_cast<int>(args_.size()); }

  bool ground() const;
  std::size_t node_count() const;
  void collect_variables(std::vector<std::string>& out) const;
  void collect_constants(std::set<std::string>& out) const;
  void collect_functors(std::map<std::string, int>& out) const;

private:
  std::string predicate_;
  std::vector<Term> args_;
};

int compare(const Atom& a, const Atom& b);
bool operator==(const Atom& a, const Atom& b);
bool operator!=(const Atom& a, const Atom& b);
bool operator<(const Atom& a, const Atom& b);

/// A definite clause head :- body. The body is a set: duplicate literals
/// collapse. A fact is a clause with an empty body.
class Clause {
public:
  explicit Clause(Atom head, std::set<Atom> body = {});

  const Atom& head() const { return head_; }
  const std::set<Atom>& body() const { return body_; }

  bool is_fact() const { return body_.empty(); }
  bool ground() const;

  /// Distinct variables in first-occurrence order (head first, then body
  /// atoms in stored order).
  std::vector<std::string> variables() const;
  void collect_constants(std::set<std::string>& out) const;
  void collect_functors(std::map<std::string, int>& out) const;

private:
  Atom head_;
  std::set<Atom> body_;
};

int compare(const Clause& a, const Clause& b);
bool operator==(const Clause& a, const Clause& b);
bool operator!=(const Clause& a, const Clause& b);
bool operator<(const Clause& a, const Clause& b);

/// Renames variables to V0, V1, ... so that alpha-equivalent clauses map to
/// the same representative. The representative is the lexicographically
/// least clause over all renamings; clauses with more than eight distinct
/// variables fall back to plain first-occurrence naming.
Clause canonical_clause(const Clause& c);

/// Renames every variable with a fixed prefix, for keeping two clauses'
/// variables apart.
Clause rename_apart(const Clause& c, const std::string& prefix);

/// A finite set of definite clauses. Clauses are stored canonically
/// renamed, so membership is equality up to variable renaming.
class Theory {
public:
  Theory() = default;
  Theory(std::initializer_list<Clause> clauses);

  void insert(const Clause& c);
  bool contains(const Clause& c) const;
  const std::set<Clause>& clauses() const { return clauses_; }

  std::size_t size() const { return clauses_.size(); }
  bool empty() const { return clauses_.empty(); }
  bool ground() const;

  Theory united(const Theory& other) const;

  void collect_constants(std::set<std::string>& out) const;
  void collect_functors(std::map<std::string, int>& out) const;

private:
  std::set<Clause> clauses_;
};

int compare(const Theory& a, const Theory& b);
bool operator==(const Theory& a, const Theory& b);
bool operator!=(const Theory& a, const Theory& b);
bool operator<(const Theory& a, const Theory& b);

/// A headless clause :- L1, ..., Ln used as an integrity constraint. The
/// body is nonempty.
class DefiniteGoal {
public:
  explicit DefiniteGoal(std::set<Atom> body);
  const std::set<Atom>& body() const { return body_; }
  void collect_constants(std::set<std::string>& out) const;
  void collect_functors(std::map<std::string, int>& out) const;

private:
  std::set<Atom> body_;
};

int compare(const DefiniteGoal& a, const DefiniteGoal& b);
bool operator==(const DefiniteGoal& a, const DefiniteGoal& b);
bool operator<(const DefiniteGoal& a, const DefiniteGoal& b);

struct PredicateSignature {
  std::string name;
  int arity = 0;

  friend bool operator==(const PredicateSignature& a, const PredicateSignature& b) {
    return a.name == b.name && a.arity == b.arity;
  }
  friend bool operator<(const PredicateSignature& a, const PredicateSignature& b) {
    if (a.name != b.name) return a.name < b.name;
    return a.arity < b.arity;
  }
};

/// Background theory, abducible predicate signatures, and integrity
/// constraints.
struct OpenProgram {
  Theory background;
  std::set<PredicateSignature> abducibles;
  std::set<DefiniteGoal> constraints;
};

// Head/body projections.
std::set<Atom> theory_heads(const Theory& t);
std::set<Atom> theory_bodies(const Theory& t);

/// Theory made of facts, one per atom.
Theory facts(const std::set<Atom>& atoms);

/// All ground instances of c over the given universe of ground terms.
/// Throws EngineError when c has variables and the universe is empty.
std::set<Clause> ground_instances(const Clause& c, const std::set<Term>& universe);

/// Checks predicate and functor arities are consistent across everything
/// absorbed. Predicates and functors live in separate namespaces.
class SignatureTable {
public:
  /// Returns an error message on clash, empty string otherwise.
  std::string absorb_predicate(const std::string& name, int arity);
  std::string absorb_functor(const std::string& name, int arity);

  void absorb(const Term& t);
  void absorb(const Atom& a);
  void absorb(const Clause& c);
  void absorb(const Theory& t);
  void absorb(const DefiniteGoal& g);

private:
  std::map<std::string, int> predicates_;
  std::map<std::string, int> functors_;
};

// Printing, in the same text format the parser reads.
std::string to_string(const Term& t);
std::string to_string(const Atom& a);
std::string to_string(const Clause& c);
std::string to_string(const DefiniteGoal& g);
/// One clause per line, in stored order.
std::string to_text(const Theory& t);

}  // namespace ctkit
