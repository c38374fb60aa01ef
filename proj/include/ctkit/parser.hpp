#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ctkit/term.hpp"

namespace ctkit {

class ParseError : public std::runtime_error {
public:
  ParseError(std::string message, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

private:
  int line_;
  int column_;
};

/// Program file contents: clauses plus any `#abducible name/arity.` lines.
struct ParsedProgram {
  Theory theory;
  std::set<PredicateSignature> abducibles;
};

// Text format, UTF-8:
//   head :- b1, ..., bn.     rule
//   head.                    fact
//   :- b1, ..., bn.          integrity constraint (constraint files only)
//   #abducible p/2.          abducible declaration (program files only)
//   % comment to end of line
// Identifiers starting with an uppercase letter or underscore are
// variables; others are constants, functors, and predicates.

/// Parses clauses only; rejects constraints and directives.
Theory parse_theory(std::string_view text);

/// Parses clauses and abducible declarations.
ParsedProgram parse_program(std::string_view text);

/// Parses integrity constraints only.
std::set<DefiniteGoal> parse_constraints(std::string_view text);

/// Parses a single atom, e.g. a CLI query. A trailing '.' is allowed.
Atom parse_atom(std::string_view text);

/// Parses a single clause, with trailing '.'.
Clause parse_clause(std::string_view text);

/// Parses an abducible signature written as name/arity.
PredicateSignature parse_signature(std::string_view text);

/// Ground clause layers separated by `#layer` lines, layer 1 first.
/// Consecutive separators denote an empty layer.
std::vector<Theory> parse_layers(std::string_view text);

}  // namespace ctkit
