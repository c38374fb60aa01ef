#include "ctkit/parser.hpp"

#include <cctype>
#include <sstream>

namespace ctkit {

ParseError::ParseError(std::string message, int line, int column)
    : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                         std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool variable_start(char c) { return std::isupper(static_cast<unsigned char>(c)) || c == '_'; }

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  Theory theory() {
    Theory t;
    skip_ws();
    while (!at_end()) {
      t.insert(clause_statement());
      skip_ws();
    }
    return t;
  }

  ParsedProgram program() {
    ParsedProgram p;
    skip_ws();
    while (!at_end()) {
      if (peek() == '#') {
        p.abducibles.insert(abducible_line());
      } else {
        p.theory.insert(clause_statement());
      }
      skip_ws();
    }
    return p;
  }

  std::set<DefiniteGoal> constraints() {
    std::set<DefiniteGoal> goals;
    skip_ws();
    while (!at_end()) {
      expect(':');
      expect('-');
      goals.insert(DefiniteGoal(atom_list()));
      skip_ws();
      expect('.');
      skip_ws();
    }
    return goals;
  }

  std::vector<Theory> layers() {
    std::vector<Theory> out;
    out.emplace_back();
    skip_ws();
    while (!at_end()) {
      if (peek() == '#') {
        layer_separator();
        out.emplace_back();
      } else {
        out.back().insert(clause_statement());
      }
      skip_ws();
    }
    return out;
  }

  Atom single_atom() {
    skip_ws();
    Atom a = atom();
    skip_ws();
    if (!at_end() && peek() == '.') advance();
    skip_ws();
    if (!at_end()) fail("trailing input after atom");
    return a;
  }

  Clause single_clause() {
    Clause c = clause_statement();
    skip_ws();
    if (!at_end()) fail("trailing input after clause");
    return c;
  }

  PredicateSignature signature() {
    skip_ws();
    PredicateSignature sig = signature_body();
    skip_ws();
    if (!at_end() && peek() == '.') advance();
    skip_ws();
    if (!at_end()) fail("trailing input after signature");
    return sig;
  }

private:
  [[noreturn]] void fail(const std::string& message) {
    throw ParseError(message, line_, col_);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  char advance() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_ws() {
    while (!at_end()) {
      char c = peek();
      if (c == '%') {
        while (!at_end() && peek() != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return;
      }
    }
  }

  void expect(char c) {
    skip_ws();
    if (at_end()) fail(std::string("expected '") + c + "', found end of input");
    if (peek() != c) fail(std::string("expected '") + c + "', found '" + peek() + "'");
    advance();
  }

  std::string identifier() {
    skip_ws();
    if (at_end()) fail("expected identifier, found end of input");
    if (!ident_start(peek()))
      fail(std::string("expected identifier, found '") + peek() + "'");
    std::string name;
    while (!at_end() && ident_char(peek())) name += advance();
    return name;
  }

  Term term() {
    skip_ws();
    int line = line_, col = col_;
    std::string name = identifier();
    if (variable_start(name[0])) return Term::variable(name);
    std::vector<Term> args = maybe_args();
    if (std::string err = sig_.absorb_functor(name, static_cast<int>(args.size()));
        !err.empty())
      throw ParseError(err, line, col);
    return Term::compound(name, std::move(args));
  }

  std::vector<Term> maybe_args() {
    std::vector<Term> args;
    skip_ws();
    if (at_end() || peek() != '(') return args;
    advance();
    args.push_back(term());
    skip_ws();
    while (!at_end() && peek() == ',') {
      advance();
      args.push_back(term());
      skip_ws();
    }
    expect(')');
    return args;
  }

  Atom atom() {
    skip_ws();
    int line = line_, col = col_;
    std::string name = identifier();
    if (variable_start(name[0]))
      throw ParseError("a variable cannot head an atom", line, col);
    std::vector<Term> args = maybe_args();
    if (std::string err = sig_.absorb_predicate(name, static_cast<int>(args.size()));
        !err.empty())
      throw ParseError(err, line, col);
    return Atom(name, std::move(args));
  }

  std::set<Atom> atom_list() {
    std::set<Atom> atoms;
    atoms.insert(atom());
    skip_ws();
    while (!at_end() && peek() == ',') {
      advance();
      atoms.insert(atom());
      skip_ws();
    }
    return atoms;
  }

  Clause clause_statement() {
    skip_ws();
    if (!at_end() && peek() == ':')
      fail("integrity constraints are only legal in constraint files");
    if (!at_end() && peek() == '#')
      fail("directives are not allowed here");
    Atom head = atom();
    std::set<Atom> body;
    skip_ws();
    if (!at_end() && peek() == ':') {
      advance();
      expect('-');
      body = atom_list();
    }
    expect('.');
    return Clause(std::move(head), std::move(body));
  }

  PredicateSignature signature_body() {
    std::string name = identifier();
    if (variable_start(name[0])) fail("predicate names start lowercase");
    expect('/');
    skip_ws();
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
      fail("expected arity digit after '/'");
    int arity = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
      arity = arity * 10 + (advance() - '0');
    return PredicateSignature{std::move(name), arity};
  }

  PredicateSignature abducible_line() {
    expect('#');
    std::string keyword = identifier();
    if (keyword != "abducible") fail("unknown directive #" + keyword);
    PredicateSignature sig = signature_body();
    expect('.');
    return sig;
  }

  void layer_separator() {
    expect('#');
    std::string keyword = identifier();
    if (keyword != "layer") fail("unknown directive #" + keyword);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  SignatureTable sig_;
};

}  // namespace

Theory parse_theory(std::string_view text) { return Parser(text).theory(); }

ParsedProgram parse_program(std::string_view text) { return Parser(text).program(); }

std::set<DefiniteGoal> parse_constraints(std::string_view text) {
  return Parser(text).constraints();
}

Atom parse_atom(std::string_view text) { return Parser(text).single_atom(); }

Clause parse_clause(std::string_view text) { return Parser(text).single_clause(); }

PredicateSignature parse_signature(std::string_view text) {
  return Parser(text).signature();
}

std::vector<Theory> parse_layers(std::string_view text) { return Parser(text).layers(); }

}  // namespace ctkit
