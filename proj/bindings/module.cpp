#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <functional>
#include <optional>

#include "ctkit/connected.hpp"
#include "ctkit/entail.hpp"
#include "ctkit/harness.hpp"
#include "ctkit/induce.hpp"
#include "ctkit/oracle.hpp"
#include "ctkit/parser.hpp"
#include "ctkit/subsume.hpp"
#include "ctkit/term.hpp"

namespace py = pybind11;
using namespace ctkit;

namespace {

EvalOptions opts(std::optional<int> depth_bound) { return {depth_bound}; }

template <typename T>
std::size_t hash_by_print(const T& v) {
  return std::hash<std::string>{}(to_string(v));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "definite-program reasoning and connected-theory toolkit";

  py::register_exception<EngineError>(m, "EngineError");
  py::register_exception<ParseError>(m, "ParseError");

  py::class_<Term>(m, "Term")
      .def_static("variable", &Term::variable, py::arg("name"))
      .def_static("constant", &Term::constant, py::arg("name"))
      .def_static("compound", &Term::compound, py::arg("functor"), py::arg("args"))
      .def_property_readonly("name", &Term::name)
      .def_property_readonly("args", &Term::args)
      .def("is_variable", &Term::is_variable)
      .def("is_constant", &Term::is_constant)
      .def("ground", &Term::ground)
      .def("depth", &Term::depth)
      .def("__str__", [](const Term& t) { return to_string(t); })
      .def("__repr__", [](const Term& t) { return to_string(t); })
      .def("__eq__", [](const Term& a, const Term& b) { return a == b; })
      .def("__lt__", [](const Term& a, const Term& b) { return a < b; })
      .def("__hash__", &hash_by_print<Term>);

  py::class_<Atom>(m, "Atom")
      .def(py::init<std::string, std::vector<Term>>(), py::arg("predicate"), py::arg("args"))
      .def_property_readonly("predicate", &Atom::predicate)
      .def_property_readonly("args", &Atom::args)
      .def_property_readonly("arity", &Atom::arity)
      .def("ground", &Atom::ground)
      .def("__str__", [](const Atom& a) { return to_string(a); })
      .def("__repr__", [](const Atom& a) { return to_string(a); })
      .def("__eq__", [](const Atom& a, const Atom& b) { return a == b; })
      .def("__lt__", [](const Atom& a, const Atom& b) { return a < b; })
      .def("__hash__", &hash_by_print<Atom>);

  py::class_<Clause>(m, "Clause")
      .def(py::init<Atom, std::set<Atom>>(), py::arg("head"), py::arg("body") = std::set<Atom>{})
      .def_property_readonly("head", &Clause::head)
      .def_property_readonly("body", &Clause::body)
      .def("is_fact", &Clause::is_fact)
      .def("ground", &Clause::ground)
      .def("variables", &Clause::variables)
      .def("__str__", [](const Clause& c) { return to_string(c); })
      .def("__repr__", [](const Clause& c) { return to_string(c); })
      .def("__eq__", [](const Clause& a, const Clause& b) { return a == b; })
      .def("__lt__", [](const Clause& a, const Clause& b) { return a < b; })
      .def("__hash__", &hash_by_print<Clause>);

  py::class_<Theory>(m, "Theory")
      .def(py::init<>())
      .def(py::init([](const std::vector<Clause>& clauses) {
             Theory t;
             for (const Clause& c : clauses) t.insert(c);
             return t;
           }),
           py::arg("clauses"))
      .def("insert", &Theory::insert, py::arg("clause"))
      .def("contains", &Theory::contains, py::arg("clause"))
      .def_property_readonly("clauses", [](const Theory& t) {
        return std::vector<Clause>(t.clauses().begin(), t.clauses().end());
      })
      .def("ground", &Theory::ground)
      .def("united", &Theory::united, py::arg("other"))
      .def("__len__", &Theory::size)
      .def("__str__", [](const Theory& t) { return to_text(t); })
      .def("__repr__", [](const Theory& t) { return to_text(t); })
      .def("__eq__", [](const Theory& a, const Theory& b) { return a == b; })
      .def("__hash__",
           [](const Theory& t) { return std::hash<std::string>{}(to_text(t)); });

  py::class_<DefiniteGoal>(m, "DefiniteGoal")
      .def(py::init<std::set<Atom>>(), py::arg("body"))
      .def_property_readonly("body", &DefiniteGoal::body)
      .def("__str__", [](const DefiniteGoal& g) { return to_string(g); })
      .def("__repr__", [](const DefiniteGoal& g) { return to_string(g); })
      .def("__eq__", [](const DefiniteGoal& a, const DefiniteGoal& b) { return a == b; })
      .def("__lt__", [](const DefiniteGoal& a, const DefiniteGoal& b) { return a < b; })
      .def("__hash__", &hash_by_print<DefiniteGoal>);

  py::class_<PredicateSignature>(m, "PredicateSignature")
      .def(py::init([](std::string name, int arity) {
             return PredicateSignature{std::move(name), arity};
           }),
           py::arg("name"), py::arg("arity"))
      .def_readonly("name", &PredicateSignature::name)
      .def_readonly("arity", &PredicateSignature::arity)
      .def("__str__",
           [](const PredicateSignature& s) { return s.name + "/" + std::to_string(s.arity); })
      .def("__repr__",
           [](const PredicateSignature& s) { return s.name + "/" + std::to_string(s.arity); })
      .def("__eq__",
           [](const PredicateSignature& a, const PredicateSignature& b) { return a == b; })
      .def("__lt__", [](const PredicateSignature& a, const PredicateSignature& b) { return a < b; })
      .def("__hash__", [](const PredicateSignature& s) {
        return std::hash<std::string>{}(s.name + "/" + std::to_string(s.arity));
      });

  py::class_<OpenProgram>(m, "OpenProgram")
      .def(py::init([](Theory background, std::set<PredicateSignature> abducibles,
                       std::set<DefiniteGoal> constraints) {
             return OpenProgram{std::move(background), std::move(abducibles),
                                std::move(constraints)};
           }),
           py::arg("background"), py::arg("abducibles") = std::set<PredicateSignature>{},
           py::arg("constraints") = std::set<DefiniteGoal>{})
      .def_readwrite("background", &OpenProgram::background)
      .def_readwrite("abducibles", &OpenProgram::abducibles)
      .def_readwrite("constraints", &OpenProgram::constraints);

  py::class_<ParsedProgram>(m, "ParsedProgram")
      .def_readonly("theory", &ParsedProgram::theory)
      .def_readonly("abducibles", &ParsedProgram::abducibles);

  py::class_<Substitution>(m, "Substitution")
      .def(py::init<>())
      .def("bind",
           [](Substitution& s, const std::string& var, const Term& t) { return s.bind(var, t); })
      .def("lookup",
           [](const Substitution& s, const std::string& var) -> std::optional<Term> {
             const Term* t = s.lookup(var);
             if (!t) return std::nullopt;
             return *t;
           })
      .def_property_readonly("bindings", &Substitution::bindings)
      .def("__len__", &Substitution::size)
      .def("__call__", [](const Substitution& s, const Term& t) { return s(t); })
      .def("__call__", [](const Substitution& s, const Atom& a) { return s(a); })
      .def("__call__", [](const Substitution& s, const Clause& c) { return s(c); })
      .def("__str__", [](const Substitution& s) { return to_string(s); })
      .def("__repr__", [](const Substitution& s) { return to_string(s); })
      .def("__eq__", [](const Substitution& a, const Substitution& b) { return a == b; });

  py::class_<LeastModel>(m, "LeastModel")
      .def_readonly("atoms", &LeastModel::atoms)
      .def_readonly("depth", &LeastModel::depth)
      .def_readonly("provenance", &LeastModel::provenance)
      .def("contains", &LeastModel::contains, py::arg("atom"))
      .def("__contains__", &LeastModel::contains)
      .def("__len__", [](const LeastModel& m_) { return m_.atoms.size(); });

  py::class_<LayeredTheory>(m, "LayeredTheory")
      .def(py::init<std::vector<Theory>>(), py::arg("layers"))
      .def_property_readonly("layers", &LayeredTheory::layers)
      .def("layer", &LayeredTheory::layer, py::arg("index"))
      .def("union_theory", &LayeredTheory::union_theory)
      .def("__len__", &LayeredTheory::layer_count)
      .def("__str__", [](const LayeredTheory& lt) { return to_text(lt); })
      .def("__repr__", [](const LayeredTheory& lt) { return to_text(lt); });

  py::class_<ConditionFailure>(m, "ConditionFailure")
      .def_readonly("condition", &ConditionFailure::condition)
      .def_readonly("detail", &ConditionFailure::detail)
      .def("__repr__", [](const ConditionFailure& f) { return f.condition + ": " + f.detail; });

  py::class_<VerificationReport>(m, "VerificationReport")
      .def_readonly("condition_base", &VerificationReport::condition_base)
      .def_readonly("condition_chain", &VerificationReport::condition_chain)
      .def_readonly("condition_example", &VerificationReport::condition_example)
      .def_readonly("condition_consistent", &VerificationReport::condition_consistent)
      .def_readonly("condition_abducible", &VerificationReport::condition_abducible)
      .def_readonly("failures", &VerificationReport::failures)
      .def("chain_ok", &VerificationReport::chain_ok)
      .def("passed", &VerificationReport::pass);

  py::class_<SearchConfig>(m, "SearchConfig")
      .def(py::init([](int generalization_budget, int max_candidates, int max_clause_vars) {
             return SearchConfig{generalization_budget, max_candidates, max_clause_vars};
           }),
           py::arg("generalization_budget") = 8, py::arg("max_candidates") = 8,
           py::arg("max_clause_vars") = 3)
      .def_readwrite("generalization_budget", &SearchConfig::generalization_budget)
      .def_readwrite("max_candidates", &SearchConfig::max_candidates)
      .def_readwrite("max_clause_vars", &SearchConfig::max_clause_vars);

  py::class_<CtisWitness>(m, "CtisWitness")
      .def_readonly("theory", &CtisWitness::theory)
      .def_readonly("subsumption_map", &CtisWitness::subsumption_map)
      .def_readonly("entailment_flags", &CtisWitness::entailment_flags)
      .def_readonly("report", &CtisWitness::report)
      .def("subsumption_total", &CtisWitness::subsumption_total)
      .def("entailment_all", &CtisWitness::entailment_all)
      .def("ctg_holds", &CtisWitness::ctg_holds)
      .def("ctis_holds", &CtisWitness::ctis_holds);

  py::class_<HarnessResult>(m, "HarnessResult")
      .def_readonly("runs", &HarnessResult::runs)
      .def_readonly("passed", &HarnessResult::passed)
      .def_readonly("failed_run", &HarnessResult::failed_run)
      .def_readonly("failure", &HarnessResult::failure)
      .def("ok", &HarnessResult::ok);

  m.def("parse_theory", [](const std::string& s) { return parse_theory(s); }, py::arg("text"));
  m.def("parse_program", [](const std::string& s) { return parse_program(s); }, py::arg("text"));
  m.def("parse_constraints", [](const std::string& s) { return parse_constraints(s); },
        py::arg("text"));
  m.def("parse_atom", [](const std::string& s) { return parse_atom(s); }, py::arg("text"));
  m.def("parse_clause", [](const std::string& s) { return parse_clause(s); }, py::arg("text"));
  m.def("parse_signature", [](const std::string& s) { return parse_signature(s); },
        py::arg("text"));
  m.def("parse_layers", [](const std::string& s) { return parse_layers(s); }, py::arg("text"));

  m.def("canonical_clause", &canonical_clause, py::arg("clause"));
  m.def("to_text", [](const Theory& t) { return to_text(t); }, py::arg("theory"));
  m.def("to_text", [](const LayeredTheory& lt) { return to_text(lt); }, py::arg("layered"));

  m.def(
      "least_model",
      [](const Theory& t, std::optional<int> depth_bound) {
        return least_model(t, opts(depth_bound));
      },
      py::arg("theory"), py::arg("depth_bound") = std::nullopt);
  m.def(
      "entails",
      [](const Theory& t, const Atom& a, std::optional<int> depth_bound) {
        return entails_atom(t, a, opts(depth_bound));
      },
      py::arg("theory"), py::arg("query"), py::arg("depth_bound") = std::nullopt);
  m.def(
      "entails_clause",
      [](const Theory& t, const Clause& d, std::optional<int> depth_bound) {
        return entails_ground_clause(t, d, opts(depth_bound));
      },
      py::arg("theory"), py::arg("clause"), py::arg("depth_bound") = std::nullopt);
  m.def(
      "is_consistent",
      [](const Theory& background, const Theory& hypothesis,
         const std::set<DefiniteGoal>& constraints, std::optional<int> depth_bound) {
        return is_consistent(background, hypothesis, constraints, opts(depth_bound));
      },
      py::arg("background"), py::arg("hypothesis"), py::arg("constraints"),
      py::arg("depth_bound") = std::nullopt);
  m.def(
      "ground_support",
      [](const Theory& t, const Atom& e, std::optional<int> depth_bound) {
        return ground_support(t, e, opts(depth_bound));
      },
      py::arg("theory"), py::arg("example"), py::arg("depth_bound") = std::nullopt);

  m.def("clause_subsumes", &clause_subsumes, py::arg("c"), py::arg("d"));
  m.def("theory_subsumes", &theory_subsumes, py::arg("s"), py::arg("t"));
  m.def("is_instance", &is_instance, py::arg("c"), py::arg("d"));
  m.def(
      "generalize_clause",
      [](const Clause& d, int budget, std::optional<int> max_vars) {
        if (max_vars) return generalize_clause(d, budget, *max_vars);
        return generalize_clause(d, budget);
      },
      py::arg("clause"), py::arg("budget"), py::arg("max_vars") = std::nullopt);

  m.def(
      "verify_connected_theory",
      [](const OpenProgram& p, const Atom& e, const LayeredTheory& lt,
         std::optional<int> depth_bound) {
        return verify_connected_theory(p, e, lt, opts(depth_bound));
      },
      py::arg("program"), py::arg("example"), py::arg("layered"),
      py::arg("depth_bound") = std::nullopt);
  m.def(
      "construct_connected_theory",
      [](const OpenProgram& p, const Theory& h, const Atom& e, std::optional<int> depth_bound) {
        return construct_connected_theory(p, h, e, opts(depth_bound));
      },
      py::arg("program"), py::arg("hypothesis"), py::arg("example"),
      py::arg("depth_bound") = std::nullopt);
  m.def(
      "assign_layers",
      [](const Theory& t, const Theory& background, std::optional<int> depth_bound) {
        return assign_layers(t, background, opts(depth_bound));
      },
      py::arg("theory"), py::arg("background"), py::arg("depth_bound") = std::nullopt);

  m.def(
      "check_inductive_solution",
      [](const OpenProgram& p, const Atom& e, const Theory& h, std::optional<int> depth_bound) {
        return check_inductive_solution(p, e, h, opts(depth_bound));
      },
      py::arg("program"), py::arg("example"), py::arg("hypothesis"),
      py::arg("depth_bound") = std::nullopt);
  m.def(
      "evaluate_witness",
      [](const OpenProgram& p, const Atom& e, const Theory& h, const LayeredTheory& lt,
         std::optional<int> depth_bound) {
        return evaluate_witness(p, e, h, lt, opts(depth_bound));
      },
      py::arg("program"), py::arg("example"), py::arg("hypothesis"), py::arg("layered"),
      py::arg("depth_bound") = std::nullopt);
  m.def(
      "derive_ctg",
      [](const OpenProgram& p, const Atom& e, const Theory& h, std::optional<int> depth_bound) {
        return derive_ctg(p, e, h, opts(depth_bound));
      },
      py::arg("program"), py::arg("example"), py::arg("hypothesis"),
      py::arg("depth_bound") = std::nullopt);
  m.def(
      "verify_ctis",
      [](const OpenProgram& p, const Atom& e, const Theory& h, std::optional<int> depth_bound) {
        return verify_ctis(p, e, h, opts(depth_bound));
      },
      py::arg("program"), py::arg("example"), py::arg("hypothesis"),
      py::arg("depth_bound") = std::nullopt);
  m.def(
      "induce",
      [](const OpenProgram& p, const Atom& e, const SearchConfig& cfg,
         std::optional<int> depth_bound) {
        return induce(p, e, cfg, opts(depth_bound));
      },
      py::arg("program"), py::arg("example"), py::arg("config") = SearchConfig{},
      py::arg("depth_bound") = std::nullopt);

  m.def(
      "run_theorem_harness",
      [](int runs, std::uint64_t seed) {
        return run_theorem_harness({runs, seed});
      },
      py::arg("runs") = 500, py::arg("seed") = 0);

  m.def("brute_minimal_model", &brute_minimal_model, py::arg("theory"));
  m.def("brute_subsumes", &brute_subsumes, py::arg("c"), py::arg("d"));
}
