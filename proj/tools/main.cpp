#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ctkit/connected.hpp"
#include "ctkit/entail.hpp"
#include "ctkit/harness.hpp"
#include "ctkit/induce.hpp"
#include "ctkit/json_io.hpp"
#include "ctkit/oracle.hpp"
#include "ctkit/parser.hpp"
#include "ctkit/subsume.hpp"
#include "ctkit/term.hpp"

namespace {

using ctkit::ordered_json;

enum class Status { pass, fail, error };

int exit_code(Status s) {
  switch (s) {
    case Status::pass: return 0;
    case Status::fail: return 1;
    case Status::error: return 2;
  }
  return 2;
}

const char* status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::error: return "error";
  }
  return "error";
}

struct RunResult {
  Status status = Status::pass;
  ordered_json payload = ordered_json::object();
  std::vector<std::string> text;
  std::vector<std::string> diagnostics;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ctkit::EngineError("cannot read file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

/// The flag wins over the CTKIT_DEPTH_BOUND environment variable.
ctkit::EvalOptions eval_options(const std::optional<int>& flag) {
  if (flag) return {flag};
  if (const char* env = std::getenv("CTKIT_DEPTH_BOUND")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0')
      throw ctkit::EngineError("CTKIT_DEPTH_BOUND is not an integer: " + std::string(env));
    return {static_cast<int>(v)};
  }
  return {};
}

ctkit::OpenProgram open_program(const std::string& program_path,
                                const std::string& constraints_path,
                                const std::vector<std::string>& abducible_flags) {
  ctkit::ParsedProgram parsed = ctkit::parse_program(read_file(program_path));
  ctkit::OpenProgram p;
  p.background = parsed.theory;
  p.abducibles = parsed.abducibles;
  for (const std::string& s : abducible_flags) p.abducibles.insert(ctkit::parse_signature(s));
  if (!constraints_path.empty()) p.constraints = ctkit::parse_constraints(read_file(constraints_path));
  return p;
}

RunResult run_entails(const std::string& program_path, const std::string& query,
                      const ctkit::EvalOptions& opts) {
  ctkit::ParsedProgram parsed = ctkit::parse_program(read_file(program_path));
  ctkit::Atom q = ctkit::parse_atom(query);
  if (!q.ground()) throw ctkit::EngineError("the query atom must be ground");
  ctkit::UniverseScope scope;
  scope.add(parsed.theory).add(q);
  ctkit::LeastModel m = ctkit::least_model_in(parsed.theory, scope, opts);
  bool ok = m.contains(q);

  RunResult r;
  r.status = ok ? Status::pass : Status::fail;
  r.payload["query"] = to_string(q);
  r.payload["entailed"] = ok;
  r.payload["depth"] = ok ? ordered_json(m.depth.at(q)) : ordered_json(nullptr);
  if (ok)
    r.text.push_back("entailed at depth " + std::to_string(m.depth.at(q)) + ": " + to_string(q));
  else
    r.text.push_back("not entailed: " + to_string(q));
  return r;
}

RunResult run_least_model(const std::string& program_path, const ctkit::EvalOptions& opts) {
  ctkit::ParsedProgram parsed = ctkit::parse_program(read_file(program_path));
  ctkit::LeastModel m = ctkit::least_model(parsed.theory, opts);

  RunResult r;
  r.payload["size"] = m.atoms.size();
  r.payload["atoms"] = json_of(m);
  for (const ctkit::Atom& a : m.atoms)
    r.text.push_back(to_string(a) + "  depth " + std::to_string(m.depth.at(a)) + "  via " +
                     to_string(m.provenance.at(a)));
  return r;
}

RunResult run_check_subsume(const std::string& c_text, const std::string& d_text,
                            const std::string& left_path, const std::string& right_path,
                            bool use_oracle) {
  bool clause_mode = !c_text.empty() || !d_text.empty();
  bool theory_mode = !left_path.empty() || !right_path.empty();
  if (clause_mode == theory_mode)
    throw ctkit::EngineError("pass either --c and --d (clauses) or --left and --right (theory files)");

  RunResult r;
  if (clause_mode) {
    if (c_text.empty() || d_text.empty())
      throw ctkit::EngineError("--c and --d go together");
    ctkit::Clause c = ctkit::parse_clause(c_text);
    ctkit::Clause d = ctkit::parse_clause(d_text);
    std::optional<ctkit::Substitution> theta =
        use_oracle ? ctkit::brute_subsumes(c, d) : ctkit::clause_subsumes(c, d);
    r.status = theta ? Status::pass : Status::fail;
    r.payload["mode"] = "clause";
    r.payload["subsumes"] = theta.has_value();
    r.payload["substitution"] = theta ? json_of(*theta) : ordered_json(nullptr);
    if (theta)
      r.text.push_back("subsumes: theta = " + to_string(*theta));
    else
      r.text.push_back("does not subsume");
  } else {
    if (left_path.empty() || right_path.empty())
      throw ctkit::EngineError("--left and --right go together");
    ctkit::Theory s = ctkit::parse_theory(read_file(left_path));
    ctkit::Theory t = ctkit::parse_theory(read_file(right_path));
    std::optional<ctkit::TheorySubsumptionWitness> w = ctkit::theory_subsumes(s, t);
    r.status = w ? Status::pass : Status::fail;
    r.payload["mode"] = "theory";
    r.payload["subsumes"] = w.has_value();
    if (w) {
      ordered_json witness = ordered_json::object();
      for (const auto& [d, by] : *w) {
        ordered_json entry;
        entry["by"] = to_string(by.first);
        entry["substitution"] = json_of(by.second);
        witness[to_string(d)] = std::move(entry);
        r.text.push_back(to_string(d) + "  <=  " + to_string(by.first) + "  theta = " +
                         to_string(by.second));
      }
      r.payload["witness"] = std::move(witness);
      r.text.push_back("subsumes");
    } else {
      r.payload["witness"] = nullptr;
      r.text.push_back("does not subsume");
    }
  }
  return r;
}

void report_lines(const ctkit::VerificationReport& report, std::vector<std::string>& out) {
  auto mark = [](bool ok) { return ok ? "ok" : "FAIL"; };
  out.push_back(std::string("base: ") + mark(report.condition_base));
  for (std::size_t i = report.condition_chain.size(); i-- > 0;)
    out.push_back("chain layer " + std::to_string(i + 2) + " -> layer " + std::to_string(i + 1) +
                  ": " + mark(report.condition_chain[i]));
  out.push_back(std::string("example: ") + mark(report.condition_example));
  out.push_back(std::string("consistent: ") + mark(report.condition_consistent));
  out.push_back(std::string("abducible heads: ") + mark(report.condition_abducible));
  for (const ctkit::ConditionFailure& f : report.failures)
    out.push_back("  " + f.condition + ": " + f.detail);
}

RunResult run_verify_ct(const std::string& program_path, const std::string& constraints_path,
                        const std::vector<std::string>& abducible_flags, const std::string& example,
                        const std::string& theory_path, const ctkit::EvalOptions& opts) {
  ctkit::OpenProgram p = open_program(program_path, constraints_path, abducible_flags);
  ctkit::Atom e = ctkit::parse_atom(example);
  ctkit::LayeredTheory lt(ctkit::parse_layers(read_file(theory_path)));
  ctkit::VerificationReport report = ctkit::verify_connected_theory(p, e, lt, opts);

  RunResult r;
  r.status = report.pass() ? Status::pass : Status::fail;
  r.payload["example"] = to_string(e);
  r.payload["layers"] = json_of(lt);
  r.payload["report"] = json_of(report);
  report_lines(report, r.text);
  r.text.push_back(report.pass() ? "connected theory" : "not a connected theory");
  return r;
}

RunResult run_derive_ct(const std::string& program_path, const std::string& constraints_path,
                        const std::vector<std::string>& abducible_flags,
                        const std::string& hypothesis_path, const std::string& example,
                        const ctkit::EvalOptions& opts) {
  ctkit::OpenProgram p = open_program(program_path, constraints_path, abducible_flags);
  ctkit::Theory h = ctkit::parse_theory(read_file(hypothesis_path));
  ctkit::Atom e = ctkit::parse_atom(example);
  ctkit::CtisWitness w = ctkit::verify_ctis(p, e, h, opts);

  RunResult r;
  r.status = w.ctis_holds() ? Status::pass : Status::fail;
  r.payload["example"] = to_string(e);
  r.payload["witness"] = json_of(w);
  std::istringstream lines(to_text(w.theory));
  for (std::string line; std::getline(lines, line);) r.text.push_back(line);
  return r;
}

RunResult run_verify_theorem(int runs, std::uint64_t seed) {
  ctkit::HarnessResult hr = ctkit::run_theorem_harness({runs, seed});

  RunResult r;
  r.status = hr.ok() ? Status::pass : Status::fail;
  r.payload["runs"] = hr.runs;
  r.payload["seed"] = seed;
  r.payload["passed"] = hr.passed;
  r.payload["ok"] = hr.ok();
  r.payload["failure"] =
      hr.ok() ? ordered_json(nullptr) : ordered_json::parse(hr.failure);
  if (hr.ok()) {
    r.text.push_back("verified " + std::to_string(hr.passed) + "/" + std::to_string(hr.runs) +
                     " generated instances (seed " + std::to_string(seed) + ")");
  } else {
    r.text.push_back("run " + std::to_string(hr.failed_run) + " failed:");
    std::istringstream lines(hr.failure);
    for (std::string line; std::getline(lines, line);) r.text.push_back(line);
  }
  return r;
}

RunResult run_induce(const std::string& program_path, const std::string& constraints_path,
                     const std::vector<std::string>& abducible_flags, const std::string& example,
                     const ctkit::SearchConfig& cfg, const ctkit::EvalOptions& opts) {
  ctkit::OpenProgram p = open_program(program_path, constraints_path, abducible_flags);
  ctkit::Atom e = ctkit::parse_atom(example);
  std::vector<ctkit::Theory> hyps = ctkit::induce(p, e, cfg, opts);

  RunResult r;
  r.status = hyps.empty() ? Status::fail : Status::pass;
  r.payload["example"] = to_string(e);
  r.payload["count"] = hyps.size();
  ordered_json arr = ordered_json::array();
  for (const ctkit::Theory& h : hyps) arr.push_back(json_of(h));
  r.payload["hypotheses"] = std::move(arr);
  if (hyps.empty()) {
    r.text.push_back("no hypothesis found within the search bounds");
  } else {
    for (std::size_t i = 0; i < hyps.size(); ++i) {
      r.text.push_back("hypothesis " + std::to_string(i + 1) + ":");
      for (const ctkit::Clause& c : hyps[i].clauses()) r.text.push_back("  " + to_string(c));
    }
  }
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"definite-program reasoning and connected-theory toolkit"};
  app.require_subcommand(1);

  bool json = false;
  std::optional<int> depth;
  auto add_common = [&](CLI::App* sub, bool with_depth) {
    sub->add_flag("--json", json, "emit machine-readable JSON on stdout");
    if (with_depth)
      sub->add_option("--depth-bound", depth,
                      "maximum term depth when the vocabulary has function symbols "
                      "(default: CTKIT_DEPTH_BOUND)");
  };

  std::string command;
  RunResult result;

  std::string program_path, constraints_path, hypothesis_path, theory_path;
  std::string query, example;
  std::string c_text, d_text, left_path, right_path;
  std::vector<std::string> abducible_flags;
  bool use_oracle = false;
  int runs = 500;
  std::uint64_t seed = 0;
  ctkit::SearchConfig cfg;

  CLI::App* entails = app.add_subcommand("entails", "does the program derive a ground atom");
  entails->add_option("--program", program_path, "program file")->required();
  entails->add_option("--query", query, "ground atom to check")->required();
  add_common(entails, true);
  entails->callback([&] {
    command = "entails";
    result = run_entails(program_path, query, eval_options(depth));
  });

  CLI::App* least = app.add_subcommand("least-model", "print the least model with depths");
  least->add_option("--program", program_path, "program file")->required();
  add_common(least, true);
  least->callback([&] {
    command = "least-model";
    result = run_least_model(program_path, eval_options(depth));
  });

  CLI::App* subsume = app.add_subcommand("check-subsume", "clause or theory subsumption");
  subsume->add_option("--c", c_text, "subsuming clause text");
  subsume->add_option("--d", d_text, "subsumed clause text");
  subsume->add_option("--left", left_path, "subsuming theory file");
  subsume->add_option("--right", right_path, "subsumed theory file");
  subsume->add_flag("--oracle", use_oracle, "")->group("");
  add_common(subsume, false);
  subsume->callback([&] {
    command = "check-subsume";
    result = run_check_subsume(c_text, d_text, left_path, right_path, use_oracle);
  });

  CLI::App* verify = app.add_subcommand("verify-ct", "check the layering conditions");
  verify->add_option("--program", program_path, "program file (clauses + #abducible lines)")
      ->required();
  verify->add_option("--example", example, "ground example atom")->required();
  verify->add_option("--theory", theory_path, "layered theory file (#layer separators, layer 1 first)")
      ->required();
  verify->add_option("--constraints", constraints_path, "integrity constraint file");
  verify->add_option("--abducible", abducible_flags, "extra abducible signature name/arity");
  add_common(verify, true);
  verify->callback([&] {
    command = "verify-ct";
    result = run_verify_ct(program_path, constraints_path, abducible_flags, example, theory_path,
                           eval_options(depth));
  });

  CLI::App* derive = app.add_subcommand("derive-ct", "build the layered theory for a solution");
  derive->add_option("--program", program_path, "program file (clauses + #abducible lines)")
      ->required();
  derive->add_option("--hypothesis", hypothesis_path, "hypothesis clause file")->required();
  derive->add_option("--example", example, "ground example atom")->required();
  derive->add_option("--constraints", constraints_path, "integrity constraint file");
  derive->add_option("--abducible", abducible_flags, "extra abducible signature name/arity");
  add_common(derive, true);
  derive->callback([&] {
    command = "derive-ct";
    result = run_derive_ct(program_path, constraints_path, abducible_flags, hypothesis_path,
                           example, eval_options(depth));
  });

  CLI::App* theorem = app.add_subcommand("verify-theorem",
                                         "generate solutions and re-verify their witnesses");
  theorem->add_option("--runs", runs, "number of generated instances");
  theorem->add_option("--seed", seed, "generator seed");
  add_common(theorem, false);
  theorem->callback([&] {
    command = "verify-theorem";
    result = run_verify_theorem(runs, seed);
  });

  CLI::App* induce_cmd = app.add_subcommand("induce", "search hypotheses for an example");
  induce_cmd->add_option("--program", program_path, "program file (clauses + #abducible lines)")
      ->required();
  induce_cmd->add_option("--example", example, "ground example atom")->required();
  induce_cmd->add_option("--constraints", constraints_path, "integrity constraint file");
  induce_cmd->add_option("--abducible", abducible_flags, "extra abducible signature name/arity");
  induce_cmd->add_option("--budget", cfg.generalization_budget, "generalizations kept per clause");
  induce_cmd->add_option("--max-candidates", cfg.max_candidates, "hypotheses returned at most");
  induce_cmd->add_option("--max-vars", cfg.max_clause_vars, "distinct variables per clause");
  add_common(induce_cmd, true);
  induce_cmd->callback([&] {
    command = "induce";
    result = run_induce(program_path, constraints_path, abducible_flags, example, cfg,
                        eval_options(depth));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const ctkit::ParseError& e) {
    result.status = Status::error;
    result.diagnostics.push_back(e.what());
  } catch (const ctkit::EngineError& e) {
    result.status = Status::error;
    result.diagnostics.push_back(e.what());
  } catch (const std::exception& e) {
    result.status = Status::error;
    result.diagnostics.push_back(e.what());
  }

  if (json) {
    ordered_json out;
    out["schema"] = ctkit::kSchemaVersion;
    out["command"] = command;
    out["status"] = status_name(result.status);
    out["payload"] = result.payload;
    out["diagnostics"] = result.diagnostics;
    std::cout << out.dump(2) << "\n";
  } else {
    for (const std::string& line : result.text) std::cout << line << "\n";
    for (const std::string& d : result.diagnostics) std::cerr << "error: " << d << "\n";
  }
  return exit_code(result.status);
}
