"""Definite-program reasoning and connected-theory toolkit."""

from ._core import (
    Atom,
    Clause,
    ConditionFailure,
    CtisWitness,
    DefiniteGoal,
    EngineError,
    HarnessResult,
    LayeredTheory,
    LeastModel,
    OpenProgram,
    ParsedProgram,
    ParseError,
    PredicateSignature,
    SearchConfig,
    Substitution,
    Term,
    Theory,
    VerificationReport,
    assign_layers,
    brute_minimal_model,
    brute_subsumes,
    canonical_clause,
    check_inductive_solution,
    clause_subsumes,
    construct_connected_theory,
    derive_ctg,
    entails,
    entails_clause,
    evaluate_witness,
    generalize_clause,
    ground_support,
    induce,
    is_consistent,
    is_instance,
    least_model,
    parse_atom,
    parse_clause,
    parse_constraints,
    parse_layers,
    parse_program,
    parse_signature,
    parse_theory,
    run_theorem_harness,
    theory_subsumes,
    to_text,
    verify_connected_theory,
    verify_ctis,
)

__all__ = [
    "Atom",
    "Clause",
    "ConditionFailure",
    "CtisWitness",
    "DefiniteGoal",
    "EngineError",
    "HarnessResult",
    "LayeredTheory",
    "LeastModel",
    "OpenProgram",
    "ParsedProgram",
    "ParseError",
    "PredicateSignature",
    "SearchConfig",
    "Substitution",
    "Term",
    "Theory",
    "VerificationReport",
    "assign_layers",
    "brute_minimal_model",
    "brute_subsumes",
    "canonical_clause",
    "check_inductive_solution",
    "clause_subsumes",
    "construct_connected_theory",
    "derive_ctg",
    "entails",
    "entails_clause",
    "evaluate_witness",
    "generalize_clause",
    "ground_support",
    "induce",
    "is_consistent",
    "is_instance",
    "least_model",
    "parse_atom",
    "parse_clause",
    "parse_constraints",
    "parse_layers",
    "parse_program",
    "parse_signature",
    "parse_theory",
    "run_theorem_harness",
    "theory_subsumes",
    "to_text",
    "verify_connected_theory",
    "verify_ctis",
]
