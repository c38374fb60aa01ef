"""End-to-end checks of the Python module against small known programs."""

import pytest

import ctkit


BIRDS = "bird(a). bird(b). penguin(b)."


def test_parsing_round_trips():
    theory = ctkit.parse_theory("flies(X) :- bird(X), notpenguin(X).")
    assert len(theory) == 1
    (clause,) = theory.clauses
    assert clause.head.predicate == "flies"
    assert ctkit.parse_theory(ctkit.to_text(theory)) == theory


def test_parse_errors_carry_location():
    with pytest.raises(ctkit.ParseError) as err:
        ctkit.parse_theory("flies(a")
    assert "parse error" in str(err.value)


def test_least_model_depths_and_provenance():
    theory = ctkit.parse_theory("a. b :- a. c :- b.")
    model = ctkit.least_model(theory)
    assert len(model) == 3
    c = ctkit.parse_atom("c")
    assert c in model
    assert model.depth[ctkit.parse_atom("a")] == 1
    assert model.depth[c] == 3
    assert model.provenance[c] == ctkit.parse_clause("c :- b.")


def test_entailment_needs_ground_queries():
    theory = ctkit.parse_theory(BIRDS + " flies(X) :- bird(X).")
    assert ctkit.entails(theory, ctkit.parse_atom("flies(a)"))
    assert not ctkit.entails(theory, ctkit.parse_atom("penguin(a)"))
    with pytest.raises(ctkit.EngineError):
        ctkit.entails(theory, ctkit.parse_atom("flies(X)"))


def test_depth_bound_controls_functor_universes():
    nat = ctkit.parse_theory("nat(z). nat(s(X)) :- nat(X).")
    with pytest.raises(ctkit.EngineError):
        ctkit.least_model(nat)
    model = ctkit.least_model(nat, depth_bound=2)
    assert ctkit.parse_atom("nat(s(s(z)))") in model


def test_subsumption_returns_a_substitution():
    c = ctkit.parse_clause("p(X) :- q(X).")
    d = ctkit.parse_clause("p(a) :- q(a), r(a).")
    theta = ctkit.clause_subsumes(c, d)
    assert theta is not None
    assert str(theta) == "{X -> a}"
    assert theta(c).head == d.head
    assert ctkit.clause_subsumes(d, c) is None
    assert ctkit.brute_subsumes(c, d) == theta


def test_verify_ctis_builds_a_checked_witness():
    program = ctkit.OpenProgram(
        background=ctkit.parse_theory(BIRDS),
        abducibles={ctkit.PredicateSignature("flies", 1)},
    )
    hypothesis = ctkit.parse_theory("flies(X) :- bird(X).")
    witness = ctkit.verify_ctis(program, ctkit.parse_atom("flies(a)"), hypothesis)
    assert witness.report.passed()
    assert witness.ctis_holds()
    ground = ctkit.parse_clause("flies(a) :- bird(a).")
    assert witness.theory.union_theory() == ctkit.Theory([ground])
    subsumer, theta = witness.subsumption_map[ground]
    assert theta(subsumer) == ground


def test_induce_finds_the_classic_hypotheses():
    program = ctkit.OpenProgram(
        background=ctkit.parse_theory(BIRDS),
        abducibles={ctkit.PredicateSignature("flies", 1)},
    )
    example = ctkit.parse_atom("flies(a)")
    hypotheses = ctkit.induce(program, example)
    texts = [ctkit.to_text(h).splitlines() for h in hypotheses]
    assert ["flies(a)."] in texts
    assert ["flies(V0) :- bird(V0)."] in texts
    for h in hypotheses:
        assert ctkit.check_inductive_solution(program, example, h)


def test_constraints_prune_hypotheses():
    program = ctkit.OpenProgram(
        background=ctkit.parse_theory(BIRDS),
        abducibles={ctkit.PredicateSignature("flies", 1)},
        constraints=ctkit.parse_constraints(":- flies(b)."),
    )
    example = ctkit.parse_atom("flies(a)")
    for h in ctkit.induce(program, example):
        assert not ctkit.entails(program.background.united(h), ctkit.parse_atom("flies(b)"))


def test_theorem_harness_smoke():
    result = ctkit.run_theorem_harness(runs=50, seed=1)
    assert result.ok()
    assert result.passed == 50
    assert result.failure == ""


def test_model_oracle_agrees_on_a_small_program():
    theory = ctkit.parse_theory("p(a). q(X) :- p(X). r(X) :- q(X), p(X).")
    assert ctkit.least_model(theory).atoms == ctkit.brute_minimal_model(theory)
