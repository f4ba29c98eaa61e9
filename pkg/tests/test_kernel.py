import pytest

from classex.kernel import (
    CLASSICAL,
    INTUITIONISTIC,
    MINIMAL,
    KernelError,
    accepts,
    check,
    ha_axioms,
    parse_proof_file,
    proof_from_sexp,
    proof_to_sexp,
)
from classex.logic import parse_formula, pure_signature
from classex.oracle import std_term
from classex.proofs import prenex
from classex.sexp import read
from classex.oracle import disagreement

from conftest import CORPUS_NAMES, corpus

SIG = pure_signature("A/1", "B/1", "P/0")


def P(text, sig=SIG, hyps=None):
    return proof_from_sexp(read(text), sig, hyps)


def test_assumption_is_accepted_with_open_hypothesis():
    p = P("(hyp h (atom P))")
    j = check(p, MINIMAL, None, SIG)
    assert j.hyps == {"h": parse_formula("(atom P)", SIG)}


def test_ex_falso_rejected_in_minimal_mode_at_its_node():
    p = P("(impI h (bot) (botE (hyp h) (atom P)))")
    with pytest.raises(KernelError) as e:
        check(p, MINIMAL, None, SIG)
    assert "botE" in str(e.value) and e.value.path == (0,)
    assert accepts(p, INTUITIONISTIC, None, SIG)


def test_dne_needs_classical_mode():
    pf = corpus("peirce")
    assert not accepts(pf.proof, INTUITIONISTIC, None, pf.sig)
    assert accepts(pf.proof, CLASSICAL, None, pf.sig)


def test_atom_stability_from_decidability_in_intuitionistic_mode():
    p = P("""
      (impI h (not (not (atom = x 0)))
        (orE (ax dec (or (atom = x 0) (atom != x 0)))
          (a (hyp a))
          (b (botE (impE (hyp h) (impE (ax contra (imp (atom != x 0) (not (atom = x 0))))
                                        (hyp b)))
                   (atom = x 0)))))""")
    check(p, INTUITIONISTIC)
    assert not accepts(p, MINIMAL)


def test_eigenvariable_condition():
    p = P("(impI h (atom A y) (allI y (hyp h)))")
    with pytest.raises(KernelError, match="eigen"):
        check(p, MINIMAL, None, SIG)


def test_wrong_conclusion_is_rejected():
    bad = P("(impI h (atom P) (hyp h))")
    bad = type(bad)(bad.rule, parse_formula("(imp (atom P) (bot))", SIG), bad.premises,
                    label=bad.label)
    assert not accepts(bad, MINIMAL, None, SIG)


def test_axiom_instances():
    ax = ha_axioms()
    assert {"induction", "stab", "dec", "succ_ne_zero", "def:+:0", "def:+:1"} <= set(ax)
    check(P("(ax induction (imp (atom = 0 0) (imp (forall x (imp (atom = x x) "
            "(atom = (S x) (S x)))) (forall x (atom = x x)))))"))
    check(P("(ax stab (imp (not (not (atom = x y))) (atom = x y)))"))
    with pytest.raises(KernelError):
        check(P("(ax stab (imp (not (not (and (atom P) (atom P)))) (and (atom P) (atom P))))"),
              MINIMAL, None, SIG)


@pytest.mark.parametrize("k", range(6))
@pytest.mark.parametrize("j", range(6))
def test_addition_defining_equations_hold_on_numerals(j, k):
    from classex.terms import Fn, S, numeral

    x, y = numeral(j), numeral(k)
    assert std_term(Fn("+", (x, numeral(0))), {}) == j
    assert std_term(Fn("+", (x, S(y))), {}) == std_term(S(Fn("+", (x, y))), {})


@pytest.mark.parametrize("name", CORPUS_NAMES)
def test_corpus_accepted_and_round_trips(name):
    pf = corpus(name)
    j = check(pf.proof, pf.mode, None, pf.sig)
    assert pf.goal is None or j.conclusion == pf.goal
    again = proof_from_sexp(read(proof_to_sexp(pf.proof)), pf.sig)
    assert proof_to_sexp(again) == proof_to_sexp(pf.proof)


def test_proof_file_header_clauses():
    pf = parse_proof_file("(proof (name t) (mode minimal) (signature (relation Q 0)) "
                          "(goal (imp (atom Q) (atom Q))) (body (impI h (atom Q) (hyp h))))")
    assert pf.name == "t" and pf.mode == MINIMAL
    check(pf.proof, pf.mode, None, pf.sig)


@pytest.mark.parametrize("text, expected", [
    ("(and (forall x (atom A x)) (exists y (atom B y)))",
     "(forall x (exists y (and (atom A x) (atom B y))))"),
    ("(or (exists x (atom A x)) (exists y (atom B y)))",
     "(exists x (exists y (or (atom A x) (atom B y))))"),
    ("(forall x (atom A x))", "(forall x (atom A x))"),
])
def test_prenex(text, expected):
    phi = parse_formula(text, SIG)
    out, proof = prenex(phi, SIG)
    assert out == parse_formula(expected, SIG)
    assert disagreement(phi, out, SIG, max_size=3) is None
    check(proof, CLASSICAL, None, SIG)
