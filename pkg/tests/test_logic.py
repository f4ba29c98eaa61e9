import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from classex.gen import TEST_SIG, random_fo
from classex.logic import (
    ARITH,
    Atom,
    Exists,
    Forall,
    complement_atom,
    is_nnf,
    neg,
    parse_formula,
    pure_signature,
    substitute,
    to_nnf,
    to_sexp,
)
from classex.oracle import disagreement, std_eval
from classex.sexp import ParseError
from classex.terms import S, Var, numeral

SIG = pure_signature("A/1", "B/0", "R/2")


def F(s, sig=SIG):
    return parse_formula(s, sig)


def test_nnf_of_implication():
    assert to_nnf(F("(imp (atom B) (atom A x))"), SIG) == F("(or (atom ~B) (atom A x))")


def test_nnf_simplifies_or_bot():
    assert to_nnf(F("(not (and (atom B) (atom A x)))"), SIG) == F("(or (atom ~B) (atom ~A x))")


def test_nnf_keeps_atom():
    assert to_nnf(F("(atom B)"), SIG) == F("(atom B)")


def test_neg_exchanges_quantifiers():
    phi = F("(forall x (or (atom A x) (atom B)))")
    assert neg(phi, SIG) == F("(exists x (and (atom ~A x) (atom ~B)))")


def test_neg_atom():
    assert neg(F("(atom B)"), SIG) == F("(atom ~B)")


def test_substitute_free_occurrence():
    phi = F("(exists y (atom R x y))")
    assert substitute(phi, "x", S(numeral(0))) == F("(exists y (atom R (S 0) y))")


def test_substitute_skips_bound():
    phi = F("(forall x (atom A x))")
    assert substitute(phi, "x", Var("t")) == phi


def test_substitute_avoids_capture():
    out = substitute(F("(exists y (atom R x y))"), "x", Var("y"))
    assert isinstance(out, Exists) and out.var != "y"
    assert out.body == Atom("R", (Var("y"), Var(out.var)))


def test_complements():
    assert complement_atom(F("(atom = x 0)")) == F("(atom != x 0)")
    t = F("(atom <= x y)")
    assert complement_atom(complement_atom(t)) == t
    assert complement_atom(t).rel == ">"
    for a in range(6):
        for b in range(6):
            env = {"x": a, "y": b}
            assert std_eval(t, env) != std_eval(complement_atom(t), env)


def test_alpha_equivalence_is_equality():
    assert F("(forall x (atom A x))") == F("(forall z (atom A z))")
    assert hash(F("(exists x (atom A x))")) == hash(F("(exists u (atom A u))"))


def test_parse_errors_carry_position():
    with pytest.raises(ParseError) as e:
        F("(forall x\n  (atom A x)")
    assert e.value.line >= 1
    with pytest.raises(ParseError, match="unknown relation") as e:
        F("(atom Nope x)")
    assert (e.value.line, e.value.col) == (1, 7)


def test_printer_round_trip_examples():
    for s in ["(forall x (exists y (atom <= x y)))", "(not (atom B))",
              "(and (top) (or (atom ~A (S x)) (atom = (+ x 0) x)))"]:
        assert to_sexp(F(s)) == s


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 10**6))
def test_random_round_trip_nnf_and_involution(seed):
    rng = random.Random(seed)
    phi = random_fo(rng, 4)
    assert parse_formula(to_sexp(phi), TEST_SIG) == phi
    n = to_nnf(phi, TEST_SIG)
    assert is_nnf(n)
    assert neg(neg(n, TEST_SIG), TEST_SIG) == n
    assert disagreement(phi, n, TEST_SIG, max_size=2) is None


def test_arith_signature_has_basics():
    assert ARITH.complement("=") == "!=" and ARITH.function("S").arity == 1
    assert isinstance(F("(forall x (atom = x x))"), Forall)
