import random

import pytest

from classex.gen import TEST_SIG, random_fo
from classex.interp import (
    APredicate,
    InterpError,
    cr_realizes,
    dialectica,
    dprime,
    holds,
    mr_realizes,
    negation_schema,
    realizer_type,
)
from classex.logic import Not, is_quantifier_free, parse_formula, pure_signature, to_nnf
from classex.terms import NAT, ZERO, Arrow, Fst, Lam, Pair, Prod, Var, numeral

SIG = pure_signature("R/2", "T/2", "A/1", "P/0")
IMPLICATION_GOLDEN = (
    "(interp (ex (U (-> N N)) (Y (-> N (-> N N)))) (all (x N) (v N)) "
    "(imp (atom R x (app (app Y x) v)) (atom T (app U x) v)))")
NEGATION_GOLDEN = "(interp (ex (Y (-> N N))) (all (x N)) (not (atom R x (app Y x))))"
DPRIME_EXISTS_GOLDEN = (
    "(interp (all (S (-> N (-> N N)))) (ex (z N) (r N)) "
    "(not (not (atom ~R z (app (app S z) r)))))")


def F(s):
    return parse_formula(s, SIG)


def test_implication_clause_golden():
    phi = F("(imp (exists x (forall y (atom R x y))) (exists u (forall v (atom T u v))))")
    assert dialectica(phi, SIG).to_sexp() == IMPLICATION_GOLDEN


def test_negation_schema_golden():
    inner = F("(exists x (forall y (atom R x y)))")
    assert dialectica(Not(inner), SIG).to_sexp() == NEGATION_GOLDEN
    assert negation_schema(dialectica(inner, SIG)).to_sexp() == NEGATION_GOLDEN


def test_dprime_exists_clause_golden():
    phi = F("(exists z (exists r (forall s (atom ~R z s))))")
    assert dprime(phi, SIG).to_sexp() == DPRIME_EXISTS_GOLDEN


def test_dialectica_exists_and_atom():
    assert dialectica(F("(atom P)"), SIG).to_sexp() == "(interp (ex) (all) (atom P))"
    d = dialectica(F("(exists z (forall y (atom R z y)))"), SIG)
    assert [n for n, _ in d.ex] == ["z"] and [n for n, _ in d.all] == ["y"]


def test_dprime_clauses():
    assert dprime(F("(forall z (exists y (atom R z y)))"), SIG).to_sexp() == (
        "(interp (all (z N)) (ex (y N)) (not (atom ~R z y)))")
    assert dprime(F("(or (forall x (atom A x)) (atom P))"), SIG).to_sexp() == (
        "(interp (all (x N)) (ex) (or (atom A x) (atom P)))")
    assert dprime(F("(atom P)"), SIG).to_sexp() == "(interp (all) (ex) (atom P))"
    with pytest.raises(InterpError):
        dprime(F("(imp (atom P) (atom P))"), SIG)


def test_realizer_types():
    assert realizer_type(F("(exists y (atom R x y))")) == Prod(NAT, NAT)
    assert realizer_type(F("(atom P)")) == NAT
    assert realizer_type(F("(not (not (exists y (atom R x y))))")) == Arrow(
        Arrow(Prod(NAT, NAT), NAT), NAT)


def test_mr_clauses():
    A = APredicate.of_relation("A")
    a = Var("a")
    assert mr_realizes(a, F("(exists x (atom A x))"), A, {"a": Prod(NAT, NAT)}) == F(
        "(atom A (fst a))")
    assert mr_realizes(a, F("(atom P)"), A, {"a": NAT}) == F("(atom P)")
    assert mr_realizes(a, F("(bot)"), A, {"a": NAT}) == F("(atom A a)")


def test_identity_classically_realizes_universal_complement():
    A = APredicate.of_relation("A")
    ident = Lam("b", Prod(NAT, NAT), Fst(Var("b")))
    claim = cr_realizes(ident, F("(forall x (atom ~A x))"), A, sig=SIG)
    assert claim == F("(forall (b (* N N)) (imp (atom A (fst b)) "
                      "(atom A (app (lam (b (* N N)) (fst b)) b))))")


def test_mr_rejects_ill_typed_realizer():
    with pytest.raises(InterpError):
        mr_realizes(Var("a"), F("(exists x (atom A x))"), APredicate.of_relation("A"),
                    {"a": NAT})


def test_sigma1_semantic_adequacy():
    phi = parse_formula("(exists y (atom = y (S (S (S 0)))))")
    A = APredicate.of_relation("=", numeral(4))
    assert holds(mr_realizes(Pair(numeral(3), ZERO), phi, A))
    false = parse_formula("(exists y (atom = (S y) 0))")
    for k in range(10):
        assert not holds(mr_realizes(Pair(numeral(k), ZERO), false, A))


def test_random_dialectica_negation_duality_and_qf_matrix():
    rng = random.Random(5)
    for _ in range(200):
        phi = random_fo(rng, 4)
        d = dialectica(Not(phi), TEST_SIG)
        schema = negation_schema(dialectica(phi, TEST_SIG))
        assert [t for _, t in d.ex] == [t for _, t in schema.ex]
        assert d.to_formula() == schema.to_formula()
        assert is_quantifier_free(d.matrix)
        dp = dprime(to_nnf(phi, TEST_SIG), TEST_SIG)
        assert is_quantifier_free(dp.matrix)


def test_random_mr_free_variables():
    rng = random.Random(6)
    A = APredicate(F("(atom P)"))
    for _ in range(200):
        phi = random_fo(rng, 4)
        ty = realizer_type(phi)
        claim = mr_realizes(Var("a"), phi, A, {"a": ty})
        assert claim.fv <= phi.fv | {"a"}
