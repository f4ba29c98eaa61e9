import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from classex import prt
from classex.gen import random_term, random_type
from classex.prt import (
    ADD,
    MUL,
    PRED,
    TypeCheckError,
    eliminate_sums,
    eval_nat,
    evaluate,
    has_sums,
    normalize,
    recursor_rank,
    typecheck,
)
from classex.terms import (
    NAT,
    ZERO,
    SUCC,
    App,
    Arrow,
    Inl,
    Inr,
    Lam,
    Pair,
    Rec,
    Sum,
    Var,
    ZeroOf,
    apply,
    as_numeral,
    numeral,
    parse_term,
    term_key,
    term_to_str,
)
from classex.sexp import read


def aeq(a, b):
    return term_key(a, {}, 0) == term_key(b, {}, 0)


def T(s):
    return parse_term(read(s))


def test_recursor_type():
    s, t = Var("s", NAT), Lam("n", NAT, Lam("p", NAT, Var("p")))
    assert typecheck(Rec(s, t)) == Arrow(NAT, NAT)


def test_identity_type():
    assert typecheck(T("(lam (x N) x)")) == Arrow(NAT, NAT)


def test_successor_of_function_is_an_error():
    with pytest.raises(TypeCheckError):
        typecheck(App(SUCC, T("(lam (x N) x)")))


def test_recursor_with_bad_step_is_an_error():
    with pytest.raises(TypeCheckError):
        typecheck(Rec(ZERO, Lam("n", NAT, Var("n"))))


def test_recursor_at_zero_and_beta():
    r = Rec(numeral(5), Lam("n", NAT, Lam("p", NAT, ZERO)))
    assert normalize(App(r, ZERO)) == numeral(5)
    assert normalize(T("(app (lam (x N) x) (S 0))")) == numeral(1)


def test_add_mul_pred_examples():
    assert normalize(apply(ADD, numeral(3), numeral(4))) == numeral(7)
    assert eval_nat(ADD, [2, 2]) == numeral(4)
    assert eval_nat(PRED, [5]) == numeral(4)
    assert eval_nat(T("(lam (x N) (S x))"), [3]) == numeral(4)
    assert eval_nat(MUL, [3, 4]) == numeral(12)


def test_eval_nat_type_mismatch():
    with pytest.raises(TypeCheckError):
        eval_nat(T("(lam (x N) x)"), [1, 2])


def test_sum_encoding():
    a = numeral(2)
    assert eliminate_sums(Inl(a, NAT)) == Pair(ZERO, Pair(a, ZeroOf(NAT)))
    assert eliminate_sums(Inr(NAT, a)) == Pair(numeral(1), Pair(ZeroOf(NAT), a))
    plain = T("(lam (x N) (S x))")
    assert eliminate_sums(plain) == plain
    assert not has_sums(eliminate_sums(Lam("z", Sum(NAT, NAT), Var("z"))))


def test_recursor_rank():
    assert recursor_rank(ADD) == 0
    assert recursor_rank(T("(lam (x N) x)")) == 0
    step = Lam("n", NAT, Lam("p", Arrow(NAT, NAT), Var("p")))
    assert recursor_rank(Rec(T("(lam (x N) x)"), step)) == 1


def test_printer_round_trip():
    for s in ["(lam (x N) (app (rec 0 (lam (n N) (lam (p N) (S p)))) x))",
              "(pair (inl 0 N) (inr N (S 0)))", "(zero (-> N N))"]:
        assert term_to_str(T(s)) == s


def test_fuel_guard():
    big = apply(prt.MUL, numeral(300), numeral(300))
    with pytest.raises(prt.FuelExhausted):
        evaluate(big, fuel=1000)


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 10**6))
def test_subject_reduction_and_confluence(seed):
    rng = random.Random(seed)
    ty = random_type(rng)
    t = random_term(rng, ty, rng.randint(1, 5))
    assert typecheck(t) == ty
    n = normalize(t)
    assert typecheck(n) == ty
    if ty == NAT:
        v = evaluate(t)
        assert as_numeral(n) == v
        assert evaluate(t, strict=True) == v
        assert evaluate(eliminate_sums(t)) == v


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10**6), st.integers(0, 4))
def test_recursor_equations(seed, k):
    rng = random.Random(seed)
    sigma = random_type(rng)
    s = random_term(rng, sigma, 3)
    t = random_term(rng, Arrow(NAT, Arrow(sigma, sigma)), 3)
    r = Rec(s, t)
    lhs = normalize(App(r, numeral(k)))
    rhs = normalize(s) if k == 0 else normalize(apply(t, numeral(k - 1), App(r, numeral(k - 1))))
    assert aeq(lhs, rhs)
