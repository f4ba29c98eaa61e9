import pytest

from classex import prt
from classex.extraction import (
    ExtractionError,
    Pi2Goal,
    RejectedProof,
    extract_dialectica,
    extract_mr,
    verify_dialectica,
    witness_candidates,
    witness_pi2_dialectica,
    witness_pi2_direct,
    witness_pi2_via_mr,
)
from classex.interp import realizer_type
from classex.kernel import proof_from_sexp
from classex.logic import parse_formula
from classex.sexp import read
from classex.terms import NAT, ZERO, Arrow, Lam, Pair, Rec, Var, children, numeral

from conftest import PI2_NAMES, corpus


def P(text):
    return proof_from_sexp(read(text))


def has_rec(t):
    return isinstance(t, Rec) or any(has_rec(k) for k in children(t))


def test_atomic_axiom_realizer_is_zero():
    t = extract_mr(P("(ax def:+:0 (atom = (+ x 0) x))"))
    assert t == ZERO and prt.typecheck(t, {"x": NAT}) == NAT


def test_and_introduction_gives_pair():
    t = extract_mr(P("(andI (ax eq_refl (atom = x x)) (ax eq_refl (atom = 0 0)))"))
    assert isinstance(t, Pair)


def test_induction_gives_recursor_of_the_right_type():
    p = corpus("zero_left").proof
    ind = next(q for q in p.walk() if q.rule == "ax" and q.axiom == "induction")
    t = extract_mr(ind)
    assert has_rec(t)
    assert prt.typecheck(t) == realizer_type(ind.concl)


def test_stab_has_no_realizer():
    with pytest.raises(ExtractionError, match="stab"):
        extract_mr(P("(ax stab (imp (not (not (atom = x 0))) (atom = x 0)))"))


def test_classical_rules_rejected_by_minimal_kernel():
    with pytest.raises(RejectedProof):
        extract_mr(corpus("dne_atom").proof)


def test_dialectica_atomic_and_forall():
    assert extract_dialectica(P("(ax eq_refl (atom = x x))")) == []
    p = P("(allI x (exI (exists y (atom = y (S x))) (S x) (ax eq_refl (atom = (S x) (S x)))))")
    ws = extract_dialectica(p)
    assert len(ws) == 1 and isinstance(ws[0], Lam)
    assert prt.typecheck(ws[0]) == Arrow(NAT, NAT)
    assert verify_dialectica(p.concl, ws, bound=20) is None


def test_dialectica_canonical_successor_witness_on_range():
    from classex.terms import App

    p = P("(allI x (exI (exists y (atom = y (S x))) (S x) (ax eq_refl (atom = (S x) (S x)))))")
    f = extract_dialectica(p)[0]
    assert [prt.evaluate(App(f, numeral(x))) for x in range(21)] == list(range(1, 22))


def test_pi2_goal_shape():
    g = Pi2Goal.of(parse_formula("(forall x (exists y (atom = y (S x))))"))
    assert (g.x, g.y, g.relation) == ("x", "y", "=")
    assert g.holds(3, 4) and not g.holds(3, 5)
    with pytest.raises(ExtractionError):
        Pi2Goal.of(parse_formula("(forall x (atom = x x))"))
    with pytest.raises(ExtractionError):
        Pi2Goal.of(parse_formula("(forall x (exists y (and (atom = x y) (atom = x y))))"))


def test_successor_witness():
    rep = witness_pi2_via_mr(corpus("succ").proof)
    from classex.terms import App

    assert prt.evaluate(App(rep.F, numeral(3))) == 4
    assert rep.ok and len(rep.table) == 21


def test_explicit_term_is_reproduced():
    pf = corpus("explicit_term")
    for fn in (witness_pi2_via_mr, witness_pi2_direct):
        rep = fn(pf.proof, pf.sig)
        assert [fx for _, fx, _, _ in rep.table] == [x + 1 for x in range(21)]


def test_numeral_witness_gives_constant_table():
    rep = witness_pi2_direct(corpus("zero_left").proof)
    assert rep.ok and {fx for _, fx, _, _ in rep.table} == {0}


def test_lafont_chooses_a_branch_deterministically():
    pf = corpus("lafont")
    goal = Pi2Goal.of(pf.proof.concl)
    assert len(witness_candidates(pf.proof, goal)) == 2
    a = witness_pi2_via_mr(pf.proof, pf.sig)
    b = witness_pi2_via_mr(pf.proof, pf.sig)
    assert a.ok and a.table == b.table
    assert witness_pi2_direct(pf.proof, pf.sig).ok


@pytest.mark.parametrize("name", PI2_NAMES)
@pytest.mark.parametrize("route", [witness_pi2_via_mr, witness_pi2_direct])
def test_routes_on_corpus(name, route):
    pf = corpus(name)
    rep = route(pf.proof, pf.sig, 0, 20)
    assert rep.ok, rep.format()
    assert rep.to_dict()["ok"] is True


@pytest.mark.parametrize("name", [n for n in PI2_NAMES if n != "zero_left"])
def test_dialectica_route(name):
    pf = corpus(name)
    assert witness_pi2_dialectica(pf.proof, pf.sig).ok


def test_dialectica_route_refuses_induction():
    with pytest.raises(ExtractionError, match="induction"):
        witness_pi2_dialectica(corpus("zero_left").proof)


def test_report_serialization():
    rep = witness_pi2_via_mr(corpus("succ").proof, hi=2)
    d = rep.to_dict()
    assert d["route"] == "mr" and d["recursor_rank"] == 0
    assert [row["F(x)"] for row in d["table"]] == [1, 2, 3]
    assert "R(x,F(x))" in rep.format()
    assert Var("x").name in d["F"]
