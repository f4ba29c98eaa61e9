import itertools
import random
from dataclasses import dataclass, field

import pytest

from classex.dnt import awkward, godel_gentzen
from classex.gen import PROP_SIG, TEST_SIG, random_prenex, random_prop
from classex.kernel import MINIMAL, check
from classex.logic import Forall, Imp, parse_formula, pure_signature, to_nnf
from classex.nci import (
    NciError,
    awk_mp_obligation,
    herbrand_nf,
    identity_obligation_proof,
    nci,
    nci_types,
    nci_via_awk,
    simplify_minimal,
)
from classex.oracle import FiniteModel, all_models, classical_eval, decide_prop_minimal, uninterpreted
from classex.terms import NAT, Arrow, Prod

SIG4 = pure_signature("T/4", "B/2", "C/1")
FOUR = "(exists x (forall y (exists z (forall w (atom T x y z w)))))"


def F(text, sig=SIG4):
    return parse_formula(text, sig)


def test_four_quantifier_herbrand_form():
    h = herbrand_nf(F(FOUR), SIG4)
    assert str(h.formula) == "(exists x (exists z (atom T x (f x) z (g x z))))"
    assert h.symbols == (("f", 1), ("g", 2))
    assert h.exvars == ("x", "z")


def test_existential_formula_unchanged():
    phi = F("(exists x (atom C x))")
    h = herbrand_nf(phi, SIG4)
    assert h.formula == phi and h.symbols == ()


def test_universal_becomes_constant():
    h = herbrand_nf(F("(forall y (atom C y))"), SIG4)
    assert str(h.formula) == "(atom C f)"
    assert h.symbols == (("f", 0),)


def test_herbrand_rejects_non_prenex():
    with pytest.raises(NciError):
        herbrand_nf(F("(and (exists x (atom C x)) (atom C 0))"), SIG4)


@dataclass
class _Skolem(FiniteModel):
    tables: dict = field(default_factory=dict)

    def fn(self, name, args):
        if name in self.tables:
            return self.tables[name][tuple(args)]
        return super().fn(name, args)


def _skolem_models(m, symbols):
    spaces = []
    for _, k in symbols:
        dom = list(itertools.product(range(m.size), repeat=k))
        spaces.append([dict(zip(dom, vals)) for vals in itertools.product(range(m.size), repeat=len(dom))])
    for choice in itertools.product(*spaces):
        yield _Skolem(m.size, m.sig, m.relations, m.constants,
                      {n: t for (n, _), t in zip(symbols, choice)})


def test_herbrand_form_is_implied_with_skolem_functions():
    rng = random.Random(7)
    for _ in range(25):
        phi = random_prenex(rng, rng.randint(1, 4), depth=1)
        h = herbrand_nf(phi, TEST_SIG)
        assert not any(isinstance(s, Forall) for s in _subformulas(h.formula))
        rels, consts = uninterpreted([phi], TEST_SIG)
        for m in all_models(TEST_SIG, 2, rels, consts):
            if classical_eval(phi, m):
                assert any(classical_eval(h.formula, sk) for sk in _skolem_models(m, h.symbols))


def _subformulas(f):
    yield f
    for k in ("left", "right", "body"):
        if hasattr(f, k):
            yield from _subformulas(getattr(f, k))


def test_nci_types_four_quantifiers():
    ty = Arrow(Arrow(NAT, NAT), Arrow(Arrow(Prod(NAT, NAT), NAT), NAT))
    assert nci_types(F(FOUR)) == [ty, ty]


def test_nci_types_degenerate_cases():
    assert nci_types(F("(exists x (exists y (atom B x y)))")) == [NAT, NAT]
    assert nci_types(F("(forall y (exists z (atom B y z)))")) == [Arrow(NAT, NAT)]


def test_nci_shape():
    it = nci(F(FOUR), SIG4)
    assert [n for n, _ in it.ex] == ["F", "F1"]
    assert [n for n, _ in it.all] == ["f", "f1"]
    assert str(it.matrix) == (
        "(atom T (app (app F f) f1) (app f (app (app F f) f1)) (app (app F1 f) f1) "
        "(app (app f1 (app (app F f) f1)) (app (app F1 f) f1)))")


@pytest.mark.parametrize("text", [
    FOUR,
    "(exists x (atom C x))",
    "(forall y (atom C y))",
    "(forall y (exists z (or (atom B y z) (atom ~C z))))",
])
def test_nci_coincides_with_dialectica_of_awk(text):
    _, _, rep = nci_via_awk(F(text), SIG4)
    assert rep.ok, str(rep)


def test_nci_match_on_random_prenex_suite():
    rng = random.Random(11)
    for _ in range(200):
        phi = random_prenex(rng, rng.randint(0, 5))
        _, _, rep = nci_via_awk(phi, TEST_SIG)
        assert rep.ok, f"{phi}\n{rep}"


def test_awk_mp_obligation_for_universal_and_bot():
    sig = pure_signature("A/1")
    phi = parse_formula("(forall x (atom A x))", sig)
    ob = awk_mp_obligation(phi, parse_formula("(bot)", sig), sig)
    assert isinstance(ob, Imp)
    simp = simplify_minimal(ob, sig)
    dns = parse_formula("(imp (forall x (not (not (atom A x)))) (not (not (forall x (atom A x)))))", sig)
    assert simp == dns, str(simp)


def test_identity_obligation_is_kernel_checked():
    rng = random.Random(3)
    for _ in range(20):
        phi = random_prenex(rng, rng.randint(0, 3))
        p = identity_obligation_proof(phi, TEST_SIG)
        j = check(p, MINIMAL, sig=TEST_SIG)
        assert not j.hyps
        assert p.concl == awk_mp_obligation(phi, phi, TEST_SIG)


def test_propositional_obligations_are_minimally_valid():
    rng = random.Random(5)
    for _ in range(100):
        phi = to_nnf(random_prop(rng, 3), PROP_SIG)
        psi = to_nnf(random_prop(rng, 3), PROP_SIG)
        ob = awk_mp_obligation(phi, psi, PROP_SIG)
        assert decide_prop_minimal(ob, "minimal", PROP_SIG).valid, str(ob)


def test_awk_converse_collapses_on_propositions():
    rng = random.Random(9)
    converse_fails = 0
    for _ in range(100):
        phi = to_nnf(random_prop(rng, 3), PROP_SIG)
        n = godel_gentzen(phi, sig=PROP_SIG)
        a = awkward(phi, PROP_SIG)
        assert decide_prop_minimal(Imp(n, a), "minimal", PROP_SIG).valid
        if not decide_prop_minimal(Imp(a, n), "minimal", PROP_SIG).valid:
            converse_fails += 1
    # the converse holds propositionally once complemented atoms are negations
    assert converse_fails == 0
