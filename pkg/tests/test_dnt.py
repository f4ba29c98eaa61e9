import random

import pytest

from classex.dnt import (
    TranslationName,
    awkward,
    equiv_mode,
    equiv_statement,
    godel_gentzen,
    kr_preprocess,
    kr_sub,
    krivine,
    kuroda,
    m_sub,
    m_translation,
    synth_equiv,
    translate,
    translate_proof,
)
from classex.gen import TEST_SIG, random_fo
from classex.kernel import MINIMAL, check
from classex.logic import is_negative, neg, parse_formula, pure_signature, to_nnf

from conftest import CORPUS_NAMES, corpus

SIG = pure_signature("A/1", "B/0", "C/0", "R/2", "c/0!")


def F(s):
    return parse_formula(s, SIG)


def test_gg_disjunction_and_existential():
    assert godel_gentzen(F("(or (atom B) (atom C))"), sig=SIG) == F(
        "(not (and (not (not (not (atom B)))) (not (not (not (atom C))))))")
    assert godel_gentzen(F("(exists x (atom A x))"), sig=SIG) == F(
        "(not (forall x (not (not (not (atom A x))))))")
    assert godel_gentzen(F("(forall x (atom A x))"), sig=SIG) == F(
        "(forall x (not (not (atom A x))))")
    assert is_negative(godel_gentzen(F("(or (atom B) (atom C))"), sig=SIG))


def test_gg_strengthened_leaves_atoms_bare():
    out = godel_gentzen(F("(forall x (exists y (atom R x y)))"), True, SIG)
    assert out == F("(forall x (not (forall y (not (atom R x y)))))")


def test_kuroda():
    assert kuroda(F("(forall x (atom A x))")) == F(
        "(not (not (forall x (not (not (not (not (atom A x))))))))")
    assert kuroda(F("(atom B)")) == F("(not (not (not (not (atom B)))))")
    assert kuroda(F("(or (atom B) (atom C))")) == F(
        "(not (not (or (not (not (atom B))) (not (not (atom C))))))")


def test_krivine_clauses():
    assert kr_sub(F("(and (atom B) (atom C))")) == F("(or (not (atom B)) (not (atom C)))")
    assert kr_sub(F("(forall x (atom A x))")) == F("(exists x (not (atom A x)))")
    assert kr_sub(F("(atom B)")) == F("(not (atom B))")
    assert krivine(F("(atom B)")) == F("(not (not (atom B)))")
    pre = kr_preprocess(F("(exists x (imp (atom A x) (atom B)))"))
    assert not any(isinstance(s, type(F("(exists x (atom A x))"))) for s in _subformulas(pre))


def _subformulas(phi):
    yield phi
    for k in ("left", "right", "body"):
        if hasattr(phi, k):
            yield from _subformulas(getattr(phi, k))


def test_m_translation():
    assert m_translation(F("(exists x (atom A x))"), SIG) == F(
        "(not (not (exists x (atom A x))))")
    assert m_sub(F("(forall x (atom A x))"), SIG) == F("(not (exists x (atom ~A x)))")
    assert m_sub(F("(atom ~B)"), SIG) == F("(atom ~B)")


def test_awkward():
    assert awkward(F("(exists y (atom R c y))"), SIG) == F("(not (forall y (atom ~R c y)))")
    assert awkward(F("(atom B)"), SIG) == F("(not (atom ~B))")
    phi = to_nnf(F("(forall x (or (atom A x) (atom B)))"), SIG)
    assert awkward(neg(phi, SIG), SIG) == F("(not (forall x (or (atom A x) (atom B))))")


def test_translation_names_parse():
    assert TranslationName.parse("krivine") is TranslationName.KR
    with pytest.raises(ValueError):
        TranslationName.parse("nope")


@pytest.mark.parametrize("name", CORPUS_NAMES)
def test_translate_proof_on_corpus(name):
    pf = corpus(name)
    pn = translate_proof(pf.proof, sig=pf.sig)
    j = check(pn, MINIMAL, None, pf.sig)
    assert j.conclusion == godel_gentzen(pf.proof.concl, sig=pf.sig)
    assert not j.hyps


def test_strengthened_translation_of_atomic_dne_uses_stability():
    pf = corpus("dne_atom")
    pn = translate_proof(pf.proof, sig=pf.sig, strengthened=True)
    check(pn, MINIMAL, None, pf.sig)
    assert "stab" in pn.axioms_used()
    assert pn.concl == godel_gentzen(pf.proof.concl, True, pf.sig)


def test_axiom_leaf_translation():
    pf = corpus("axiom_leaf")
    pn = translate_proof(pf.proof, sig=pf.sig)
    check(pn, MINIMAL)
    assert pn.concl == godel_gentzen(pf.proof.concl)


@pytest.mark.parametrize("name, text", [
    ("krivine", "(atom B)"),
    ("m", "(exists x (atom A x))"),
    ("kuroda", "(or (atom B) (not (atom C)))"),
])
def test_synth_equiv_examples(name, text):
    phi = F(text)
    p = synth_equiv(phi, name, SIG)
    check(p, equiv_mode(name), None, SIG)
    assert p.concl == equiv_statement(phi, name, SIG)


def test_awk_equivalence_is_one_directional():
    phi = F("(forall x (atom A x))")
    p = synth_equiv(phi, "awk", SIG)
    check(p, MINIMAL, None, SIG)
    assert p.concl == F("(imp (forall x (not (not (atom A x)))) (not (exists x (atom ~A x))))")


def test_random_synth_equiv_small_batch():
    rng = random.Random(11)
    for _ in range(20):
        phi = random_fo(rng, 4)
        for name in TranslationName:
            p = synth_equiv(phi, name, TEST_SIG)
            check(p, equiv_mode(name), None, TEST_SIG)
            assert p.concl == equiv_statement(phi, name, TEST_SIG)


def test_translate_dispatch():
    phi = F("(exists x (atom A x))")
    assert translate(phi, "m", SIG) == m_translation(phi, SIG)
    assert translate(phi, TranslationName.N, SIG) == godel_gentzen(phi, sig=SIG)
