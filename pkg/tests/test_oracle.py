import random

import pytest

from classex.gen import PROP_SIG, TEST_SIG, random_prop
from classex.logic import Atom, parse_formula, pure_signature
from classex.oracle import (
    FiniteModel,
    KripkeModel,
    OracleError,
    all_models,
    brute_force_witness,
    classical_eval,
    decide_prop_minimal,
    disagreement,
    forces,
    fo_kripke_countermodel,
    refutes,
    replace_bot,
    std_eval,
)


def F(text, sig=PROP_SIG):
    return parse_formula(text, sig)


PEIRCE = "(imp (imp (imp (atom P) (atom Q)) (atom P)) (atom P))"


@pytest.mark.parametrize("mode", ["minimal", "intuitionistic"])
def test_identity_is_valid(mode):
    assert decide_prop_minimal(F("(imp (atom P) (atom P))"), mode, PROP_SIG).valid


def test_ex_falso_separates_minimal_from_intuitionistic():
    phi = F("(imp (bot) (atom P))")
    d = decide_prop_minimal(phi, "minimal", PROP_SIG)
    assert not d.valid and refutes(d.countermodel, phi)
    assert decide_prop_minimal(phi, "intuitionistic", PROP_SIG).valid


@pytest.mark.parametrize("mode", ["minimal", "intuitionistic"])
def test_peirce_has_a_countermodel(mode):
    phi = F(PEIRCE)
    d = decide_prop_minimal(phi, mode, PROP_SIG)
    assert not d.valid
    assert d.countermodel.is_monotone()
    assert not forces(d.countermodel, d.countermodel.root, phi)
    assert d.countermodel.to_dict()["bot_is_atom"] == (mode == "minimal")


def test_double_negation_of_excluded_middle():
    phi = F("(not (not (or (atom P) (not (atom P)))))")
    assert decide_prop_minimal(phi, "minimal", PROP_SIG).valid
    assert not decide_prop_minimal(F("(or (atom P) (not (atom P)))"), "intuitionistic", PROP_SIG).valid


def test_complement_is_read_as_negation():
    sig = pure_signature("P/0")
    assert decide_prop_minimal(parse_formula("(imp (atom ~P) (not (atom P)))", sig), "minimal", sig).valid
    assert decide_prop_minimal(parse_formula("(imp (not (atom P)) (atom ~P))", sig), "minimal", sig).valid


def test_unknown_mode():
    with pytest.raises(OracleError):
        decide_prop_minimal(F("(atom P)"), "classical", PROP_SIG)


def test_quantified_input_rejected():
    with pytest.raises(OracleError):
        decide_prop_minimal(parse_formula("(forall x (atom A x))", TEST_SIG), "minimal", TEST_SIG)


def test_hand_built_kripke_model():
    # two worlds, P forced only above the root
    m = KripkeModel(above=((0, 1), (1,)), val=(frozenset(), frozenset({"(atom P)"})), minimal=False)
    assert not forces(m, 0, F("(or (atom P) (not (atom P)))"))
    assert forces(m, 0, F("(not (not (atom P)))"))
    assert forces(m, 1, F("(atom P)"))


def test_minimal_equals_intuitionistic_with_bot_as_atom():
    rng = random.Random(2)
    sig = pure_signature("P/0", "Q/0", "U/0", "Z/0")
    z = Atom("Z", ())
    for _ in range(100):
        phi = random_prop(rng, 4)
        a = decide_prop_minimal(phi, "minimal", sig).valid
        b = decide_prop_minimal(replace_bot(phi, z), "intuitionistic", sig).valid
        assert a == b, str(phi)


def test_countermodels_reverify():
    rng = random.Random(4)
    for _ in range(150):
        phi = random_prop(rng, 4)
        for mode in ("minimal", "intuitionistic"):
            d = decide_prop_minimal(phi, mode, PROP_SIG)
            if not d.valid:
                assert refutes(d.countermodel, phi)


def test_classical_eval_with_modular_arithmetic():
    m = FiniteModel(3)
    assert classical_eval(parse_formula("(forall x (exists y (atom = (S y) x)))"), m)
    assert not classical_eval(parse_formula("(forall x (atom != (S x) 0))"), m)


def test_complements_partition():
    sig = pure_signature("A/1")
    for m in all_models(sig, 2, ["A"]):
        assert classical_eval(parse_formula("(forall x (or (atom A x) (atom ~A x)))", sig), m)


def test_disagreement_finds_a_model():
    sig = pure_signature("A/1")
    a = parse_formula("(exists x (atom A x))", sig)
    b = parse_formula("(forall x (atom A x))", sig)
    m = disagreement(a, b, sig)
    assert m is not None and classical_eval(a, m) != classical_eval(b, m)
    assert disagreement(a, a, sig) is None


def test_standard_model_and_witness_search():
    assert std_eval(parse_formula("(atom = (+ x (S 0)) y)"), {"x": 4, "y": 5})
    r = parse_formula("(atom <= (* x x) y)")
    assert brute_force_witness(r, 3, 20) == 9
    assert brute_force_witness(r, 5, 20) is None
    assert brute_force_witness(lambda a, b: b > a, 2, 10) == 3


def test_first_order_kripke_search():
    sig = pure_signature("A/1")
    # a one-element domain refutes minimal ex falso with bot as an atom
    phi = parse_formula("(imp (forall x (bot)) (forall x (atom A x)))", sig)
    assert fo_kripke_countermodel(phi, sig) is not None
    dns = parse_formula(
        "(imp (forall x (not (not (atom A x)))) (not (not (forall x (atom A x)))))", sig)
    assert fo_kripke_countermodel(dns, sig, domain=2, max_worlds=2) is None
