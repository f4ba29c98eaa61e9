"""Classical proof of forall x exists y (y = S x) to a verified witness.

Runs the negative translation, the minimal-logic kernel check, and the
three extraction routes, then prints the witness table for x = 0..10.
"""

from importlib.resources import files

from classex.dnt import godel_gentzen, translate_proof
from classex.extraction import ROUTES
from classex.kernel import MINIMAL, check, load_proof_file

pf = load_proof_file(files("classex") / "corpus" / "succ.prf")
print("classical goal:  ", pf.proof.concl)

pn = translate_proof(pf.proof, sig=pf.sig)
check(pn, MINIMAL, None, pf.sig)
assert pn.concl == godel_gentzen(pf.proof.concl, sig=pf.sig)
print("translated goal: ", pn.concl, "(minimal kernel: accepted)")

for name, route in sorted(ROUTES.items()):
    rep = route(pf.proof, pf.sig, 0, 10)
    print()
    print(rep.format())
