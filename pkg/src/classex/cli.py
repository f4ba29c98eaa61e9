"""Command-line entry point.

Exit codes: 0 success, 1 usage or parse error, 2 kernel rejection,
3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import sexp
from .dnt import TranslationName, translate, translate_proof
from .extraction import ROUTES, ExtractionError, Pi2Goal, RejectedProof, witness_candidates
from .interp import APredicate, InterpError, cr_realizes, cr_type, dialectica, dprime
from .interp import mr_realizes, realizer_type
from .kernel import KernelError, LogicMode, check, load_proof_file, parse_signature_clause
from .kernel import proof_to_sexp
from .logic import (
    ARITH,
    Bot,
    Forall,
    SignatureError,
    check_formula,
    from_sexp,
    pure_signature,
    to_nnf,
    to_sexp,
)
from .nci import NciError, awk_mp_obligation, herbrand_nf, nci, nci_types, nci_via_awk
from .nci import simplify_minimal
from .oracle import ModelBatch, OracleError, brute_force_witness, decide_prop_minimal
from .oracle import fo_kripke_countermodel, uninterpreted
from .terms import Var, term_to_str, type_to_str

OK, USAGE, REJECTED, FAILED = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


class Output:
    """Collects text lines or a JSON record; printed once at the end."""

    def __init__(self, as_json: bool):
        self.as_json = as_json
        self.lines: list[str] = []
        self.record: dict = {}

    def text(self, *lines):
        self.lines.extend(lines)

    def set(self, **kv):
        self.record.update(kv)

    def emit(self, stream):
        if self.as_json:
            stream.write(json.dumps(self.record, indent=2, sort_keys=True) + "\n")
        elif self.lines:
            stream.write("\n".join(self.lines) + "\n")


# ---------------------------------------------------------------- inputs


def _signature(spec: str | None, base=ARITH):
    if not spec:
        return base
    return pure_signature(*[s.strip() for s in spec.split(",") if s.strip()], base=base)


def read_formula(arg: str, sig=ARITH):
    """A formula from a file, ``-`` for stdin, or inline S-expression text.

    The text may start with ``(signature (relation A 1) ...)``."""
    if arg == "-":
        text = sys.stdin.read()
    elif arg.lstrip().startswith("("):
        text = arg
    else:
        text = Path(arg).read_text()
    items = sexp.read_all(text)
    if not items:
        raise sexp.ParseError("empty input")
    if (len(items) > 1 and not isinstance(items[0], sexp.Sym) and items[0]
            and items[0][0] == "signature"):
        sig = parse_signature_clause(items[0][1:], sig)
        items = items[1:]
    if len(items) != 1:
        raise sexp.ParseError("expected exactly one formula", *sexp.where(items[1]))
    phi = from_sexp(items[0], sig)
    check_formula(phi, sig)
    return phi, sig


def read_proof(arg: str, sig_spec: str | None):
    pf = load_proof_file(arg)
    if sig_spec:
        pf.sig = _signature(sig_spec, pf.sig)
    return pf


# ---------------------------------------------------------------- commands


def cmd_nnf(a, out):
    phi, sig = read_formula(a.formula, _signature(a.sig))
    r = to_nnf(phi, sig)
    out.text(to_sexp(r))
    out.set(input=to_sexp(phi), nnf=to_sexp(r))
    return OK


def cmd_translate(a, out):
    phi, sig = read_formula(a.formula, _signature(a.sig))
    name = TranslationName.parse(a.pass_name)
    r = translate(phi, name, sig, strengthened=a.strengthened, m_conj_variant=a.m_conj_variant)
    out.text(to_sexp(r))
    out.set(input=to_sexp(phi), translation=name.value, output=to_sexp(r))
    return OK


def cmd_check(a, out):
    pf = read_proof(a.proof, a.sig)
    mode = LogicMode.parse(a.mode) if a.mode else pf.mode
    p = pf.proof
    if a.negative:
        p = translate_proof(p, sig=pf.sig, strengthened=a.strengthened)
        mode = LogicMode.parse("minimal")
    j = check(p, mode, None, pf.sig)
    concl = p.concl
    stray = {k: v for k, v in j.hyps.items() if pf.hyps.get(k) != v}
    if stray:
        names = ", ".join(f"{k}: {to_sexp(v)}" for k, v in sorted(stray.items()))
        out.text(f"rejected: undeclared open hypotheses {names}")
        out.set(accepted=False, open_hypotheses=sorted(stray))
        return REJECTED
    if pf.goal is not None and not a.negative and concl != pf.goal:
        out.text(f"rejected: conclusion {concl} differs from the declared goal {pf.goal}")
        out.set(accepted=False, conclusion=to_sexp(concl), goal=to_sexp(pf.goal))
        return REJECTED
    out.text(f"accepted ({mode.name.lower()}): {to_sexp(concl)}")
    if a.negative and a.print_proof:
        out.text(proof_to_sexp(p))
    out.set(accepted=True, mode=mode.name.lower(), conclusion=to_sexp(concl), size=p.size(),
            axioms=sorted(p.axioms_used()))
    return OK


def cmd_interp(a, out):
    phi, sig = read_formula(a.formula, _signature(a.sig))
    if a.pass_name in ("dialectica", "dprime"):
        it = (dialectica if a.pass_name == "dialectica" else dprime)(phi, sig)
        out.text(it.to_sexp())
        out.set(interpretation=it.to_sexp())
        return OK
    A = APredicate(from_sexp(sexp.read(a.A), sig), a.A_var) if a.A else APredicate(Bot(), "y")
    if a.pass_name == "mr":
        ty = realizer_type(phi)
        claim = mr_realizes(Var("a"), phi, A, {"a": ty})
    else:
        ty = cr_type(phi, sig)
        claim = cr_realizes(Var("a"), phi, A, {"a": ty}, sig)
    out.text(f"type: {type_to_str(ty)}", f"a realizes: {to_sexp(claim)}")
    out.set(type=type_to_str(ty), realizes=to_sexp(claim))
    return OK


def cmd_extract(a, out):
    pf = read_proof(a.proof, a.sig)
    rep = ROUTES[a.route](pf.proof, pf.sig, 0, a.range)
    out.text(rep.format())
    out.set(**rep.to_dict())
    return OK if rep.ok else FAILED


def cmd_nci(a, out):
    phi, sig = read_formula(a.formula, _signature(a.sig))
    if a.via_awk:
        d, n, rep = nci_via_awk(phi, sig)
        out.text(f"dialectica(awk): {d.to_sexp()}", f"nci: {n.to_sexp()}", str(rep))
        out.set(dialectica_awk=d.to_sexp(), nci=n.to_sexp(), match=rep.ok,
                mismatches=rep.mismatches)
        return OK if rep.ok else FAILED
    h = herbrand_nf(phi, sig)
    types = [type_to_str(t) for t in nci_types(phi)]
    n = nci(phi, sig)
    out.text(f"herbrand: {to_sexp(h.formula)}",
             "fresh: " + " ".join(f"{f}/{k}" for f, k in h.symbols),
             "functional types: " + " ".join(types),
             f"nci: {n.to_sexp()}")
    out.set(herbrand=to_sexp(h.formula), symbols=[list(s) for s in h.symbols],
            functional_types=types, nci=n.to_sexp())
    return OK


def cmd_awk_mp(a, out):
    sig = _signature(a.sig)
    phi, sig = read_formula(a.phi, sig)
    psi, sig = read_formula(a.psi, sig)
    ob = awk_mp_obligation(phi, psi, sig)
    simp = simplify_minimal(ob, sig)
    out.text(f"obligation: {to_sexp(ob)}", f"simplified: {to_sexp(simp)}")
    out.set(obligation=to_sexp(ob), simplified=to_sexp(simp))
    return OK


def cmd_oracle(a, out):
    if a.oracle_cmd == "witness":
        phi, sig = read_formula(a.formula, _signature(a.sig))
        goal = Pi2Goal.of(phi, sig)
        rows = [(x, brute_force_witness(goal.matrix, x, a.bound, sig, goal.x, goal.y))
                for x in range(a.range + 1)]
        out.text(*(f"{x}\t{y if y is not None else 'none'}" for x, y in rows))
        out.set(goal=to_sexp(phi), witnesses={str(x): y for x, y in rows})
        return OK
    phi, sig = read_formula(a.formula, _signature(a.sig))
    if a.oracle_cmd == "decide":
        d = decide_prop_minimal(phi, a.mode, sig, budget=a.budget)
        if d.valid:
            out.text(f"valid ({a.mode})")
        else:
            out.text(f"not valid ({a.mode}); countermodel:", str(d.countermodel))
        out.set(valid=d.valid, mode=a.mode,
                countermodel=d.countermodel.to_dict() if d.countermodel else None)
        return OK
    rels, consts = uninterpreted([phi], sig)
    counts = {}
    for n in range(1, a.size + 1):
        v = ModelBatch(sig, n, rels, consts).eval(phi)
        counts[n] = (int(v.sum()), int(v.size))
        out.text(f"size {n}: true in {counts[n][0]} of {counts[n][1]} models")
    out.set(formula=to_sexp(phi), counts={str(k): list(v) for k, v in counts.items()})
    return OK


# ---------------------------------------------------------------- demos


def _corpus(name: str):
    from importlib.resources import files

    return load_proof_file(files("classex") / "corpus" / f"{name}.prf")


def demo_lafont(a, out):
    pf = _corpus("lafont")
    goal = Pi2Goal.of(pf.proof.concl, pf.sig)
    cands = witness_candidates(pf.proof, goal)
    out.text(f"classical proof of {to_sexp(pf.proof.concl)}:", proof_to_sexp(pf.proof), "")
    out.text("witness candidates in the proof: " + ", ".join(term_to_str(t) for t in cands), "")
    status, runs = OK, {}
    for route in ("mr", "direct", "dialectica"):
        rep = ROUTES[route](pf.proof, pf.sig, 0, a.range)
        chosen = []
        for x, fx, _, _ in rep.table:
            from .oracle import std_term

            hits = [term_to_str(t) for t in cands if std_term(t, {goal.x: x}, pf.sig) == fx]
            chosen.append(hits)
        out.text(rep.format(), "chosen branch per x: "
                 + " ".join(f"{x}:{'|'.join(h) or '?'}" for (x, *_), h in zip(rep.table, chosen)),
                 "")
        runs[route] = rep.to_dict() | {"chosen": [h for h in chosen]}
        if not rep.ok:
            status = FAILED
    out.set(proof=proof_to_sexp(pf.proof), candidates=[term_to_str(t) for t in cands], routes=runs)
    return status


def demo_awk_mp(a, out):
    sig = pure_signature("A/1")
    phi, _ = read_formula("(forall x (atom A x))", sig)
    psi = Bot()
    ob = awk_mp_obligation(phi, psi, sig)
    simp = simplify_minimal(ob, sig)
    cm = fo_kripke_countermodel(simp, sig, domain=2, max_worlds=3)
    dns = Forall("x", from_sexp(sexp.read("(not (not (atom A x)))"), sig))
    out.text(f"phi = {to_sexp(phi)}", f"psi = {to_sexp(psi)}",
             f"obligation: {to_sexp(ob)}",
             f"minimal simplification: {to_sexp(simp)}",
             "this is the double-negation shift; its premise "
             f"{to_sexp(dns)} does not give the conclusion in intuitionistic logic",
             "bounded Kripke search (constant domain 2, up to 3 worlds): "
             + ("countermodel found" if cm else "no countermodel; refuting it needs an infinite domain"))
    out.set(obligation=to_sexp(ob), simplified=to_sexp(simp), bounded_countermodel=cm is not None)
    return OK


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="classex", description="Negative translations, proof checking and "
                "program extraction from classical arithmetic proofs.")
    p.add_argument("--json", action="store_true", help="print a structured record")
    sub = p.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    def formula_cmd(name, fn, help_):
        s = sub.add_parser(name, help=help_)
        s.add_argument("formula", help="file, '-' for stdin, or inline S-expression")
        s.add_argument("--sig", help="extra predicates, e.g. 'A/1,P/0,c/0!'")
        s.set_defaults(fn=fn)
        return s

    formula_cmd("nnf", cmd_nnf, "negation-normal form")
    s = formula_cmd("translate", cmd_translate, "negative and related translations")
    s.add_argument("--pass", dest="pass_name", required=True,
                   choices=["n", "kuroda", "krivine", "m", "awk"])
    s.add_argument("--strengthened", action="store_true")
    s.add_argument("--m-conj-variant", action="store_true")

    s = sub.add_parser("check", help="kernel-check a .prf proof")
    s.add_argument("proof")
    s.add_argument("--mode", choices=["minimal", "intuitionistic", "classical"])
    s.add_argument("--negative", action="store_true",
                   help="translate the proof and check the result in minimal logic")
    s.add_argument("--strengthened", action="store_true")
    s.add_argument("--print-proof", action="store_true")
    s.add_argument("--sig")
    s.set_defaults(fn=cmd_check)

    s = formula_cmd("interp", cmd_interp, "realizability and functional interpretations")
    s.add_argument("--pass", dest="pass_name", required=True,
                   choices=["mr", "cr", "dialectica", "dprime"])
    s.add_argument("--A", help="formula used for bottom (default bottom itself)")
    s.add_argument("--A-var", default="y", help="distinguished variable of --A")

    s = sub.add_parser("extract", help="witness a forall-exists theorem")
    s.add_argument("proof")
    s.add_argument("--route", choices=sorted(ROUTES), default="mr")
    s.add_argument("--range", type=int, default=20)
    s.add_argument("--sig")
    s.set_defaults(fn=cmd_extract)

    s = formula_cmd("nci", cmd_nci, "Herbrand form and no-counterexample interpretation")
    s.add_argument("--via-awk", action="store_true")

    s = sub.add_parser("awk-mp", help="modus-ponens obligation of the awkward translation")
    s.add_argument("phi")
    s.add_argument("psi")
    s.add_argument("--sig")
    s.set_defaults(fn=cmd_awk_mp)

    s = sub.add_parser("oracle", help="semantic oracles")
    osub = s.add_subparsers(dest="oracle_cmd", required=True, parser_class=_Parser)
    o = osub.add_parser("eval", help="truth counts over all finite models")
    o.add_argument("formula")
    o.add_argument("--size", type=int, default=3)
    o.add_argument("--sig")
    o = osub.add_parser("decide", help="propositional minimal/intuitionistic validity")
    o.add_argument("formula")
    o.add_argument("--mode", choices=["minimal", "intuitionistic"], default="minimal")
    o.add_argument("--budget", type=int, default=2_000_000)
    o.add_argument("--sig")
    o = osub.add_parser("witness", help="least witnesses by blind search")
    o.add_argument("formula")
    o.add_argument("--range", type=int, default=20)
    o.add_argument("--bound", type=int, default=1000)
    o.add_argument("--sig")
    s.set_defaults(fn=cmd_oracle)

    s = sub.add_parser("demo", help="worked examples")
    dsub = s.add_subparsers(dest="demo", required=True, parser_class=_Parser)
    d = dsub.add_parser("lafont")
    d.add_argument("--range", type=int, default=5)
    d.set_defaults(fn=demo_lafont)
    dsub.add_parser("awk-mp").set_defaults(fn=demo_awk_mp)
    return p


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except UsageError as e:
        stderr.write(f"usage error: {e}\n")
        return USAGE
    except SystemExit as e:  # --help
        return OK if not e.code else USAGE
    out = Output(args.json)
    try:
        code = args.fn(args, out)
    except (sexp.ParseError, SignatureError, UsageError, OSError, NciError, InterpError,
            OracleError) as e:
        stderr.write(f"error: {e}\n")
        return USAGE
    except (KernelError, RejectedProof) as e:
        stderr.write(f"kernel rejection: {e}\n")
        return REJECTED
    except ExtractionError as e:
        stderr.write(f"extraction failed: {e}\n")
        return FAILED
    except ValueError as e:
        stderr.write(f"error: {e}\n")
        return USAGE
    out.emit(stdout)
    return code


if __name__ == "__main__":
    sys.exit(main())
