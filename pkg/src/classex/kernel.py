"""Natural-deduction proof kernel for minimal, intuitionistic and classical
first-order logic over an arithmetic signature.

A proof is an explicit tree whose every node records its conclusion.
``check`` validates the tree bottom-up and returns the end sequent: the
open hypotheses (label -> formula) and the conclusion.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Callable

from . import sexp
from .logic import (
    ARITH,
    And,
    Atom,
    Bot,
    Exists,
    Forall,
    Formula,
    Imp,
    Not,
    Or,
    Signature,
    SignatureError,
    Top,
    check_formula,
    complement_atom,
    from_sexp,
    substitute,
    to_sexp,
)
from .terms import SUCC, ZERO, App, Fn, Term, Var, children, parse_term, term_to_str


class LogicMode(enum.IntEnum):
    MINIMAL = 0
    INTUITIONISTIC = 1
    CLASSICAL = 2

    @classmethod
    def parse(cls, name: str) -> "LogicMode":
        return cls[name.upper()]


MINIMAL = LogicMode.MINIMAL
INTUITIONISTIC = LogicMode.INTUITIONISTIC
CLASSICAL = LogicMode.CLASSICAL

RULES = (
    "hyp topI impI impE andI andE0 andE1 orI0 orI1 orE "
    "allI allE exI exE botE dne ax"
).split()


@dataclass(frozen=True, eq=False)
class Proof:
    rule: str
    concl: Formula
    premises: tuple = ()
    label: str | None = None
    labels: tuple = ()
    term: Term | None = None
    var: str | None = None
    axiom: str | None = None

    def __str__(self):
        return proof_to_sexp(self)

    def size(self) -> int:
        """Number of nodes of the proof as a tree (shared subproofs counted per use)."""
        memo: dict = {}
        for p in reversed(list(self.walk())):
            memo[id(p)] = 1 + sum(memo[id(q)] for q in p.premises)
        return memo[id(self)]

    def walk(self):
        """Each distinct node once, parents before children."""
        seen, order, stack = set(), [], [self]
        while stack:
            p = stack.pop()
            if id(p) in seen:
                continue
            seen.add(id(p))
            order.append(p)
            stack.extend(p.premises)
        # reorder so every parent precedes its premises
        index = {id(p): i for i, p in enumerate(order)}
        indeg = {id(p): 0 for p in order}
        for p in order:
            for q in {id(q): q for q in p.premises}.values():
                indeg[id(q)] += 1
        ready = [self]
        while ready:
            p = ready.pop()
            yield p
            for q in {id(q): q for q in p.premises}.values():
                indeg[id(q)] -= 1
                if indeg[id(q)] == 0:
                    ready.append(q)
        del index

    def rules_used(self) -> set:
        return {p.rule for p in self.walk()}

    def axioms_used(self) -> set:
        return {p.axiom for p in self.walk() if p.rule == "ax"}


@dataclass(frozen=True)
class Judgment:
    hyps: dict
    conclusion: Formula

    def __str__(self):
        hs = ", ".join(f"{k}: {v}" for k, v in sorted(self.hyps.items()))
        return f"{hs} |- {self.conclusion}"


class KernelError(Exception):
    def __init__(self, message: str, path=()):
        self.path = tuple(path)
        super().__init__(f"at node {'/'.join(map(str, self.path)) or '<root>'}: {message}")


# ---------------------------------------------------------------- axioms


@dataclass(frozen=True)
class AxiomSchema:
    name: str
    template: str
    matches: Callable[[Formula], bool] = field(repr=False, compare=False)

    def __call__(self, phi: Formula) -> bool:
        try:
            return bool(self.matches(phi))
        except (AttributeError, TypeError, ValueError):
            return False


def match_term(pat: Term, t: Term, b: dict) -> bool:
    """One-way matching; pattern variables are ``Var`` names starting with '?'."""
    if isinstance(pat, Var) and pat.name.startswith("?"):
        if pat.name in b:
            return b[pat.name] == t
        b[pat.name] = t
        return True
    if type(pat) is not type(t):
        return False
    if isinstance(pat, Var):
        return pat.name == t.name
    if isinstance(pat, Fn) and (pat.sym != t.sym or len(pat.args) != len(t.args)):
        return False
    pk, tk = children(pat), children(t)
    return len(pk) == len(tk) and all(match_term(p, q, b) for p, q in zip(pk, tk))


def match_formula(pat: Formula, phi: Formula, b: dict) -> bool:
    if type(pat) is not type(phi):
        return False
    if isinstance(pat, Atom):
        return (
            pat.rel == phi.rel
            and len(pat.args) == len(phi.args)
            and all(match_term(p, q, b) for p, q in zip(pat.args, phi.args))
        )
    if isinstance(pat, (And, Or, Imp)):
        return match_formula(pat.left, phi.left, b) and match_formula(pat.right, phi.right, b)
    if isinstance(pat, (Forall, Exists)):
        raise ValueError("quantified templates are matched by custom code")
    return True


def _v(n):
    return Var("?" + n)


def _template(pat: Formula):
    return lambda phi: match_formula(pat, phi, {})


def _eq(a, b):
    return Atom("=", (a, b))


def _congruent(s: Term, t: Term, a: Term, b: Term) -> bool:
    """``b`` arises from ``a`` by replacing some occurrences of ``s`` with ``t``."""
    if a == b or (a == s and b == t):
        return True
    if type(a) is not type(b) or isinstance(a, Var):
        return False
    if isinstance(a, Fn) and a.sym != b.sym:
        return False
    ka, kb = children(a), children(b)
    return len(ka) == len(kb) and all(_congruent(s, t, x, y) for x, y in zip(ka, kb))


def _eq_cong(phi):
    eqn, rest = phi.left, phi.right
    if not (isinstance(eqn, Atom) and eqn.rel == "=" and isinstance(rest, Imp)):
        return False
    a, b = rest.left, rest.right
    if not (isinstance(a, Atom) and isinstance(b, Atom) and a.rel == b.rel):
        return False
    s, t = eqn.args
    return len(a.args) == len(b.args) and all(
        _congruent(s, t, x, y) for x, y in zip(a.args, b.args)
    )


def induction_formula(phi: Formula):
    """Return ``(x, body)`` if ``phi`` is an induction instance, else None."""
    if not (isinstance(phi, Imp) and isinstance(phi.right, Imp)):
        return None
    base, step, concl = phi.left, phi.right.left, phi.right.right
    if not isinstance(concl, Forall) or concl.ty is not None:
        return None
    x, body = concl.var, concl.body
    if base != substitute(body, x, ZERO):
        return None
    from .terms import fresh_name

    z = fresh_name(x, body.fv | {x})
    want = Forall(z, Imp(substitute(body, x, Var(z)), substitute(body, x, App(SUCC, Var(z)))))
    if step != want:
        return None
    return x, body


def _atomic_stab(sig):
    def m(phi):
        return (
            isinstance(phi, Imp)
            and isinstance(phi.right, Atom)
            and phi.left == Not(Not(phi.right))
            and phi.right.rel in sig.relations
        )

    return m


def _dec(sig):
    def m(phi):
        return (
            isinstance(phi, Or)
            and isinstance(phi.left, Atom)
            and phi.right == complement_atom(phi.left, sig)
        )

    return m


def _contra(sig):
    def m(phi):
        return (
            isinstance(phi, Imp)
            and isinstance(phi.left, Atom)
            and phi.right == Not(complement_atom(phi.left, sig))
        )

    return m


def ha_axioms(sig: Signature = ARITH) -> dict:
    """Axiom schemas of Heyting arithmetic over ``sig``, keyed by name.

    Includes defining equations of every function symbol that registers
    them, equality axioms, induction, atom stability, and the decidability
    pair ``dec`` (theta or its complement) and ``contra`` (complement
    excludes theta).
    """
    s, t, r = _v("s"), _v("t"), _v("r")
    ax = {}

    def add(name, template, matches):
        ax[name] = AxiomSchema(name, template, matches)

    add("succ_ne_zero", "(atom != (S ?t) 0)", _template(Atom("!=", (App(SUCC, t), ZERO))))
    add(
        "succ_inj",
        "(imp (atom = (S ?s) (S ?t)) (atom = ?s ?t))",
        _template(Imp(_eq(App(SUCC, s), App(SUCC, t)), _eq(s, t))),
    )
    add("eq_refl", "(atom = ?t ?t)", _template(_eq(t, t)))
    add("eq_sym", "(imp (atom = ?s ?t) (atom = ?t ?s))", _template(Imp(_eq(s, t), _eq(t, s))))
    add(
        "eq_trans",
        "(imp (atom = ?r ?s) (imp (atom = ?s ?t) (atom = ?r ?t)))",
        _template(Imp(_eq(r, s), Imp(_eq(s, t), _eq(r, t)))),
    )
    add("eq_cong", "(imp (atom = ?s ?t) (imp theta theta[?s ~> ?t]))", _eq_cong)
    for f in sig.functions.values():
        for i, (lhs, rhs) in enumerate(f.equations):
            ren = {v: Var("?" + v) for v in lhs.fv | rhs.fv}
            from .terms import subst_many

            pat = _eq(subst_many(lhs, ren), subst_many(rhs, ren))
            add(f"def:{f.name}:{i}", to_sexp(pat), _template(pat))
    add("induction", "(imp phi(0) (imp (forall x (imp phi(x) phi(S x))) (forall x phi(x))))",
        lambda phi: induction_formula(phi) is not None)
    add("stab", "(imp (not (not theta)) theta)", _atomic_stab(sig))
    add("dec", "(or theta (complement theta))", _dec(sig))
    add("contra", "(imp (complement theta) (not theta))", _contra(sig))
    if "<=" in sig.relations:
        le = lambda a, b: Atom("<=", (a, b))  # noqa: E731
        add("le_refl", "(atom <= ?t ?t)", _template(le(t, t)))
        add("le_zero", "(atom <= 0 ?t)", _template(le(ZERO, t)))
        add("le_succ", "(imp (atom <= ?s ?t) (atom <= ?s (S ?t)))",
            _template(Imp(le(s, t), le(s, App(SUCC, t)))))
    return ax


HA = ha_axioms(ARITH)
_THEORIES: dict = {}


def theory_for(sig: Signature) -> dict:
    """HA axioms over ``sig``, cached per signature object."""
    if sig is ARITH:
        return HA
    hit = _THEORIES.get(id(sig))
    if hit is None or hit[0] is not sig:
        hit = _THEORIES[id(sig)] = (sig, ha_axioms(sig))
    return hit[1]


# ---------------------------------------------------------------- checking


def _merge(into: dict, other: dict, path):
    for k, v in other.items():
        if k in into and into[k] != v:
            raise KernelError(f"hypothesis {k} used at {into[k]} and {v}", path)
        into[k] = v


def _discharge(hyps: dict, label: str, phi: Formula, path) -> dict:
    if label in hyps:
        if hyps[label] != phi:
            raise KernelError(f"discharged {label} is {phi}, but used as {hyps[label]}", path)
        hyps = dict(hyps)
        del hyps[label]
    return hyps


def _check_term(t: Term, sig: Signature, path):
    if isinstance(t, Fn):
        try:
            f = sig.function(t.sym)
        except SignatureError as e:
            raise KernelError(str(e), path) from None
        if f.arity != len(t.args):
            raise KernelError(f"{t.sym} applied to {len(t.args)} arguments", path)
    elif not isinstance(t, (Var, type(ZERO), type(SUCC), App)):
        raise KernelError(f"{term_to_str(t)} is not a first-order term", path)
    elif isinstance(t, App) and t.fun != SUCC:
        raise KernelError(f"{term_to_str(t)} is not a first-order term", path)
    for k in children(t):
        _check_term(k, sig, path)


def check(p: Proof, mode: LogicMode = MINIMAL, theory: dict | None = None,
          sig: Signature = ARITH) -> Judgment:
    """Validate ``p`` and return its end sequent, or raise ``KernelError``."""
    theory = theory_for(sig) if theory is None else theory
    hyps = _check(p, LogicMode(mode), theory, sig, (), {})
    return Judgment(dict(hyps), p.concl)


def accepts(p: Proof, mode=MINIMAL, theory=None, sig=ARITH) -> bool:
    try:
        check(p, mode, theory, sig)
        return True
    except KernelError:
        return False


def _check(p: Proof, mode, theory, sig, path, memo) -> dict:
    # shared subproofs are checked once; the result depends only on the node
    hit = memo.get(id(p))
    if hit is not None:
        return hit[1]
    out = _check_node(p, mode, theory, sig, path, memo)
    memo[id(p)] = (p, out)
    return out


def _check_node(p: Proof, mode, theory, sig, path, memo) -> dict:
    if p.rule not in RULES:
        raise KernelError(f"unknown rule {p.rule!r}", path)
    prem = []
    for i, q in enumerate(p.premises):
        if not isinstance(q, Proof):
            raise KernelError("premise is not a proof", path + (i,))
        prem.append(_check(q, mode, theory, sig, path + (i,), memo))

    def fail(msg):
        raise KernelError(f"{p.rule}: {msg}", path)

    def arity(n):
        if len(p.premises) != n:
            fail(f"expected {n} premises, got {len(p.premises)}")

    c = p.concl
    ps = p.premises
    try:
        check_formula(c, sig)
    except SignatureError as e:
        fail(str(e))
    rule = p.rule

    if rule == "hyp":
        arity(0)
        if not p.label:
            fail("missing label")
        return {p.label: c}
    if rule == "topI":
        arity(0)
        if not isinstance(c, Top):
            fail("concludes top only")
        return {}
    if rule == "impI":
        arity(1)
        if not isinstance(c, Imp) or ps[0].concl != c.right:
            fail("premise must prove the consequent")
        return _discharge(prem[0], p.label, c.left, path)
    if rule == "impE":
        arity(2)
        f = ps[0].concl
        if not isinstance(f, Imp) or f.right != c or f.left != ps[1].concl:
            fail("major premise must be minor -> conclusion")
    elif rule == "andI":
        arity(2)
        if not isinstance(c, And) or (ps[0].concl, ps[1].concl) != (c.left, c.right):
            fail("conjuncts do not match")
    elif rule in ("andE0", "andE1"):
        arity(1)
        f = ps[0].concl
        if not isinstance(f, And) or (f.left if rule == "andE0" else f.right) != c:
            fail("conjunct does not match")
    elif rule in ("orI0", "orI1"):
        arity(1)
        if not isinstance(c, Or) or (c.left if rule == "orI0" else c.right) != ps[0].concl:
            fail("disjunct does not match")
    elif rule == "orE":
        arity(3)
        f = ps[0].concl
        if not isinstance(f, Or) or len(p.labels) != 2:
            fail("major premise must be a disjunction with two labels")
        if ps[1].concl != c or ps[2].concl != c:
            fail("case branches must prove the conclusion")
        out = dict(prem[0])
        _merge(out, _discharge(prem[1], p.labels[0], f.left, path), path)
        _merge(out, _discharge(prem[2], p.labels[1], f.right, path), path)
        return out
    elif rule == "allI":
        arity(1)
        if not isinstance(c, Forall) or c.ty is not None or not p.var:
            fail("concludes a first-order universal with an eigenvariable")
        if ps[0].concl != substitute(c.body, c.var, Var(p.var)):
            fail("premise is not the eigenvariable instance")
        if p.var in c.fv:
            fail(f"eigenvariable {p.var} free in conclusion")
        for k, v in prem[0].items():
            if p.var in v.fv:
                fail(f"eigenvariable {p.var} free in open hypothesis {k}")
    elif rule == "allE":
        arity(1)
        f = ps[0].concl
        if not isinstance(f, Forall) or p.term is None:
            fail("major premise must be a universal and a term is required")
        _check_term(p.term, sig, path)
        if substitute(f.body, f.var, p.term) != c:
            fail("conclusion is not the instance")
    elif rule == "exI":
        arity(1)
        if not isinstance(c, Exists) or c.ty is not None or p.term is None:
            fail("concludes a first-order existential with a witness")
        _check_term(p.term, sig, path)
        if substitute(c.body, c.var, p.term) != ps[0].concl:
            fail("premise is not the witness instance")
    elif rule == "exE":
        arity(2)
        f = ps[0].concl
        if not isinstance(f, Exists) or not p.var or not p.label:
            fail("major premise must be an existential; eigenvariable and label required")
        if ps[1].concl != c:
            fail("minor premise must prove the conclusion")
        if p.var in c.fv or p.var in f.fv:
            fail(f"eigenvariable {p.var} escapes")
        inst = substitute(f.body, f.var, Var(p.var))
        minor = _discharge(prem[1], p.label, inst, path)
        for k, v in minor.items():
            if p.var in v.fv:
                fail(f"eigenvariable {p.var} free in open hypothesis {k}")
        out = dict(prem[0])
        _merge(out, minor, path)
        return out
    elif rule == "botE":
        arity(1)
        if mode < INTUITIONISTIC:
            fail(f"ex falso is not available in {mode.name.lower()} logic")
        if not isinstance(ps[0].concl, Bot):
            fail("premise must prove bot")
    elif rule == "dne":
        arity(1)
        if mode < CLASSICAL:
            fail(f"double-negation elimination is not available in {mode.name.lower()} logic")
        if ps[0].concl != Not(Not(c)):
            fail("premise must be the double negation of the conclusion")
    elif rule == "ax":
        arity(0)
        schema = theory.get(p.axiom)
        if schema is None:
            fail(f"axiom {p.axiom!r} not in theory")
        if not schema(c):
            fail(f"{c} is not an instance of {p.axiom}")
        return {}

    out = {}
    for h in prem:
        _merge(out, h, path)
    return out


# ---------------------------------------------------------------- text format


def proof_to_sexp(p: Proof) -> str:
    f = to_sexp
    r = p.rule
    sub = [proof_to_sexp(q) for q in p.premises]
    if r == "hyp":
        return f"(hyp {p.label} {f(p.concl)})"
    if r == "topI":
        return "(topI)"
    if r == "impI":
        return f"(impI {p.label} {f(p.concl.left)} {sub[0]})"
    if r in ("impE", "andI"):
        return f"({r} {sub[0]} {sub[1]})"
    if r in ("andE0", "andE1", "dne"):
        return f"({r} {sub[0]})"
    if r == "orI0":
        return f"(orI0 {sub[0]} {f(p.concl.right)})"
    if r == "orI1":
        return f"(orI1 {f(p.concl.left)} {sub[0]})"
    if r == "orE":
        return f"(orE {sub[0]} ({p.labels[0]} {sub[1]}) ({p.labels[1]} {sub[2]}))"
    if r == "allI":
        return f"(allI {p.concl.var} {p.var} {sub[0]})"
    if r == "allE":
        return f"(allE {sub[0]} {term_to_str(p.term)})"
    if r == "exI":
        return f"(exI {f(p.concl)} {term_to_str(p.term)} {sub[0]})"
    if r == "exE":
        return f"(exE {sub[0]} {p.var} {p.label} {sub[1]})"
    if r == "botE":
        return f"(botE {sub[0]} {f(p.concl)})"
    if r == "ax":
        return f"(ax {p.axiom} {f(p.concl)})"
    raise ValueError(r)


def proof_from_sexp(x, sig: Signature = ARITH, hyps: dict | None = None) -> Proof:
    """Elaborate a proof expression; hypothesis formulas come from enclosing
    discharges, ``hyps`` declarations or an explicit annotation."""
    return _elab(x, sig, dict(hyps or {}))


def _elab(x, sig, ctx) -> Proof:
    Sym, PE = sexp.Sym, sexp.ParseError
    if isinstance(x, Sym) or not x or not isinstance(x[0], Sym):
        raise PE("expected a proof node", *sexp.where(x))
    head, a = x[0].name, x[1:]
    consts = sig.constants

    def sym(i):
        if i >= len(a) or not isinstance(a[i], Sym):
            raise PE(f"'{head}' expects a name at position {i + 1}", *sexp.where(x))
        return a[i].name

    def need(n):
        if len(a) != n:
            raise PE(f"'{head}' expects {n} arguments", *sexp.where(x))

    def fm(i):
        return from_sexp(a[i], sig)

    def pr(i, extra=None):
        inner = ctx if extra is None else {**ctx, **extra}
        return _elab(a[i], sig, inner)

    def concl_of(q, path_fn, what):
        if not path_fn(q.concl):
            raise PE(f"'{head}': premise does not prove {what}", *sexp.where(x))

    if head == ":":
        need(2)
        want = fm(0)
        q = pr(1)
        if q.concl != want:
            raise PE(f"annotation {want} does not match {q.concl}", *sexp.where(x))
        return q
    if head == "hyp":
        if len(a) not in (1, 2):
            raise PE("'hyp' expects a label and an optional formula", *sexp.where(x))
        label = sym(0)
        if len(a) == 2:
            return Proof("hyp", fm(1), label=label)
        if label not in ctx:
            raise PE(f"hypothesis {label} has no formula in scope", *sexp.where(x))
        return Proof("hyp", ctx[label], label=label)
    if head == "topI":
        need(0)
        from .logic import TOP

        return Proof("topI", TOP)
    if head == "impI":
        need(3)
        label, phi = sym(0), fm(1)
        q = pr(2, {label: phi})
        return Proof("impI", Imp(phi, q.concl), (q,), label=label)
    if head == "impE":
        need(2)
        f, m = pr(0), pr(1)
        if not isinstance(f.concl, Imp):
            raise PE("impE: major premise is not an implication", *sexp.where(x))
        return Proof("impE", f.concl.right, (f, m))
    if head == "andI":
        need(2)
        l, r = pr(0), pr(1)
        return Proof("andI", And(l.concl, r.concl), (l, r))
    if head in ("andE0", "andE1"):
        need(1)
        q = pr(0)
        if not isinstance(q.concl, And):
            raise PE(f"{head}: premise is not a conjunction", *sexp.where(x))
        return Proof(head, q.concl.left if head == "andE0" else q.concl.right, (q,))
    if head == "orI0":
        need(2)
        q = pr(0)
        return Proof("orI0", Or(q.concl, fm(1)), (q,))
    if head == "orI1":
        need(2)
        q = pr(1)
        return Proof("orI1", Or(fm(0), q.concl), (q,))
    if head == "orE":
        need(3)
        major = pr(0)
        if not isinstance(major.concl, Or):
            raise PE("orE: major premise is not a disjunction", *sexp.where(x))
        branches = []
        for i, phi in ((1, major.concl.left), (2, major.concl.right)):
            b = a[i]
            if isinstance(b, Sym) or len(b) != 2 or not isinstance(b[0], Sym):
                raise PE("orE: branch must be (label proof)", *sexp.where(b))
            branches.append((b[0].name, _elab(b[1], sig, {**ctx, b[0].name: phi})))
        (h1, p1), (h2, p2) = branches
        return Proof("orE", p1.concl, (major, p1, p2), labels=(h1, h2))
    if head == "allI":
        if len(a) == 2:
            bound = eigen = sym(0)
            q = pr(1)
        else:
            need(3)
            bound, eigen = sym(0), sym(1)
            q = pr(2)
        body = q.concl if bound == eigen else substitute(q.concl, eigen, Var(bound))
        return Proof("allI", Forall(bound, body), (q,), var=eigen)
    if head == "allE":
        need(2)
        q = pr(0)
        if not isinstance(q.concl, Forall):
            raise PE("allE: premise is not a universal", *sexp.where(x))
        t = parse_term(a[1], consts)
        return Proof("allE", substitute(q.concl.body, q.concl.var, t), (q,), term=t)
    if head == "exI":
        need(3)
        phi = fm(0)
        t = parse_term(a[1], consts)
        return Proof("exI", phi, (pr(2),), term=t)
    if head == "exE":
        need(4)
        major = pr(0)
        if not isinstance(major.concl, Exists):
            raise PE("exE: major premise is not an existential", *sexp.where(x))
        y, h = sym(1), sym(2)
        inst = substitute(major.concl.body, major.concl.var, Var(y))
        q = pr(3, {h: inst})
        return Proof("exE", q.concl, (major, q), label=h, var=y)
    if head == "botE":
        need(2)
        return Proof("botE", fm(1), (pr(0),))
    if head == "dne":
        need(1)
        q = pr(0)
        c = q.concl
        if not (isinstance(c, Imp) and isinstance(c.right, Bot) and isinstance(c.left, Imp)
                and isinstance(c.left.right, Bot)):
            raise PE("dne: premise is not a double negation", *sexp.where(x))
        return Proof("dne", c.left.left, (q,))
    if head == "ax":
        need(2)
        return Proof("ax", fm(1), axiom=sym(0))
    raise PE(f"unknown proof rule {head!r}", *sexp.where(x))


@dataclass
class ProofFile:
    """A parsed ``.prf`` file."""

    name: str
    proof: Proof
    mode: LogicMode = CLASSICAL
    sig: Signature = ARITH
    hyps: dict = field(default_factory=dict)
    goal: Formula | None = None
    notes: str = ""


def parse_signature_clause(items, sig: Signature) -> Signature:
    for it in items:
        kind, name, ar = it[0].name, it[1].name, int(it[2].name)
        if kind == "relation":
            comp = it[3].name if len(it) > 3 else None
            sig = sig.with_relation(name, ar, comp)
        elif kind == "function":
            sig = sig.with_function(name, ar)
        else:
            raise sexp.ParseError(f"unknown signature entry {kind!r}", *sexp.where(it))
    return sig


def parse_proof_file(text: str, name: str = "<proof>", sig: Signature = ARITH) -> ProofFile:
    """Read ``(proof clause... body)``; clauses are ``(name n)``, ``(mode m)``,
    ``(signature ...)``, ``(hyps (h phi)...)``, ``(goal phi)``, ``(note "...")``
    and ``(body node)``."""
    x = sexp.read(text)
    if isinstance(x, sexp.Sym) or not x or x[0] != "proof":
        raise sexp.ParseError("expected (proof ...)", *sexp.where(x))
    pf = ProofFile(name=name, proof=None, sig=sig)
    body = None
    for clause in x[1:]:
        if isinstance(clause, sexp.Sym) or not clause:
            raise sexp.ParseError("malformed proof clause", *sexp.where(clause))
        tag = clause[0].name
        if tag == "name":
            pf.name = clause[1].name
        elif tag == "mode":
            pf.mode = LogicMode.parse(clause[1].name)
        elif tag == "signature":
            pf.sig = parse_signature_clause(clause[1:], pf.sig)
        elif tag == "hyps":
            for h in clause[1:]:
                pf.hyps[h[0].name] = from_sexp(h[1], pf.sig)
        elif tag == "goal":
            pf.goal = from_sexp(clause[1], pf.sig)
        elif tag == "note":
            pf.notes = " ".join(str(s) for s in clause[1:])
        elif tag == "body":
            body = clause[1]
        else:
            raise sexp.ParseError(f"unknown proof clause {tag!r}", *sexp.where(clause))
    if body is None:
        raise sexp.ParseError("proof file has no (body ...)", *sexp.where(x))
    pf.proof = proof_from_sexp(body, pf.sig, pf.hyps)
    if pf.goal is not None and pf.goal != pf.proof.concl:
        raise sexp.ParseError(f"proof concludes {pf.proof.concl}, goal is {pf.goal}", *sexp.where(x))
    return pf


def load_proof_file(path) -> ProofFile:
    from pathlib import Path

    path = Path(path)
    return parse_proof_file(path.read_text(), name=path.stem)
