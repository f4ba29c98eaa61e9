"""Herbrand normal form, the no-counterexample interpretation, and the
modus-ponens obligation of the awkward translation."""

from __future__ import annotations

from dataclasses import dataclass, field

from .dnt import awkward
from .interp import Interpretation, dialectica
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
    Signature,
    Top,
    all_vars,
    neg,
    is_prenex,
    prefix_and_matrix,
    substitute,
    substitute_many,
    to_nnf,
)
from .terms import NAT, Arrow, Fn, Prod, Var, apply, fresh_name

_FRESH = "fghkpqrs"


class NciError(ValueError):
    pass


@dataclass(frozen=True)
class HerbrandResult:
    formula: Formula
    symbols: tuple  # (name, arity) per universal variable, in prefix order
    exvars: tuple
    sig: Signature = field(repr=False, compare=False, default=ARITH)

    def __str__(self):
        syms = " ".join(f"{n}/{a}" for n, a in self.symbols)
        return f"{self.formula}\nfresh: {syms}" if syms else str(self.formula)


def _prefix(phi: Formula):
    if not is_prenex(phi):
        raise NciError(f"formula is not prenex: {phi}")
    prefix, matrix = prefix_and_matrix(phi)
    for _, v, ty in prefix:
        if ty is not None:
            raise NciError(f"typed quantifier over {v} in a first-order prefix")
    # distinct bound names, so that later substitutions cannot capture
    used = set(all_vars(phi))
    seen = set(phi.fv)
    out = []
    for q, v, _ in prefix:
        if v in seen:
            nv = fresh_name(v, used)
            used.add(nv)
            matrix = substitute(matrix, v, Var(nv))
            v = nv
        seen.add(v)
        out.append((q, v))
    return out, matrix


def _fresh_symbols(n: int, avoid) -> list:
    names, used = [], set(avoid)
    pool = iter(_FRESH)
    for _ in range(n):
        base = next(pool, "f")
        name = fresh_name(base, used)
        used.add(name)
        names.append(name)
    return names


def herbrand_nf(phi: Formula, sig: Signature = ARITH) -> HerbrandResult:
    """Replace each universal variable by a fresh function of the preceding
    existential variables; the result is purely existential."""
    prefix, matrix = _prefix(phi)
    n_all = sum(1 for q, _ in prefix if q is Forall)
    syms = _fresh_symbols(n_all, set(sig.functions) | all_vars(phi))
    exvars, symbols, mapping = [], [], {}
    it = iter(syms)
    for q, v in prefix:
        if q is Exists:
            exvars.append(v)
        else:
            f = next(it)
            symbols.append((f, len(exvars)))
            mapping[v] = Fn(f, tuple(Var(x) for x in exvars))
            sig = sig.with_function(f, len(exvars))
    body = substitute_many(matrix, mapping)
    for x in reversed(exvars):
        body = Exists(x, body)
    return HerbrandResult(body, tuple(symbols), tuple(exvars), sig)


def _counter_type(arity: int):
    if arity == 0:
        return NAT
    dom = NAT
    for _ in range(arity - 1):
        dom = Prod(NAT, dom)
    return Arrow(dom, NAT)


def nci_types(phi: Formula) -> list:
    """Types of the functionals foiling the counterexample functions, one per
    existential variable."""
    prefix, _ = _prefix(phi)
    counters, k = [], 0
    for q, _ in prefix:
        if q is Exists:
            k += 1
        else:
            counters.append(_counter_type(k))
    out = []
    for q, _ in prefix:
        if q is Exists:
            ty = NAT
            for c in reversed(counters):
                ty = Arrow(c, ty)
            out.append(ty)
    return out


def curry(ty):
    """Full currying: product domains become successive arguments."""
    if isinstance(ty, Arrow):
        dom, cod = ty.dom, curry(ty.cod)
        if isinstance(dom, Prod):
            return curry(Arrow(dom.left, Arrow(dom.right, cod)))
        return Arrow(curry(dom), cod)
    if isinstance(ty, Prod):
        return Prod(curry(ty.left), curry(ty.right))
    return ty


def nci(phi: Formula, sig: Signature = ARITH) -> Interpretation:
    """The no-counterexample interpretation in curried form:
    ``exists F forall f theta(F(f), f(F(f)), ...)``."""
    prefix, matrix = _prefix(phi)
    used = all_vars(phi) | set(sig.functions)
    exs, alls = [], []
    for q, v in prefix:
        base = "F" if q is Exists else "f"
        n = fresh_name(base, used)
        used.add(n)
        (exs if q is Exists else alls).append((q, v, n))
    types = nci_types(phi)
    counters = [(n, curry(_counter_type(k))) for k, (_, _, n) in _arities(prefix, alls)]
    fargs = [Var(n) for n, _ in counters]
    mapping, seen = {}, []
    ai, ei = iter(alls), iter(exs)
    for q, v in prefix:
        if q is Exists:
            _, _, n = next(ei)
            val = apply(Var(n), *fargs)
            mapping[v] = val
            seen.append(val)
        else:
            _, _, n = next(ai)
            mapping[v] = apply(Var(n), *seen)
    ex = tuple((n, curry(t)) for (_, _, n), t in zip(exs, types))
    return Interpretation(ex, tuple(counters), substitute_many(matrix, mapping))


def _arities(prefix, alls):
    k, out, it = 0, [], iter(alls)
    for q, _ in prefix:
        if q is Exists:
            k += 1
        else:
            out.append((k, next(it)))
    return out


@dataclass
class MatchReport:
    ex_types_match: bool
    all_types_match: bool
    matrix_match: bool
    mismatches: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def __str__(self):
        if self.ok:
            return "structural match: ok"
        return "structural match: FAILED\n" + "\n".join("  " + m for m in self.mismatches)


def _orient(phi: Formula, sig: Signature) -> Formula:
    """NNF, which also turns double negations of atoms into the atoms."""
    return to_nnf(phi, sig)


def _canonical(it: Interpretation, sig: Signature) -> Formula:
    mapping = {n: Var(f"#e{i}") for i, (n, _) in enumerate(it.ex)}
    mapping.update({n: Var(f"#a{i}") for i, (n, _) in enumerate(it.all)})
    return _orient(substitute_many(it.matrix, mapping), sig)


_QF = "#qf"


def _abstract_matrix(phi: Formula, sig: Signature):
    """Replace the quantifier-free matrix by one decidable placeholder atom."""
    prefix, matrix = _prefix(phi)
    vs = [v for _, v in prefix] + sorted(phi.fv)
    body = Atom(_QF, tuple(Var(v) for v in vs))
    for q, v in reversed(prefix):
        body = q(v, body)
    return body, sig.with_relation(_QF, len(vs)), vs, matrix


def _restore(f: Formula, vs, matrix, sig: Signature) -> Formula:
    if isinstance(f, Atom):
        if f.rel in (_QF, "~" + _QF):
            m = matrix if f.rel == _QF else neg(matrix, sig)
            return substitute_many(m, dict(zip(vs, f.args)))
        return f
    if isinstance(f, (Bot, Top)):
        return f
    if isinstance(f, (Forall, Exists)):
        return type(f)(f.var, _restore(f.body, vs, matrix, sig), f.ty)
    return type(f)(_restore(f.left, vs, matrix, sig), _restore(f.right, vs, matrix, sig))


def nci_via_awk(phi: Formula, sig: Signature = ARITH):
    """Dialectica of the awkward translation next to the direct
    no-counterexample interpretation, with a structural comparison.

    The quantifier-free matrix is decidable, so Dialectica treats it as a
    single atom."""
    skel, qsig, vs, matrix = _abstract_matrix(phi, sig)
    d = dialectica(awkward(skel, qsig), qsig)
    d = Interpretation(d.ex, d.all, _restore(d.matrix, vs, matrix, sig), d.order)
    n = nci(phi, sig)
    bad = []
    ex_ok = [curry(t) for _, t in d.ex] == [t for _, t in n.ex]
    all_ok = [curry(t) for _, t in d.all] == [t for _, t in n.all]
    if not ex_ok:
        bad.append(f"existential types differ: {[str(t) for _, t in d.ex]} vs "
                   f"{[str(t) for _, t in n.ex]}")
    if not all_ok:
        bad.append(f"universal types differ: {[str(t) for _, t in d.all]} vs "
                   f"{[str(t) for _, t in n.all]}")
    m_ok = _canonical(d, sig) == _canonical(n, sig)
    if not m_ok:
        bad.append(f"matrices differ: {d.matrix} vs {n.matrix}")
    return d, n, MatchReport(ex_ok, all_ok, m_ok, bad)


# ---------------------------------------------------------------- awk and modus ponens


def awk_mp_obligation(phi: Formula, psi: Formula, sig: Signature = ARITH) -> Formula:
    """``phi^awk and (phi -> psi)^awk -> psi^awk``."""
    return Imp(And(awkward(phi, sig), awkward(Imp(phi, psi), sig)), awkward(psi, sig))


def simplify_minimal(phi: Formula, sig: Signature = ARITH) -> Formula:
    """Fixed rewrite set, each step a minimal-logic equivalence once a
    complemented atom is read as the negation of its partner:

    not top => bot;  top -> a => a;  (a and b) -> bot => a -> not b;
    not exists x a => forall x not a;  ~R(t) => not R(t).
    """
    prev = None
    while phi != prev:
        prev, phi = phi, _rewrite(phi, sig)
    return phi


def _rewrite(f: Formula, sig: Signature) -> Formula:
    if isinstance(f, Atom):
        rel = sig.relation(f.rel)
        first = next(r for r in sig.relations if r in (f.rel, rel.complement))
        if first != f.rel and f.rel != "=":
            return Not(Atom(first, f.args))
        return f
    if isinstance(f, (Bot, Top)):
        return f
    if isinstance(f, (Forall, Exists)):
        return type(f)(f.var, _rewrite(f.body, sig), f.ty)
    a, b = _rewrite(f.left, sig), _rewrite(f.right, sig)
    if isinstance(f, Imp):
        if isinstance(a, Top):
            return b if not isinstance(b, Bot) else Bot()
        if isinstance(b, Bot):
            if isinstance(a, And):
                return Imp(a.left, Not(a.right))
            if isinstance(a, Exists):
                return Forall(a.var, Not(a.body), a.ty)
        return Imp(a, b)
    return type(f)(a, b)


def identity_obligation_proof(phi: Formula, sig: Signature = ARITH):
    """Kernel proof of the obligation when ``psi`` is ``phi``."""
    from .proofs import Builder, and_e0

    goal = awk_mp_obligation(phi, phi, sig)
    b = Builder(set(), all_vars(goal), sig)
    return b.lam(goal.left, lambda h: and_e0(h))


__all__ = [
    "HerbrandResult",
    "MatchReport",
    "NciError",
    "awk_mp_obligation",
    "curry",
    "herbrand_nf",
    "identity_obligation_proof",
    "nci",
    "nci_types",
    "nci_via_awk",
    "simplify_minimal",
]
