"""Formula-level computational interpretations: modified realizability with a
parameter predicate for bottom, classical realizability via "refutes",
Dialectica, and its classical forall-exists variant."""

from __future__ import annotations

from dataclasses import dataclass

from . import prt
from .logic import (
    ARITH,
    BOT,
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
    Top,
    is_nnf,
    neg,
    substitute,
    substitute_many,
    to_sexp,
)
from .terms import (
    NAT,
    ZERO,
    App,
    Arrow,
    Eltl,
    Eltr,
    FiniteType,
    Fst,
    IsLeft,
    Prod,
    Snd,
    Sum,
    Term,
    Var,
    apply,
    arrows,
    fresh_name,
    numeral,
    subst_many,
    type_to_str,
)


class InterpError(ValueError):
    pass


@dataclass(frozen=True)
class APredicate:
    """``A(y)``: the formula realizing bottom, in one distinguished variable."""

    formula: Formula
    var: str = "y"

    def __post_init__(self):
        extra = self.formula.fv - {self.var}
        if self.var not in self.formula.fv and extra:
            raise InterpError("A must mention its distinguished variable")

    def __call__(self, t: Term) -> Formula:
        return substitute(self.formula, self.var, t)

    @property
    def fv(self) -> frozenset:
        return self.formula.fv - {self.var}

    @classmethod
    def of_relation(cls, rel: str, *prefix: Term) -> "APredicate":
        """``A(y) := rel(prefix..., y)``, e.g. ``R(c, y)`` for a Pi-2 goal."""
        return cls(Atom(rel, tuple(prefix) + (Var("y"),)), "y")


def _qtype(phi) -> FiniteType:
    return NAT if phi.ty is None else phi.ty


def _binder(ty: FiniteType):
    return None if ty == NAT else ty


# ---------------------------------------------------------------- realizer types


def realizer_type(phi: Formula) -> FiniteType:
    if isinstance(phi, (Atom, Bot, Top)):
        return NAT
    if isinstance(phi, And):
        return Prod(realizer_type(phi.left), realizer_type(phi.right))
    if isinstance(phi, Or):
        return Sum(realizer_type(phi.left), realizer_type(phi.right))
    if isinstance(phi, Imp):
        return Arrow(realizer_type(phi.left), realizer_type(phi.right))
    if isinstance(phi, Forall):
        return Arrow(_qtype(phi), realizer_type(phi.body))
    if isinstance(phi, Exists):
        return Prod(_qtype(phi), realizer_type(phi.body))
    raise TypeError(phi)


def cr_type(phi: Formula, sig: Signature = ARITH) -> FiniteType:
    """Realizer type for classical realizability of an NNF formula."""
    if isinstance(phi, (Atom, Bot, Top)):
        return NAT
    if isinstance(phi, And):
        return Prod(cr_type(phi.left, sig), cr_type(phi.right, sig))
    if isinstance(phi, Or):
        return Sum(cr_type(phi.left, sig), cr_type(phi.right, sig))
    if isinstance(phi, Exists):
        return Prod(_qtype(phi), cr_type(phi.body, sig))
    if isinstance(phi, Forall):
        return Arrow(cr_type(Exists(phi.var, neg(phi.body, sig), phi.ty), sig), NAT)
    raise InterpError("classical realizability expects a formula in negation-normal form")


# ---------------------------------------------------------------- realizability


def _context(a: Term, phi: Formula, A: APredicate, ctx: dict | None):
    ctx = dict(ctx or {})
    for v in phi.fv | A.fv:
        ctx.setdefault(v, NAT)
    for v in a.fv:
        if v not in ctx and isinstance(v, str):
            ctx.setdefault(v, NAT)
    return ctx


def _check_type(a: Term, want: FiniteType, ctx: dict):
    try:
        got = prt.typecheck(a, ctx)
    except prt.TypeCheckError as e:
        raise InterpError(f"realizer does not typecheck: {e}") from None
    if got != want:
        raise InterpError(f"realizer has type {type_to_str(got)}, expected {type_to_str(want)}")


def _isleft(a: Term) -> Formula:
    return Atom("=", (IsLeft(a), ZERO))


def _isright(a: Term) -> Formula:
    return Atom("=", (IsLeft(a), numeral(1)))


class _Names:
    def __init__(self, avoid):
        self.used = set(avoid)

    def fresh(self, base: str) -> str:
        name = base if base not in self.used else fresh_name(base, self.used)
        self.used.add(name)
        return name


def mr_realizes(a: Term, phi: Formula, A: APredicate, ctx: dict | None = None) -> Formula:
    """The formula ``a realizes phi``, with bottom realized by ``A``."""
    ctx = _context(a, phi, A, ctx)
    _check_type(a, realizer_type(phi), ctx)
    names = _Names(set(ctx) | phi.fv | A.formula.fv | {A.var})
    return _mr(a, phi, A, names)


def _mr(a, phi, A, names):
    if isinstance(phi, Bot):
        return A(a)
    if isinstance(phi, (Atom, Top)):
        return phi
    if isinstance(phi, And):
        return And(_mr(Fst(a), phi.left, A, names), _mr(Snd(a), phi.right, A, names))
    if isinstance(phi, Or):
        return Or(And(_isleft(a), _mr(Eltl(a), phi.left, A, names)),
                  And(_isright(a), _mr(Eltr(a), phi.right, A, names)))
    if isinstance(phi, Imp):
        b = names.fresh("b")
        bv = Var(b)
        return Forall(b, Imp(_mr(bv, phi.left, A, names), _mr(App(a, bv), phi.right, A, names)),
                      _binder(realizer_type(phi.left)))
    if isinstance(phi, Forall):
        x = names.fresh(phi.var)
        body = substitute(phi.body, phi.var, Var(x))
        return Forall(x, _mr(App(a, Var(x)), body, A, names), phi.ty)
    if isinstance(phi, Exists):
        return _mr(Snd(a), substitute(phi.body, phi.var, Fst(a)), A, names)
    raise TypeError(phi)


def refutes(a: Term, phi: Formula, A: APredicate, names, sig) -> Formula:
    """``forall b (b realizes phi -> A(a(b)))``, classical realizability inside."""
    b = names.fresh("b")
    bv = Var(b)
    return Forall(b, Imp(_cr(bv, phi, A, names, sig), A(App(a, bv))), _binder(cr_type(phi, sig)))


def cr_realizes(a: Term, phi: Formula, A: APredicate, ctx: dict | None = None,
                sig: Signature = ARITH) -> Formula:
    """Classical realizability of an NNF formula; the universal clause is
    ``a refutes exists x ~phi(x)``."""
    if not is_nnf(phi):
        raise InterpError("classical realizability expects a formula in negation-normal form")
    ctx = _context(a, phi, A, ctx)
    _check_type(a, cr_type(phi, sig), ctx)
    names = _Names(set(ctx) | phi.fv | A.formula.fv | {A.var})
    return _cr(a, phi, A, names, sig)


def _cr(a, phi, A, names, sig):
    if isinstance(phi, Bot):
        return A(a)
    if isinstance(phi, (Atom, Top)):
        return phi
    if isinstance(phi, And):
        return And(_cr(Fst(a), phi.left, A, names, sig), _cr(Snd(a), phi.right, A, names, sig))
    if isinstance(phi, Or):
        return Or(And(_isleft(a), _cr(Eltl(a), phi.left, A, names, sig)),
                  And(_isright(a), _cr(Eltr(a), phi.right, A, names, sig)))
    if isinstance(phi, Exists):
        return _cr(Snd(a), substitute(phi.body, phi.var, Fst(a)), A, names, sig)
    if isinstance(phi, Forall):
        return refutes(a, Exists(phi.var, neg(phi.body, sig), phi.ty), A, names, sig)
    raise InterpError("classical realizability expects a formula in negation-normal form")


# ---------------------------------------------------------------- Dialectica


@dataclass(frozen=True)
class Interpretation:
    """A prefix of typed variable lists over a matrix.

    ``order`` is ``"ea"`` for the exists-forall shape and ``"ae"`` for the
    forall-exists shape; serialization lists the outer block first.
    """

    ex: tuple
    all: tuple
    matrix: Formula
    order: str = "ea"

    def to_formula(self) -> Formula:
        f = self.matrix
        inner, outer = (self.all, self.ex) if self.order == "ea" else (self.ex, self.all)
        inner_q, outer_q = (Forall, Exists) if self.order == "ea" else (Exists, Forall)
        for name, ty in reversed(inner):
            f = inner_q(name, f, _binder(ty))
        for name, ty in reversed(outer):
            f = outer_q(name, f, _binder(ty))
        return f

    def to_sexp(self) -> str:
        def block(tag, vs):
            return "(" + " ".join([tag] + [f"({n} {type_to_str(t)})" for n, t in vs]) + ")"

        ex, al = block("ex", self.ex), block("all", self.all)
        first, second = (ex, al) if self.order == "ea" else (al, ex)
        return f"(interp {first} {second} {to_sexp(self.matrix)})"

    def __str__(self):
        return self.to_sexp()


def _tuple_type(vs) -> FiniteType:
    if not vs:
        return NAT
    ty = vs[-1][1]
    for _, t in reversed(vs[:-1]):
        ty = Prod(t, ty)
    return ty


def _projections(t: Term, vs) -> dict:
    out = {}
    for i, (name, _) in enumerate(vs):
        cur = t
        for _ in range(i):
            cur = Snd(cur)
        out[name] = cur if i == len(vs) - 1 else Fst(cur)
    return out


def _apply_all(f: str, args) -> Term:
    return apply(Var(f), *(Var(n) for n, _ in args))


def dialectica(phi: Formula, sig: Signature = ARITH) -> Interpretation:
    """``phi^D = exists x forall y phi_D(x, y)`` with flattened variable tuples."""
    names = _Names(phi.fv)
    return _dia(phi, names)


def _dia(phi, names) -> Interpretation:
    if isinstance(phi, (Atom, Bot, Top)):
        return Interpretation((), (), phi)
    if isinstance(phi, And):
        l, r = _dia(phi.left, names), _dia(phi.right, names)
        return Interpretation(l.ex + r.ex, l.all + r.all, And(l.matrix, r.matrix))
    if isinstance(phi, Or):
        l, r = _dia(phi.left, names), _dia(phi.right, names)
        z = names.fresh("z")
        zt = Sum(_tuple_type(l.ex), _tuple_type(r.ex))
        zv = Var(z)
        left = substitute_many(l.matrix, _projections(Eltl(zv), l.ex))
        right = substitute_many(r.matrix, _projections(Eltr(zv), r.ex))
        matrix = Or(And(_isleft(zv), left), And(_isright(zv), right))
        return Interpretation(((z, zt),), l.all + r.all, matrix)
    if isinstance(phi, Imp):
        l, r = _dia(phi.left, names), _dia(phi.right, names)
        xs, ys, us, vs = l.ex, l.all, r.ex, r.all
        U = [(names.fresh("U"), arrows([t for _, t in xs], t)) for _, t in us]
        Y = [(names.fresh("Y"), arrows([t for _, t in xs + vs], t)) for _, t in ys]
        hyp = substitute_many(l.matrix, {y: _apply_all(Yn, xs + vs) for (y, _), (Yn, _) in zip(ys, Y)})
        concl = substitute_many(r.matrix, {u: _apply_all(Un, xs) for (u, _), (Un, _) in zip(us, U)})
        return Interpretation(tuple(U + Y), xs + vs, Imp(hyp, concl))
    if isinstance(phi, (Forall, Exists)):
        z = names.fresh(phi.var)
        zt = _qtype(phi)
        inner = _dia(substitute(phi.body, phi.var, Var(z)), names)
        if isinstance(phi, Exists):
            return Interpretation(((z, zt),) + inner.ex, inner.all, inner.matrix)
        X = [(names.fresh("X"), Arrow(zt, t)) for _, t in inner.ex]
        matrix = substitute_many(inner.matrix, {x: App(Var(Xn), Var(z))
                                                for (x, _), (Xn, _) in zip(inner.ex, X)})
        return Interpretation(tuple(X), ((z, zt),) + inner.all, matrix)
    raise TypeError(phi)


def dprime(phi: Formula, sig: Signature = ARITH) -> Interpretation:
    """Classical variant ``forall x exists y phi_D'(x, y)`` of an NNF formula."""
    if not is_nnf(phi):
        raise InterpError("the classical Dialectica variant expects negation-normal form")
    names = _Names(phi.fv)
    return _dp(phi, names, sig)


def _dp(phi, names, sig) -> Interpretation:
    if isinstance(phi, (Atom, Bot, Top)):
        return Interpretation((), (), phi, "ae")
    if isinstance(phi, (And, Or)):
        l, r = _dp(phi.left, names, sig), _dp(phi.right, names, sig)
        return Interpretation(l.ex + r.ex, l.all + r.all, type(phi)(l.matrix, r.matrix), "ae")
    if isinstance(phi, (Forall, Exists)):
        z = names.fresh(phi.var)
        zt = _qtype(phi)
        body = substitute(phi.body, phi.var, Var(z))
        if isinstance(phi, Forall):
            inner = _dp(body, names, sig)
            return Interpretation(inner.ex, ((z, zt),) + inner.all, inner.matrix, "ae")
        dual = _dp(neg(body, sig), names, sig)
        rs, ss = dual.all, dual.ex
        S = [(names.fresh("S"), arrows([zt] + [t for _, t in rs], t)) for _, t in ss]
        args = ((z, zt),) + rs
        m = substitute_many(dual.matrix, {s: _apply_all(Sn, args) for (s, _), (Sn, _) in zip(ss, S)})
        return Interpretation(((z, zt),) + rs, tuple(S), Not(m), "ae")
    raise InterpError("the classical Dialectica variant expects negation-normal form")


def negation_schema(inner: Interpretation, names_avoid=()) -> Interpretation:
    """``exists Y forall x ~phi_D(x, Y(x))`` built directly from ``phi^D``."""
    names = _Names(set(names_avoid) | {n for n, _ in inner.ex + inner.all} | inner.matrix.fv)
    xs, ys = inner.ex, inner.all
    Y = [(names.fresh("Y"), arrows([t for _, t in xs], t)) for _, t in ys]
    m = substitute_many(inner.matrix, {y: _apply_all(Yn, xs) for (y, _), (Yn, _) in zip(ys, Y)})
    return Interpretation(tuple(Y), xs, Not(m))


# ---------------------------------------------------------------- evaluation


def holds(phi: Formula, env: dict | None = None, sig: Signature = ARITH, bound: int = 20,
          fuel: int = prt.DEFAULT_FUEL) -> bool:
    """Truth in the standard model with number quantifiers bounded by ``bound``.

    ``env`` maps variable names to closed terms (or ints). Quantifiers over
    higher types cannot be evaluated.
    """
    env = {k: numeral(v) if isinstance(v, int) else v for k, v in (env or {}).items()}
    return _holds(phi, env, sig, bound, fuel)


def _value(t: Term, env, sig, fuel) -> int:
    closed = subst_many(t, {k: v for k, v in env.items() if k in t.fv})
    return prt.evaluate(closed, fuel=fuel, sig=sig)


def _holds(phi, env, sig, bound, fuel):
    if isinstance(phi, Bot):
        return False
    if isinstance(phi, Top):
        return True
    if isinstance(phi, Atom):
        r = sig.relation(phi.rel)
        if r.impl is None:
            raise InterpError(f"relation {phi.rel!r} has no standard meaning")
        return bool(r.impl(*(_value(a, env, sig, fuel) for a in phi.args)))
    if isinstance(phi, And):
        return _holds(phi.left, env, sig, bound, fuel) and _holds(phi.right, env, sig, bound, fuel)
    if isinstance(phi, Or):
        return _holds(phi.left, env, sig, bound, fuel) or _holds(phi.right, env, sig, bound, fuel)
    if isinstance(phi, Imp):
        return not _holds(phi.left, env, sig, bound, fuel) or _holds(phi.right, env, sig, bound, fuel)
    if isinstance(phi, (Forall, Exists)):
        if phi.ty is not None:
            raise InterpError("cannot evaluate a quantifier over a higher type")
        vals = (_holds(phi.body, {**env, phi.var: numeral(n)}, sig, bound, fuel)
                for n in range(bound + 1))
        return all(vals) if isinstance(phi, Forall) else any(vals)
    raise TypeError(phi)


__all__ = [
    "APredicate",
    "Interpretation",
    "InterpError",
    "realizer_type",
    "cr_type",
    "mr_realizes",
    "cr_realizes",
    "refutes",
    "dialectica",
    "dprime",
    "negation_schema",
    "holds",
    "BOT",
]
