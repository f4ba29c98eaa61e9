"""Seeded random formulas and PR terms for property tests."""

from __future__ import annotations

import random

from .logic import (
    BOT,
    TOP,
    And,
    Atom,
    Exists,
    Forall,
    Formula,
    Imp,
    Not,
    Or,
    Signature,
    pure_signature,
)
from .terms import (
    NAT,
    ZERO,
    App,
    Arrow,
    Eltl,
    Fst,
    Inl,
    Inr,
    IsLeft,
    Lam,
    Nat,
    Pair,
    Prod,
    Rec,
    S,
    Sum,
    Var,
    ZeroOf,
    fresh_name,
    numeral,
)

# Small signature used by the property suites: two propositions, a unary and a
# binary predicate, plus arithmetic equality.
TEST_SIG = pure_signature("P/0", "Q/0", "A/1", "R/2")
PROP_ATOMS = ("P", "Q", "U")
PROP_SIG = pure_signature(*(f"{p}/0" for p in PROP_ATOMS))


def random_prop(rng: random.Random, depth: int, atoms=PROP_ATOMS, bot: bool = True) -> Formula:
    """Propositional formula over ``atoms`` with connective depth at most ``depth``."""
    if depth == 0 or rng.random() < 0.2:
        r = rng.random()
        if bot and r < 0.1:
            return BOT
        if r < 0.13:
            return TOP
        return Atom(rng.choice(atoms))
    op = rng.choice(("and", "or", "imp", "imp", "not"))
    if op == "not":
        return Not(random_prop(rng, depth - 1, atoms, bot))
    a = random_prop(rng, depth - 1, atoms, bot)
    b = random_prop(rng, depth - 1, atoms, bot)
    return {"and": And, "or": Or, "imp": Imp}[op](a, b)


def _random_term(rng, scope):
    if scope and rng.random() < 0.75:
        t = Var(rng.choice(scope))
    else:
        t = ZERO
    return S(t) if rng.random() < 0.2 else t


def _random_atom(rng, scope, sig):
    choices = [("P", 0), ("Q", 0)]
    if scope:
        choices += [("A", 1), ("A", 1), ("R", 2), ("=", 2)]
    rel, ar = rng.choice(choices)
    if rel in ("A", "R") and rng.random() < 0.15:
        rel = sig.complement(rel)
    return Atom(rel, tuple(_random_term(rng, scope) for _ in range(ar)))


def random_fo(rng: random.Random, depth: int, sig: Signature = TEST_SIG, scope=(),
              names=("x", "y", "z"), bot: bool = True) -> Formula:
    """Closed (given empty ``scope``) first-order formula of depth at most ``depth``."""
    if depth == 0 or rng.random() < 0.15:
        r = rng.random()
        if bot and r < 0.06:
            return BOT
        if r < 0.08:
            return TOP
        return _random_atom(rng, list(scope), sig)
    op = rng.choice(("and", "or", "imp", "not", "all", "ex", "all", "ex"))
    if op in ("all", "ex"):
        v = names[len(scope) % len(names)] if rng.random() < 0.7 else rng.choice(names)
        body = random_fo(rng, depth - 1, sig, tuple(scope) + (v,), names, bot)
        return (Forall if op == "all" else Exists)(v, body)
    if op == "not":
        return Not(random_fo(rng, depth - 1, sig, scope, names, bot))
    a = random_fo(rng, depth - 1, sig, scope, names, bot)
    b = random_fo(rng, depth - 1, sig, scope, names, bot)
    return {"and": And, "or": Or, "imp": Imp}[op](a, b)


def random_prenex(rng: random.Random, quantifiers: int, sig: Signature = TEST_SIG,
                  depth: int = 2, names=("x", "y", "z", "u", "v", "w")) -> Formula:
    """Closed prenex formula in negation-normal form."""
    scope = [names[i % len(names)] for i in range(quantifiers)]
    body = _random_qf_nnf(rng, depth, scope, sig)
    for v in reversed(scope):
        body = (Forall if rng.random() < 0.5 else Exists)(v, body)
    return body


def _random_qf_nnf(rng, depth, scope, sig):
    if depth == 0 or rng.random() < 0.3:
        return _random_atom(rng, scope, sig)
    a = _random_qf_nnf(rng, depth - 1, scope, sig)
    b = _random_qf_nnf(rng, depth - 1, scope, sig)
    return (And if rng.random() < 0.5 else Or)(a, b)


# ---------------------------------------------------------------- PR terms

TERM_TYPES = (NAT, Arrow(NAT, NAT), Prod(NAT, NAT), Sum(NAT, NAT), Arrow(Arrow(NAT, NAT), NAT))


def random_type(rng: random.Random):
    return rng.choice(TERM_TYPES)


def random_term(rng: random.Random, ty=NAT, depth: int = 4, ctx: dict | None = None):
    """Well-typed term of type ``ty`` whose free variables come from ``ctx``.

    Recursors are applied to small arguments, so closed terms stay cheap to
    normalize."""
    ctx = dict(ctx or {})
    here = [n for n, t in ctx.items() if t == ty]
    if depth <= 0 or rng.random() < 0.15:
        if here and rng.random() < 0.6:
            return Var(rng.choice(here))
        return _leaf(rng, ty, ctx)
    d = depth - 1
    if isinstance(ty, Nat):
        k = rng.randrange(8)
        if k == 0:
            return S(random_term(rng, NAT, d, ctx))
        if k == 1:
            f = random_term(rng, Arrow(NAT, NAT), d, ctx)
            return App(f, random_term(rng, NAT, d, ctx))
        if k == 2:
            return App(_rec(rng, NAT, d, ctx), _small(rng, ctx))
        if k == 3:
            return Fst(random_term(rng, Prod(NAT, NAT), d, ctx))
        if k == 4:
            return IsLeft(random_term(rng, Sum(NAT, NAT), d, ctx))
        if k == 5:
            return Eltl(random_term(rng, Sum(NAT, NAT), d, ctx))
        if k == 6:
            f = random_term(rng, Arrow(Arrow(NAT, NAT), NAT), d, ctx)
            return App(f, random_term(rng, Arrow(NAT, NAT), d, ctx))
        return App(App(_rec(rng, Arrow(NAT, NAT), d, ctx), _small(rng, ctx)),
                   random_term(rng, NAT, d, ctx))
    if isinstance(ty, Arrow):
        if ty.dom == NAT and rng.random() < 0.25:
            return _rec(rng, ty.cod, d, ctx)
        v = fresh_name("v", ctx)
        return Lam(v, ty.dom, random_term(rng, ty.cod, d, {**ctx, v: ty.dom}))
    if isinstance(ty, Prod):
        if rng.random() < 0.2:
            return Fst(random_term(rng, Prod(ty, NAT), d, ctx))
        return Pair(random_term(rng, ty.left, d, ctx), random_term(rng, ty.right, d, ctx))
    if isinstance(ty, Sum):
        if rng.random() < 0.5:
            return Inl(random_term(rng, ty.left, d, ctx), ty.right)
        return Inr(ty.left, random_term(rng, ty.right, d, ctx))
    raise TypeError(ty)


def _small(rng, ctx):
    return numeral(rng.randint(0, 3))


def _rec(rng, sigma, depth, ctx):
    n, p = fresh_name("n", ctx), fresh_name("p", ctx)
    inner = {**ctx, n: NAT, p: sigma}
    step = Lam(n, NAT, Lam(p, sigma, random_term(rng, sigma, depth - 1, inner)))
    return Rec(random_term(rng, sigma, depth - 1, ctx), step)


def _leaf(rng, ty, ctx):
    if isinstance(ty, Nat):
        return numeral(rng.randint(0, 3))
    if rng.random() < 0.2:
        return ZeroOf(ty)
    return random_term(rng, ty, 1, ctx) if not isinstance(ty, Nat) else ZERO
