"""Finite types and the shared term language.

First-order arithmetic terms and terms of the primitive recursive functional
calculus live in one syntax tree: a first-order term is a term built from
variables, ``Zero``, ``Succ`` applications and ``Fn`` nodes (registered
function symbols such as ``+``).  Realizability and Dialectica formulas put
higher-type terms inside atoms, so keeping one tree avoids a conversion layer.

Equality of terms is alpha-equivalence.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

# ---------------------------------------------------------------- types


class FiniteType:
    __slots__ = ()

    def level(self) -> int:
        raise NotImplementedError

    def __str__(self):
        return type_to_str(self)


@dataclass(frozen=True)
class Nat(FiniteType):
    def level(self) -> int:
        return 0


@dataclass(frozen=True)
class Arrow(FiniteType):
    dom: FiniteType
    cod: FiniteType

    def level(self) -> int:
        return max(self.dom.level() + 1, self.cod.level())


@dataclass(frozen=True)
class Prod(FiniteType):
    left: FiniteType
    right: FiniteType

    def level(self) -> int:
        return max(self.left.level(), self.right.level())


@dataclass(frozen=True)
class Sum(FiniteType):
    left: FiniteType
    right: FiniteType

    def level(self) -> int:
        return max(self.left.level(), self.right.level())


NAT = Nat()


def arrows(doms: Iterable[FiniteType], cod: FiniteType) -> FiniteType:
    """Curried ``d1 -> d2 -> ... -> cod``."""
    for d in reversed(list(doms)):
        cod = Arrow(d, cod)
    return cod


def type_to_str(ty: FiniteType) -> str:
    if isinstance(ty, Nat):
        return "N"
    if isinstance(ty, Arrow):
        return f"(-> {type_to_str(ty.dom)} {type_to_str(ty.cod)})"
    if isinstance(ty, Prod):
        return f"(* {type_to_str(ty.left)} {type_to_str(ty.right)})"
    if isinstance(ty, Sum):
        return f"(+ {type_to_str(ty.left)} {type_to_str(ty.right)})"
    raise TypeError(ty)


# ---------------------------------------------------------------- terms


class Term:
    """Base class; subclasses are frozen dataclasses compared up to alpha."""

    __slots__ = ()

    @cached_property
    def key(self):
        return term_key(self, {}, 0)

    @cached_property
    def fv(self) -> frozenset:
        return _free_vars(self)

    def __eq__(self, other):
        if not isinstance(other, Term):
            return NotImplemented
        return self is other or self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __str__(self):
        return term_to_str(self)

    def __repr__(self):
        return f"<{type(self).__name__} {term_to_str(self)}>"


def _term(cls):
    return dataclass(frozen=True, eq=False)(cls)


@_term
class Var(Term):
    name: str
    ty: FiniteType | None = None


@_term
class Zero(Term):
    pass


@_term
class Succ(Term):
    pass


@_term
class Fn(Term):
    """Application of a registered first-order function symbol."""

    sym: str
    args: tuple = ()


@_term
class App(Term):
    fun: Term
    arg: Term


@_term
class Lam(Term):
    var: str
    ty: FiniteType
    body: Term


@_term
class Rec(Term):
    """The recursor R_{base,step} of type N -> sigma."""

    base: Term
    step: Term


@_term
class Pair(Term):
    left: Term
    right: Term


@_term
class Fst(Term):
    arg: Term


@_term
class Snd(Term):
    arg: Term


@_term
class Inl(Term):
    arg: Term
    other: FiniteType  # type of the right summand


@_term
class Inr(Term):
    other: FiniteType  # type of the left summand
    arg: Term


@_term
class IsLeft(Term):
    """Tag of a sum value: numeral 0 for a left injection, 1 for a right one."""

    arg: Term


@_term
class Eltl(Term):
    arg: Term


@_term
class Eltr(Term):
    arg: Term


@_term
class ZeroOf(Term):
    """The constant zero functional of the given type."""

    ty: FiniteType


ZERO = Zero()
SUCC = Succ()


def S(t: Term) -> Term:
    return App(SUCC, t)


def numeral(n: int) -> Term:
    t: Term = ZERO
    for _ in range(n):
        t = App(SUCC, t)
    return t


def as_numeral(t: Term) -> int | None:
    n = 0
    while isinstance(t, App) and isinstance(t.fun, Succ):
        n += 1
        t = t.arg
    return n if isinstance(t, Zero) else None


def apply(f: Term, *args: Term) -> Term:
    """Curried application ``f(a1, ..., an)``."""
    for a in args:
        f = App(f, a)
    return f


def lams(binders, body: Term) -> Term:
    for name, ty in reversed(list(binders)):
        body = Lam(name, ty, body)
    return body


# ---------------------------------------------------------------- structure

_CHILDREN = {
    Fn: lambda t: t.args,
    App: lambda t: (t.fun, t.arg),
    Rec: lambda t: (t.base, t.step),
    Pair: lambda t: (t.left, t.right),
    Fst: lambda t: (t.arg,),
    Snd: lambda t: (t.arg,),
    Inl: lambda t: (t.arg,),
    Inr: lambda t: (t.arg,),
    IsLeft: lambda t: (t.arg,),
    Eltl: lambda t: (t.arg,),
    Eltr: lambda t: (t.arg,),
}


def children(t: Term) -> tuple:
    if isinstance(t, Lam):
        return (t.body,)
    get = _CHILDREN.get(type(t))
    return tuple(get(t)) if get else ()


def rebuild(t: Term, kids: list) -> Term:
    """Return ``t`` with its non-binding children replaced."""
    c = type(t)
    if c is Fn:
        return Fn(t.sym, tuple(kids))
    if c is App:
        return App(*kids)
    if c is Rec:
        return Rec(*kids)
    if c is Pair:
        return Pair(*kids)
    if c is Inl:
        return Inl(kids[0], t.other)
    if c is Inr:
        return Inr(t.other, kids[0])
    if c in (Fst, Snd, IsLeft, Eltl, Eltr):
        return c(kids[0])
    if c is Lam:
        return Lam(t.var, t.ty, kids[0])
    return t


def term_key(t: Term, env: dict, depth: int):
    """Alpha-invariant structural key; ``env`` maps bound names to levels."""
    if isinstance(t, Var):
        if t.name in env:
            return ("b", depth - env[t.name])
        return ("v", t.name)
    if isinstance(t, Lam):
        inner = dict(env)
        inner[t.var] = depth + 1
        return ("lam", t.ty, term_key(t.body, inner, depth + 1))
    if isinstance(t, Fn):
        return ("fn", t.sym) + tuple(term_key(a, env, depth) for a in t.args)
    if isinstance(t, ZeroOf):
        return ("zero", t.ty)
    if isinstance(t, Inl):
        return ("inl", t.other, term_key(t.arg, env, depth))
    if isinstance(t, Inr):
        return ("inr", t.other, term_key(t.arg, env, depth))
    return (type(t).__name__,) + tuple(term_key(k, env, depth) for k in children(t))


def _free_vars(t: Term) -> frozenset:
    if isinstance(t, Var):
        return frozenset((t.name,))
    if isinstance(t, Lam):
        return t.body.fv - {t.var}
    out = frozenset()
    for k in children(t):
        out |= k.fv
    return out


def fresh_name(base: str, avoid) -> str:
    base = base.rstrip("'") or "v"
    name = base
    i = 0
    while name in avoid:
        i += 1
        name = f"{base}{i}"
    return name


def subst(t: Term, name: str, rep: Term) -> Term:
    """Capture-avoiding substitution ``t[name := rep]``."""
    if name not in t.fv:
        return t
    if isinstance(t, Var):
        return rep
    if isinstance(t, Lam):
        if t.var == name:
            return t
        if t.var in rep.fv:
            new = fresh_name(t.var, t.body.fv | rep.fv | {name})
            body = subst(t.body, t.var, Var(new, t.ty))
            return Lam(new, t.ty, subst(body, name, rep))
        return Lam(t.var, t.ty, subst(t.body, name, rep))
    return rebuild(t, [subst(k, name, rep) for k in children(t)])


def subst_many(t: Term, mapping: dict) -> Term:
    """Simultaneous substitution via a round of fresh placeholders."""
    if not mapping:
        return t
    avoid = set(t.fv)
    for r in mapping.values():
        avoid |= r.fv
    avoid |= set(mapping)
    temps = {}
    for name in mapping:
        tmp = fresh_name(name + "_", avoid)
        avoid.add(tmp)
        temps[name] = tmp
        t = subst(t, name, Var(tmp))
    for name, tmp in temps.items():
        t = subst(t, tmp, mapping[name])
    return t


def is_first_order(t: Term) -> bool:
    if isinstance(t, (Var, Zero)):
        return True
    if isinstance(t, App):
        return isinstance(t.fun, Succ) and is_first_order(t.arg)
    if isinstance(t, Fn):
        return all(is_first_order(a) for a in t.args)
    return False


# ---------------------------------------------------------------- printing

PR_KEYWORDS = frozenset(
    "var app lam rec pair fst snd inl inr isleft eltl eltr zero".split()
)


def term_to_str(t: Term) -> str:
    if isinstance(t, Var):
        return t.name if t.ty is None else f"(var {t.name} {type_to_str(t.ty)})"
    if isinstance(t, Zero):
        return "0"
    if isinstance(t, Succ):
        return "S"
    if isinstance(t, Fn):
        if not t.args:
            return t.sym
        return "(" + " ".join([t.sym] + [term_to_str(a) for a in t.args]) + ")"
    if isinstance(t, App):
        if isinstance(t.fun, Succ):
            return f"(S {term_to_str(t.arg)})"
        return f"(app {term_to_str(t.fun)} {term_to_str(t.arg)})"
    if isinstance(t, Lam):
        return f"(lam ({t.var} {type_to_str(t.ty)}) {term_to_str(t.body)})"
    if isinstance(t, Rec):
        return f"(rec {term_to_str(t.base)} {term_to_str(t.step)})"
    if isinstance(t, Pair):
        return f"(pair {term_to_str(t.left)} {term_to_str(t.right)})"
    if isinstance(t, Inl):
        return f"(inl {term_to_str(t.arg)} {type_to_str(t.other)})"
    if isinstance(t, Inr):
        return f"(inr {type_to_str(t.other)} {term_to_str(t.arg)})"
    if isinstance(t, ZeroOf):
        return f"(zero {type_to_str(t.ty)})"
    name = {Fst: "fst", Snd: "snd", IsLeft: "isleft", Eltl: "eltl", Eltr: "eltr"}[type(t)]
    return f"({name} {term_to_str(t.arg)})"


# ---------------------------------------------------------------- parsing


def parse_type(x) -> FiniteType:
    from .sexp import ParseError, Sym, where

    if isinstance(x, Sym):
        if x.name in ("N", "ℕ"):
            return NAT
        raise ParseError(f"unknown type {x.name!r}", *where(x))
    if len(x) == 3 and isinstance(x[0], Sym):
        ctor = {"->": Arrow, "*": Prod, "+": Sum}.get(x[0].name)
        if ctor:
            return ctor(parse_type(x[1]), parse_type(x[2]))
    raise ParseError("malformed type", *where(x))


def parse_term(x, constants=frozenset()) -> Term:
    """Parse a term; ``constants`` names the 0-ary function symbols."""
    from .sexp import ParseError, Sym, where

    if isinstance(x, Sym):
        if x.name == "0":
            return ZERO
        if x.name == "S":
            return SUCC
        if x.name in constants:
            return Fn(x.name, ())
        if x.name.isdigit():
            return numeral(int(x.name))
        return Var(x.name)
    if not x or not isinstance(x[0], Sym):
        raise ParseError("malformed term", *where(x))
    head, args = x[0].name, x[1:]

    def sub(i):
        return parse_term(args[i], constants)

    def need(n):
        if len(args) != n:
            raise ParseError(f"'{head}' expects {n} arguments", *where(x))

    if head == "var":
        if len(args) not in (1, 2) or not isinstance(args[0], Sym):
            raise ParseError("malformed var", *where(x))
        return Var(args[0].name, parse_type(args[1]) if len(args) == 2 else None)
    if head == "app":
        if len(args) < 2:
            raise ParseError("'app' expects at least 2 arguments", *where(x))
        return apply(sub(0), *[sub(i) for i in range(1, len(args))])
    if head == "lam":
        need(2)
        b = args[0]
        if isinstance(b, Sym) or len(b) != 2 or not isinstance(b[0], Sym):
            raise ParseError("malformed lambda binder", *where(x))
        return Lam(b[0].name, parse_type(b[1]), sub(1))
    if head == "rec":
        need(2)
        return Rec(sub(0), sub(1))
    if head == "pair":
        need(2)
        return Pair(sub(0), sub(1))
    if head == "inl":
        need(2)
        return Inl(sub(0), parse_type(args[1]))
    if head == "inr":
        need(2)
        return Inr(parse_type(args[0]), sub(1))
    if head == "zero":
        need(1)
        return ZeroOf(parse_type(args[0]))
    unary = {"fst": Fst, "snd": Snd, "isleft": IsLeft, "eltl": Eltl, "eltr": Eltr}
    if head in unary:
        need(1)
        return unary[head](sub(0))
    if head == "S":
        need(1)
        return App(SUCC, sub(0))
    return Fn(head, tuple(parse_term(a, constants) for a in args))
