"""First-order formulas over an arithmetic signature.

Atoms are either a relation or its registered complement, so negation-normal
form needs no negation constructor.  ``neg`` is the syntactic classical
negation on NNF formulas; ``to_nnf`` computes the canonical NNF with the
``p or bot -> p`` and ``p and bot -> bot`` simplifications.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable

from . import sexp
from .terms import (
    NAT,
    FiniteType,
    Fn,
    Term,
    Var,
    fresh_name,
    parse_term,
    parse_type,
    subst as term_subst,
    term_key,
    term_to_str,
    type_to_str,
)


class SignatureError(ValueError):
    pass


# ---------------------------------------------------------------- signature


@dataclass(frozen=True)
class FunctionSymbol:
    name: str
    arity: int
    impl: Callable | None = None  # semantics on naturals
    equations: tuple = ()  # defining equations as (lhs, rhs) term pairs


@dataclass(frozen=True)
class RelationSymbol:
    name: str
    arity: int
    complement: str
    impl: Callable | None = None


@dataclass(frozen=True)
class Signature:
    functions: dict = field(default_factory=dict)
    relations: dict = field(default_factory=dict)

    def function(self, name: str) -> FunctionSymbol:
        try:
            return self.functions[name]
        except KeyError:
            raise SignatureError(f"unknown function symbol {name!r}") from None

    def relation(self, name: str) -> RelationSymbol:
        try:
            return self.relations[name]
        except KeyError:
            raise SignatureError(f"unknown relation symbol {name!r}") from None

    def complement(self, name: str) -> str:
        return self.relation(name).complement

    @property
    def constants(self) -> frozenset:
        return frozenset(n for n, f in self.functions.items() if f.arity == 0 and n != "0")

    def with_function(self, name, arity, impl=None, equations=()) -> "Signature":
        fns = dict(self.functions)
        fns[name] = FunctionSymbol(name, arity, impl, tuple(equations))
        return Signature(fns, dict(self.relations))

    def with_relation(self, name, arity, complement=None, impl=None) -> "Signature":
        """Register ``name`` together with its complement (``~name`` by default)."""
        complement = complement or "~" + name
        rels = dict(self.relations)
        neg_impl = (lambda *a: not impl(*a)) if impl else None
        rels[name] = RelationSymbol(name, arity, complement, impl)
        rels[complement] = RelationSymbol(complement, arity, name, neg_impl)
        return Signature(dict(self.functions), rels)


def _arith_signature() -> Signature:
    x, y = Var("x"), Var("y")
    from .terms import SUCC, ZERO, App

    def plus(a, b):
        return Fn("+", (a, b))

    def times(a, b):
        return Fn("*", (a, b))

    sig = Signature()
    sig = sig.with_function("0", 0, lambda: 0)
    sig = sig.with_function("S", 1, lambda a: a + 1)
    sig = sig.with_function(
        "+",
        2,
        operator.add,
        [(plus(x, ZERO), x), (plus(x, App(SUCC, y)), App(SUCC, plus(x, y)))],
    )
    sig = sig.with_function(
        "*",
        2,
        operator.mul,
        [(times(x, ZERO), ZERO), (times(x, App(SUCC, y)), plus(times(x, y), x))],
    )
    sig = sig.with_relation("=", 2, "!=", operator.eq)
    sig = sig.with_relation("<=", 2, ">", operator.le)
    return sig


ARITH = _arith_signature()


def pure_signature(*preds, base: Signature = ARITH) -> Signature:
    """Extend ``base`` with uninterpreted predicates given as ``(name, arity)``
    pairs or ``"name/arity"`` strings; constants as ``"name/0!"`` are functions."""
    sig = base
    for p in preds:
        if isinstance(p, str):
            name, _, ar = p.partition("/")
            if ar.endswith("!"):
                sig = sig.with_function(name, int(ar[:-1]))
                continue
            p = (name, int(ar or 0))
        sig = sig.with_relation(p[0], p[1])
    return sig


# ---------------------------------------------------------------- formulas


class Formula:
    __slots__ = ()

    @cached_property
    def key(self):
        return formula_key(self, {}, 0)

    @cached_property
    def fv(self) -> frozenset:
        return _fv(self)

    def __eq__(self, other):
        if not isinstance(other, Formula):
            return NotImplemented
        return self is other or self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __str__(self):
        return to_sexp(self)

    def __repr__(self):
        return f"<{type(self).__name__} {to_sexp(self)}>"


def _formula(cls):
    return dataclass(frozen=True, eq=False)(cls)


@_formula
class Bot(Formula):
    pass


@_formula
class Top(Formula):
    """Verum; arises only as the classical negation of bot."""


@_formula
class Atom(Formula):
    rel: str
    args: tuple = ()


@_formula
class And(Formula):
    left: Formula
    right: Formula


@_formula
class Or(Formula):
    left: Formula
    right: Formula


@_formula
class Imp(Formula):
    left: Formula
    right: Formula


@_formula
class Forall(Formula):
    var: str
    body: Formula
    ty: FiniteType | None = None  # None means N


@_formula
class Exists(Formula):
    var: str
    body: Formula
    ty: FiniteType | None = None


BOT = Bot()
TOP = Top()


def Not(phi: Formula) -> Formula:
    return Imp(phi, BOT)


def is_not(phi: Formula) -> bool:
    return isinstance(phi, Imp) and isinstance(phi.right, Bot)


def Iff(a: Formula, b: Formula) -> Formula:
    return And(Imp(a, b), Imp(b, a))


def eq(s: Term, t: Term) -> Atom:
    return Atom("=", (s, t))


def foralls(names, body: Formula) -> Formula:
    for n in reversed(list(names)):
        if isinstance(n, tuple):
            body = Forall(n[0], body, n[1])
        else:
            body = Forall(n, body)
    return body


def exists_(names, body: Formula) -> Formula:
    for n in reversed(list(names)):
        if isinstance(n, tuple):
            body = Exists(n[0], body, n[1])
        else:
            body = Exists(n, body)
    return body


_QUANT = (Forall, Exists)
_BIN = (And, Or, Imp)


def formula_key(phi: Formula, env: dict, depth: int):
    if isinstance(phi, Atom):
        return ("atom", phi.rel) + tuple(term_key(a, env, depth) for a in phi.args)
    if isinstance(phi, _BIN):
        return (
            type(phi).__name__,
            formula_key(phi.left, env, depth),
            formula_key(phi.right, env, depth),
        )
    if isinstance(phi, _QUANT):
        inner = dict(env)
        inner[phi.var] = depth + 1
        return (type(phi).__name__, phi.ty or NAT, formula_key(phi.body, inner, depth + 1))
    return (type(phi).__name__,)


def _fv(phi: Formula) -> frozenset:
    if isinstance(phi, Atom):
        out = frozenset()
        for a in phi.args:
            out |= a.fv
        return out
    if isinstance(phi, _BIN):
        return phi.left.fv | phi.right.fv
    if isinstance(phi, _QUANT):
        return phi.body.fv - {phi.var}
    return frozenset()


def free_vars(phi: Formula) -> frozenset:
    return phi.fv


def bound_vars(phi: Formula) -> set:
    out = set()
    stack = [phi]
    while stack:
        f = stack.pop()
        if isinstance(f, _BIN):
            stack += [f.left, f.right]
        elif isinstance(f, _QUANT):
            out.add(f.var)
            stack.append(f.body)
    return out


def all_vars(phi: Formula) -> set:
    return set(phi.fv) | bound_vars(phi)


def substitute(phi: Formula, x: str, t: Term) -> Formula:
    """Capture-avoiding ``phi[x := t]``."""
    if x not in phi.fv:
        return phi
    if isinstance(phi, Atom):
        return Atom(phi.rel, tuple(term_subst(a, x, t) for a in phi.args))
    if isinstance(phi, _BIN):
        return type(phi)(substitute(phi.left, x, t), substitute(phi.right, x, t))
    if isinstance(phi, _QUANT):
        if phi.var in t.fv:
            new = fresh_name(phi.var, phi.body.fv | t.fv | {x})
            body = substitute(phi.body, phi.var, Var(new, phi.ty))
            return type(phi)(new, substitute(body, x, t), phi.ty)
        return type(phi)(phi.var, substitute(phi.body, x, t), phi.ty)
    return phi


def substitute_many(phi: Formula, mapping: dict) -> Formula:
    if not mapping:
        return phi
    avoid = set(phi.fv) | set(mapping)
    for r in mapping.values():
        avoid |= r.fv
    temps = {}
    for name in mapping:
        tmp = fresh_name(name + "_", avoid)
        avoid.add(tmp)
        temps[name] = tmp
        phi = substitute(phi, name, Var(tmp))
    for name, tmp in temps.items():
        phi = substitute(phi, tmp, mapping[name])
    return phi


def map_terms(phi: Formula, fn: Callable[[Term], Term]) -> Formula:
    """Apply ``fn`` to every atom argument (no binder handling)."""
    if isinstance(phi, Atom):
        return Atom(phi.rel, tuple(fn(a) for a in phi.args))
    if isinstance(phi, _BIN):
        return type(phi)(map_terms(phi.left, fn), map_terms(phi.right, fn))
    if isinstance(phi, _QUANT):
        return type(phi)(phi.var, map_terms(phi.body, fn), phi.ty)
    return phi


def is_quantifier_free(phi: Formula) -> bool:
    if isinstance(phi, _QUANT):
        return False
    if isinstance(phi, _BIN):
        return is_quantifier_free(phi.left) and is_quantifier_free(phi.right)
    return True


def size(phi: Formula) -> int:
    if isinstance(phi, _BIN):
        return 1 + size(phi.left) + size(phi.right)
    if isinstance(phi, _QUANT):
        return 1 + size(phi.body)
    return 1


def count_negations(phi: Formula) -> int:
    if isinstance(phi, Imp):
        own = 1 if isinstance(phi.right, Bot) else 0
        return own + count_negations(phi.left) + count_negations(phi.right)
    if isinstance(phi, _BIN):
        return count_negations(phi.left) + count_negations(phi.right)
    if isinstance(phi, _QUANT):
        return count_negations(phi.body)
    return 0


# ---------------------------------------------------------------- NNF and ~


def complement_atom(theta: Atom, sig: Signature = ARITH) -> Atom:
    return Atom(sig.complement(theta.rel), theta.args)


def is_nnf(phi: Formula) -> bool:
    if isinstance(phi, Imp):
        return False
    if isinstance(phi, (And, Or)):
        return is_nnf(phi.left) and is_nnf(phi.right)
    if isinstance(phi, _QUANT):
        return is_nnf(phi.body)
    return True


def neg(phi: Formula, sig: Signature = ARITH) -> Formula:
    """Classical negation on NNF: swap and/or, forall/exists, atoms/complements."""
    if isinstance(phi, Atom):
        return complement_atom(phi, sig)
    if isinstance(phi, And):
        return Or(neg(phi.left, sig), neg(phi.right, sig))
    if isinstance(phi, Or):
        return And(neg(phi.left, sig), neg(phi.right, sig))
    if isinstance(phi, Forall):
        return Exists(phi.var, neg(phi.body, sig), phi.ty)
    if isinstance(phi, Exists):
        return Forall(phi.var, neg(phi.body, sig), phi.ty)
    if isinstance(phi, Bot):
        return TOP
    if isinstance(phi, Top):
        return BOT
    raise ValueError(f"neg expects a formula in negation-normal form, got {phi}")


def _or(a: Formula, b: Formula) -> Formula:
    if isinstance(b, Bot):
        return a
    if isinstance(a, Bot):
        return b
    return Or(a, b)


def _and(a: Formula, b: Formula) -> Formula:
    if isinstance(a, Bot) or isinstance(b, Bot):
        return BOT
    return And(a, b)


def simplify_bot(phi: Formula) -> Formula:
    """Bottom-up ``p or bot -> p`` and ``p and bot -> bot``."""
    if isinstance(phi, Or):
        return _or(simplify_bot(phi.left), simplify_bot(phi.right))
    if isinstance(phi, And):
        return _and(simplify_bot(phi.left), simplify_bot(phi.right))
    if isinstance(phi, _QUANT):
        return type(phi)(phi.var, simplify_bot(phi.body), phi.ty)
    return phi


def to_nnf(phi: Formula, sig: Signature = ARITH, simplify: bool = True) -> Formula:
    """Negation-normal form; ``simplify=False`` keeps the raw ``~p or bot`` shapes."""
    if isinstance(phi, Atom):
        sig.relation(phi.rel)
        return phi
    if isinstance(phi, (Bot, Top)):
        return phi
    if isinstance(phi, Imp):
        left = neg(to_nnf(phi.left, sig, simplify), sig)
        right = to_nnf(phi.right, sig, simplify)
        if simplify:
            return _or(simplify_bot(left), right)
        return Or(left, right)
    if isinstance(phi, (And, Or)):
        left = to_nnf(phi.left, sig, simplify)
        right = to_nnf(phi.right, sig, simplify)
        if not simplify:
            return type(phi)(left, right)
        return (_and if isinstance(phi, And) else _or)(left, right)
    if isinstance(phi, _QUANT):
        return type(phi)(phi.var, to_nnf(phi.body, sig, simplify), phi.ty)
    raise TypeError(phi)


def is_prenex(phi: Formula) -> bool:
    while isinstance(phi, _QUANT):
        phi = phi.body
    return is_quantifier_free(phi)


def prefix_and_matrix(phi: Formula):
    """Split a prenex formula into ``[(quantifier class, var, type)], matrix``."""
    prefix = []
    while isinstance(phi, _QUANT):
        prefix.append((type(phi), phi.var, phi.ty))
        phi = phi.body
    return prefix, phi


def is_negative(phi: Formula) -> bool:
    """No exists, no or, and every atom occurs negated."""
    if isinstance(phi, (Bot, Top)):
        return True
    if isinstance(phi, Imp):
        if isinstance(phi.left, Atom) and isinstance(phi.right, Bot):
            return True
        return is_negative(phi.left) and is_negative(phi.right)
    if isinstance(phi, And):
        return is_negative(phi.left) and is_negative(phi.right)
    if isinstance(phi, Forall):
        return is_negative(phi.body)
    return False


def check_formula(phi: Formula, sig: Signature = ARITH) -> None:
    """Raise ``SignatureError`` on unknown symbols or arity mismatches."""
    from .terms import children

    def term(t):
        if isinstance(t, Fn):
            f = sig.function(t.sym)
            if f.arity != len(t.args):
                raise SignatureError(f"{t.sym} expects {f.arity} arguments, got {len(t.args)}")
        for k in children(t):
            term(k)

    if isinstance(phi, Atom):
        r = sig.relation(phi.rel)
        if r.arity != len(phi.args):
            raise SignatureError(f"{phi.rel} expects {r.arity} arguments, got {len(phi.args)}")
        for a in phi.args:
            term(a)
    elif isinstance(phi, _BIN):
        check_formula(phi.left, sig)
        check_formula(phi.right, sig)
    elif isinstance(phi, _QUANT):
        check_formula(phi.body, sig)


# ---------------------------------------------------------------- text format


def to_sexp(phi: Formula) -> str:
    if isinstance(phi, Bot):
        return "(bot)"
    if isinstance(phi, Top):
        return "(top)"
    if isinstance(phi, Atom):
        return "(" + " ".join(["atom", phi.rel] + [term_to_str(a) for a in phi.args]) + ")"
    if isinstance(phi, Imp) and isinstance(phi.right, Bot):
        return f"(not {to_sexp(phi.left)})"
    if isinstance(phi, _BIN):
        name = {And: "and", Or: "or", Imp: "imp"}[type(phi)]
        return f"({name} {to_sexp(phi.left)} {to_sexp(phi.right)})"
    name = "forall" if isinstance(phi, Forall) else "exists"
    binder = phi.var if phi.ty is None else f"({phi.var} {type_to_str(phi.ty)})"
    return f"({name} {binder} {to_sexp(phi.body)})"


def from_sexp(x, sig: Signature = ARITH) -> Formula:
    Sym, ParseError = sexp.Sym, sexp.ParseError
    if isinstance(x, Sym) or not x or not isinstance(x[0], Sym):
        raise ParseError("expected a formula", *sexp.where(x))
    head, args = x[0].name, x[1:]
    consts = sig.constants

    def need(n):
        if len(args) != n:
            raise ParseError(f"'{head}' expects {n} arguments", *sexp.where(x))

    if head == "bot":
        need(0)
        return BOT
    if head == "top":
        need(0)
        return TOP
    if head in ("atom", "natom"):
        if not args or not isinstance(args[0], Sym):
            raise ParseError("atom needs a relation symbol", *sexp.where(x))
        rel = args[0].name
        try:
            r = sig.relation(rel)
        except SignatureError as e:
            raise ParseError(str(e), *sexp.where(args[0])) from None
        terms = tuple(parse_term(a, consts) for a in args[1:])
        if len(terms) != r.arity:
            raise ParseError(f"{rel} expects {r.arity} arguments", *sexp.where(x))
        return Atom(r.complement if head == "natom" else rel, terms)
    if head == "not":
        need(1)
        return Not(from_sexp(args[0], sig))
    if head in ("and", "or", "imp", "iff"):
        need(2)
        a, b = from_sexp(args[0], sig), from_sexp(args[1], sig)
        if head == "iff":
            return Iff(a, b)
        return {"and": And, "or": Or, "imp": Imp}[head](a, b)
    if head in ("forall", "exists"):
        need(2)
        b = args[0]
        if isinstance(b, Sym):
            var, ty = b.name, None
        elif len(b) == 2 and isinstance(b[0], Sym):
            var, ty = b[0].name, parse_type(b[1])
            ty = None if ty == NAT else ty
        else:
            raise ParseError("malformed binder", *sexp.where(b))
        cls = Forall if head == "forall" else Exists
        return cls(var, from_sexp(args[1], sig), ty)
    raise ParseError(f"unknown connective {head!r}", *sexp.where(x))


def parse_formula(text: str, sig: Signature = ARITH) -> Formula:
    return from_sexp(sexp.read(text), sig)


F = parse_formula
