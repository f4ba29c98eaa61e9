"""Goedel's primitive recursive functionals of finite type.

``normalize`` is a substitution-based normal-order normalizer (leftmost
outermost redex first).  ``eval_nat`` runs closed numeric programs on a lazy
environment machine, which computes the same numerals with sharing; the
strict variant of the same machine is the applicative-order cross-check.
"""

from __future__ import annotations

import sys

from .terms import (
    NAT,
    App,
    Arrow,
    Eltl,
    Eltr,
    FiniteType,
    Fn,
    Fst,
    Inl,
    Inr,
    IsLeft,
    Lam,
    Nat,
    Pair,
    Prod,
    Rec,
    Snd,
    Succ,
    Sum,
    Term,
    Var,
    Zero,
    ZeroOf,
    ZERO,
    SUCC,
    apply,
    as_numeral,
    children,
    fresh_name,
    numeral,
    rebuild,
    subst,
)

sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))

DEFAULT_FUEL = 10**7


class TypeCheckError(TypeError):
    def __init__(self, message: str, path=()):
        self.path = tuple(path)
        where = "/".join(map(str, self.path)) or "<root>"
        super().__init__(f"at {where}: {message}")


class FuelExhausted(RuntimeError):
    pass


# ---------------------------------------------------------------- typing


def typecheck(t: Term, context: dict | None = None) -> FiniteType:
    """Return the type of ``t``; free variables come from ``context`` or their
    own annotation."""
    return _infer(t, dict(context or {}), (), None)


def _infer(t, ctx, path, on_rec) -> FiniteType:
    def sub(k, i):
        return _infer(k, ctx, path + (i,), on_rec)

    if isinstance(t, Var):
        ty = ctx.get(t.name, t.ty)
        if ty is None:
            raise TypeCheckError(f"unbound variable {t.name}", path)
        if t.ty is not None and t.ty != ty:
            raise TypeCheckError(f"variable {t.name} annotated {t.ty} but bound at {ty}", path)
        return ty
    if isinstance(t, Zero):
        return NAT
    if isinstance(t, Succ):
        return Arrow(NAT, NAT)
    if isinstance(t, Fn):
        for i, a in enumerate(t.args):
            if sub(a, i) != NAT:
                raise TypeCheckError(f"argument of {t.sym} must have type N", path)
        return NAT
    if isinstance(t, App):
        f = sub(t.fun, 0)
        a = sub(t.arg, 1)
        if not isinstance(f, Arrow):
            raise TypeCheckError(f"applying a non-function of type {f}", path)
        if f.dom != a:
            raise TypeCheckError(f"argument type {a} does not match {f.dom}", path)
        return f.cod
    if isinstance(t, Lam):
        inner = dict(ctx)
        inner[t.var] = t.ty
        return Arrow(t.ty, _infer(t.body, inner, path + (0,), on_rec))
    if isinstance(t, Rec):
        s = sub(t.base, 0)
        st = sub(t.step, 1)
        want = Arrow(NAT, Arrow(s, s))
        if st != want:
            raise TypeCheckError(f"recursor step has type {st}, expected {want}", path)
        if on_rec is not None:
            on_rec(s)
        return Arrow(NAT, s)
    if isinstance(t, Pair):
        return Prod(sub(t.left, 0), sub(t.right, 1))
    if isinstance(t, (Fst, Snd)):
        p = sub(t.arg, 0)
        if not isinstance(p, Prod):
            raise TypeCheckError(f"projection from non-product {p}", path)
        return p.left if isinstance(t, Fst) else p.right
    if isinstance(t, Inl):
        return Sum(sub(t.arg, 0), t.other)
    if isinstance(t, Inr):
        return Sum(t.other, sub(t.arg, 0))
    if isinstance(t, (IsLeft, Eltl, Eltr)):
        s = sub(t.arg, 0)
        if not isinstance(s, Sum):
            raise TypeCheckError(f"sum operation on non-sum {s}", path)
        if isinstance(t, IsLeft):
            return NAT
        return s.left if isinstance(t, Eltl) else s.right
    if isinstance(t, ZeroOf):
        return t.ty
    raise TypeCheckError(f"unknown term {t!r}", path)


def recursor_rank(t: Term, context: dict | None = None) -> int:
    """Largest type level of sigma over the recursors N -> sigma in ``t``."""
    levels = [0]
    _infer(t, dict(context or {}), (), lambda s: levels.append(s.level()))
    return max(levels)


# ---------------------------------------------------------------- normal order


class _Fuel:
    __slots__ = ("left",)

    def __init__(self, n):
        self.left = n

    def tick(self):
        self.left -= 1
        if self.left < 0:
            raise FuelExhausted("normalization fuel exhausted")


def _impls(sig):
    if sig is None:
        from .logic import ARITH as sig
    return {n: f.impl for n, f in sig.functions.items() if f.impl is not None}


def _whnf(t: Term, fuel: _Fuel, impls) -> Term:
    while True:
        if isinstance(t, App):
            f = _whnf(t.fun, fuel, impls)
            if isinstance(f, Lam):
                fuel.tick()
                t = subst(f.body, f.var, t.arg)
                continue
            if isinstance(f, Rec):
                n = _whnf(t.arg, fuel, impls)
                if isinstance(n, Zero):
                    fuel.tick()
                    t = f.base
                    continue
                if isinstance(n, App) and isinstance(n.fun, Succ):
                    fuel.tick()
                    t = App(App(f.step, n.arg), App(f, n.arg))
                    continue
                return App(f, n)
            if isinstance(f, ZeroOf) and isinstance(f.ty, Arrow):
                fuel.tick()
                t = ZeroOf(f.ty.cod)
                continue
            return App(f, t.arg) if f is not t.fun else t
        if isinstance(t, (Fst, Snd)):
            p = _whnf(t.arg, fuel, impls)
            if isinstance(p, Pair):
                fuel.tick()
                t = p.left if isinstance(t, Fst) else p.right
                continue
            if isinstance(p, ZeroOf) and isinstance(p.ty, Prod):
                fuel.tick()
                t = ZeroOf(p.ty.left if isinstance(t, Fst) else p.ty.right)
                continue
            return type(t)(p)
        if isinstance(t, (IsLeft, Eltl, Eltr)):
            a = _whnf(t.arg, fuel, impls)
            out = _sum_redex(t, a)
            if out is not None:
                fuel.tick()
                t = out
                continue
            return type(t)(a)
        if isinstance(t, ZeroOf) and isinstance(t.ty, Nat):
            fuel.tick()
            return ZERO
        if isinstance(t, Fn) and t.sym in impls:
            args = [_norm(a, fuel, impls) for a in t.args]
            nums = [as_numeral(a) for a in args]
            if all(n is not None for n in nums):
                fuel.tick()
                return numeral(impls[t.sym](*nums))
            return Fn(t.sym, tuple(args))
        return t


def _sum_redex(t, a):
    if isinstance(t, IsLeft):
        if isinstance(a, Inl) or (isinstance(a, ZeroOf) and isinstance(a.ty, Sum)):
            return ZERO
        if isinstance(a, Inr):
            return App(SUCC, ZERO)
        return None
    left = isinstance(t, Eltl)
    if isinstance(a, Inl):
        return a.arg if left else ZeroOf(a.other)
    if isinstance(a, Inr):
        return ZeroOf(a.other) if left else a.arg
    if isinstance(a, ZeroOf) and isinstance(a.ty, Sum):
        return ZeroOf(a.ty.left if left else a.ty.right)
    return None


def _norm(t: Term, fuel: _Fuel, impls) -> Term:
    h = _whnf(t, fuel, impls)
    if isinstance(h, Lam):
        return Lam(h.var, h.ty, _norm(h.body, fuel, impls))
    kids = children(h)
    if not kids:
        return h
    return rebuild(h, [_norm(k, fuel, impls) for k in kids])


def normalize(t: Term, fuel: int = DEFAULT_FUEL, sig=None) -> Term:
    """Normal form under beta, pairing, sum, zero-functional and recursor rules."""
    return _norm(t, _Fuel(fuel), _impls(sig))


def reduction_steps(t: Term, fuel: int = DEFAULT_FUEL, sig=None) -> int:
    f = _Fuel(fuel)
    _norm(t, f, _impls(sig))
    return fuel - f.left


# ---------------------------------------------------------------- machine


class _Thunk:
    """Delayed value: either a term in an environment or a Python callable."""

    __slots__ = ("term", "env", "fn", "value")

    def __init__(self, term=None, env=None, fn=None, value=None):
        self.term, self.env, self.fn, self.value = term, env, fn, value


class _Closure:
    __slots__ = ("lam", "env")

    def __init__(self, lam, env):
        self.lam, self.env = lam, env


class _Machine:
    """Environment machine over Python ints; lazy (call-by-need) or strict.

    Non-numeric values are closures or tagged tuples:
    ``("succ",)``, ``("rec", base, step)``, ``("pair", l, r)``,
    ``("inl"|"inr", thunk, other_type)``, ``("zero", type)``.
    """

    def __init__(self, strict: bool, fuel: int, impls):
        self.strict = strict
        self.fuel = _Fuel(fuel)
        self.impls = impls

    def force(self, th: _Thunk):
        if th.value is None:
            if th.fn is not None:
                th.value = th.fn()
            else:
                th.value = self.eval(th.term, th.env)
            th.term = th.env = th.fn = None
        return th.value

    def delay(self, term=None, env=None, fn=None) -> _Thunk:
        th = _Thunk(term, env, fn)
        if self.strict:
            self.force(th)
        return th

    def nat(self, v) -> int:
        if isinstance(v, int):
            return v
        raise TypeCheckError(f"expected a numeral, got {v!r}")

    def zero(self, ty):
        return 0 if isinstance(ty, Nat) else ("zero", ty)

    def eval(self, t: Term, env: dict):
        self.fuel.tick()
        c = type(t)
        if c is Var:
            if t.name not in env:
                raise TypeCheckError(f"free variable {t.name} in closed evaluation")
            return self.force(env[t.name])
        if c is Zero:
            return 0
        if c is Succ:
            return ("succ",)
        if c is Lam:
            return _Closure(t, env)
        if c is App:
            f = self.eval(t.fun, env)
            return self.apply(f, self.delay(t.arg, env))
        if c is Rec:
            return ("rec", self.delay(t.base, env), self.delay(t.step, env))
        if c is Pair:
            return ("pair", self.delay(t.left, env), self.delay(t.right, env))
        if c is Fst or c is Snd:
            p = self.eval(t.arg, env)
            if p[0] == "zero":
                return self.zero(p[1].left if c is Fst else p[1].right)
            return self.force(p[1] if c is Fst else p[2])
        if c is Inl:
            return ("inl", self.delay(t.arg, env), t.other)
        if c is Inr:
            return ("inr", self.delay(t.arg, env), t.other)
        if c is IsLeft:
            return 1 if self.eval(t.arg, env)[0] == "inr" else 0
        if c is Eltl or c is Eltr:
            v = self.eval(t.arg, env)
            if v[0] == ("inl" if c is Eltl else "inr"):
                return self.force(v[1])
            if v[0] == "zero":
                return self.zero(v[1].left if c is Eltl else v[1].right)
            return self.zero(v[2])
        if c is ZeroOf:
            return self.zero(t.ty)
        if c is Fn:
            impl = self.impls.get(t.sym)
            if impl is None:
                raise TypeCheckError(f"function symbol {t.sym} has no semantics")
            return impl(*[self.nat(self.eval(a, env)) for a in t.args])
        raise TypeCheckError(f"cannot evaluate {t!r}")

    def apply(self, f, arg: _Thunk):
        self.fuel.tick()
        if isinstance(f, _Closure):
            env = dict(f.env)
            env[f.lam.var] = arg
            return self.eval(f.lam.body, env)
        tag = f[0]
        if tag == "succ":
            return self.nat(self.force(arg)) + 1
        if tag == "rec":
            n = self.nat(self.force(arg))
            acc = f[1]
            for k in range(n):
                acc = self.delay(fn=self._step(f[2], k, acc))
            return self.force(acc)
        if tag == "zero":
            return self.zero(f[1].cod)
        raise TypeCheckError(f"applying a non-function value {f!r}")

    def _step(self, step: _Thunk, k: int, acc: _Thunk):
        def run():
            g = self.apply(self.force(step), _Thunk(value=k))
            return self.apply(g, acc)

        return run


def evaluate(t: Term, strict: bool = False, fuel: int = DEFAULT_FUEL, sig=None) -> int:
    """Value of a closed term of type N (lazy by default, strict on request)."""
    m = _Machine(strict, fuel, _impls(sig))
    return m.nat(m.eval(t, {}))


def _as_term(a) -> Term:
    return numeral(a) if isinstance(a, int) else a


def eval_nat(t: Term, args=(), fuel: int = DEFAULT_FUEL, strict: bool = False, sig=None) -> Term:
    """Numeral value of ``t(args...)`` for closed ``t : N -> ... -> N``."""
    args = [_as_term(a) for a in args]
    ty = typecheck(t)
    for a in args:
        if not isinstance(ty, Arrow) or ty.dom != NAT:
            raise TypeCheckError(f"cannot apply term of type {ty} to a numeral")
        if as_numeral(a) is None:
            raise TypeCheckError(f"argument {a} is not a numeral")
        ty = ty.cod
    if ty != NAT:
        raise TypeCheckError(f"result type {ty} is not N")
    return numeral(evaluate(apply(t, *args), strict=strict, fuel=fuel, sig=sig))


# ---------------------------------------------------------------- sums


def encode_type(ty: FiniteType) -> FiniteType:
    if isinstance(ty, Sum):
        return Prod(NAT, Prod(encode_type(ty.left), encode_type(ty.right)))
    if isinstance(ty, Arrow):
        return Arrow(encode_type(ty.dom), encode_type(ty.cod))
    if isinstance(ty, Prod):
        return Prod(encode_type(ty.left), encode_type(ty.right))
    return ty


def eliminate_sums(t: Term) -> Term:
    """Encode ``s + t`` as ``N x (s x t)`` with inl(a) = <0, a, 0^t>."""
    if isinstance(t, Var):
        return Var(t.name, encode_type(t.ty)) if t.ty is not None else t
    if isinstance(t, Lam):
        return Lam(t.var, encode_type(t.ty), eliminate_sums(t.body))
    if isinstance(t, ZeroOf):
        return ZeroOf(encode_type(t.ty))
    if isinstance(t, Inl):
        return Pair(ZERO, Pair(eliminate_sums(t.arg), ZeroOf(encode_type(t.other))))
    if isinstance(t, Inr):
        return Pair(numeral(1), Pair(ZeroOf(encode_type(t.other)), eliminate_sums(t.arg)))
    if isinstance(t, IsLeft):
        return Fst(eliminate_sums(t.arg))
    if isinstance(t, Eltl):
        return Fst(Snd(eliminate_sums(t.arg)))
    if isinstance(t, Eltr):
        return Snd(Snd(eliminate_sums(t.arg)))
    kids = children(t)
    if not kids:
        return t
    return rebuild(t, [eliminate_sums(k) for k in kids])


def has_sums(t: Term) -> bool:
    if isinstance(t, (Inl, Inr, IsLeft, Eltl, Eltr)):
        return True
    for ty in _types_in(t):
        if _type_has_sum(ty):
            return True
    return any(has_sums(k) for k in children(t))


def _types_in(t):
    if isinstance(t, (Lam, ZeroOf)):
        yield t.ty
    elif isinstance(t, Var) and t.ty is not None:
        yield t.ty


def _type_has_sum(ty) -> bool:
    if isinstance(ty, Sum):
        return True
    if isinstance(ty, (Arrow,)):
        return _type_has_sum(ty.dom) or _type_has_sum(ty.cod)
    if isinstance(ty, Prod):
        return _type_has_sum(ty.left) or _type_has_sum(ty.right)
    return False


# ---------------------------------------------------------------- library

_N = NAT


def _v(n):
    return Var(n)


def _lam(*names_body):
    *names, body = names_body
    for n in reversed(names):
        body = Lam(n, _N, body)
    return body


ADD = _lam("m", Rec(_v("m"), Lam("n", _N, Lam("p", _N, App(SUCC, _v("p"))))))
MUL = _lam("m", Rec(ZERO, Lam("k", _N, Lam("p", _N, apply(ADD, _v("p"), _v("m"))))))
PRED = Rec(ZERO, Lam("n", _N, Lam("p", _N, _v("n"))))
SUB = _lam("m", Rec(_v("m"), Lam("k", _N, Lam("p", _N, App(PRED, _v("p"))))))
SIGN = Rec(ZERO, Lam("k", _N, Lam("p", _N, numeral(1))))

# characteristic functions: value 0 means "holds"
CHAR_EQ = _lam("a", "b", apply(ADD, apply(SUB, _v("a"), _v("b")), apply(SUB, _v("b"), _v("a"))))
CHAR_LE = _lam("a", "b", apply(SUB, _v("a"), _v("b")))


def _flip(ch):
    return _lam("a", "b", apply(SUB, numeral(1), App(SIGN, apply(ch, _v("a"), _v("b")))))


FUNCTION_DEFS = {"+": ADD, "*": MUL}
RELATION_CHARS = {"=": CHAR_EQ, "!=": _flip(CHAR_EQ), "<=": CHAR_LE, ">": _flip(CHAR_LE)}


class MissingDefinition(KeyError):
    pass


def to_pr(t: Term, defs: dict | None = None) -> Term:
    """Replace registered first-order symbols by their PR definitions."""
    defs = FUNCTION_DEFS if defs is None else defs
    if isinstance(t, Fn):
        if t.sym not in defs:
            raise MissingDefinition(f"no PR definition registered for {t.sym!r}")
        return apply(defs[t.sym], *[to_pr(a, defs) for a in t.args])
    kids = children(t)
    if not kids:
        return t
    return rebuild(t, [to_pr(k, defs) for k in kids])


def cond(n: Term, if_zero: Term, otherwise: Term, ty: FiniteType) -> Term:
    """``if n = 0 then if_zero else otherwise`` via a recursor at type ``ty``."""
    k = fresh_name("k", otherwise.fv)
    r = fresh_name("r", otherwise.fv | {k})
    return App(Rec(if_zero, Lam(k, _N, Lam(r, ty, otherwise))), n)
