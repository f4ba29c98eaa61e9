"""Proof construction helpers and a small library of derived lemmas.

Every lemma returns a closed ``Proof`` (no open hypotheses) unless stated
otherwise; ``Iff(a, b)`` is the conjunction of both implications.
"""

from __future__ import annotations

from .kernel import Proof
from .logic import (
    ARITH,
    BOT,
    TOP,
    And,
    Atom,
    Bot,
    Exists,
    Forall,
    Formula,
    Iff,
    Imp,
    Not,
    Or,
    Signature,
    Top,
    all_vars,
    complement_atom,
    is_quantifier_free,
    substitute,
)
from .terms import ZERO, Term, Var, fresh_name


class ProofBuildError(ValueError):
    pass


# ---------------------------------------------------------------- raw nodes


def hyp(label: str, phi: Formula) -> Proof:
    return Proof("hyp", phi, label=label)


def top_i() -> Proof:
    return Proof("topI", TOP)


def imp_i(label: str, phi: Formula, body: Proof) -> Proof:
    return Proof("impI", Imp(phi, body.concl), (body,), label=label)


def imp_e(f: Proof, a: Proof) -> Proof:
    c = f.concl
    if not isinstance(c, Imp) or c.left != a.concl:
        raise ProofBuildError(f"cannot apply {c} to {a.concl}")
    return Proof("impE", c.right, (f, a))


def and_i(a: Proof, b: Proof) -> Proof:
    return Proof("andI", And(a.concl, b.concl), (a, b))


def and_e0(p: Proof) -> Proof:
    if not isinstance(p.concl, And):
        raise ProofBuildError(f"not a conjunction: {p.concl}")
    return Proof("andE0", p.concl.left, (p,))


def and_e1(p: Proof) -> Proof:
    if not isinstance(p.concl, And):
        raise ProofBuildError(f"not a conjunction: {p.concl}")
    return Proof("andE1", p.concl.right, (p,))


def or_i0(p: Proof, right: Formula) -> Proof:
    return Proof("orI0", Or(p.concl, right), (p,))


def or_i1(left: Formula, p: Proof) -> Proof:
    return Proof("orI1", Or(left, p.concl), (p,))


def all_e(p: Proof, t: Term) -> Proof:
    c = p.concl
    if not isinstance(c, Forall):
        raise ProofBuildError(f"not a universal: {c}")
    return Proof("allE", substitute(c.body, c.var, t), (p,), term=t)


def ex_i(goal: Exists, t: Term, p: Proof) -> Proof:
    if substitute(goal.body, goal.var, t) != p.concl:
        raise ProofBuildError(f"{p.concl} is not the instance of {goal} at {t}")
    return Proof("exI", goal, (p,), term=t)


def bot_e(p: Proof, phi: Formula) -> Proof:
    return Proof("botE", phi, (p,))


def dne(p: Proof) -> Proof:
    c = p.concl
    return Proof("dne", c.left.left, (p,))


def ax(name: str, phi: Formula) -> Proof:
    return Proof("ax", phi, axiom=name)


class Eqv:
    """An equivalence kept as two separate implication proofs.

    Composing equivalences only ever needs one direction of each part, so
    keeping the directions apart stops proof trees from doubling at every
    step; ``proof`` packs them into a single proof of ``A <-> B``.
    """

    __slots__ = ("ab", "ba")

    def __init__(self, ab: Proof, ba: Proof):
        self.ab, self.ba = ab, ba

    @property
    def left(self) -> Formula:
        return self.ab.concl.left

    @property
    def right(self) -> Formula:
        return self.ab.concl.right

    @property
    def proof(self) -> Proof:
        return and_i(self.ab, self.ba)

    @property
    def concl(self) -> Formula:
        return Iff(self.left, self.right)


def fwd(e: Eqv, a: Proof) -> Proof:
    """From ``A <-> B`` and ``A`` get ``B``."""
    return imp_e(e.ab, a)


def bwd(e: Eqv, b: Proof) -> Proof:
    return imp_e(e.ba, b)


def labels_in(p: Proof) -> set:
    out = set()
    for q in p.walk():
        if q.label:
            out.add(q.label)
        out.update(q.labels)
    return out


def vars_in(p: Proof) -> set:
    out = set()
    for q in p.walk():
        out |= all_vars(q.concl)
        if q.var:
            out.add(q.var)
        if q.term is not None:
            out |= set(q.term.fv)
    return out


class Builder:
    """Hands out fresh hypothesis labels and eigenvariables.

    ``avoid_labels`` / ``avoid_vars`` seed the names already in use, so the
    builder can extend an existing proof without clashes.
    """

    def __init__(self, avoid_labels=(), avoid_vars=(), sig: Signature = ARITH):
        self.used_labels = set(avoid_labels)
        self.used_vars = set(avoid_vars)
        self.sig = sig
        self._n = 0
        self._scope: list[frozenset] = []

    def label(self, base: str = "u") -> str:
        while True:
            self._n += 1
            name = f"{base}{self._n}"
            if name not in self.used_labels:
                self.used_labels.add(name)
                return name

    def reserve(self, *fmls: Formula):
        for f in fmls:
            self.used_vars |= all_vars(f)

    def var(self, base: str, *avoid: Formula) -> str:
        taken = set(self.used_vars)
        for s in self._scope:
            taken |= s
        for f in avoid:
            taken |= all_vars(f)
        y = fresh_name(base, taken)
        self.used_vars.add(y)
        return y

    # binders -----------------------------------------------------------

    def lam(self, phi: Formula, f, base: str = "u") -> Proof:
        h = self.label(base)
        self._scope.append(phi.fv)
        try:
            body = f(hyp(h, phi))
        finally:
            self._scope.pop()
        return imp_i(h, phi, body)

    def lams(self, phis, f) -> Proof:
        if not phis:
            return f()
        return self.lam(phis[0], lambda h: self.lams(phis[1:], lambda *hs: f(h, *hs)))

    def case(self, major: Proof, f0, f1) -> Proof:
        c = major.concl
        if not isinstance(c, Or):
            raise ProofBuildError(f"not a disjunction: {c}")
        h0, h1 = self.label("c"), self.label("c")
        self._scope.append(c.fv)
        try:
            p0 = f0(hyp(h0, c.left))
            p1 = f1(hyp(h1, c.right))
        finally:
            self._scope.pop()
        if p0.concl != p1.concl:
            raise ProofBuildError(f"case branches disagree: {p0.concl} / {p1.concl}")
        return Proof("orE", p0.concl, (major, p0, p1), labels=(h0, h1))

    def all_i(self, goal: Forall, f, eigen: str | None = None) -> Proof:
        y = eigen or self.var(goal.var, goal)
        body = f(Var(y))
        want = substitute(goal.body, goal.var, Var(y))
        if body.concl != want:
            raise ProofBuildError(f"allI premise {body.concl}, expected {want}")
        return Proof("allI", goal, (body,), var=y)

    def ex_e(self, major: Proof, f, goal: Formula | None = None) -> Proof:
        c = major.concl
        if not isinstance(c, Exists):
            raise ProofBuildError(f"not an existential: {c}")
        extra = (goal,) if goal is not None else ()
        y = self.var(c.var, c, *extra)
        h = self.label("w")
        inst = substitute(c.body, c.var, Var(y))
        self._scope.append(inst.fv - {y})
        try:
            minor = f(Var(y), hyp(h, inst))
        finally:
            self._scope.pop()
        return Proof("exE", minor.concl, (major, minor), label=h, var=y)

    # equivalence plumbing ---------------------------------------------

    def iff(self, ab: Proof, ba: Proof) -> Eqv:
        if ab.concl.left != ba.concl.right or ab.concl.right != ba.concl.left:
            raise ProofBuildError(f"iff: {ab.concl} / {ba.concl} do not match")
        return Eqv(ab, ba)

    def refl(self, a: Formula) -> Eqv:
        i = self.lam(a, lambda h: h)
        return Eqv(i, i)

    def sym(self, e: Eqv) -> Eqv:
        return Eqv(e.ba, e.ab)

    def trans(self, *es: Eqv) -> Eqv:
        e = es[0]
        for e2 in es[1:]:
            if e.right != e2.left:
                raise ProofBuildError(f"trans: {e.right} vs {e2.left}")
            e_, e2_ = e, e2
            e = Eqv(
                self.lam(e.left, lambda h, e_=e_, e2_=e2_: fwd(e2_, fwd(e_, h))),
                self.lam(e2.right, lambda h, e_=e_, e2_=e2_: bwd(e_, bwd(e2_, h))),
            )
        return e

    @staticmethod
    def sides(e: Eqv):
        return e.left, e.right

    def cong_not(self, e: Proof) -> Proof:
        a, b = self.sides(e)
        return self.iff(
            self.lam(Not(a), lambda n: self.lam(b, lambda y: imp_e(n, bwd(e, y)))),
            self.lam(Not(b), lambda n: self.lam(a, lambda x: imp_e(n, fwd(e, x)))),
        )

    def cong_and(self, e1: Proof, e2: Proof) -> Proof:
        a1, b1 = self.sides(e1)
        a2, b2 = self.sides(e2)
        return self.iff(
            self.lam(And(a1, a2), lambda p: and_i(fwd(e1, and_e0(p)), fwd(e2, and_e1(p)))),
            self.lam(And(b1, b2), lambda p: and_i(bwd(e1, and_e0(p)), bwd(e2, and_e1(p)))),
        )

    def cong_or(self, e1: Proof, e2: Proof) -> Proof:
        a1, b1 = self.sides(e1)
        a2, b2 = self.sides(e2)
        return self.iff(
            self.lam(Or(a1, a2), lambda p: self.case(
                p, lambda x: or_i0(fwd(e1, x), b2), lambda y: or_i1(b1, fwd(e2, y)))),
            self.lam(Or(b1, b2), lambda p: self.case(
                p, lambda x: or_i0(bwd(e1, x), a2), lambda y: or_i1(a1, bwd(e2, y)))),
        )

    def cong_imp(self, e1: Proof, e2: Proof) -> Proof:
        a1, b1 = self.sides(e1)
        a2, b2 = self.sides(e2)
        return self.iff(
            self.lam(Imp(a1, a2), lambda f: self.lam(b1, lambda y: fwd(e2, imp_e(f, bwd(e1, y))))),
            self.lam(Imp(b1, b2), lambda f: self.lam(a1, lambda x: bwd(e2, imp_e(f, fwd(e1, x))))),
        )

    def cong_all(self, x: str, e: Proof) -> Proof:
        """From a closed proof of ``A(x) <-> B(x)`` get ``all x A <-> all x B``."""
        a, b = self.sides(e)
        fa, fb = Forall(x, a), Forall(x, b)
        return self.iff(
            self.lam(fa, lambda h: self.all_i(fb, lambda v: fwd(e, all_e(h, v)), eigen=x)),
            self.lam(fb, lambda h: self.all_i(fa, lambda v: bwd(e, all_e(h, v)), eigen=x)),
        )

    def cong_ex(self, x: str, e: Proof) -> Proof:
        a, b = self.sides(e)
        ea, eb = Exists(x, a), Exists(x, b)

        def go(src, dst, step):
            return self.lam(src, lambda h: Proof(
                "exE", dst, (h, ex_i(dst, Var(x), step(e, hyp(lab, (src.body)))))
                , label=lab, var=x))

        lab = self.label("w")
        return self.iff(go(ea, eb, fwd), go(eb, ea, bwd))

    # generic minimal lemmas -------------------------------------------

    def dn_intro(self, a: Formula) -> Proof:
        """A -> not not A"""
        return self.lam(a, lambda x: self.lam(Not(a), lambda k: imp_e(k, x)))

    def contrapose(self, f: Proof) -> Proof:
        """From ``A -> B`` get ``not B -> not A``."""
        a, b = f.concl.left, f.concl.right
        return self.lam(Not(b), lambda k: self.lam(a, lambda x: imp_e(k, imp_e(f, x))))

    def tne(self, a: Formula) -> Proof:
        """not not not A <-> not A"""
        return self.iff(
            self.lam(Not(Not(Not(a))), lambda n: self.lam(
                a, lambda x: imp_e(n, imp_e(self.dn_intro(a), x)))),
            self.dn_intro(Not(a)),
        )

    def is_stable(self, s: Formula, atoms: bool = False) -> bool:
        if isinstance(s, (Bot, Top)):
            return True
        if isinstance(s, Atom):
            return atoms
        if isinstance(s, Imp):
            return self.is_stable(s.right, atoms)
        if isinstance(s, And):
            return self.is_stable(s.left, atoms) and self.is_stable(s.right, atoms)
        if isinstance(s, Forall):
            return self.is_stable(s.body, atoms)
        return False

    def stab(self, s: Formula, atoms: bool = False) -> Proof:
        """not not S -> S for negative S; ``atoms`` allows the stab axiom."""
        nn = Not(Not(s))
        if isinstance(s, Bot):
            return self.lam(nn, lambda n: imp_e(n, self.lam(BOT, lambda b: b)))
        if isinstance(s, Top):
            return self.lam(nn, lambda n: top_i())
        if isinstance(s, Atom):
            if not atoms:
                raise ProofBuildError(f"atom {s} is not stable without the stab axiom")
            return ax("stab", Imp(nn, s))
        if isinstance(s, Imp):
            a, b = s.left, s.right
            sb = self.stab(b, atoms)
            return self.lam(nn, lambda n: self.lam(a, lambda x: imp_e(sb, self.lam(
                Not(b), lambda k: imp_e(n, self.lam(s, lambda f: imp_e(k, imp_e(f, x)))))))
            )
        if isinstance(s, And):
            sa, sb = self.stab(s.left, atoms), self.stab(s.right, atoms)

            def part(n, sx, x, proj):
                return imp_e(sx, self.lam(Not(x), lambda k: imp_e(
                    n, self.lam(s, lambda p: imp_e(k, proj(p))))))

            return self.lam(nn, lambda n: and_i(
                part(n, sa, s.left, and_e0), part(n, sb, s.right, and_e1)))
        if isinstance(s, Forall):
            # the lemma is closed, so the bound variable can serve as eigenvariable
            sb = self.stab(s.body, atoms)
            x = Var(s.var)
            return self.lam(nn, lambda n: self.all_i(s, lambda v: imp_e(sb, self.lam(
                Not(s.body), lambda k: imp_e(n, self.lam(s, lambda h: imp_e(k, all_e(h, x)))))),
                eigen=s.var))
        raise ProofBuildError(f"{s} is not a stable formula")

    def dn_stable(self, s: Formula, atoms: bool = False) -> Proof:
        """not not S <-> S"""
        return self.iff(self.stab(s, atoms), self.dn_intro(s))

    def efq(self, s: Formula, atoms: bool = False) -> Proof:
        """bot -> S for negative S."""
        return self.lam(BOT, lambda b: imp_e(self.stab(s, atoms), self.lam(Not(s), lambda _k: b)))

    def demorgan_or(self, x: Formula, y: Formula) -> Proof:
        """not (X or Y) <-> not X and not Y"""
        return self.iff(
            self.lam(Not(Or(x, y)), lambda n: and_i(
                self.lam(x, lambda a: imp_e(n, or_i0(a, y))),
                self.lam(y, lambda b: imp_e(n, or_i1(x, b))))),
            self.lam(And(Not(x), Not(y)), lambda p: self.lam(Or(x, y), lambda d: self.case(
                d, lambda a: imp_e(and_e0(p), a), lambda b: imp_e(and_e1(p), b)))),
        )

    def not_and_dn(self, x: Formula, y: Formula) -> Proof:
        """not (X and Y) <-> not (not not X and not not Y)"""
        nnx, nny = Not(Not(x)), Not(Not(y))
        return self.iff(
            self.lam(Not(And(x, y)), lambda n: self.lam(And(nnx, nny), lambda p: imp_e(
                and_e0(p), self.lam(x, lambda a: imp_e(and_e1(p), self.lam(
                    y, lambda b: imp_e(n, and_i(a, b))))))))
            ,
            self.lam(Not(And(nnx, nny)), lambda n: self.lam(And(x, y), lambda p: imp_e(
                n, and_i(imp_e(self.dn_intro(x), and_e0(p)), imp_e(self.dn_intro(y), and_e1(p)))))),
        )

    def not_ex(self, x: str, a: Formula) -> Proof:
        """not ex x A <-> all x not A"""
        ex, al = Exists(x, a), Forall(x, Not(a))

        def left(n):
            return self.all_i(al, lambda v: self.lam(
                substitute(a, x, v), lambda h: imp_e(n, ex_i(ex, v, h))))

        def right(u):
            return self.lam(ex, lambda d: self.ex_e(d, lambda v, h: imp_e(all_e(u, v), h), BOT))

        return self.iff(self.lam(Not(ex), left), self.lam(al, right))

    def dn_and(self, x: Formula, y: Formula) -> Proof:
        """not not (X and Y) <-> not not X and not not Y"""
        nnx, nny = Not(Not(x)), Not(Not(y))
        c = And(x, y)

        def split(n):
            return and_i(
                self.lam(Not(x), lambda k: imp_e(n, self.lam(c, lambda p: imp_e(k, and_e0(p))))),
                self.lam(Not(y), lambda k: imp_e(n, self.lam(c, lambda p: imp_e(k, and_e1(p))))),
            )

        def join(p):
            return self.lam(Not(c), lambda k: imp_e(and_e0(p), self.lam(x, lambda a: imp_e(
                and_e1(p), self.lam(y, lambda b: imp_e(k, and_i(a, b)))))))

        return self.iff(self.lam(Not(Not(c)), split), self.lam(And(nnx, nny), join))

    def dn_imp(self, x: Formula, y: Formula) -> Proof:
        """not not (X -> Y) <-> (not not X -> not not Y); the reverse uses ex falso."""
        c = Imp(x, y)
        nnx, nny = Not(Not(x)), Not(Not(y))

        def there(n):
            return self.lam(nnx, lambda dx: self.lam(Not(y), lambda ky: imp_e(n, self.lam(
                c, lambda f: imp_e(dx, self.lam(x, lambda a: imp_e(ky, imp_e(f, a))))))))

        def back(g):
            return self.lam(Not(c), lambda k: imp_e(
                imp_e(g, self.lam(Not(x), lambda nx: imp_e(k, self.lam(
                    x, lambda a: bot_e(imp_e(nx, a), y))))),
                self.lam(y, lambda b: imp_e(k, self.lam(x, lambda _a: b)))))

        return self.iff(self.lam(Not(Not(c)), there), self.lam(Imp(nnx, nny), back))

    def not_and_not(self, x: Formula, y: Formula) -> Proof:
        """not (X and not Y) <-> (X -> Y) for stable Y"""
        sy = self.stab(y)

        def there(n):
            return self.lam(x, lambda a: imp_e(sy, self.lam(Not(y), lambda k: imp_e(n, and_i(a, k)))))

        def back(f):
            return self.lam(And(x, Not(y)), lambda p: imp_e(and_e1(p), imp_e(f, and_e0(p))))

        return self.iff(self.lam(Not(And(x, Not(y))), there), self.lam(Imp(x, y), back))

    def not_top(self) -> Proof:
        """not top <-> bot"""
        return self.iff(
            self.lam(Not(TOP), lambda n: imp_e(n, top_i())),
            self.lam(BOT, lambda b: self.lam(TOP, lambda _t: b)),
        )

    def not_bot(self) -> Proof:
        """not bot <-> top"""
        return self.iff(
            self.lam(Not(BOT), lambda _n: top_i()),
            self.lam(TOP, lambda _t: self.lam(BOT, lambda b: b)),
        )

    # atoms with complements -------------------------------------------

    def bar(self, theta: Atom) -> Atom:
        return complement_atom(theta, self.sig)

    def dec(self, theta: Atom) -> Proof:
        return ax("dec", Or(theta, self.bar(theta)))

    def contra(self, theta: Atom) -> Proof:
        """complement(theta) -> not theta"""
        return ax("contra", Imp(self.bar(theta), Not(theta)))

    def not_iff_dn_bar(self, theta: Atom) -> Proof:
        """not theta <-> not not complement(theta)"""
        tb = self.bar(theta)
        return self.iff(
            self.lam(Not(theta), lambda n: self.lam(Not(tb), lambda k: self.case(
                self.dec(theta), lambda t: imp_e(n, t), lambda u: imp_e(k, u)))),
            self.lam(Not(Not(tb)), lambda d: self.lam(theta, lambda t: imp_e(d, self.lam(
                tb, lambda u: imp_e(imp_e(self.contra(theta), u), t))))),
        )

    def atom_efq(self, theta: Atom) -> Proof:
        """bot -> theta using atom stability."""
        return self.lam(BOT, lambda b: imp_e(ax("stab", Imp(Not(Not(theta)), theta)),
                                              self.lam(Not(theta), lambda _k: b)))


def substitute_proof(p: Proof, x: str, t: Term) -> Proof:
    """Replace the free variable ``x`` by ``t`` throughout ``p``.

    Eigenvariables equal to ``x`` or occurring in ``t`` are renamed first.
    """
    bad = set(t.fv) | {x}
    if p.var is not None and p.var in bad:
        avoid = vars_in(p) | bad
        y = fresh_name(p.var, avoid)
        p = _rename_eigen(p, p.var, y)
    kids = tuple(substitute_proof(q, x, t) for q in p.premises)
    term = None if p.term is None else _subst_term(p.term, x, t)
    return Proof(p.rule, substitute(p.concl, x, t), kids, p.label, p.labels, term, p.var, p.axiom)


def _subst_term(s: Term, x: str, t: Term) -> Term:
    from .terms import subst

    return subst(s, x, t)


def _rename_eigen(p: Proof, y: str, z: str) -> Proof:
    """Rename eigenvariable ``y`` of node ``p`` to ``z`` inside its scope."""
    if p.rule == "allI":
        return Proof("allI", p.concl, (substitute_proof(p.premises[0], y, Var(z)),), var=z)
    major, minor = p.premises
    return Proof("exE", p.concl, (major, substitute_proof(minor, y, Var(z))), label=p.label, var=z)


# ---------------------------------------------------------------- prenex


def _qclass(phi):
    return type(phi) if isinstance(phi, (Forall, Exists)) else None


def prenex(phi: Formula, sig: Signature = ARITH):
    """Prenex form of an implication-free formula and a classical proof of
    ``phi <-> prenex(phi)``."""
    b = Builder(sig=sig)
    b.reserve(phi)
    out, e = _prenex(b, phi)
    return out, e.proof


def _prenex(b: Builder, phi: Formula):
    if isinstance(phi, Imp):
        raise ProofBuildError("prenex expects an implication-free formula; apply to_nnf first")
    if is_quantifier_free(phi):
        return phi, b.refl(phi)
    if isinstance(phi, (Forall, Exists)):
        inner, e = _prenex(b, phi.body)
        cong = b.cong_all if isinstance(phi, Forall) else b.cong_ex
        res = type(phi)(phi.var, inner)
        return res, cong(phi.var, e)
    left, el = _prenex(b, phi.left)
    right, er = _prenex(b, phi.right)
    cong = b.cong_and if isinstance(phi, And) else b.cong_or
    e0 = cong(el, er)
    mid = type(phi)(left, right)
    res, e1 = _pull(b, mid)
    return res, b.trans(e0, e1)


def _pull(b: Builder, phi: Formula):
    """Pull quantifiers of prenex conjuncts/disjuncts outward."""
    op = type(phi)
    l, r = phi.left, phi.right
    if _qclass(l):
        x = l.var
        if x in r.fv:
            x = b.var(l.var, phi)
            l = type(l)(x, substitute(l.body, l.var, Var(x)))
        inner, e_in = _pull(b, op(l.body, r))
        step = _shift(b, op, l, r, left_side=True)
        q = type(l)(x, inner)
        cong = b.cong_all if isinstance(l, Forall) else b.cong_ex
        return q, b.trans(step, cong(x, e_in))
    if _qclass(r):
        x = r.var
        if x in l.fv:
            x = b.var(r.var, phi)
            r = type(r)(x, substitute(r.body, r.var, Var(x)))
        inner, e_in = _pull(b, op(l, r.body))
        step = _shift(b, op, r, l, left_side=False)
        q = type(r)(x, inner)
        cong = b.cong_all if isinstance(r, Forall) else b.cong_ex
        return q, b.trans(step, cong(x, e_in))
    return phi, b.refl(phi)


def _shift(b: Builder, op, q, other, left_side: bool) -> Proof:
    """``Q x A op B <-> Q x (A op B)`` (or mirrored) with ``x`` not free in B."""
    x, a = q.var, q.body

    def mk(u, v):
        return op(u, v) if left_side else op(v, u)

    src = mk(q, other)
    dst = type(q)(x, mk(a, other))
    inst = lambda v: substitute(a, x, v)  # noqa: E731

    def sel(p, want_q):
        return (and_e0 if left_side == want_q else and_e1)(p)

    def inj(p, is_q, other_f):
        if op is Or:
            if left_side == is_q:
                return or_i0(p, other_f)
            return or_i1(other_f, p)
        raise AssertionError

    if op is And:
        if isinstance(q, Forall):
            there = b.lam(src, lambda p: b.all_i(dst, lambda v: (
                and_i(all_e(sel(p, True), v), sel(p, False)) if left_side
                else and_i(sel(p, False), all_e(sel(p, True), v))), eigen=x if x not in src.fv else None))
            back = b.lam(dst, lambda h: _pair(left_side, b.all_i(q, lambda v: sel(all_e(h, v), True)),
                                              sel(all_e(h, ZERO), False)))
        else:
            there = b.lam(src, lambda p: b.ex_e(sel(p, True), lambda v, w: ex_i(
                dst, v, _pair(left_side, w, sel(p, False))), dst))
            back = b.lam(dst, lambda h: b.ex_e(h, lambda v, w: _pair(
                left_side, ex_i(q, v, sel(w, True)), sel(w, False)), src))
        return b.iff(there, back)

    # disjunction
    if isinstance(q, Exists):
        def there(p):
            return b.case(
                p,
                (lambda c: b.ex_e(c, lambda v, w: ex_i(dst, v, inj(w, True, other)), dst))
                if left_side else (lambda c: ex_i(dst, ZERO, inj(c, False, inst(ZERO)))),
                (lambda c: ex_i(dst, ZERO, inj(c, False, inst(ZERO))))
                if left_side else (lambda c: b.ex_e(c, lambda v, w: ex_i(dst, v, inj(w, True, other)), dst)),
            )

        def back(h):
            return b.ex_e(h, lambda v, w: b.case(
                w,
                (lambda c: or_i0(ex_i(q, v, c), other)) if left_side else (lambda c: or_i0(other_hyp(c), q)),
                (lambda c: or_i1(q, other_hyp(c))) if left_side else (lambda c: or_i1(other, ex_i(q, v, c))),
            ), src)

        def other_hyp(c):
            return c

        return b.iff(b.lam(src, there), b.lam(dst, back))

    # forall over or: the backward direction is classical
    def there(p):
        return b.all_i(dst, lambda v: b.case(
            p,
            (lambda c: inj(all_e(c, v), True, other)) if left_side else (lambda c: inj(c, False, inst(v))),
            (lambda c: inj(c, False, inst(v))) if left_side else (lambda c: inj(all_e(c, v), True, other)),
        ), eigen=x if x not in src.fv else None)

    def back(h):
        # not not (Q or B): assume not (Q or B); then not B and Q hold
        def refute(n):
            nb = b.lam(other, lambda c: imp_e(n, inj(c, False, q)))
            allq = b.all_i(q, lambda v: dne(b.lam(Not(inst(v)), lambda k: b.case(
                all_e(h, v),
                (lambda c: imp_e(k, c)) if left_side else (lambda c: imp_e(nb, c)),
                (lambda c: imp_e(nb, c)) if left_side else (lambda c: imp_e(k, c)),
            ))))
            return imp_e(n, inj(allq, True, other))

        return dne(b.lam(Not(src), refute))

    return b.iff(b.lam(src, there), b.lam(dst, back))


def _pair(left_side, qpart, opart):
    return and_i(qpart, opart) if left_side else and_i(opart, qpart)
