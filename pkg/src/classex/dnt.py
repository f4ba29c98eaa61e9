"""Double-negation translations and their proof-level companions.

``translate_proof`` turns a classical proof into a minimal one of the
Goedel-Gentzen image; ``synth_equiv`` builds, by recursion on the
formula, a kernel proof relating each other translation to that image.
"""

from __future__ import annotations

import enum

from .kernel import CLASSICAL, INTUITIONISTIC, MINIMAL, KernelError, LogicMode, Proof, check
from .logic import (
    ARITH,
    BOT,
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
    complement_atom,
    is_nnf,
    neg,
    to_nnf,
)
from .proofs import (
    Builder,
    ProofBuildError,
    and_e0,
    and_e1,
    and_i,
    ax,
    bwd,
    fwd,
    hyp,
    imp_e,
    imp_i,
    labels_in,
    top_i,
    vars_in,
)
from .terms import Var


class TranslationName(enum.Enum):
    N = "n"
    KU = "kuroda"
    KR = "krivine"
    M = "m"
    AWK = "awk"

    @classmethod
    def parse(cls, s: str) -> "TranslationName":
        s = s.lower()
        for t in cls:
            if s in (t.value, t.name.lower()):
                return t
        raise ValueError(f"unknown translation {s!r}; choose from n, kuroda, krivine, m, awk")


def _is_neg_atom(phi):
    return isinstance(phi, Imp) and isinstance(phi.right, Bot) and isinstance(phi.left, Atom)


# ---------------------------------------------------------------- translations


def godel_gentzen(phi: Formula, strengthened: bool = False, sig: Signature = ARITH) -> Formula:
    """The negative translation ``phi^N``.

    With ``strengthened`` atoms are left alone and a negated atom becomes
    its complement.
    """

    def go(f):
        if isinstance(f, (Bot, Top)):
            return f
        if isinstance(f, Atom):
            return f if strengthened else Not(Not(f))
        if strengthened and _is_neg_atom(f):
            return complement_atom(f.left, sig)
        if isinstance(f, (And, Imp)):
            return type(f)(go(f.left), go(f.right))
        if isinstance(f, Or):
            return Not(And(Not(go(f.left)), Not(go(f.right))))
        if isinstance(f, Forall):
            return Forall(f.var, go(f.body), f.ty)
        if isinstance(f, Exists):
            return Not(Forall(f.var, Not(go(f.body)), f.ty))
        raise TypeError(f)

    return go(phi)


def _ku(f: Formula) -> Formula:
    if isinstance(f, (Bot, Top)):
        return f
    if isinstance(f, Atom):
        return Not(Not(f))
    if isinstance(f, (And, Or, Imp)):
        return type(f)(_ku(f.left), _ku(f.right))
    if isinstance(f, Forall):
        return Forall(f.var, Not(Not(_ku(f.body))), f.ty)
    if isinstance(f, Exists):
        return Exists(f.var, _ku(f.body), f.ty)
    raise TypeError(f)


def kuroda(phi: Formula) -> Formula:
    """Atoms doubly negated, a double negation after each universal, and one in front."""
    return Not(Not(_ku(phi)))


def kr_preprocess(phi: Formula) -> Formula:
    """Rewrite into the basis not/and/or/forall: ``ex x A`` becomes
    ``not all x not A`` and ``A -> B`` (B not bot) becomes ``not (A and not B)``."""
    f = phi
    if isinstance(f, (Bot, Top, Atom)):
        return f
    if isinstance(f, Imp):
        if isinstance(f.right, Bot):
            return Not(kr_preprocess(f.left))
        return Not(And(kr_preprocess(f.left), Not(kr_preprocess(f.right))))
    if isinstance(f, (And, Or)):
        return type(f)(kr_preprocess(f.left), kr_preprocess(f.right))
    if isinstance(f, Forall):
        return Forall(f.var, kr_preprocess(f.body), f.ty)
    if isinstance(f, Exists):
        return Not(Forall(f.var, Not(kr_preprocess(f.body)), f.ty))
    raise TypeError(f)


def kr_sub(f: Formula) -> Formula:
    """The inner map ``phi_Kr`` (intended as the negation of ``phi``) on the basis."""
    if isinstance(f, Atom):
        return Not(f)
    if isinstance(f, Bot):
        return Not(f)
    if isinstance(f, Top):
        return BOT
    if isinstance(f, Imp) and isinstance(f.right, Bot):
        return Not(kr_sub(f.left))
    if isinstance(f, And):
        return Or(kr_sub(f.left), kr_sub(f.right))
    if isinstance(f, Or):
        return And(kr_sub(f.left), kr_sub(f.right))
    if isinstance(f, Forall):
        return Exists(f.var, kr_sub(f.body), f.ty)
    raise ValueError(f"{f} is outside the not/and/or/forall basis; run kr_preprocess first")


def krivine(phi: Formula) -> Formula:
    return Not(kr_sub(kr_preprocess(phi)))


def _nnf(phi, sig):
    return phi if is_nnf(phi) else to_nnf(phi, sig)


def m_sub(f: Formula, sig: Signature = ARITH, conj_variant: bool = False) -> Formula:
    """The inner map ``psi_M`` on NNF formulas."""
    if isinstance(f, (Atom, Bot, Top)):
        return f
    if isinstance(f, Or):
        return Or(m_sub(f.left, sig, conj_variant), m_sub(f.right, sig, conj_variant))
    if isinstance(f, And):
        if conj_variant:
            return Not(Or(m_sub(neg(f.left, sig), sig, True), m_sub(neg(f.right, sig), sig, True)))
        return And(m_sub(f.left, sig), m_sub(f.right, sig))
    if isinstance(f, Exists):
        return Exists(f.var, m_sub(f.body, sig, conj_variant), f.ty)
    if isinstance(f, Forall):
        return Not(Exists(f.var, m_sub(neg(f.body, sig), sig, conj_variant), f.ty))
    raise ValueError(f"{f} is not in negation-normal form")


def m_translation(phi: Formula, sig: Signature = ARITH, conj_variant: bool = False) -> Formula:
    """``not (~phi)_M``; non-NNF input is first put in NNF."""
    return Not(m_sub(neg(_nnf(phi, sig), sig), sig, conj_variant))


def awkward(phi: Formula, sig: Signature = ARITH) -> Formula:
    return Not(neg(_nnf(phi, sig), sig))


def translate(phi: Formula, name, sig: Signature = ARITH, strengthened: bool = False,
              m_conj_variant: bool = False) -> Formula:
    name = TranslationName.parse(name) if isinstance(name, str) else name
    if name is TranslationName.N:
        return godel_gentzen(phi, strengthened, sig)
    if name is TranslationName.KU:
        return kuroda(phi)
    if name is TranslationName.KR:
        return krivine(phi)
    if name is TranslationName.M:
        return m_translation(phi, sig, m_conj_variant)
    return awkward(phi, sig)


# ---------------------------------------------------------------- proof translation


class TranslationError(ValueError):
    pass


class _ProofTranslator:
    def __init__(self, p: Proof, sig: Signature):
        self.sig = sig
        self.b = Builder(labels_in(p), vars_in(p), sig)
        self.memo: dict[int, Proof] = {}
        self._stab: dict = {}

    def N(self, f):
        return godel_gentzen(f, False, self.sig)

    def stab(self, f):
        hit = self._stab.get(f)
        if hit is None:
            hit = self._stab[f] = self.b.stab(f)
        return hit

    def run(self, p: Proof) -> Proof:
        out = self.memo.get(id(p))
        if out is None:
            out = self.memo[id(p)] = self._node(p)
        return out

    def _node(self, p: Proof) -> Proof:
        b, N = self.b, self.N
        r, c = p.rule, p.concl
        kids = [self.run(q) for q in p.premises]
        if r == "hyp":
            return hyp(p.label, N(c))
        if r == "topI":
            return top_i()
        if r == "impI":
            return imp_i(p.label, N(c.left), kids[0])
        if r in ("impE", "andI", "andE0", "andE1"):
            return Proof(r, N(c), tuple(kids))
        if r == "allI":
            return Proof("allI", N(c), tuple(kids), var=p.var)
        if r == "allE":
            return Proof("allE", N(c), tuple(kids), term=p.term)
        if r in ("orI0", "orI1"):
            an, bn = N(c.left), N(c.right)
            proj = and_e0 if r == "orI0" else and_e1
            return b.lam(And(Not(an), Not(bn)), lambda h: imp_e(proj(h), kids[0]))
        if r == "orE":
            major, p1, p2 = kids
            d = p.premises[0].concl
            an, bn, cn = N(d.left), N(d.right), N(c)
            h1, h2 = p.labels
            return imp_e(self.stab(cn), b.lam(Not(cn), lambda k: imp_e(major, and_i(
                imp_i(h1, an, imp_e(k, p1)), imp_i(h2, bn, imp_e(k, p2))))))
        if r == "exI":
            an = N(c.body)
            return b.lam(Forall(c.var, Not(an)), lambda u: imp_e(
                Proof("allE", Not(N(p.premises[0].concl)), (u,), term=p.term), kids[0]))
        if r == "exE":
            major, minor = kids
            d = p.premises[0].concl
            cn = N(c)
            from .logic import substitute
            inst = N(substitute(d.body, d.var, Var(p.var)))
            goal = Forall(d.var, Not(N(d.body)))
            return imp_e(self.stab(cn), b.lam(Not(cn), lambda k: imp_e(major, Proof(
                "allI", goal, (imp_i(p.label, inst, imp_e(k, minor)),), var=p.var))))
        if r == "botE":
            return imp_e(b.efq(N(c)), kids[0])
        if r == "dne":
            return imp_e(self.stab(N(c)), kids[0])
        if r == "ax":
            return self.axiom(p.axiom, c)
        raise TranslationError(f"unknown rule {r}")

    def axiom(self, name: str, phi: Formula) -> Proof:
        """Minimal proof of the translated axiom instance."""
        b = self.b
        if name == "induction":
            return ax("induction", self.N(phi))
        if name == "stab":
            return b.tne(Not(phi.right)).ab
        if name == "dec":
            nn = self.N(phi)
            conj = nn.left

            def body(p):
                def use(proj, t):
                    return imp_e(proj(p), imp_e(b.dn_intro(t.concl), t))

                return b.case(ax("dec", phi), lambda t: use(and_e0, t), lambda t: use(and_e1, t))

            return b.lam(conj, body)
        chain, concl = [], phi
        while isinstance(concl, Imp) and isinstance(concl.left, Atom):
            chain.append(concl.left)
            concl = concl.right
        if not isinstance(concl, (Atom, Bot)):
            raise TranslationError(f"no translation recipe for axiom {name}: {phi}")
        leaf = ax(name, phi)

        def nest(i, acc, hs, finish):
            if i == len(chain):
                return finish(acc)
            return imp_e(hs[i], b.lam(chain[i], lambda t: nest(i + 1, imp_e(acc, t), hs, finish)))

        hyps_f = [Not(Not(t)) for t in chain]
        if isinstance(concl, Bot):
            return b.lams(hyps_f, lambda *hs: nest(0, leaf, hs, lambda done: done))
        if not chain:
            return b.lam(Not(concl), lambda k: imp_e(k, leaf))
        return b.lams(hyps_f, lambda *hs: b.lam(
            Not(concl), lambda k: nest(0, leaf, hs, lambda done: imp_e(k, done))))


def translate_proof(p: Proof, theory: dict | None = None, sig: Signature = ARITH,
                    strengthened: bool = False) -> Proof:
    """Minimal proof of the N-translation of the conclusion of a classical proof.

    Open hypotheses keep their labels and are translated too.
    """
    try:
        check(p, CLASSICAL, theory, sig)
    except KernelError as e:
        raise TranslationError(f"input is not a classical proof: {e}") from None
    t = _ProofTranslator(p, sig)
    out = t.run(p)
    if strengthened:
        out = _strengthen(t.b, p, out, sig)
    return out


def _strengthen(b: Builder, src: Proof, pn: Proof, sig: Signature) -> Proof:
    """Move a proof of ``phi^N`` over to the strengthened translation."""
    cache = {}

    def bridge(f):
        hit = cache.get(f)
        if hit is None:
            hit = cache[f] = strengthen_equiv(b, f, sig)
        return hit

    open_hyps = check(src, CLASSICAL, None, sig).hyps

    def swap(q: Proof, bound: frozenset) -> Proof:
        if q.rule == "hyp":
            if q.label in open_hyps and q.label not in bound:
                f = open_hyps[q.label]
                return bwd(bridge(f), hyp(q.label, godel_gentzen(f, True, sig)))
            return q
        inner = bound
        if q.label:
            inner = inner | {q.label}
        if q.rule == "orE":
            kids = (swap(q.premises[0], bound),) + tuple(
                swap(k, bound | {lab}) for k, lab in zip(q.premises[1:], q.labels))
        elif q.rule == "exE":
            kids = (swap(q.premises[0], bound), swap(q.premises[1], inner))
        else:
            kids = tuple(swap(k, inner) for k in q.premises)
        return Proof(q.rule, q.concl, kids, q.label, q.labels, q.term, q.var, q.axiom)

    return fwd(bridge(src.concl), swap(pn, frozenset()))


def strengthen_equiv(b: Builder, f: Formula, sig: Signature) -> Proof:
    """``f^N <-> f^N'`` where ``N'`` is the strengthened translation (uses stab/dec/contra)."""

    def go(g):
        if isinstance(g, (Bot, Top)):
            return b.refl(g)
        if isinstance(g, Atom):
            return b.dn_stable(g, atoms=True)
        if _is_neg_atom(g):
            theta = g.left
            tbar = complement_atom(theta, sig)
            nn3 = Not(Not(Not(theta)))
            there = b.lam(nn3, lambda n: b.case(
                b.dec(theta),
                lambda t: imp_e(b.atom_efq(tbar), imp_e(n, imp_e(b.dn_intro(theta), t))),
                lambda u: u))
            back = b.lam(tbar, lambda u: b.lam(Not(Not(theta)), lambda d: imp_e(
                d, imp_e(b.contra(theta), u))))
            return b.iff(there, back)
        if isinstance(g, And):
            return b.cong_and(go(g.left), go(g.right))
        if isinstance(g, Imp):
            return b.cong_imp(go(g.left), go(g.right))
        if isinstance(g, Or):
            return b.cong_not(b.cong_and(b.cong_not(go(g.left)), b.cong_not(go(g.right))))
        if isinstance(g, Forall):
            return b.cong_all(g.var, go(g.body))
        if isinstance(g, Exists):
            return b.cong_not(b.cong_all(g.var, b.cong_not(go(g.body))))
        raise TypeError(g)

    return go(f)


# ---------------------------------------------------------------- equivalences


def equiv_mode(name) -> LogicMode:
    name = TranslationName.parse(name) if isinstance(name, str) else name
    return INTUITIONISTIC if name is TranslationName.KU else MINIMAL


def equiv_statement(phi: Formula, name, sig: Signature = ARITH, m_conj_variant=False) -> Formula:
    """The formula ``synth_equiv`` proves."""
    name = TranslationName.parse(name) if isinstance(name, str) else name
    if name in (TranslationName.M, TranslationName.AWK):
        phi = _nnf(phi, sig)
    n = godel_gentzen(phi, False, sig)
    t = translate(phi, name, sig, m_conj_variant=m_conj_variant)
    if name is TranslationName.AWK:
        return Imp(n, t)
    return Iff(t, n)


class _Equiv:
    def __init__(self, sig: Signature, conj_variant: bool = False):
        self.sig = sig
        self.b = Builder(sig=sig)
        self.conj = conj_variant
        self.memo: dict = {}

    def N(self, f):
        return godel_gentzen(f, False, self.sig)

    def neg(self, f):
        return neg(f, self.sig)

    def _cached(self, tag, f, fn):
        key = (tag, f)
        hit = self.memo.get(key)
        if hit is None:
            hit = self.memo[key] = fn(f)
        return hit

    # -- Krivine: not psi_Kr <-> psi^N
    def kr(self, f):
        return self._cached("kr", f, self._kr)

    def _kr(self, f):
        b = self.b
        K = lambda g: kr_sub(kr_preprocess(g))  # noqa: E731
        if isinstance(f, Atom):
            return b.refl(Not(Not(f)))
        if isinstance(f, Bot):
            return b.dn_stable(BOT)
        if isinstance(f, Top):
            return b.not_bot()
        if isinstance(f, Imp) and isinstance(f.right, Bot):
            return b.cong_not(self.kr(f.left))
        if isinstance(f, Imp):
            ak, bk = K(f.left), K(f.right)
            an, bn = self.N(f.left), self.N(f.right)
            inner = b.trans(b.demorgan_or(ak, Not(bk)),
                            b.cong_and(self.kr(f.left), b.cong_not(self.kr(f.right))))
            return b.trans(b.cong_not(inner), b.not_and_not(an, bn))
        if isinstance(f, And):
            return b.trans(b.demorgan_or(K(f.left), K(f.right)),
                           b.cong_and(self.kr(f.left), self.kr(f.right)))
        if isinstance(f, Or):
            return b.trans(b.not_and_dn(K(f.left), K(f.right)), b.cong_not(
                b.cong_and(b.cong_not(self.kr(f.left)), b.cong_not(self.kr(f.right)))))
        if isinstance(f, Forall):
            return b.trans(b.not_ex(f.var, K(f.body)), b.cong_all(f.var, self.kr(f.body)))
        if isinstance(f, Exists):
            inner = b.trans(b.not_ex(f.var, Not(K(f.body))),
                            b.cong_all(f.var, b.cong_not(self.kr(f.body))))
            return b.cong_not(inner)
        raise TypeError(f)

    # -- Kuroda: not not k(psi) <-> psi^N
    def ku(self, f):
        return self._cached("ku", f, self._ku)

    def _ku_neg(self, f):
        """not k(A) <-> not A^N"""
        b = self.b
        return b.trans(b.sym(b.tne(_ku(f))), b.cong_not(self.ku(f)))

    def _ku(self, f):
        b = self.b
        if isinstance(f, Atom):
            return b.tne(Not(f))
        if isinstance(f, (Bot, Top)):
            return b.dn_stable(f)
        if isinstance(f, And):
            return b.trans(b.dn_and(_ku(f.left), _ku(f.right)), b.cong_and(self.ku(f.left), self.ku(f.right)))
        if isinstance(f, Or):
            inner = b.trans(b.demorgan_or(_ku(f.left), _ku(f.right)),
                            b.cong_and(self._ku_neg(f.left), self._ku_neg(f.right)))
            return b.cong_not(inner)
        if isinstance(f, Imp):
            return b.trans(b.dn_imp(_ku(f.left), _ku(f.right)), b.cong_imp(self.ku(f.left), self.ku(f.right)))
        if isinstance(f, Forall):
            return b.trans(b.dn_stable(_ku(f)), b.cong_all(f.var, self.ku(f.body)))
        if isinstance(f, Exists):
            inner = b.trans(b.not_ex(f.var, _ku(f.body)), b.cong_all(f.var, self._ku_neg(f.body)))
            return b.cong_not(inner)
        raise TypeError(f)

    # -- M: P(psi): not psi_M <-> (~psi)^N ;  Q(psi): not (~psi)^N <-> psi^N
    def msub(self, f):
        return m_sub(f, self.sig, self.conj)

    def P(self, f):
        return self._cached("P", f, self._P)

    def Q(self, f):
        return self._cached("Q", f, self._Q)

    def R(self, f):
        """(~A)^N <-> not A^N"""
        b = self.b
        return b.trans(b.sym(b.dn_stable(self.N(self.neg(f)))), b.cong_not(self.Q(f)))

    def _P(self, f):
        b = self.b
        if isinstance(f, Atom):
            return b.not_iff_dn_bar(f)
        if isinstance(f, Bot):
            return b.not_bot()
        if isinstance(f, Top):
            return b.not_top()
        if isinstance(f, Or):
            return b.trans(b.demorgan_or(self.msub(f.left), self.msub(f.right)),
                           b.cong_and(self.P(f.left), self.P(f.right)))
        if isinstance(f, And) and not self.conj:
            return b.trans(b.not_and_dn(self.msub(f.left), self.msub(f.right)), b.cong_not(
                b.cong_and(b.cong_not(self.P(f.left)), b.cong_not(self.P(f.right)))))
        if isinstance(f, And):
            nl, nr = self.neg(f.left), self.neg(f.right)
            inner = b.trans(
                b.demorgan_or(self.msub(nl), self.msub(nr)),
                b.cong_and(self.P(nl), self.P(nr)),
                b.cong_and(b.sym(self.Q(f.left)), b.sym(self.Q(f.right))),
            )
            return b.cong_not(inner)
        if isinstance(f, Exists):
            return b.trans(b.not_ex(f.var, self.msub(f.body)), b.cong_all(f.var, self.P(f.body)))
        if isinstance(f, Forall):
            nb = self.neg(f.body)
            inner = b.trans(
                b.not_ex(f.var, self.msub(nb)),
                b.cong_all(f.var, self.P(nb)),
                b.cong_all(f.var, b.sym(self.Q(f.body))),
            )
            return b.cong_not(inner)
        raise TypeError(f)

    def _Q(self, f):
        b = self.b
        if isinstance(f, Atom):
            tb = complement_atom(f, self.sig)
            return b.trans(b.tne(tb), b.not_iff_dn_bar(tb))
        if isinstance(f, Bot):
            return b.not_top()
        if isinstance(f, Top):
            return b.not_bot()
        if isinstance(f, And):
            inner = self.N(self.neg(f)).left
            return b.trans(b.dn_stable(inner), b.cong_and(self.Q(f.left), self.Q(f.right)))
        if isinstance(f, Or):
            return b.cong_not(b.cong_and(self.R(f.left), self.R(f.right)))
        if isinstance(f, Forall):
            inner = self.N(self.neg(f)).left
            return b.trans(b.dn_stable(inner), b.cong_all(f.var, self.Q(f.body)))
        if isinstance(f, Exists):
            return b.cong_not(b.cong_all(f.var, self.R(f.body)))
        raise TypeError(f)

    # -- NNF psi -> psi^N
    def lift(self, f):
        return self._cached("F", f, self._lift)

    def _lift(self, f):
        b = self.b
        n = self.N(f)
        if isinstance(f, Atom):
            return b.dn_intro(f)
        if isinstance(f, (Bot, Top)):
            return b.lam(f, lambda h: h)
        if isinstance(f, And):
            return b.lam(f, lambda p: and_i(imp_e(self.lift(f.left), and_e0(p)),
                                            imp_e(self.lift(f.right), and_e1(p))))
        if isinstance(f, Or):
            return b.lam(f, lambda d: b.lam(n.left, lambda c: b.case(
                d,
                lambda x: imp_e(and_e0(c), imp_e(self.lift(f.left), x)),
                lambda y: imp_e(and_e1(c), imp_e(self.lift(f.right), y)))))
        if isinstance(f, Forall):
            return b.lam(f, lambda h: b.all_i(n, lambda v: imp_e(
                self.lift(f.body), Proof("allE", f.body, (h,), term=Var(f.var))), eigen=f.var))
        if isinstance(f, Exists):
            def body(h):
                return b.lam(n.left, lambda u: Proof("exE", BOT, (h, imp_e(
                    Proof("allE", n.left.body, (u,), term=Var(f.var)),
                    imp_e(self.lift(f.body), hyp(lab, f.body)))), label=lab, var=f.var))

            lab = b.label("w")
            return b.lam(f, body)
        raise ValueError(f"{f} is not in negation-normal form")


def synth_equiv(phi: Formula, name, sig: Signature = ARITH, m_conj_variant: bool = False) -> Proof:
    """Kernel proof of ``phi^V <-> phi^N`` (Kr, Ku, M) or ``phi^N -> phi^awk`` (Awk).

    M and Awk act on the NNF of ``phi``.  The Ku proof needs ex falso;
    ``equiv_mode`` reports the mode each proof is meant for.
    """
    name = TranslationName.parse(name) if isinstance(name, str) else name
    eq = _Equiv(sig, m_conj_variant)
    eq.b.reserve(phi)
    if name is TranslationName.N:
        return eq.b.refl(godel_gentzen(phi, False, sig)).proof
    if name is TranslationName.KR:
        return eq.kr(phi).proof
    if name is TranslationName.KU:
        return eq.ku(phi).proof
    phi = _nnf(phi, sig)
    if name is TranslationName.M:
        return eq.P(neg(phi, sig)).proof
    # Awk: phi^N -> not (~phi)^N -> not ~phi
    b = eq.b
    nphi = neg(phi, sig)
    back = b.contrapose(eq.lift(nphi))
    q = eq.Q(phi)
    return b.lam(godel_gentzen(phi, False, sig), lambda h: imp_e(back, bwd(q, h)))


__all__ = [
    "TranslationName",
    "TranslationError",
    "ProofBuildError",
    "godel_gentzen",
    "kuroda",
    "krivine",
    "kr_preprocess",
    "kr_sub",
    "m_sub",
    "m_translation",
    "awkward",
    "translate",
    "translate_proof",
    "strengthen_equiv",
    "synth_equiv",
    "equiv_mode",
    "equiv_statement",
]
