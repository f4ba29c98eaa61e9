"""Program extraction from kernel proofs and the Pi-2 witnessing pipelines."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from . import prt
from .dnt import TranslationName, synth_equiv, translate_proof
from .interp import (
    APredicate,
    InterpError,
    cr_realizes,
    dialectica,
    realizer_type,
)
from .kernel import MINIMAL, KernelError, Proof, check, theory_for
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
    Top,
    map_terms,
    neg,
    substitute,
    substitute_many,
)
from .oracle import brute_force_witness, std_eval
from .proofs import Builder, all_e, and_e1, ex_i, imp_e, labels_in, vars_in
from .terms import (
    NAT,
    ZERO,
    App,
    Arrow,
    Eltl,
    Eltr,
    Fst,
    Inl,
    Inr,
    IsLeft,
    Lam,
    Pair,
    Prod,
    Rec,
    Snd,
    Sum,
    Term,
    Var,
    ZeroOf,
    apply,
    fresh_name,
    numeral,
    subst_many,
    term_to_str,
)


class ExtractionError(ValueError):
    pass


class RejectedProof(ExtractionError):
    """The kernel did not accept the input proof."""


# ---------------------------------------------------------------- helpers


def char_term(phi: Formula, sig: Signature = ARITH) -> Term:
    """Characteristic term of a quantifier-free formula: numeral 0 iff it holds."""
    if isinstance(phi, Bot):
        return numeral(1)
    if isinstance(phi, Top):
        return ZERO
    if isinstance(phi, Atom):
        ch = prt.RELATION_CHARS.get(phi.rel)
        if ch is None:
            raise ExtractionError(f"relation {phi.rel!r} has no characteristic term")
        return apply(ch, *phi.args)
    if isinstance(phi, (And, Or, Imp)):
        a, b = char_term(phi.left, sig), char_term(phi.right, sig)
        if isinstance(phi, And):
            return apply(prt.ADD, a, b)
        if isinstance(phi, Or):
            return apply(prt.MUL, a, b)
        return apply(prt.MUL, apply(prt.SUB, numeral(1), App(prt.SIGN, a)), b)
    raise ExtractionError("characteristic terms exist for quantifier-free formulas only")


def _lams(binders, body: Term) -> Term:
    for name, ty in reversed(list(binders)):
        body = Lam(name, ty, body)
    return body


def _tuple(ws) -> Term:
    if not ws:
        return ZERO
    t = ws[-1]
    for w in reversed(ws[:-1]):
        t = Pair(w, t)
    return t


def _tuple_type(tys):
    if not tys:
        return NAT
    t = tys[-1]
    for s in reversed(tys[:-1]):
        t = Prod(s, t)
    return t


def _proj(t: Term, n: int):
    out = []
    for i in range(n):
        cur = t
        for _ in range(i):
            cur = Snd(cur)
        out.append(cur if i == n - 1 else Fst(cur))
    return out


def _sub(terms, mapping):
    m = {k: v for k, v in mapping.items()}
    return [subst_many(t, m) for t in terms]


# ---------------------------------------------------------------- modified realizability


_TRIVIAL_AXIOMS = {
    "succ_ne_zero", "succ_inj", "eq_refl", "eq_sym", "eq_trans", "eq_cong",
    "contra", "le_refl", "le_zero", "le_succ",
}


def axiom_realizer(name: str, phi: Formula, sig: Signature = ARITH) -> Term:
    """Canonical realizer of an axiom instance (the registered table)."""
    ty = realizer_type(phi)
    if name in _TRIVIAL_AXIOMS or name.startswith("def:"):
        # no disjunction or existential in a positive position: any realizer works
        return ZERO if ty == NAT else ZeroOf(ty)
    if name == "dec":
        return prt.cond(char_term(phi.left, sig), Inl(ZERO, NAT), Inr(NAT, ZERO), ty)
    if name == "induction":
        base_t = realizer_type(phi.left)
        step_t = realizer_type(phi.right.left)
        return Lam("b", base_t, Lam("s", step_t, Rec(Var("b"), Var("s"))))
    raise ExtractionError(f"axiom {name!r} has no registered realizer")


class _MR:
    def __init__(self, p: Proof, sig: Signature):
        self.sig = sig
        self.avoid = set(vars_in(p)) | set(labels_in(p))
        self.rv: dict = {}
        self.memo: dict = {}

    def var(self, label: str) -> str:
        v = self.rv.get(label)
        if v is None:
            v = fresh_name("r_" + label, self.avoid)
            self.avoid.add(v)
            self.rv[label] = v
        return v

    def run(self, root: Proof) -> Term:
        for p in reversed(list(root.walk())):
            self.memo[id(p)] = self.node(p)
        return self.memo[id(root)]

    def node(self, p: Proof) -> Term:
        r = [self.memo[id(q)] for q in p.premises]
        c, rule = p.concl, p.rule
        if rule == "hyp":
            return Var(self.var(p.label))
        if rule == "topI":
            return ZERO
        if rule == "impI":
            return Lam(self.var(p.label), realizer_type(c.left), r[0])
        if rule == "impE":
            return App(r[0], r[1])
        if rule == "andI":
            return Pair(r[0], r[1])
        if rule == "andE0":
            return Fst(r[0])
        if rule == "andE1":
            return Snd(r[0])
        if rule == "orI0":
            return Inl(r[0], realizer_type(c.right))
        if rule == "orI1":
            return Inr(realizer_type(c.left), r[0])
        if rule == "orE":
            d = p.premises[0].concl
            s = r[0]
            left = App(Lam(self.var(p.labels[0]), realizer_type(d.left), r[1]), Eltl(s))
            right = App(Lam(self.var(p.labels[1]), realizer_type(d.right), r[2]), Eltr(s))
            return prt.cond(IsLeft(s), left, right, realizer_type(c))
        if rule == "allI":
            return Lam(p.var, NAT, r[0])
        if rule == "allE":
            return App(r[0], p.term)
        if rule == "exI":
            return Pair(p.term, r[0])
        if rule == "exE":
            d = p.premises[0].concl
            inst = substitute(d.body, d.var, Var(p.var))
            body = Lam(p.var, NAT, Lam(self.var(p.label), realizer_type(inst), r[1]))
            return apply(body, Fst(r[0]), Snd(r[0]))
        if rule == "ax":
            return axiom_realizer(p.axiom, c, self.sig)
        raise ExtractionError(f"rule {rule} has no realizer in minimal logic")


def extract_mr(p: Proof, A: APredicate | None = None, sig: Signature = ARITH,
               theory: dict | None = None, checked: bool = False) -> Term:
    """Realizer of the conclusion of a minimal-logic proof.

    Bottom is an ordinary formula realized through ``A``; the term itself
    does not depend on ``A``. Open hypotheses become free variables
    ``r_<label>``.
    """
    if not checked:
        try:
            check(p, MINIMAL, theory, sig)
        except KernelError as e:
            raise RejectedProof(str(e)) from None
    return _MR(p, sig).run(p)


# ---------------------------------------------------------------- Dialectica


@dataclass
class _DRes:
    W: list  # witnesses for the conclusion's existential list
    C: dict  # label -> (formula, counterexample terms for that hypothesis)
    ys: list  # names of the conclusion's universal list


class _Dia:
    def __init__(self, p: Proof, sig: Signature):
        self.sig = sig
        self.used = set(vars_in(p)) | set(labels_in(p))
        self.hw: dict = {}
        self.dcache: dict = {}
        self.memo: dict = {}

    def fresh(self, base: str) -> str:
        n = fresh_name(base, self.used)
        self.used.add(n)
        return n

    def D(self, phi: Formula):
        d = self.dcache.get(phi)
        if d is None:
            d = self.dcache[phi] = dialectica(phi, self.sig)
            self.used |= {n for n, _ in d.ex + d.all}
        return d

    def ex_types(self, phi):
        return [t for _, t in self.D(phi).ex]

    def all_types(self, phi):
        return [t for _, t in self.D(phi).all]

    def hyp_names(self, label, phi):
        key = (label, phi)
        if key not in self.hw:
            self.hw[key] = [self.fresh(f"{label}_x") for _ in self.D(phi).ex]
        return self.hw[key]

    def counters(self, phi):
        return [self.fresh("c") for _ in self.D(phi).all]

    def zeros(self, phi):
        return [ZeroOf(t) for t in self.all_types(phi)]

    def matrix(self, phi, xs, ys):
        d = self.D(phi)
        m = {n: t for (n, _), t in zip(d.ex, xs)}
        m.update({n: t for (n, _), t in zip(d.all, ys)})
        return substitute_many(d.matrix, m)

    def contract(self, c1: dict, c2: dict) -> dict:
        out = dict(c1)
        for k, (phi, ts2) in c2.items():
            if k not in out:
                out[k] = (phi, ts2)
                continue
            _, ts1 = out[k]
            xs = [Var(n) for n in self.hyp_names(k, phi)]
            ch = char_term(self.matrix(phi, xs, ts1), self.sig)
            out[k] = (phi, [prt.cond(ch, b, a, t)
                            for a, b, t in zip(ts1, ts2, self.all_types(phi))])
        return out

    @staticmethod
    def subc(C: dict, mapping: dict, drop=()) -> dict:
        return {k: (phi, _sub(ts, mapping)) for k, (phi, ts) in C.items() if k not in drop}

    def run(self, root: Proof) -> _DRes:
        for p in reversed(list(root.walk())):
            self.memo[id(p)] = self.node(p)
        return self.memo[id(root)]

    def node(self, p: Proof) -> _DRes:
        r = [self.memo[id(q)] for q in p.premises]
        c, rule = p.concl, p.rule
        ys = self.counters(c)
        Y = [Var(n) for n in ys]

        def bind(names, terms):
            return dict(zip(names, terms))

        if rule == "hyp":
            xs = self.hyp_names(p.label, c)
            return _DRes([Var(x) for x in xs], {p.label: (c, Y)}, ys)
        if rule == "topI":
            return _DRes([], {}, ys)
        if rule == "ax":
            return _DRes(self.axiom(p.axiom, c), {}, ys)
        if rule == "impI":
            q = r[0]
            phi, psi = c.left, c.right
            hx = self.hyp_names(p.label, phi)
            hx_b = list(zip(hx, self.ex_types(phi)))
            nx = len(hx)
            U = [_lams(hx_b, w) for w in q.W]
            if p.label in q.C:
                cy = q.C[p.label][1]
            else:
                cy = self.zeros(phi)
            Yf = [_lams(hx_b + list(zip(q.ys, self.all_types(psi))), t) for t in cy]
            mapping = bind(hx, Y[:nx]) | bind(q.ys, Y[nx:])
            return _DRes(U + Yf, self.subc(q.C, mapping, drop=(p.label,)), ys)
        if rule == "impE":
            f, a = r
            phi = p.premises[1].concl
            nU = len(self.D(c).ex)
            U, Yf = f.W[:nU], f.W[nU:]
            W = [apply(u, *a.W) for u in U]
            cf = self.subc(f.C, bind(f.ys, list(a.W) + Y))
            ca = self.subc(a.C, bind(a.ys, [apply(y, *a.W, *Y) for y in Yf]))
            return _DRes(W, self.contract(cf, ca), ys)
        if rule == "andI":
            a, b = r
            k = len(a.ys)
            ca = self.subc(a.C, bind(a.ys, Y[:k]))
            cb = self.subc(b.C, bind(b.ys, Y[k:]))
            return _DRes(a.W + b.W, self.contract(ca, cb), ys)
        if rule in ("andE0", "andE1"):
            q = r[0]
            d = p.premises[0].concl
            nl = len(self.D(d.left).ex)
            if rule == "andE0":
                W, cy = q.W[:nl], Y + self.zeros(d.right)
            else:
                W, cy = q.W[nl:], self.zeros(d.left) + Y
            return _DRes(W, self.subc(q.C, bind(q.ys, cy)), ys)
        if rule in ("orI0", "orI1"):
            q = r[0]
            kl = len(self.D(c.left).all)
            if rule == "orI0":
                z = Inl(_tuple(q.W), _tuple_type(self.ex_types(c.right)))
                cy = Y[:kl]
            else:
                z = Inr(_tuple_type(self.ex_types(c.left)), _tuple(q.W))
                cy = Y[kl:]
            return _DRes([z], self.subc(q.C, bind(q.ys, cy)), ys)
        if rule == "orE":
            m, n1, n2 = r
            d = p.premises[0].concl
            z = m.W[0]
            l1, l2 = p.labels
            h1, h2 = self.hyp_names(l1, d.left), self.hyp_names(l2, d.right)
            s1 = bind(h1, _proj(Eltl(z), len(h1))) | bind(n1.ys, Y)
            s2 = bind(h2, _proj(Eltr(z), len(h2))) | bind(n2.ys, Y)
            tag = IsLeft(z)
            W = [prt.cond(tag, a, b, t) for a, b, t in
                 zip(_sub(n1.W, s1), _sub(n2.W, s2), self.ex_types(c))]
            yl = _sub(n1.C[l1][1], s1) if l1 in n1.C else self.zeros(d.left)
            yr = _sub(n2.C[l2][1], s2) if l2 in n2.C else self.zeros(d.right)
            cm = self.subc(m.C, bind(m.ys, yl + yr))
            b1 = self.subc(n1.C, s1, drop=(l1,))
            b2 = self.subc(n2.C, s2, drop=(l2,))
            branch = {}
            for k in set(b1) | set(b2):
                phi = (b1.get(k) or b2.get(k))[0]
                t1 = b1[k][1] if k in b1 else self.zeros(phi)
                t2 = b2[k][1] if k in b2 else self.zeros(phi)
                branch[k] = (phi, [prt.cond(tag, a, b, t)
                                   for a, b, t in zip(t1, t2, self.all_types(phi))])
            return _DRes(W, self.contract(cm, branch), ys)
        if rule == "allI":
            q = r[0]
            W = [Lam(p.var, NAT, w) for w in q.W]
            return _DRes(W, self.subc(q.C, {p.var: Y[0]} | bind(q.ys, Y[1:])), ys)
        if rule == "allE":
            q = r[0]
            W = [App(x, p.term) for x in q.W]
            return _DRes(W, self.subc(q.C, bind(q.ys, [p.term] + Y)), ys)
        if rule == "exI":
            q = r[0]
            return _DRes([p.term] + q.W, self.subc(q.C, bind(q.ys, Y)), ys)
        if rule == "exE":
            m, n = r
            d = p.premises[0].concl
            inst = substitute(d.body, d.var, Var(p.var))
            h = self.hyp_names(p.label, inst)
            s = {p.var: m.W[0]} | bind(h, m.W[1:]) | bind(n.ys, Y)
            W = _sub(n.W, s)
            yl = _sub(n.C[p.label][1], s) if p.label in n.C else self.zeros(inst)
            cm = self.subc(m.C, bind(m.ys, yl))
            return _DRes(W, self.contract(cm, self.subc(n.C, s, drop=(p.label,))), ys)
        raise ExtractionError(f"rule {rule} has no Dialectica interpretation in minimal logic")

    def axiom(self, name, phi):
        d = self.D(phi)
        if not d.ex:
            return []
        if name == "dec":
            return [prt.cond(char_term(phi.left, self.sig), Inl(ZERO, NAT), Inr(NAT, ZERO),
                             Sum(NAT, NAT))]
        raise ExtractionError(f"axiom {name!r} has no registered Dialectica witness")


def extract_dialectica(p: Proof, sig: Signature = ARITH, theory: dict | None = None,
                       checked: bool = False) -> list:
    """Witness terms for the existential list of ``dialectica(conclusion)``."""
    if not checked:
        try:
            check(p, MINIMAL, theory, sig)
        except KernelError as e:
            raise RejectedProof(str(e)) from None
    return _Dia(p, sig).run(p).W


def verify_dialectica(phi: Formula, witnesses, sig: Signature = ARITH, bound: int = 5,
                      limit: int = 4000):
    """Evaluate ``phi_D(W, y)`` over enumerated counterexample candidates.

    Number variables range over ``0..bound``; higher-type ones over constant
    functionals. Returns None or the first failing assignment.
    """
    from .interp import holds

    d = dialectica(phi, sig)
    m = substitute_many(d.matrix, {n: w for (n, _), w in zip(d.ex, witnesses)})
    pools = []
    for _, ty in d.all:
        if ty == NAT:
            pools.append([numeral(k) for k in range(bound + 1)])
        else:
            pools.append([_const(ty, k) for k in range(min(bound, 3) + 1)])
    free = sorted(m.fv - {n for n, _ in d.all})
    for i, combo in enumerate(itertools.product(*pools)):
        if i >= limit:
            break
        env = {n: t for (n, _), t in zip(d.all, combo)}
        for v in free:
            env.setdefault(v, ZERO)
        if not holds(m, env, sig, bound):
            return env
    return None


def _const(ty, k: int) -> Term:
    if ty == NAT:
        return numeral(k)
    if isinstance(ty, Arrow):
        return Lam("_", ty.dom, _const(ty.cod, k))
    if isinstance(ty, Prod):
        return Pair(_const(ty.left, k), _const(ty.right, k))
    if isinstance(ty, Sum):
        return Inl(_const(ty.left, k), ty.right)
    raise TypeError(ty)


# ---------------------------------------------------------------- Pi-2 goals


@dataclass(frozen=True)
class Pi2Goal:
    """``forall x exists y R(x, y)`` with a decidable atomic matrix."""

    formula: Formula
    relation: str
    x: str
    y: str

    @property
    def matrix(self) -> Atom:
        return self.formula.body.body

    @classmethod
    def of(cls, phi: Formula, sig: Signature = ARITH) -> "Pi2Goal":
        if not (isinstance(phi, Forall) and isinstance(phi.body, Exists)
                and phi.ty is None and phi.body.ty is None):
            raise ExtractionError(f"goal is not of the form forall x exists y R(x,y): {phi}")
        x, y, m = phi.var, phi.body.var, phi.body.body
        if x == y:
            raise ExtractionError("goal binds the same variable twice")
        if not isinstance(m, Atom):
            raise ExtractionError(f"matrix {m} is not an atom of a decidable relation")
        if m.rel not in prt.RELATION_CHARS or sig.relation(m.rel).impl is None:
            raise ExtractionError(f"relation {m.rel!r} is not decidable")
        if not m.fv <= {x, y}:
            raise ExtractionError(f"matrix has stray free variables {sorted(m.fv - {x, y})}")
        return cls(phi, m.rel, x, y)

    def holds(self, xv: int, yv: int, sig: Signature = ARITH) -> bool:
        return std_eval(self.matrix, {self.x: xv, self.y: yv}, sig)

    def a_predicate(self) -> APredicate:
        return APredicate(self.matrix, self.y)


@dataclass
class WitnessReport:
    route: str
    goal: Formula
    F: Term
    rank: int
    table: list = field(default_factory=list)  # (x, F(x), verdict, least witness)
    notes: list = field(default_factory=list)
    normal: Term | None = None

    @property
    def ok(self) -> bool:
        return bool(self.table) and all(row[2] for row in self.table)

    def to_dict(self) -> dict:
        return {
            "route": self.route,
            "goal": str(self.goal),
            "F": term_to_str(self.F),
            "F_normal": term_to_str(self.normal) if self.normal is not None else None,
            "recursor_rank": self.rank,
            "ok": self.ok,
            "table": [{"x": x, "F(x)": fx, "verified": ok, "least_witness": lw}
                      for x, fx, ok, lw in self.table],
            "notes": list(self.notes),
        }

    def format(self) -> str:
        lines = [f"route: {self.route}", f"goal: {self.goal}", f"F = {term_to_str(self.F)}"]
        if self.normal is not None:
            lines.append(f"normal form: {term_to_str(self.normal)}")
        lines += [f"recursor rank: {self.rank}", "x\tF(x)\tR(x,F(x))\tleast witness"]
        lines += [f"{x}\t{fx}\t{'ok' if ok else 'FAIL'}\t{lw}" for x, fx, ok, lw in self.table]
        lines += [f"note: {n}" for n in self.notes]
        return "\n".join(lines)


def _bridge(b: Builder, theta: Atom, y: str) -> Proof:
    """Minimal proof of ``not forall y not not not theta -> not not exists y theta``."""
    ex = Exists(y, theta)
    hyp_f = Not(Forall(y, Not(Not(Not(theta)))))

    def inner(h):
        def under(k):
            def each(yv):
                inst = substitute(theta, y, yv)
                return b.lam(Not(Not(inst)), lambda r: imp_e(
                    r, b.lam(inst, lambda q: imp_e(k, ex_i(ex, yv, q)))))

            return imp_e(h, b.all_i(Forall(y, Not(Not(Not(theta)))), each))

        return b.lam(Not(ex), under)

    return b.lam(hyp_f, inner)


def _instantiated(p: Proof, goal: Pi2Goal, sig, theory):
    pn = translate_proof(p, theory, sig)
    inst = all_e(pn, Var(goal.x))
    b = Builder(labels_in(inst), vars_in(inst) | {goal.x, goal.y}, sig)
    return pn, inst, b


def _sigma_proof(p: Proof, goal: Pi2Goal, sig, theory) -> Proof:
    """Minimal proof of ``not not exists y R(x, y)`` with ``x`` free."""
    _, inst, b = _instantiated(p, goal, sig, theory)
    out = imp_e(_bridge(b, goal.matrix, goal.y), inst)
    check(out, MINIMAL, theory, sig)
    return out


def _projector() -> Term:
    return Lam("b", Prod(NAT, NAT), Fst(Var("b")))


def _report(route, goal: Pi2Goal, F: Term, sig, lo, hi, notes=()) -> WitnessReport:
    ty = prt.typecheck(F)
    if ty != Arrow(NAT, NAT):
        raise ExtractionError(f"extracted F has type {ty}, expected N -> N")
    rep = WitnessReport(route, goal.formula, F, prt.recursor_rank(F), notes=list(notes))
    try:
        rep.normal = prt.normalize(F, sig=sig)
    except prt.FuelExhausted:
        pass
    for xv in range(lo, hi + 1):
        fx = prt.evaluate(App(F, numeral(xv)), sig=sig)
        least = brute_force_witness(lambda a, b: goal.holds(a, b, sig), xv, max(fx, 64))
        rep.table.append((xv, fx, goal.holds(xv, fx, sig), least))
    return rep


def _check_classical(p: Proof, sig, theory):
    from .kernel import CLASSICAL

    try:
        check(p, CLASSICAL, theory, sig)
    except KernelError as e:
        raise RejectedProof(str(e)) from None


def witness_pi2_via_mr(p: Proof, sig: Signature = ARITH, lo: int = 0, hi: int = 20,
                       theory: dict | None = None) -> WitnessReport:
    """Negative translation, bridge to ``not not exists``, realizer extraction
    with ``A(y) := R(x, y)``, then application to the projection refuter."""
    theory = theory or theory_for(sig)
    _check_classical(p, sig, theory)
    goal = Pi2Goal.of(p.concl, sig)
    sp = _sigma_proof(p, goal, sig, theory)
    t = extract_mr(sp, goal.a_predicate(), sig, theory, checked=True)
    F = Lam(goal.x, NAT, App(t, _projector()))
    return _report("mr", goal, F, sig, lo, hi, [f"minimal proof size {sp.size()}"])


def witness_pi2_direct(p: Proof, sig: Signature = ARITH, lo: int = 0, hi: int = 20,
                       theory: dict | None = None) -> WitnessReport:
    """Classical route: the proof yields a refuter of ``~exists y R(x,y)``
    (obtained through the M-form of the goal), applied to the projection,
    which classically realizes ``forall y ~R(x,y)``."""
    theory = theory or theory_for(sig)
    _check_classical(p, sig, theory)
    goal = Pi2Goal.of(p.concl, sig)
    phi = goal.formula.body.body
    phi = Exists(goal.y, phi)
    A = goal.a_predicate()
    e = _projector()
    dual = neg(phi, sig)
    claim = cr_realizes(e, dual, A, sig=sig)
    if not _tautology(claim):
        raise ExtractionError(f"projection does not realize {dual}: {claim}")
    _, inst, b = _instantiated(p, goal, sig, theory)
    eq = synth_equiv(phi, TranslationName.M, sig)
    pm = imp_e(and_e1(eq), inst)
    check(pm, MINIMAL, theory, sig)
    a = extract_mr(pm, A, sig, theory, checked=True)
    F = Lam(goal.x, NAT, App(a, e))
    return _report("direct", goal, F, sig, lo, hi,
                   [f"refuter realizes {pm.concl}", f"projection realizes {dual} classically"])


def witness_pi2_dialectica(p: Proof, sig: Signature = ARITH, lo: int = 0, hi: int = 20,
                           theory: dict | None = None) -> WitnessReport:
    theory = theory or theory_for(sig)
    _check_classical(p, sig, theory)
    goal = Pi2Goal.of(p.concl, sig)
    sp = _sigma_proof(p, goal, sig, theory)
    ws = extract_dialectica(sp, sig, theory, checked=True)
    if len(ws) != 1:
        raise ExtractionError(f"expected one witness, got {len(ws)}")
    F = Lam(goal.x, NAT, ws[0])
    return _report("dialectica", goal, F, sig, lo, hi)


def witness_candidates(p: Proof, goal: Pi2Goal) -> list:
    """Terms introduced for ``y`` by the proof's own existential introductions,
    as functions of ``x``; used to say which branch an extracted F chose."""
    out = []
    for q in p.walk():
        if (q.rule == "exI" and isinstance(q.concl.body, Atom)
                and q.concl.body.rel == goal.relation):
            t = q.term
            if t.fv <= {goal.x} and t not in out:
                out.append(t)
    return out


def _tautology(phi: Formula) -> bool:
    """``forall b (P -> P)`` after normalizing the terms in ``P``."""
    f = map_terms(phi, lambda t: prt.normalize(t))
    while isinstance(f, Forall):
        f = f.body
    return isinstance(f, Imp) and f.left == f.right


ROUTES = {"mr": witness_pi2_via_mr, "direct": witness_pi2_direct,
          "dialectica": witness_pi2_dialectica}


__all__ = [
    "ExtractionError",
    "RejectedProof",
    "witness_candidates",
    "Pi2Goal",
    "WitnessReport",
    "ROUTES",
    "axiom_realizer",
    "char_term",
    "extract_mr",
    "extract_dialectica",
    "verify_dialectica",
    "witness_pi2_via_mr",
    "witness_pi2_direct",
    "witness_pi2_dialectica",
    "InterpError",
]
