"""Semantic oracles: finite classical models, a propositional Kripke
decision procedure for minimal and intuitionistic logic, and blind
witness search in the standard model."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable

import numpy as np
from pysat.solvers import Solver

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
    free_vars,
    to_sexp,
)
from .terms import App, Fn, Succ, Term, Var, Zero, as_numeral, numeral


class OracleError(ValueError):
    pass


# ---------------------------------------------------------------- finite models


def is_positive(sig: Signature, rel: str) -> bool:
    """Of a relation and its complement, the one registered first is 'positive'."""
    comp = sig.complement(rel)
    names = list(sig.relations)
    return names.index(rel) <= names.index(comp)


def positive_relations(sig: Signature) -> list:
    return [r for r in sig.relations if is_positive(sig, r)]


def _mod_impls(n: int) -> dict:
    return {
        "0": lambda: 0,
        "S": lambda a: (a + 1) % n,
        "+": lambda a, b: (a + b) % n,
        "*": lambda a, b: (a * b) % n,
    }


@dataclass
class FiniteModel:
    """Domain ``{0..size-1}``; S, +, * act modulo ``size``.

    ``relations`` maps positive relation names to their set of true tuples;
    ``=`` and ``<=`` default to the built-in order. Complements are the
    set-theoretic complement.
    """

    size: int
    sig: Signature = field(default=ARITH, repr=False)
    relations: dict = field(default_factory=dict)
    constants: dict = field(default_factory=dict)

    def fn(self, name: str, args: tuple) -> int:
        if name in self.constants:
            return self.constants[name]
        impl = _mod_impls(self.size).get(name)
        if impl is None:
            raise OracleError(f"no interpretation for function symbol {name!r}")
        return impl(*args)

    def holds(self, rel: str, args: tuple) -> bool:
        if not is_positive(self.sig, rel):
            return not self.holds(self.sig.complement(rel), args)
        if rel in self.relations:
            return tuple(args) in self.relations[rel]
        if rel == "=":
            return args[0] == args[1]
        if rel == "<=":
            return args[0] <= args[1]
        raise OracleError(f"no interpretation for relation {rel!r}")


def term_value(t: Term, m: FiniteModel, env: dict) -> int:
    if isinstance(t, Var):
        try:
            return env[t.name]
        except KeyError:
            raise OracleError(f"unbound variable {t.name}") from None
    if isinstance(t, Zero):
        return 0
    if isinstance(t, App) and isinstance(t.fun, Succ):
        return m.fn("S", (term_value(t.arg, m, env),))
    if isinstance(t, Fn):
        return m.fn(t.sym, tuple(term_value(a, m, env) for a in t.args))
    raise OracleError(f"cannot evaluate {t} in a finite model")


def classical_eval(phi: Formula, m: FiniteModel, env: dict | None = None) -> bool:
    """Tarskian truth in ``m``; quantifiers range over the finite domain."""
    env = env or {}
    if isinstance(phi, Bot):
        return False
    if isinstance(phi, Top):
        return True
    if isinstance(phi, Atom):
        return m.holds(phi.rel, tuple(term_value(a, m, env) for a in phi.args))
    if isinstance(phi, And):
        return classical_eval(phi.left, m, env) and classical_eval(phi.right, m, env)
    if isinstance(phi, Or):
        return classical_eval(phi.left, m, env) or classical_eval(phi.right, m, env)
    if isinstance(phi, Imp):
        return (not classical_eval(phi.left, m, env)) or classical_eval(phi.right, m, env)
    if isinstance(phi, (Forall, Exists)):
        if phi.ty is not None:
            raise OracleError("higher-type quantifier in a first-order model")
        vals = (classical_eval(phi.body, m, {**env, phi.var: d}) for d in range(m.size))
        return all(vals) if isinstance(phi, Forall) else any(vals)
    raise TypeError(phi)


def _symbols(phi: Formula, rels: set, consts: set):
    if isinstance(phi, Atom):
        rels.add(phi.rel)
        for a in phi.args:
            _term_symbols(a, consts)
    elif isinstance(phi, (And, Or, Imp)):
        _symbols(phi.left, rels, consts)
        _symbols(phi.right, rels, consts)
    elif isinstance(phi, (Forall, Exists)):
        _symbols(phi.body, rels, consts)


def _term_symbols(t, consts):
    if isinstance(t, Fn):
        if not t.args and t.sym not in ("0",):
            consts.add(t.sym)
        for a in t.args:
            _term_symbols(a, consts)
    elif isinstance(t, App):
        _term_symbols(t.fun, consts)
        _term_symbols(t.arg, consts)


def uninterpreted(phis, sig: Signature):
    """Positive relation names and constants that need an interpretation table."""
    rels, consts = set(), set()
    for phi in phis:
        _symbols(phi, rels, consts)
    pos = {r if is_positive(sig, r) else sig.complement(r) for r in rels}
    return sorted(pos - {"=", "<="}), sorted(consts)


def all_models(sig: Signature, size: int, rels, consts=()):
    """Every interpretation of ``rels`` and ``consts`` over a domain of ``size``."""
    arities = [sig.relation(r).arity for r in rels]
    spaces = [list(itertools.product(range(size), repeat=k)) for k in arities]
    slots = [(r, tup) for r, sp in zip(rels, spaces) for tup in sp]
    for bits in itertools.product((False, True), repeat=len(slots)):
        tables = {r: set() for r in rels}
        for (r, tup), b in zip(slots, bits):
            if b:
                tables[r].add(tup)
        frozen = {r: frozenset(v) for r, v in tables.items()}
        for cv in itertools.product(range(size), repeat=len(consts)):
            yield FiniteModel(size, sig, frozen, dict(zip(consts, cv)))


class ModelBatch:
    """All models of one size at once, as numpy boolean vectors.

    Used for bulk agreement checks; ``classical_eval`` is the reference.
    """

    def __init__(self, sig: Signature, size: int, rels, consts=(), max_bits: int = 20):
        self.sig, self.size = sig, size
        self.rels, self.consts = list(rels), list(consts)
        slots = [(r, tup) for r in self.rels
                 for tup in itertools.product(range(size), repeat=sig.relation(r).arity)]
        if len(slots) > max_bits:
            raise OracleError(f"{len(slots)} table bits exceed the batch limit {max_bits}")
        self.n_tables = 1 << len(slots)
        idx = np.arange(self.n_tables, dtype=np.int64)
        self.slot_bits = {s: ((idx >> i) & 1).astype(bool) for i, s in enumerate(slots)}
        self.const_values = list(itertools.product(range(size), repeat=len(self.consts)))
        self.true = np.ones(self.n_tables, dtype=bool)
        self.false = np.zeros(self.n_tables, dtype=bool)

    def __len__(self):
        return self.n_tables * len(self.const_values)

    def _term(self, t, env, cenv):
        if isinstance(t, Var):
            return env[t.name]
        if isinstance(t, Zero):
            return 0
        if isinstance(t, App) and isinstance(t.fun, Succ):
            return (self._term(t.arg, env, cenv) + 1) % self.size
        if isinstance(t, Fn):
            if t.sym in cenv:
                return cenv[t.sym]
            args = [self._term(a, env, cenv) for a in t.args]
            return _mod_impls(self.size)[t.sym](*args)
        raise OracleError(f"cannot evaluate {t}")

    def _atom(self, phi, env, cenv):
        args = tuple(self._term(a, env, cenv) for a in phi.args)
        rel, flip = phi.rel, False
        if not is_positive(self.sig, rel):
            rel, flip = self.sig.complement(rel), True
        if rel in self.rels:
            v = self.slot_bits[(rel, args)]
        elif rel == "=":
            v = self.true if args[0] == args[1] else self.false
        elif rel == "<=":
            v = self.true if args[0] <= args[1] else self.false
        else:
            raise OracleError(f"no interpretation for relation {rel!r}")
        return ~v if flip else v

    def eval(self, phi: Formula) -> np.ndarray:
        """Truth of the closed formula ``phi`` in every model (tables x constants)."""
        out = []
        for cv in self.const_values:
            cenv = dict(zip(self.consts, cv))
            out.append(self._eval(phi, {}, cenv, {}))
        return np.concatenate(out)

    def _eval(self, phi, env, cenv, memo):
        key = (phi, tuple(sorted((k, env[k]) for k in phi.fv if k in env)))
        hit = memo.get(key)
        if hit is not None:
            return hit
        if isinstance(phi, Bot):
            r = self.false
        elif isinstance(phi, Top):
            r = self.true
        elif isinstance(phi, Atom):
            r = self._atom(phi, env, cenv)
        elif isinstance(phi, And):
            r = self._eval(phi.left, env, cenv, memo) & self._eval(phi.right, env, cenv, memo)
        elif isinstance(phi, Or):
            r = self._eval(phi.left, env, cenv, memo) | self._eval(phi.right, env, cenv, memo)
        elif isinstance(phi, Imp):
            r = ~self._eval(phi.left, env, cenv, memo) | self._eval(phi.right, env, cenv, memo)
        elif isinstance(phi, Forall):
            r = self.true
            for d in range(self.size):
                r = r & self._eval(phi.body, {**env, phi.var: d}, cenv, memo)
        elif isinstance(phi, Exists):
            r = self.false
            for d in range(self.size):
                r = r | self._eval(phi.body, {**env, phi.var: d}, cenv, memo)
        else:
            raise TypeError(phi)
        memo[key] = r
        return r


def disagreement(phi: Formula, psi: Formula, sig: Signature = ARITH, max_size: int = 3,
                 max_bits: int = 20):
    """First finite model (size 1..max_size) where the closed formulas differ, or None."""
    rels, consts = uninterpreted([phi, psi], sig)
    for n in range(1, max_size + 1):
        batch = ModelBatch(sig, n, rels, consts, max_bits)
        diff = batch.eval(phi) != batch.eval(psi)
        if diff.any():
            i = int(np.argmax(diff))
            ci, ti = divmod(i, batch.n_tables)
            tables = {r: frozenset(t for (rr, t), bits in batch.slot_bits.items()
                                   if rr == r and bits[ti]) for r in rels}
            return FiniteModel(n, sig, tables, dict(zip(consts, batch.const_values[ci])))
    return None


# ---------------------------------------------------------------- standard model


def std_term(t: Term, env: dict, sig: Signature = ARITH) -> int:
    if isinstance(t, Var):
        return env[t.name]
    if isinstance(t, Zero):
        return 0
    if isinstance(t, App) and isinstance(t.fun, Succ):
        return std_term(t.arg, env, sig) + 1
    if isinstance(t, Fn):
        f = sig.function(t.sym)
        if f.impl is None:
            raise OracleError(f"function symbol {t.sym!r} has no standard meaning")
        return f.impl(*(std_term(a, env, sig) for a in t.args))
    n = as_numeral(t)
    if n is not None:
        return n
    raise OracleError(f"cannot evaluate {t} in the standard model")


def std_eval(phi: Formula, env: dict | None = None, sig: Signature = ARITH) -> bool:
    """Truth of a quantifier-free formula in the natural numbers."""
    env = env or {}
    if isinstance(phi, Bot):
        return False
    if isinstance(phi, Top):
        return True
    if isinstance(phi, Atom):
        r = sig.relation(phi.rel)
        if r.impl is None:
            raise OracleError(f"relation {phi.rel!r} has no standard meaning")
        return bool(r.impl(*(std_term(a, env, sig) for a in phi.args)))
    if isinstance(phi, And):
        return std_eval(phi.left, env, sig) and std_eval(phi.right, env, sig)
    if isinstance(phi, Or):
        return std_eval(phi.left, env, sig) or std_eval(phi.right, env, sig)
    if isinstance(phi, Imp):
        return (not std_eval(phi.left, env, sig)) or std_eval(phi.right, env, sig)
    raise OracleError("std_eval handles quantifier-free formulas only")


def brute_force_witness(R, x: int, bound: int, sig: Signature = ARITH, xvar: str = "x",
                        yvar: str = "y"):
    """Least ``y <= bound`` with ``R(x, y)``, or None.

    ``R`` is a quantifier-free formula in ``xvar``/``yvar`` or a Python predicate.
    """
    test: Callable = R if callable(R) else (lambda a, b: std_eval(R, {xvar: a, yvar: b}, sig))
    for y in range(bound + 1):
        if test(x, y):
            return y
    return None


# ---------------------------------------------------------------- Kripke models


BOT_ATOM = "(bot)"


@dataclass(frozen=True)
class KripkeModel:
    """Finite rooted Kripke model for propositional logic.

    ``above[w]`` lists the worlds ``v >= w`` (reflexive, transitive);
    ``val[w]`` the atoms forced at ``w``, keyed by their S-expression. In
    minimal mode ``(bot)`` may appear in ``val`` like any other atom.
    """

    above: tuple
    val: tuple
    minimal: bool
    root: int = 0

    @property
    def worlds(self) -> range:
        return range(len(self.val))

    def is_monotone(self) -> bool:
        return all(self.val[w] <= self.val[v] for w in self.worlds for v in self.above[w])

    def to_dict(self) -> dict:
        return {
            "worlds": [{"id": w, "above": sorted(self.above[w]), "atoms": sorted(self.val[w])}
                       for w in self.worlds],
            "root": self.root,
            "bot_is_atom": self.minimal,
        }

    def __str__(self):
        rows = [f"w{w}: forces {{{', '.join(sorted(self.val[w]))}}}; above {sorted(self.above[w])}"
                for w in self.worlds]
        return "\n".join(rows)


def forces(m: KripkeModel, w: int, phi: Formula) -> bool:
    """Forcing relation, written independently of the search below."""
    if isinstance(phi, Top):
        return True
    if isinstance(phi, Bot):
        return m.minimal and BOT_ATOM in m.val[w]
    if isinstance(phi, Atom):
        return to_sexp(phi) in m.val[w]
    if isinstance(phi, And):
        return forces(m, w, phi.left) and forces(m, w, phi.right)
    if isinstance(phi, Or):
        return forces(m, w, phi.left) or forces(m, w, phi.right)
    if isinstance(phi, Imp):
        return all(not forces(m, v, phi.left) or forces(m, v, phi.right) for v in m.above[w])
    raise OracleError("propositional forcing only")


def refutes(m: KripkeModel, phi: Formula) -> bool:
    return m.is_monotone() and not forces(m, m.root, phi)


def propositional(phi: Formula, sig: Signature = ARITH) -> Formula:
    """Read each complemented atom as the negation of its positive partner."""
    if isinstance(phi, Atom):
        if phi.rel in sig.relations and not is_positive(sig, phi.rel):
            return Not(Atom(sig.complement(phi.rel), phi.args))
        return phi
    if isinstance(phi, (And, Or, Imp)):
        return type(phi)(propositional(phi.left, sig), propositional(phi.right, sig))
    if isinstance(phi, (Forall, Exists)):
        raise OracleError("decide_prop_minimal expects a quantifier-free formula")
    return phi


@dataclass(frozen=True)
class Decision:
    valid: bool
    countermodel: KripkeModel | None = None
    mode: str = "minimal"

    def __bool__(self):
        return self.valid


class _Intuit:
    """SAT-driven proof search for intuitionistic implication.

    Every subformula gets a propositional name. Connectives other than
    implication become classical clauses; ``p <-> (a -> b)`` contributes the
    clauses ``p & a -> b`` and ``b -> p`` plus the implication clause
    ``(a -> b) -> p``, which the recursive ``prove`` handles by moving to a
    successor world. Failed calls are the worlds of a countermodel.
    """

    def __init__(self, goal: Formula, minimal: bool, budget: int):
        self.minimal = minimal
        self.budget = budget
        self.index: dict = {}
        self.atom_names: dict = {}
        self.impls: list = []
        self.solver = Solver(name="m22")
        self.goal = self._name(goal)

    def _name(self, f: Formula) -> int:
        v = self.index.get(f)
        if v is not None:
            return v
        if isinstance(f, (And, Or, Imp)):
            a, b = self._name(f.left), self._name(f.right)
        v = len(self.index) + 1
        self.index[f] = v
        add = self.solver.add_clause
        if isinstance(f, Atom) or (isinstance(f, Bot) and self.minimal):
            self.atom_names[v] = to_sexp(f)
        elif isinstance(f, Bot):
            add([-v])
        elif isinstance(f, Top):
            add([v])
        elif isinstance(f, And):
            add([-v, a])
            add([-v, b])
            add([-a, -b, v])
        elif isinstance(f, Or):
            add([-v, a, b])
            add([-a, v])
            add([-b, v])
        else:
            add([-v, -a, b])
            add([-b, v])
            self.impls.append((a, b, v))
        return v

    def run(self):
        try:
            ok, out = self.prove(frozenset(), self.goal)
        finally:
            self.solver.delete()
        return None if ok else out

    def prove(self, assumed: frozenset, q: int):
        while True:
            self.budget -= 1
            if self.budget < 0:
                raise OracleError("decision budget exhausted")
            if not self.solver.solve(assumptions=sorted(assumed) + [-q]):
                core = self.solver.get_core() or []
                return True, frozenset(v for v in core if v > 0 and v != q)
            true = frozenset(v for v in self.solver.get_model() if v > 0)
            kids, learned = [], False
            for a, b, c in self.impls:
                if c in true or a in true:
                    continue
                ok, out = self.prove(true | {a}, b)
                if ok:
                    self.solver.add_clause([-v for v in out if v != a] + [c])
                    learned = True
                    break
                kids.append(out)
            if not learned:
                atoms = frozenset(self.atom_names[v] for v in true if v in self.atom_names)
                return False, (atoms, tuple(kids))


def _assemble(tree, minimal: bool) -> KripkeModel:
    val, above = [], []

    def go(node):
        w = len(val)
        val.append(node[0])
        above.append(None)
        ups = {w}
        for k in node[1]:
            ups |= go(k)
        above[w] = frozenset(ups)
        return ups

    go(tree)
    return KripkeModel(tuple(above), tuple(val), minimal)


def decide_prop_minimal(phi: Formula, mode: str = "minimal", sig: Signature = ARITH,
                        budget: int = 2_000_000) -> Decision:
    """Decide propositional validity in minimal or intuitionistic logic.

    A failed search yields a tree Kripke countermodel. In minimal mode bottom
    is an ordinary atom.
    """
    mode = str(getattr(mode, "name", mode)).lower()
    if mode not in ("minimal", "intuitionistic"):
        raise OracleError(f"unknown mode {mode!r}")
    minimal = mode == "minimal"
    f = propositional(phi, sig)
    tree = _Intuit(f, minimal, budget).run()
    if tree is None:
        return Decision(True, None, mode)
    m = _assemble(tree, minimal)
    return Decision(False, m, mode)


def replace_bot(phi: Formula, atom: Atom) -> Formula:
    if isinstance(phi, Bot):
        return atom
    if isinstance(phi, (And, Or, Imp)):
        return type(phi)(replace_bot(phi.left, atom), replace_bot(phi.right, atom))
    return phi


# ---------------------------------------------------------------- first-order Kripke search


def fo_kripke_countermodel(phi: Formula, sig: Signature, domain: int = 2, max_worlds: int = 2,
                           budget: int = 200_000):
    """Bounded search for a constant-domain Kripke countermodel of a closed
    first-order formula over uninterpreted predicates (minimal reading: bottom
    is an atom). Worlds form a chain. Returns ``(valuations, domain)`` or None;
    None certifies nothing."""
    rels, consts = uninterpreted([phi], sig)
    if consts:
        raise OracleError("constants are not supported in the Kripke search")
    slots = [(r, tup) for r in rels
             for tup in itertools.product(range(domain), repeat=sig.relation(r).arity)]
    slots.append(("(bot)", ()))
    tried = 0
    for k in range(1, max_worlds + 1):
        # a chain of k worlds: each slot becomes true from some world onward (or never)
        for starts in itertools.product(range(k + 1), repeat=len(slots)):
            tried += 1
            if tried > budget:
                return None
            val = [frozenset(s for s, st in zip(slots, starts) if st <= w) for w in range(k)]
            if not _fo_forces(phi, 0, val, sig, domain, {}):
                return val, domain
    return None


def _fo_forces(phi, w, val, sig, n, env):
    k = len(val)
    if isinstance(phi, Top):
        return True
    if isinstance(phi, Bot):
        return ("(bot)", ()) in val[w]
    if isinstance(phi, Atom):
        rel, flip = phi.rel, False
        if not is_positive(sig, rel):
            raise OracleError("complemented atoms have no Kripke reading here")
        args = tuple(env[a.name] for a in phi.args)
        return ((rel, args) in val[w]) != flip
    if isinstance(phi, And):
        return _fo_forces(phi.left, w, val, sig, n, env) and _fo_forces(phi.right, w, val, sig, n, env)
    if isinstance(phi, Or):
        return _fo_forces(phi.left, w, val, sig, n, env) or _fo_forces(phi.right, w, val, sig, n, env)
    if isinstance(phi, Imp):
        return all(not _fo_forces(phi.left, v, val, sig, n, env) or _fo_forces(phi.right, v, val, sig, n, env)
                   for v in range(w, k))
    if isinstance(phi, Forall):
        return all(_fo_forces(phi.body, v, val, sig, n, {**env, phi.var: d})
                   for v in range(w, k) for d in range(n))
    if isinstance(phi, Exists):
        return any(_fo_forces(phi.body, w, val, sig, n, {**env, phi.var: d}) for d in range(n))
    raise TypeError(phi)


__all__ = [
    "FiniteModel",
    "ModelBatch",
    "KripkeModel",
    "Decision",
    "OracleError",
    "classical_eval",
    "all_models",
    "uninterpreted",
    "disagreement",
    "std_eval",
    "std_term",
    "brute_force_witness",
    "decide_prop_minimal",
    "forces",
    "refutes",
    "propositional",
    "replace_bot",
    "fo_kripke_countermodel",
    "is_positive",
    "BOT_ATOM",
    "numeral",
    "free_vars",
]
