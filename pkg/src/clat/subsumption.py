"""θ-subsumption, reduction, least generalization and greatest specialization under ⪰."""

from __future__ import annotations

from typing import Iterable, Optional, Union

from .core import (
    Clause, EMPTY, Fn, FreshNames, Literal, PreconditionError, Var,
    apply, embed, mgu, standardize_apart, variables,
)


class Bottom:
    """The artificial bottom of the Horn lattice.

    Subsumed by every clause, subsumes only itself, and is never treated as
    an ordinary tautology.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "BOTTOM"


BOTTOM = Bottom()

HornGssResult = Union[Clause, Bottom]


def subsumes(c, d, budget: Optional[int] = None) -> bool:
    """True iff cθ ⊆ d for some θ."""
    if d is BOTTOM:
        return True
    if c is BOTTOM:
        return False
    if len(c) == 0:
        return True
    return embed(c, d, budget=budget) is not None


def subsume_equivalent(c: Clause, d: Clause) -> bool:
    return subsumes(c, d) and subsumes(d, c)


def reduce(c: Clause) -> Clause:
    """Smallest subset of c that is subsume-equivalent to c.

    A single pass suffices: if dropping L fails once it fails for every
    equivalent subset as well.
    """
    cur = c
    for lit in reversed(c.sorted()):
        smaller = cur - [lit]
        if subsumes(cur, smaller):
            cur = smaller
    return cur


# -- Plotkin anti-unification --------------------------------------------------

class _AntiUnifier:
    def __init__(self, c: Clause, d: Clause):
        taken = {v.name for v in variables([c, d])}
        self.fresh = FreshNames("v", taken)
        self.table = {}

    def term(self, s, t):
        if s == t:
            return s
        if (isinstance(s, Fn) and isinstance(t, Fn) and s.functor == t.functor
                and len(s.args) == len(t.args)):
            return Fn(s.functor, tuple(self.term(a, b) for a, b in zip(s.args, t.args)))
        v = self.table.get((s, t))
        if v is None:
            v = self.table[(s, t)] = Var(self.fresh())
        return v

    def literal(self, l: Literal, m: Literal) -> Literal:
        return Literal(l.positive, l.predicate,
                       tuple(self.term(a, b) for a, b in zip(l.args, m.args)))


def lgs_pair(c: Clause, d: Clause) -> Clause:
    """Least generalization under subsumption of two clauses, reduced."""
    au = _AntiUnifier(c, d)
    out = []
    for l in c.sorted():
        for m in d.sorted():
            if (l.positive == m.positive and l.predicate == m.predicate
                    and len(l.args) == len(m.args)):
                out.append(au.literal(l, m))
    return reduce(Clause(out))


def lgs_set(s: Iterable[Clause]) -> Clause:
    s = sorted(s, key=Clause.key)
    if not s:
        raise PreconditionError("lgs of an empty set")
    g = reduce(s[0])
    for c in s[1:]:
        g = lgs_pair(g, c)
    return g


# -- greatest specializations ---------------------------------------------------

def gss_clausal(s: Iterable[Clause]) -> Clause:
    """Union of the clauses after standardizing them apart."""
    s = list(s)
    if not s:
        raise PreconditionError("gss of an empty set")
    out = EMPTY
    for c in standardize_apart(s):
        out = out | c
    return out


def gss_horn(s: Iterable[Clause]) -> HornGssResult:
    s = list(s)
    if not s:
        raise PreconditionError("gss of an empty set")
    for c in s:
        if not c.is_horn:
            raise PreconditionError(f"not a Horn clause: {c}")
    parts = standardize_apart(s)
    heads = [l for c in parts for l in c.literals if l.positive]
    union = EMPTY
    for c in parts:
        union = union | c
    if not heads:
        return union
    sigma = mgu(heads)
    if sigma is None:
        return BOTTOM
    return apply(union, sigma)


# -- relative subsumption ---------------------------------------------------------

def _check_background(bg: Iterable[Literal]) -> list:
    bg = list(bg)
    for l in bg:
        if variables(l):
            raise PreconditionError(f"background literal is not ground: {l}")
    lits = set(bg)
    for l in bg:
        if -l in lits:
            raise PreconditionError(f"background contains a complementary pair on {l.atom}")
    return bg


def augment(d: Clause, bg: Iterable[Literal]) -> Clause:
    """d ∪ {¬L | L ∈ bg}."""
    return d | Clause(-l for l in bg)


def rel_subsumes(c: Clause, d: Clause, bg: Iterable[Literal]) -> bool:
    bg = _check_background(bg)
    return subsumes(c, augment(d, bg))


def lg_rel_subsumption(s: Iterable[Clause], bg: Iterable[Literal]) -> Clause:
    bg = _check_background(bg)
    return lgs_set(augment(d, bg) for d in s)
