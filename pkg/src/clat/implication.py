"""Decision and semi-decision procedures for implication between clauses."""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from typing import Callable, Iterable, Optional

from .core import (
    BudgetExhausted, Clause, Const, Fn, FreshNames, Literal, PreconditionError, Var,
    VariantSet, apply, constants, depth, resolvents, skolemize, terms_of, variables,
)
from .subsumption import subsumes

BACKENDS = ("optimized", "reference")


@dataclass(frozen=True)
class Budget:
    max_derived_clauses: int = 5000
    max_derivation_depth: int = 6
    max_term_depth: Optional[int] = None  # None: no depth pruning
    max_seconds: float = 30.0

    def __post_init__(self):
        for name in ("max_derived_clauses", "max_derivation_depth", "max_seconds"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")
        if self.max_term_depth is not None and self.max_term_depth <= 0:
            raise ValueError("max_term_depth must be positive")


@dataclass(frozen=True)
class Verdict:
    status: str  # "proved" | "disproved" | "unknown"
    reason: Optional[str] = None  # for unknown: "budget-exhausted" | "undecidable-path"

    @property
    def proved(self) -> bool:
        return self.status == "proved"

    @property
    def disproved(self) -> bool:
        return self.status == "disproved"

    @property
    def unknown(self) -> bool:
        return self.status == "unknown"

    def __str__(self) -> str:
        return {"proved": "yes", "disproved": "no"}.get(self.status, "unknown")


PROVED = Verdict("proved")
DISPROVED = Verdict("disproved")


def _unknown(reason: str) -> Verdict:
    return Verdict("unknown", reason)


# -- term and instance sets --------------------------------------------------------

def term_set(s: Iterable[Clause], sigma: dict) -> frozenset:
    """All terms and subterms occurring in the image of s under a Skolem substitution."""
    s = list(s)
    vs = set(variables(s))
    if set(sigma) != vs:
        raise PreconditionError("substitution does not bind exactly the variables of the set")
    vals = list(sigma.values())
    present = set(constants(s))
    if (not all(isinstance(v, Const) for v in vals) or len(set(vals)) != len(vals)
            or present & set(vals)):
        raise PreconditionError("not a Skolem substitution: values must be distinct fresh constants")
    return frozenset(terms_of([apply(c, sigma) for c in s]))


def instance_set(c, k: Iterable) -> list:
    """All instances of c (or of each clause of a set) with variables mapped into k."""
    clauses = [c] if isinstance(c, Clause) else list(c)
    k = sorted(set(k), key=lambda t: str(t))
    out = []
    for cl in clauses:
        vs = variables(cl)
        if vs and not k:
            raise PreconditionError("empty term collection for a non-ground clause")
        for combo in itertools.product(k, repeat=len(vs)):
            out.append(apply(cl, dict(zip(vs, combo))))
    return out


# -- ground entailment ----------------------------------------------------------------

def _encode(premises, goal):
    atoms = {}

    def lit(l):
        a = l.atom
        if a not in atoms:
            atoms[a] = len(atoms) + 1
        return atoms[a] if l.positive else -atoms[a]

    cnf = [[lit(l) for l in c.sorted()] for c in premises]
    cnf += [[-lit(l)] for l in goal.sorted()]
    return cnf, len(atoms)


def _check_ground(cs):
    for c in cs:
        if variables(c):
            raise PreconditionError(f"clause is not ground: {c}")


def _satisfiable_reference(cnf, n) -> bool:
    # every subset of the atoms is a candidate Herbrand interpretation
    for bits in range(1 << n):
        if all(any((bits >> (abs(x) - 1) & 1) == (x > 0) for x in cl) for cl in cnf):
            return True
    return False


def _satisfiable_dpll(cnf) -> bool:
    clauses = [frozenset(c) for c in cnf]
    return _dpll(clauses, {})


def _dpll(clauses, assign) -> bool:
    assign = dict(assign)
    while True:
        unit = None
        remaining = []
        for cl in clauses:
            if any(assign.get(abs(x)) == (x > 0) for x in cl):
                continue
            open_ = [x for x in cl if abs(x) not in assign]
            if not open_:
                return False
            if len(open_) == 1 and unit is None:
                unit = open_[0]
            remaining.append(cl)
        if not remaining:
            return True
        if unit is None:
            break
        assign[abs(unit)] = unit > 0
        clauses = remaining
    counts = {}
    for cl in remaining:
        for x in cl:
            if abs(x) not in assign:
                counts[x] = counts.get(x, 0) + 1
    x = max(counts, key=lambda y: (counts[y], -abs(y), y > 0))
    for value in (x > 0, x <= 0):
        assign[abs(x)] = value
        if _dpll(remaining, assign):
            return True
    return False


def ground_implies(premises: Iterable[Clause], goal: Clause, backend: str = "optimized") -> bool:
    """Decide whether a finite set of ground clauses implies a ground clause."""
    premises = list(premises)
    _check_ground(premises + [goal])
    if goal.is_tautology:
        return True
    cnf, n = _encode(premises, goal)
    if backend == "reference":
        return not _satisfiable_reference(cnf, n)
    if backend == "optimized":
        return not _satisfiable_dpll(cnf)
    raise ValueError(f"unknown backend {backend!r}")


# -- function-free implication ----------------------------------------------------------

def is_function_free(c: Clause) -> bool:
    return c.is_function_free


def implies_ff(premises: Iterable[Clause], goal: Clause, backend: str = "optimized") -> bool:
    """Exact implication from a finite set of function-free clauses.

    The goal is Skolemized, its term set computed, and the question reduced to
    ground entailment from the premises instantiated over that term set.
    """
    premises = list(premises)
    for p in premises:
        if not p.is_function_free:
            raise PreconditionError(f"premise contains a function symbol: {p}")
    if goal.is_tautology:
        return True
    sigma, (ground_goal,) = skolemize([goal], premises)
    terms = set(term_set([goal], sigma))
    # premise constants must be available, otherwise their ground instances
    # cannot take part in the refutation
    terms |= set(constants(premises))
    if not terms:
        terms.add(Const(FreshNames("sk")()))
    inst = instance_set(premises, terms)
    return ground_implies(inst, ground_goal, backend)


def gottlob_filter(c: Clause, d: Clause) -> bool:
    """Necessary condition for c ⊨ d on non-tautologous clauses: c⁺ ⪰ d⁺ and c⁻ ⪰ d⁻."""
    if c.is_tautology or d.is_tautology:
        raise PreconditionError("gottlob_filter needs non-tautologous clauses")
    return subsumes(c.positive, d.positive) and subsumes(c.negative, d.negative)


# -- resolution saturation ---------------------------------------------------------------

class _Clock:
    def __init__(self, seconds):
        self.deadline = time.monotonic() + seconds

    def expired(self) -> bool:
        return time.monotonic() > self.deadline


def _saturate(premises, budget: Budget, goal=None, forget=True, trace=None):
    """Breadth-first resolution closure.

    Returns (clauses, outcome) where outcome is "proved" (a clause subsuming
    goal was derived), "saturated", "pruned" or "budget".
    """
    clock = _Clock(budget.max_seconds)
    kept = VariantSet()
    for p in premises:
        if forget and p.is_tautology:
            continue
        kept.add(p)
    if goal is not None:
        for p in kept:
            if subsumes(p, goal):
                return list(kept), "proved"
    frontier = list(kept)
    derived = 0
    pruned = False
    for level in range(1, budget.max_derivation_depth + 1):
        new = []
        old = list(kept)
        for a in frontier:
            for b in old:
                if clock.expired():
                    return list(kept), "budget"
                try:
                    rs = resolvents(a, b)
                except BudgetExhausted:
                    return list(kept), "budget"
                for r in rs:
                    if forget and r.is_tautology:
                        continue
                    if budget.max_term_depth is not None and depth(r) > budget.max_term_depth:
                        pruned = True
                        continue
                    if r in kept:
                        continue
                    if forget and any(subsumes(k, r) for k in kept):
                        continue
                    kept.add(r)
                    new.append(r)
                    derived += 1
                    if trace:
                        trace(f"[{level}] {r}  from  {a}  and  {b}")
                    if goal is not None and subsumes(r, goal):
                        return list(kept), "proved"
                    if derived >= budget.max_derived_clauses:
                        return list(kept), "budget"
        if not new:
            return list(kept), "pruned" if pruned else "saturated"
        frontier = new
    return list(kept), "budget"


def derivation_closure(premises: Iterable[Clause], budget: Optional[Budget] = None):
    """Every clause derivable by resolution, up to variants.

    Returns (clauses, complete); complete is False if the budget ran out first.
    """
    budget = budget or Budget()
    clauses, outcome = _saturate(list(premises), budget, forget=False)
    return clauses, outcome == "saturated"


def deduce(premises: Iterable[Clause], goal: Clause, budget: Optional[Budget] = None,
           trace: Optional[Callable[[str], None]] = None, backend: str = "optimized") -> Verdict:
    """Semi-decide premises ⊨ goal.

    Proved and Disproved are sound; Unknown is returned when neither a
    derivation nor a disproof certificate was found within the budget.
    """
    budget = budget or Budget()
    premises = list(premises)
    if goal.is_tautology:
        return PROVED
    if any(subsumes(p, goal) for p in premises):
        return PROVED
    if all(p.is_function_free for p in premises):
        return PROVED if implies_ff(premises, goal, backend) else DISPROVED
    proper = [p for p in premises if not p.is_tautology]
    if len(proper) == 1:
        c = proper[0]
        if not gottlob_filter(c, goal) or depth(c) > depth(goal):
            return DISPROVED
    _, outcome = _saturate(proper, budget, goal=goal, trace=trace)
    if outcome == "proved":
        return PROVED
    if outcome == "saturated":
        return _unknown("undecidable-path")
    return _unknown("budget-exhausted")


def rel_implies(c: Clause, goal: Clause, bg: Iterable[Clause], budget: Optional[Budget] = None,
                trace=None, backend: str = "optimized") -> Verdict:
    """c ⊨_Σ goal, i.e. Σ ∪ {c} ⊨ goal."""
    return deduce(list(bg) + [c], goal, budget, trace, backend)
