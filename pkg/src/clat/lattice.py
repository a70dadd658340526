"""Least generalizations and greatest specializations under implication."""

from __future__ import annotations

import itertools
import time
from typing import Iterable, Optional

from .core import (
    BudgetExhausted, Clause, EMPTY, Literal, PreconditionError, Var, VariantSet,
    constants, match, standardize_apart, terms_of, variables,
)
from .implication import Budget, implies_ff
from .subsumption import augment, gss_clausal, reduce, subsumes

# returned when every input clause is a tautology; any tautology would do
TAUTOLOGY = Clause([Literal(True, "taut", (Var("v0"),)), Literal(False, "taut", (Var("v0"),))])


def _signature(clauses):
    preds = sorted({(l.predicate, len(l.args)) for c in clauses for l in c.literals})
    consts = sorted(constants(clauses), key=lambda t: t.name)
    return preds, consts


def _literal_pool(clauses, m, prune):
    preds, consts = _signature(clauses)
    vs = [Var(f"x{i + 1}") for i in range(m)]
    pool = []
    for pred, n in preds:
        for args in itertools.product(vs + consts, repeat=n):
            for sign in (True, False):
                lit = Literal(sign, pred, args)
                if prune and not all(any(match(lit, t) is not None for t in d.literals)
                                     for d in clauses):
                    continue
                pool.append(lit)
    return pool


def _count_terms(clauses) -> int:
    return len(set(terms_of(clauses)))


class _Search:
    def __init__(self, targets, budget: Budget, prune: bool, backend: str):
        self.targets = targets
        self.budget = budget
        self.prune = prune
        self.backend = backend
        self.nodes = 0
        self.deadline = time.monotonic() + budget.max_seconds
        self.checked = VariantSet()
        self.gens = []

    def tick(self):
        self.nodes += 1
        if self.nodes > self.budget.max_derived_clauses:
            raise BudgetExhausted(f"lgi candidate budget of {self.budget.max_derived_clauses} exhausted")
        if time.monotonic() > self.deadline:
            raise BudgetExhausted("lgi time budget exhausted")

    def compatible(self, lits) -> bool:
        # Gottlob: any generalization maps its positive and its negative part into each target
        if not self.prune:
            return True
        h = Clause(lits)
        pos, neg = h.positive, h.negative
        return all(subsumes(pos, d.positive) and subsumes(neg, d.negative) for d in self.targets)

    def consider(self, lits):
        h = Clause(lits)
        if not self.checked.add(h):
            return
        if all(implies_ff([h], d, self.backend) for d in self.targets):
            self.gens.append(h)

    def run(self, pool):
        self.gens.append(EMPTY)

        def extend(start, chosen, chosen_set):
            for i in range(start, len(pool)):
                lit = pool[i]
                if -lit in chosen_set:
                    continue
                self.tick()
                chosen.append(lit)
                chosen_set.add(lit)
                if self.compatible(chosen):
                    self.consider(chosen)
                    extend(i + 1, chosen, chosen_set)
                chosen.pop()
                chosen_set.discard(lit)

        extend(0, [], set())
        return self.gens


def _most_specific(gens):
    keep = []
    for h in gens:
        if any(subsumes(h, k) and not subsumes(k, h) for k in gens):
            continue
        if any(subsumes(h, k) and subsumes(k, h) for k in keep):
            continue
        keep.append(h)
    return keep


def lgi(s: Iterable[Clause], budget: Optional[Budget] = None, *, backend: str = "optimized",
        standardize: bool = False, extra_variables: int = 0) -> Clause:
    """Least generalization under implication of a finite clause set.

    Needs at least one non-tautologous function-free clause. Candidates are
    clauses over the predicates and constants of the input and m variables,
    m being the number of distinct terms of the non-tautologous inputs. The
    generalizations among them are united after standardizing apart.

    backend="optimized" discards candidate literals and partial clauses that
    cannot map into every input (sign-wise subsumption) and keeps only the most
    specific generalizations; backend="reference" checks every candidate.
    extra_variables widens the candidate pool beyond m variables.
    Raises BudgetExhausted rather than returning a partial answer.
    """
    budget = budget or Budget()
    s = list(s)
    if s and all(c.is_tautology for c in s):
        return TAUTOLOGY
    targets = [c for c in s if not c.is_tautology]
    if not any(c.is_function_free for c in targets):
        raise PreconditionError("lgi needs at least one non-tautologous function-free clause")
    if backend not in ("optimized", "reference"):
        raise ValueError(f"unknown backend {backend!r}")
    basis = standardize_apart(targets) if standardize else targets
    m = _count_terms(basis) + extra_variables
    prune = backend == "optimized"
    pool = _literal_pool(targets, m, prune)
    gens = _Search(targets, budget, prune, "optimized").run(pool)
    if prune:
        gens = _most_specific(gens)
    out = EMPTY
    for h in standardize_apart(gens):
        out = out | h
    return reduce(out)


def gsi(s: Iterable[Clause]) -> Clause:
    """Greatest specialization under implication: the standardized-apart union."""
    return gss_clausal(s)


def gsr(s: Iterable[Clause], bg: Iterable[Clause] = ()) -> Clause:
    """Greatest specialization relative to background knowledge.

    The union construction does not depend on the background.
    """
    return gss_clausal(s)


def lgr_ground(s: Iterable[Clause], bg: Iterable[Literal], budget: Optional[Budget] = None,
               *, backend: str = "optimized") -> Clause:
    """Least generalization relative to a set of function-free ground literals."""
    bg = list(bg)
    for l in bg:
        if variables(l):
            raise PreconditionError(f"background literal {l} is not ground")
        if not Clause([l]).is_function_free:
            raise PreconditionError(f"background literal {l} contains a function symbol")
        if -l in bg:
            raise PreconditionError(f"background literals {l} and {-l} are complementary")
    augmented = [augment(d, bg) for d in s]
    if not any(a.is_function_free and not a.is_tautology for a in augmented):
        raise PreconditionError(
            "no augmented clause is both non-tautologous and function-free: "
            + "; ".join(str(a) for a in augmented))
    return lgi(augmented, budget, backend=backend)


def self_saturate(c: Clause, budget: Optional[Budget] = None, *, backend: str = "optimized") -> Clause:
    if c.is_tautology:
        raise PreconditionError(f"{c} is a tautology")
    if not c.is_function_free:
        raise PreconditionError(f"{c} is not function-free")
    return lgi([c], budget, backend=backend)
