"""Terms, literals, clauses, substitutions, unification and resolution."""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Optional, Union

RESERVED = re.compile(r"^(v|sk)\d+$")


class PreconditionError(ValueError):
    """An operation was called outside its domain."""


class BudgetExhausted(RuntimeError):
    """A bounded enumeration ran out of budget before finishing."""


@dataclass(frozen=True)
class Var:
    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Const:
    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Fn:
    functor: str
    args: tuple

    def __post_init__(self):
        if not self.args:
            raise ValueError("compound terms need at least one argument; use Const")

    def __str__(self) -> str:
        return f"{self.functor}({', '.join(map(str, self.args))})"


Term = Union[Var, Const, Fn]
Substitution = dict  # Var -> Term, never storing x -> x


def term_key(t: Term) -> tuple:
    if isinstance(t, Var):
        return (0, t.name)
    if isinstance(t, Const):
        return (1, t.name)
    return (2, t.functor, len(t.args), tuple(term_key(a) for a in t.args))


def _shape_key(t: Term) -> tuple:
    # like term_key but blind to variable names
    if isinstance(t, Var):
        return (0,)
    if isinstance(t, Const):
        return (1, t.name)
    return (2, t.functor, len(t.args), tuple(_shape_key(a) for a in t.args))


@dataclass(frozen=True)
class Literal:
    positive: bool
    predicate: str
    args: tuple = ()

    def __neg__(self) -> "Literal":
        return Literal(not self.positive, self.predicate, self.args)

    @property
    def atom(self) -> "Literal":
        return self if self.positive else -self

    def complementary(self, other: "Literal") -> bool:
        return (self.positive != other.positive and self.predicate == other.predicate
                and self.args == other.args)

    def key(self) -> tuple:
        return (0 if self.positive else 1, self.predicate, len(self.args),
                tuple(term_key(a) for a in self.args))

    def shape_key(self) -> tuple:
        return (0 if self.positive else 1, self.predicate, len(self.args),
                tuple(_shape_key(a) for a in self.args))

    def __str__(self) -> str:
        body = self.predicate
        if self.args:
            body += "(" + ", ".join(map(str, self.args)) + ")"
        return body if self.positive else "¬" + body


class Clause:
    """A finite set of literals, read as their universally closed disjunction."""

    __slots__ = ("literals", "_sorted", "_hash")

    def __init__(self, literals: Iterable[Literal] = ()):
        self.literals = frozenset(literals)
        self._sorted = None
        self._hash = None

    def __iter__(self) -> Iterator[Literal]:
        return iter(self.sorted())

    def __len__(self) -> int:
        return len(self.literals)

    def __contains__(self, lit) -> bool:
        return lit in self.literals

    def __eq__(self, other) -> bool:
        return isinstance(other, Clause) and self.literals == other.literals

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.literals)
        return self._hash

    def __or__(self, other: "Clause") -> "Clause":
        return Clause(self.literals | other.literals)

    def __sub__(self, other) -> "Clause":
        return Clause(self.literals - frozenset(other))

    def __repr__(self) -> str:
        return f"Clause({str(self)})"

    def __str__(self) -> str:
        if not self.literals:
            return "□"
        return " ∨ ".join(map(str, self.sorted()))

    def sorted(self) -> tuple:
        if self._sorted is None:
            self._sorted = tuple(sorted(self.literals, key=lambda l: (l.shape_key(), l.key())))
        return self._sorted

    def key(self) -> tuple:
        return tuple(l.key() for l in self.sorted())

    @property
    def positive(self) -> "Clause":
        return Clause(l for l in self.literals if l.positive)

    @property
    def negative(self) -> "Clause":
        return Clause(l for l in self.literals if not l.positive)

    @property
    def is_empty(self) -> bool:
        return not self.literals

    @property
    def is_horn(self) -> bool:
        return sum(1 for l in self.literals if l.positive) <= 1

    @property
    def is_definite(self) -> bool:
        return sum(1 for l in self.literals if l.positive) == 1

    @property
    def is_goal(self) -> bool:
        return not any(l.positive for l in self.literals)

    @property
    def is_tautology(self) -> bool:
        return any(-l in self.literals for l in self.literals if l.positive)

    @property
    def is_ground(self) -> bool:
        return not variables(self)

    @property
    def is_function_free(self) -> bool:
        return all(not isinstance(t, Fn) for l in self.literals for t in l.args)


EMPTY = Clause()


# -- traversal ---------------------------------------------------------------

def subterms(t: Term) -> Iterator[Term]:
    yield t
    if isinstance(t, Fn):
        for a in t.args:
            yield from subterms(a)


def terms_of(x) -> Iterator[Term]:
    """Every term and subterm occurring in a term, literal, clause or iterable of clauses."""
    if isinstance(x, (Var, Const, Fn)):
        yield from subterms(x)
    elif isinstance(x, Literal):
        for a in x.args:
            yield from subterms(a)
    elif isinstance(x, Clause):
        for l in x.sorted():
            yield from terms_of(l)
    else:
        for c in x:
            yield from terms_of(c)


def variables(x) -> list:
    """Distinct variables in first-occurrence order."""
    seen = {}
    for t in terms_of(x):
        if isinstance(t, Var):
            seen.setdefault(t, None)
    return list(seen)


def constants(x) -> list:
    seen = {}
    for t in terms_of(x):
        if isinstance(t, Const):
            seen.setdefault(t, None)
    return list(seen)


def depth(x) -> int:
    """Variables and constants have depth 1; the empty clause has depth 0."""
    if isinstance(x, (Var, Const)):
        return 1
    if isinstance(x, Fn):
        return 1 + max(depth(a) for a in x.args)
    if isinstance(x, Literal):
        return max((depth(a) for a in x.args), default=0)
    return max((depth(l) for l in x.literals), default=0)


# -- substitutions -----------------------------------------------------------

def apply(x, s: Mapping):
    if not s:
        return x
    if isinstance(x, Var):
        return s.get(x, x)
    if isinstance(x, Const):
        return x
    if isinstance(x, Fn):
        return Fn(x.functor, tuple(apply(a, s) for a in x.args))
    if isinstance(x, Literal):
        return Literal(x.positive, x.predicate, tuple(apply(a, s) for a in x.args))
    if isinstance(x, Clause):
        return Clause(apply(l, s) for l in x.literals)
    raise TypeError(f"cannot apply a substitution to {type(x).__name__}")


def compose(s1: Mapping, s2: Mapping) -> Substitution:
    """The substitution that acts as s1 followed by s2."""
    out = {}
    for v, t in s1.items():
        t2 = apply(t, s2)
        if t2 != v:
            out[v] = t2
    for v, t in s2.items():
        if v not in s1 and t != v:
            out[v] = t
    return out


def _walk(t, bind):
    while isinstance(t, Var) and t in bind:
        t = bind[t]
    return t


def _occurs(v, t, bind) -> bool:
    t = _walk(t, bind)
    if t == v:
        return True
    return isinstance(t, Fn) and any(_occurs(v, a, bind) for a in t.args)


def _unify(a, b, bind) -> bool:
    stack = [(a, b)]
    while stack:
        x, y = stack.pop()
        x, y = _walk(x, bind), _walk(y, bind)
        if x == y:
            continue
        if isinstance(x, Var):
            if _occurs(x, y, bind):
                return False
            bind[x] = y
        elif isinstance(y, Var):
            if _occurs(y, x, bind):
                return False
            bind[y] = x
        elif (isinstance(x, Fn) and isinstance(y, Fn) and x.functor == y.functor
              and len(x.args) == len(y.args)):
            stack.extend(zip(x.args, y.args))
        else:
            return False
    return True


def _resolve(t, bind):
    t = _walk(t, bind)
    if isinstance(t, Fn):
        return Fn(t.functor, tuple(_resolve(a, bind) for a in t.args))
    return t


def mgu(items: Iterable) -> Optional[Substitution]:
    """Most general unifier of a nonempty collection of terms or same-sign literals.

    Returns None when the items are not unifiable. The result is idempotent.
    """
    items = list(items)
    if not items:
        raise ValueError("mgu of an empty collection")
    first = items[0]
    bind = {}
    if isinstance(first, Literal):
        for other in items[1:]:
            if (other.positive != first.positive or other.predicate != first.predicate
                    or len(other.args) != len(first.args)):
                return None
            for a, b in zip(first.args, other.args):
                if not _unify(a, b, bind):
                    return None
    else:
        for other in items[1:]:
            if not _unify(first, other, bind):
                return None
    return {v: _resolve(v, bind) for v in bind}


def match(pattern, target, s: Optional[dict] = None) -> Optional[dict]:
    """One-way matching: extend s so that apply(pattern, s) == target, or None."""
    s = dict(s) if s else {}
    stack = [(pattern, target)]
    while stack:
        p, t = stack.pop()
        if isinstance(p, Var):
            bound = s.get(p)
            if bound is None:
                s[p] = t
            elif bound != t:
                return None
        elif isinstance(p, Const):
            if p != t:
                return None
        elif isinstance(p, Fn):
            if not (isinstance(t, Fn) and t.functor == p.functor and len(t.args) == len(p.args)):
                return None
            stack.extend(zip(p.args, t.args))
        elif isinstance(p, Literal):
            if (not isinstance(t, Literal) or p.positive != t.positive
                    or p.predicate != t.predicate or len(p.args) != len(t.args)):
                return None
            stack.extend(zip(p.args, t.args))
    return s


# -- clause embedding (subsumption and variant search) ------------------------

def embed(c: Clause, d: Clause, *, injective: bool = False, budget: Optional[int] = None):
    """Search a θ with cθ ⊆ d by backtracking; returns θ or None.

    With injective=True, θ must rename variables injectively to variables.
    Raises BudgetExhausted if more than `budget` search nodes are expanded.
    """
    lits = list(c.sorted())
    dl = d.sorted()
    cands = []
    for l in lits:
        opts = [m for m in dl if match(l, m) is not None]
        if not opts:
            return None
        cands.append(opts)
    # most constrained literal first
    order = sorted(range(len(lits)), key=lambda i: (len(cands[i]), i))
    nodes = [0]

    def ok(s):
        if not injective:
            return True
        vals = list(s.values())
        return all(isinstance(v, Var) for v in vals) and len(set(vals)) == len(vals)

    def search(k, s):
        if k == len(order):
            return s
        i = order[k]
        for m in cands[i]:
            nodes[0] += 1
            if budget is not None and nodes[0] > budget:
                raise BudgetExhausted("subsumption search budget exhausted")
            s2 = match(lits[i], m, s)
            if s2 is not None and ok(s2):
                r = search(k + 1, s2)
                if r is not None:
                    return r
        return None

    return search(0, {})


def is_variant(c: Clause, d: Clause) -> bool:
    if len(c) != len(d):
        return False
    if sorted(l.shape_key() for l in c.literals) != sorted(l.shape_key() for l in d.literals):
        return False
    return embed(c, d, injective=True) is not None


class VariantSet:
    """Insertion-ordered set of clauses, deduplicated up to variable renaming."""

    def __init__(self, clauses: Iterable[Clause] = ()):
        self._buckets = {}
        self._items = []
        for c in clauses:
            self.add(c)

    @staticmethod
    def _bucket(c):
        return tuple(sorted(l.shape_key() for l in c.literals))

    def find(self, c: Clause) -> Optional[Clause]:
        for d in self._buckets.get(self._bucket(c), ()):
            if is_variant(c, d):
                return d
        return None

    def add(self, c: Clause) -> bool:
        if self.find(c) is not None:
            return False
        self._buckets.setdefault(self._bucket(c), []).append(c)
        self._items.append(c)
        return True

    def __contains__(self, c) -> bool:
        return self.find(c) is not None

    def __iter__(self):
        return iter(self._items)

    def __len__(self):
        return len(self._items)


# -- renaming, Skolemization --------------------------------------------------

class FreshNames:
    """Issues names `prefix0, prefix1, ...` that are not in `taken`."""

    def __init__(self, prefix: str, taken: Iterable[str] = ()):
        self.prefix = prefix
        self.taken = set(taken)
        self.n = 0

    def __call__(self) -> str:
        while f"{self.prefix}{self.n}" in self.taken:
            self.n += 1
        name = f"{self.prefix}{self.n}"
        self.n += 1
        return name


def standardize_apart(cs: Iterable[Clause]) -> list:
    """Rename every clause to fresh variables v0, v1, ... so no two share a variable."""
    fresh = FreshNames("v")
    out = []
    for c in cs:
        ren = {v: Var(fresh()) for v in variables(c)}
        out.append(apply(c, ren))
    return out


def _has_reserved_constant(cs) -> bool:
    for t in terms_of(cs):
        name = t.name if isinstance(t, Const) else t.functor if isinstance(t, Fn) else None
        if name is not None and RESERVED.match(name):
            return True
    return False


def skolemize(s: Iterable[Clause], avoid: Iterable[Clause] = ()):
    """Map each variable of s to a distinct fresh constant sk0, sk1, ...

    Returns (σ, image of s). Variables are taken in canonical order, so shared
    variable names across clauses share a constant.
    """
    s = sorted(s, key=Clause.key)
    avoid = list(avoid)
    if _has_reserved_constant(s) or _has_reserved_constant(avoid):
        raise PreconditionError("input uses the reserved Skolem namespace sk<digits>")
    sigma = {v: Const(f"sk{i}") for i, v in enumerate(variables(s))}
    return sigma, [apply(c, sigma) for c in s]


# -- factoring and resolution -------------------------------------------------

def _unifiable_subsets(c: Clause, min_size: int, max_group: int):
    groups = {}
    for l in c.sorted():
        groups.setdefault((l.positive, l.predicate, len(l.args)), []).append(l)
    for group in groups.values():
        if len(group) > max_group:
            raise BudgetExhausted(f"factoring a group of {len(group)} literals")
        for k in range(min_size, len(group) + 1):
            for sub in itertools.combinations(group, k):
                theta = mgu(sub)
                if theta is not None:
                    yield sub, theta


def factors(c: Clause, max_group: int = 12) -> list:
    """All factors of a nonempty clause, deduplicated up to variants; c itself comes first."""
    if c.is_empty:
        raise PreconditionError("the empty clause has no factors")
    out = VariantSet([c])
    for _, theta in _unifiable_subsets(c, 2, max_group):
        out.add(apply(c, theta))
    return list(out)


def _rename_from(c: Clause, fresh: FreshNames) -> Clause:
    return apply(c, {v: Var(fresh()) for v in variables(c)})


def resolvents(c1: Clause, c2: Clause, max_group: int = 12) -> list:
    """All resolvents of c1 and c2, deduplicated up to variants.

    Both parents are renamed apart first, so self-resolution is handled too.
    """
    fresh = FreshNames("v")
    a = _rename_from(c1, fresh)
    b = _rename_from(c2, fresh)
    out = VariantSet()
    fa = [(a, (l,), {}) for l in a.sorted()] + list(_factor_choices(a, max_group))
    fb = [(b, (l,), {}) for l in b.sorted()] + list(_factor_choices(b, max_group))
    for ca, la, ta in fa:
        lit_a = apply(la[0], ta)
        fact_a = apply(ca, ta)
        for cb, lb, tb in fb:
            lit_b = apply(lb[0], tb)
            if lit_a.positive == lit_b.positive or lit_a.predicate != lit_b.predicate:
                continue
            sigma = mgu([lit_a, -lit_b])
            if sigma is None:
                continue
            fact_b = apply(cb, tb)
            r = apply((fact_a - [lit_a]) | (fact_b - [lit_b]), sigma)
            out.add(r)
    return list(out)


def _factor_choices(c: Clause, max_group: int):
    for sub, theta in _unifiable_subsets(c, 2, max_group):
        yield c, sub, theta
