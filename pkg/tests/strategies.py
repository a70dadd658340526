"""Hypothesis strategies for small clauses."""

from hypothesis import strategies as st

from clat.core import Clause, Const, Fn, Literal, Var, variables

VARS = [Var(n) for n in ("X", "Y", "Z", "W")]
CONSTS = [Const(n) for n in ("a", "b", "c")]
PREDS = [("p", 1), ("q", 2), ("r", 0)]


def terms(max_depth=2, vars_=VARS):
    leaves = st.sampled_from(vars_ + CONSTS)
    if max_depth <= 1:
        return leaves
    sub = terms(max_depth - 1, vars_)
    return st.one_of(
        leaves,
        st.builds(lambda t: Fn("f", (t,)), sub),
        st.builds(lambda s, t: Fn("g", (s, t)), sub, sub),
    )


@st.composite
def literals(draw, max_depth=2, function_free=False):
    pred, n = draw(st.sampled_from(PREDS))
    term = terms(1 if function_free else max_depth)
    args = tuple(draw(term) for _ in range(n))
    return Literal(draw(st.booleans()), pred, args)


def clauses(min_size=1, max_size=3, **kw):
    return st.lists(literals(**kw), min_size=min_size, max_size=max_size).map(Clause)


@st.composite
def substitutions(draw, over, max_depth=2):
    vs = variables(over)
    chosen = draw(st.lists(st.sampled_from(vs), unique=True)) if vs else []
    return {v: draw(terms(max_depth)) for v in chosen}


@st.composite
def anti_instances(draw, c: Clause):
    """A random generalization of c: drop literals, then abstract term occurrences."""
    lits = c.sorted()
    keep = draw(st.lists(st.sampled_from(lits), unique=True, min_size=0, max_size=len(lits)))
    counter = [0]
    table = {}

    def abstract(t):
        if draw(st.integers(0, 3)) == 0:
            if draw(st.booleans()):
                v = table.setdefault(t, Var(f"G{len(table)}"))
            else:
                counter[0] += 1
                v = Var(f"H{counter[0]}")
            return v
        if isinstance(t, Fn):
            return Fn(t.functor, tuple(abstract(a) for a in t.args))
        return t

    # variables of c must be abstracted consistently for the result to generalize c
    for v in variables(c):
        table[v] = Var(f"K{v.name}")
    out = []
    for l in keep:
        out.append(Literal(l.positive, l.predicate, tuple(_abstract_var(abstract(a), table)
                                                           for a in l.args)))
    return Clause(out)


def _abstract_var(t, table):
    if isinstance(t, Var) and t in table:
        return table[t]
    if isinstance(t, Fn):
        return Fn(t.functor, tuple(_abstract_var(a, table) for a in t.args))
    return t
