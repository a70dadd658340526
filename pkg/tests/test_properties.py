from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from clat.core import Clause, Fn, Var, apply, is_variant, match, mgu, standardize_apart, variables
from clat.lattice import gsi, gsr
from clat.subsumption import BOTTOM, gss_clausal, gss_horn, lgs_pair, reduce, subsumes
from clat.syntax import parse_clause, print_clause

from . import oracles
from .strategies import anti_instances, clauses, substitutions, terms

SETTINGS = dict(deadline=None, suppress_health_check=[HealthCheck.too_slow])


# -- subsumption ----------------------------------------------------------------

@settings(max_examples=500, **SETTINGS)
@given(st.data())
def test_subsumption_reflexive_and_transitive(data):
    c = data.draw(clauses())
    assert subsumes(c, c)
    d = apply(c, data.draw(substitutions(c))) | data.draw(clauses(min_size=0, max_size=2))
    e = apply(d, data.draw(substitutions(d))) | data.draw(clauses(min_size=0, max_size=2))
    assert subsumes(c, d) and subsumes(d, e)
    assert subsumes(c, e)


@settings(max_examples=500, **SETTINGS)
@given(clauses(max_depth=1, max_size=2), clauses(max_depth=1, max_size=3))
def test_subsumption_agrees_with_brute_force(c, d):
    assert subsumes(c, d) == oracles.subsumes(c, d)


# -- least generalization under subsumption ---------------------------------------

@settings(max_examples=200, **SETTINGS)
@given(st.data())
def test_lgs_upper_bound_and_least(data):
    base = data.draw(clauses())
    c = apply(base, data.draw(substitutions(base))) | data.draw(clauses(min_size=0, max_size=2))
    d = apply(base, data.draw(substitutions(base))) | data.draw(clauses(min_size=0, max_size=2))
    g = lgs_pair(c, d)
    assert subsumes(g, c) and subsumes(g, d)
    assert reduce(g) == g
    pool = [base] + [data.draw(anti_instances(base)) for _ in range(4)]
    for h in pool:
        assert subsumes(h, c) and subsumes(h, d)
        assert subsumes(h, g)


# -- greatest specializations -------------------------------------------------------

@settings(max_examples=200, **SETTINGS)
@given(st.data())
def test_gss_gsi_gsr_bounds(data):
    s = data.draw(st.lists(clauses(), min_size=1, max_size=3))
    bg = data.draw(st.lists(clauses(max_size=1), max_size=2))
    for g in (gss_clausal(s), gsi(s), gsr(s, bg)):
        for c in s:
            assert subsumes(c, g)
    # any common specialization is below the union
    e = Clause()
    for c in s:
        e = e | apply(c, data.draw(substitutions(c)))
    e = e | data.draw(clauses(min_size=0, max_size=2))
    assert subsumes(gss_clausal(s), e)


def horn(c):
    pos = c.positive.sorted()
    return c - pos[1:]


@settings(max_examples=200, **SETTINGS)
@given(st.lists(clauses().map(horn), min_size=1, max_size=3))
def test_gss_horn_bounds(s):
    g = gss_horn(s)
    heads = [l for c in s for l in c.literals if l.positive]
    if g is BOTTOM:
        # heads of the standardized-apart clauses do not unify
        parts = standardize_apart(s)
        assert mgu([l for c in parts for l in c.literals if l.positive]) is None
        return
    assert g.is_horn
    for c in s:
        assert subsumes(c, g)
    if not heads:
        assert is_variant(g, gss_clausal(s))


# -- unification -------------------------------------------------------------------

@settings(max_examples=500, **SETTINGS)
@given(terms(3), terms(3))
def test_mgu_sound(s, t):
    sigma = mgu([s, t])
    if sigma is None:
        return
    assert apply(s, sigma) == apply(t, sigma)
    for v, u in sigma.items():
        assert apply(u, sigma) == u


def abstract(draw, u, prefix, table):
    # replace some subterms of u by variables, reusing a variable for repeats
    if draw(st.integers(0, 2)) == 0:
        return table.setdefault((prefix, u), Var(f"{prefix}{len(table)}"))
    if isinstance(u, Fn):
        return Fn(u.functor, tuple(abstract(draw, a, prefix, table) for a in u.args))
    return u


@settings(max_examples=500, **SETTINGS)
@given(st.data())
def test_mgu_most_general(data):
    u = data.draw(terms(3))
    table = {}
    s = abstract(data.draw, u, "S", table)
    t = abstract(data.draw, u, "T", table)
    tau = match(t, u, match(s, u))
    assert tau is not None and apply(s, tau) == apply(t, tau)
    sigma = mgu([s, t])
    assert sigma is not None
    for v in set(variables(s)) | set(variables(t)):
        assert apply(apply(v, sigma), tau) == apply(v, tau)


# -- parser --------------------------------------------------------------------------

@settings(max_examples=1000, **SETTINGS)
@given(clauses(min_size=0, max_size=4), st.permutations(["A", "B", "C", "D"]))
def test_parser_round_trip(c, names):
    text = print_clause(c)
    back = parse_clause(text)
    assert is_variant(back, c)
    assert print_clause(back) == text
    renamed = apply(c, {v: Var(n) for v, n in zip(variables(c), names)})
    assert print_clause(renamed) == text
