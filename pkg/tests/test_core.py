import pytest

from clat import core
from clat.core import (
    Clause, Const, EMPTY, Fn, Literal, PreconditionError, Var, apply, compose, depth,
    factors, is_variant, match, mgu, resolvents, skolemize, standardize_apart,
    variables,
)
from clat.syntax import parse_clause as pc

X, Y, Z = Var("X"), Var("Y"), Var("Z")
a, b = Const("a"), Const("b")


def f(*args):
    return Fn("f", args)


def test_fn_needs_arguments():
    with pytest.raises(ValueError):
        Fn("f", ())


def test_clause_basic_properties():
    c = pc("p(X) :- q(X), r(a).")
    assert len(c) == 3
    assert c.is_horn and c.is_definite and not c.is_goal
    assert pc(":- q(X).").is_goal
    assert not pc("p(X) ; q(X).").is_horn
    assert pc("p(X) :- p(X).").is_tautology
    assert not pc("p(X) :- p(Y).").is_tautology
    assert pc("p(a).").is_ground
    assert not pc("p(f(a)).").is_function_free
    assert EMPTY.is_empty and EMPTY.is_horn


def test_positive_negative_parts():
    c = pc("p(X) ; q(Y) :- r(X).")
    assert c.positive == pc("p(X) ; q(Y).")
    assert c.negative == pc(":- r(X).")


def test_depth():
    assert depth(X) == 1 and depth(a) == 1
    assert depth(f(f(a))) == 3
    assert depth(pc("p(f(f(X))) :- p(X).")) == 3
    assert depth(EMPTY) == 0


def test_apply_and_variables():
    c = pc("p(X, f(Y)) :- q(Y).")
    assert apply(c, {X: a, Y: b}) == pc("p(a, f(b)) :- q(b).")
    assert set(variables(c)) == {X, Y}


def test_compose_acts_as_sequence():
    s1 = {X: f(Y)}
    s2 = {Y: a, Z: b}
    s = compose(s1, s2)
    for t in (X, Y, Z, f(X, Z)):
        assert apply(t, s) == apply(apply(t, s1), s2)


def test_compose_drops_identity():
    assert compose({X: Y}, {Y: X}) == {Y: X}


def test_mgu_basic():
    s = mgu([f(X, b), f(a, Y)])
    assert s == {X: a, Y: b}


def test_mgu_occurs_check():
    assert mgu([X, f(X)]) is None


def test_mgu_clash():
    assert mgu([f(a), f(b)]) is None
    assert mgu([f(a), Fn("g", (a,))]) is None


def test_mgu_is_idempotent():
    s = mgu([f(X, Y), f(Y, f(Z))])
    assert s is not None
    for v, t in s.items():
        assert apply(t, s) == t


def test_mgu_literals_sign_and_predicate():
    assert mgu([Literal(True, "p", (X,)), Literal(False, "p", (a,))]) is None
    assert mgu([Literal(True, "p", (X,)), Literal(True, "q", (a,))]) is None
    assert mgu([Literal(True, "p", (X,)), Literal(True, "p", (a,))]) == {X: a}


def test_match_is_one_way():
    assert match(f(X, X), f(a, a)) == {X: a}
    assert match(f(X, X), f(a, b)) is None
    assert match(f(a), f(X)) is None


def test_is_variant():
    assert is_variant(pc("p(X, Y) :- q(Y)."), pc("p(A, B) :- q(B)."))
    assert not is_variant(pc("p(X, X)."), pc("p(X, Y)."))
    assert not is_variant(pc("p(X, Y)."), pc("p(X, X)."))


def test_standardize_apart_disjoint_and_variants():
    cs = [pc("p(X) :- q(X)."), pc("p(X) :- r(X, Y).")]
    out = standardize_apart(cs)
    assert not set(variables(out[0])) & set(variables(out[1]))
    for c, d in zip(cs, out):
        assert is_variant(c, d)


def test_skolemize():
    sigma, (g,) = skolemize([pc("p(X, Y) :- q(Y).")])
    assert g.is_ground
    vals = list(sigma.values())
    assert len(set(vals)) == len(vals)
    assert all(core.RESERVED.match(v.name) for v in vals)


def test_skolemize_rejects_reserved_input():
    c = Clause([Literal(True, "p", (Const("sk0"),))])
    with pytest.raises(PreconditionError):
        skolemize([c])


def test_factors():
    c = pc("p(X) ; p(a) :- q(X).")
    fs = factors(c)
    assert is_variant(fs[0], c)
    assert any(is_variant(x, pc("p(a) :- q(a).")) for x in fs)
    with pytest.raises(PreconditionError):
        factors(EMPTY)


def test_resolvents_binary():
    rs = resolvents(pc("p(X) :- q(X)."), pc("q(a)."))
    assert len(rs) == 1 and is_variant(rs[0], pc("p(a)."))


def test_resolvents_empty_clause():
    rs = resolvents(pc("p(X)."), pc(":- p(a)."))
    assert rs == [EMPTY]


def test_resolvents_need_factoring():
    # {p(X), p(Y)} and {¬p(U), ¬p(V)}: only factors give the empty clause
    rs = resolvents(pc("p(X) ; p(Y)."), pc(":- p(U), p(V)."))
    assert EMPTY in rs


def test_self_resolution_renames_parents():
    rs = resolvents(pc("p(f(X)) :- p(X)."), pc("p(f(X)) :- p(X)."))
    assert any(is_variant(r, pc("p(f(f(X))) :- p(X).")) for r in rs)
