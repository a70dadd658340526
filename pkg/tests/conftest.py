import pytest

from clat.syntax import parse_clause, parse_program


@pytest.fixture
def c():
    return parse_clause


@pytest.fixture
def prog():
    return lambda text: parse_program(text).clauses
