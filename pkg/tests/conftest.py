from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import strategies as st

from malcev import catalog as cat


def leibniz_det(rows):
    """Determinant by the permutation expansion; exponential but independent."""
    n = len(rows)
    total = Fraction(0)
    for perm in permutations(range(n)):
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if perm[i] > perm[j]:
                    sign = -sign
        term = Fraction(sign)
        for i, p in enumerate(perm):
            term *= rows[i][p]
        total += term
    return total


small_rationals = st.builds(Fraction, st.integers(-4, 4), st.integers(1, 3))


def vectors(n):
    return st.lists(small_rationals, min_size=n, max_size=n).map(tuple)


@st.composite
def matrices(draw, max_side=4, square=False):
    rows = draw(st.integers(1, max_side))
    cols = rows if square else draw(st.integers(1, max_side))
    return [draw(vectors(cols)) for _ in range(rows)]


@pytest.fixture(scope="session")
def algebras():
    return {a.name: a for a in cat.catalog()}


@pytest.fixture(scope="session")
def sl2(algebras):
    return algebras["sl2"]


@pytest.fixture(scope="session")
def m7(algebras):
    return algebras["M7"]


@pytest.fixture(scope="session")
def big(algebras):
    return algebras["sl2_plus_M7"]
