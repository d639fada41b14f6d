from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from sqw.errors import SingularSystem
from sqw.linalg import rank, solve, solve_many
from sqw.scalar import Q


def fraction_solve(matrix, rhs):
    """Textbook Gauss-Jordan over fractions.Fraction, as an independent oracle."""
    n = len(matrix)
    m = [[Fraction(int(v.numerator), int(v.denominator)) for v in row]
         + [Fraction(int(rhs[i].numerator), int(rhs[i].denominator))] for i, row in enumerate(matrix)]
    for c in range(n):
        piv = next(r for r in range(c, n) if m[r][c] != 0)
        m[c], m[piv] = m[piv], m[c]
        for r in range(n):
            if r != c and m[r][c] != 0:
                f = m[r][c] / m[c][c]
                m[r] = [a - f * b for a, b in zip(m[r], m[c])]
    return [m[i][n] / m[i][i] for i in range(n)]


entry = st.fractions(min_value=-20, max_value=20, max_denominator=9).map(lambda f: Q(f))


@given(st.integers(1, 5).flatmap(lambda n: st.tuples(
    st.lists(st.lists(entry, min_size=n, max_size=n), min_size=n, max_size=n),
    st.lists(entry, min_size=n, max_size=n))))
def test_solve_matches_fraction_oracle(data):
    matrix, rhs = data
    if rank(matrix) < len(matrix):
        with pytest.raises(SingularSystem):
            solve(matrix, rhs)
        return
    x = solve(matrix, rhs)
    assert [Fraction(int(v.numerator), int(v.denominator)) for v in x] == fraction_solve(matrix, rhs)


def test_many_columns():
    m = [[2, 1], [1, 3]]
    cols = solve_many(m, [[1, 0], [0, 1]])
    assert cols == [[Q(3, 5), Q(-1, 5)], [Q(-1, 5), Q(2, 5)]]


def test_singular():
    with pytest.raises(SingularSystem):
        solve([[1, 2], [2, 4]], [1, 1])
    assert rank([[1, 2], [2, 4], [0, 1]]) == 2
