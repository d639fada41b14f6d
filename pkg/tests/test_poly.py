import pytest
from hypothesis import given, strategies as st

from sqw.errors import NotSymmetric
from sqw.poly import (MPoly, SymPoly, conjugate_partition, elementary, elementary_product,
                      sympoly_expand_basis, sympoly_from_basis, sympoly_top_component)
from sqw.scalar import Q

from strategies import rationals


def test_top_component_examples():
    x1, x2 = MPoly.variables(2)
    assert sympoly_top_component(SymPoly.from_poly(x1 + x2 - 5)) == SymPoly.from_poly(x1 + x2)
    p = SymPoly.from_poly(x1 ** 2 * x2 + x1 * x2 ** 2 + 3 * x1 + 3 * x2)
    assert sympoly_top_component(p) == SymPoly.from_poly(x1 ** 2 * x2 + x1 * x2 ** 2)


def test_basis_examples():
    x1, x2 = MPoly.variables(2)
    assert sympoly_expand_basis(SymPoly.from_poly(x1 + x2), "monomial") == {(1,): 1}
    assert sympoly_expand_basis(SymPoly.from_poly(x1 * x2), "elementary") == {(1, 1): 1}


def test_not_symmetric():
    x1, x2 = MPoly.variables(2)
    with pytest.raises(NotSymmetric):
        SymPoly.from_poly(x1 + 2 * x2)


def test_elementary():
    x = MPoly.variables(3)
    assert elementary(2, 3) == x[0] * x[1] + x[0] * x[2] + x[1] * x[2]
    assert elementary_product((2, 1), 3) == SymPoly.from_poly(elementary(2, 3) * elementary(1, 3))
    assert elementary_product((4,), 3).is_zero()


@given(st.dictionaries(st.sampled_from([(), (1,), (2,), (1, 1), (2, 1), (3,), (1, 1, 1), (2, 2)]),
                       rationals(), max_size=5))
def test_basis_round_trip(coeffs):
    p = SymPoly(3, coeffs)
    for basis in ("monomial", "elementary"):
        assert sympoly_from_basis(sympoly_expand_basis(p, basis), basis, 3) == p


@given(rationals(), rationals(), rationals())
def test_evaluate_agrees_with_expansion(a, b, c):
    x1, x2, x3 = MPoly.variables(3)
    p = SymPoly.from_poly((x1 + x2 + x3) ** 2 - 3 * x1 * x2 * x3)
    assert p.evaluate((a, b, c)) == p.to_poly().evaluate((a, b, c)) == (a + b + c) ** 2 - 3 * a * b * c


@given(rationals(), rationals())
def test_polynomial_ring_ops(a, b):
    x, y = MPoly.variables(2)
    p = (x + a) * (y - b)
    assert p == x * y - b * x + a * y - a * b
    assert (p ** 2).degree() == 4
    assert (p - p).is_zero()
    assert (p / 2) * 2 == p


def test_conjugate_partition():
    assert conjugate_partition((3, 1)) == (2, 1, 1)
    assert conjugate_partition(()) == ()
