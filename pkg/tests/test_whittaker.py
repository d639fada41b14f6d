import pytest
from hypothesis import given, settings, strategies as st

import sqw.whittaker as whittaker
from sqw.partitions import ParamSeq, contains, enumerate_partitions, grid_point_q, interlaces
from sqw.poly import MPoly, SymPoly
from sqw.sampling import Sampler
from sqw.scalar import Q, TruncSeries, adaptive, series_equal_mod
from sqw.transfer import b_element, psi
from sqw.whittaker import (cauchy_sides, check_cauchy, f_dual, f_dual_via_rows, f_one_var, f_skew,
                           f_skew_raw, g_basis, gf_transition, h_value, skew_cauchy_sides, symbolic,
                           vanishing_report)


def seqs(seed, length=8):
    s = Sampler(seed)
    q = s.q()
    v = list(s.generic([f"v{i}" for i in range(2 * length)], q).values())
    return ParamSeq.of(v[:length], "A"), ParamSeq.of(v[length:], "B"), q, s


def test_single_variable_examples():
    A, B, q, s = seqs(1)
    x = s.rational()
    assert f_one_var((), (), x, A, B, q) == 1
    assert f_one_var((1,), (), x, A, B, q) == (x - A[1]) / (B[0] * (1 - q))
    assert f_skew((3,), (1,), [x], A, B, q) == f_one_var((3,), (1,), x, A, B, q)


@settings(max_examples=8)
@given(st.integers(0, 10_000))
def test_single_variable_matches_row_operator(seed):
    A, B, q, s = seqs(seed)
    x = s.rational()
    for lam in enumerate_partitions(3, 4):
        for mu in enumerate_partitions(3, 4):
            if interlaces(lam, mu):
                v = f_one_var(lam, mu, x, A, B, q)
                assert v == b_element(x, A, B, lam, mu, q)
                assert v == f_skew(lam, mu, [x], A, B, q)


def test_symbolic_polynomials_are_symmetric():
    A, B, q, _ = seqs(2)
    xs = symbolic(2)
    assert f_skew((), (), xs, A, B, q) == SymPoly(2, {(): 1})
    for lam in enumerate_partitions(2, 4):
        p = f_skew_raw(lam, (), xs, A, B, q)
        p = p if isinstance(p, MPoly) else MPoly.const(p, 2)
        assert p == p.substitute([xs[1], xs[0]])
        assert isinstance(f_skew(lam, (), xs, A, B, q), SymPoly)


def test_three_variable_symmetry():
    A, B, q, _ = seqs(3)
    xs = symbolic(3)
    for lam in [(2, 1), (1, 1, 1), (3, 1)]:
        p = f_skew_raw(lam, (), xs, A, B, q)
        assert p == p.substitute([xs[1], xs[2], xs[0]]) == p.substitute([xs[0], xs[2], xs[1]])


def test_dual_examples():
    A, B, q, s = seqs(4)
    y = s.rational()
    assert f_dual((), (), [y], A, B, q) == 1
    assert f_dual((1,), (), [y], A, B, q) == psi((1,), A, B, q) * f_skew((1,), (), [y], A, B, q)


@settings(max_examples=5)
@given(st.integers(0, 10_000))
def test_dual_matches_row_operator_chain(seed):
    A, B, q, s = seqs(seed)
    ys = [s.rational(), s.rational()]
    for lam in enumerate_partitions(2, 3):
        for mu in enumerate_partitions(2, 3):
            if contains(lam, mu):
                try:
                    assert f_dual(lam, mu, ys, B.bar(), A.bar(), q) == f_dual_via_rows(lam, mu, ys, A, B, q)
                except ZeroDivisionError:
                    pass


def test_g_basis_examples():
    A, B, q, s = seqs(5)
    x = s.rational()
    assert g_basis((), [x, x], A, B, q) == 1
    assert g_basis((1,), [x], A, B, q) == (1 - x / B[1]) / (1 - A[1] / B[1])


def test_specialized_cauchy_sum():
    A, B, q, s = seqs(6)
    xs = [s.rational(), s.rational()]
    for mu in enumerate_partitions(2, 3):
        point = grid_point_q(B.bar(), q, mu, 2)
        total = sum(f_skew(lam, (), xs, A, B, q) * f_dual(lam, (), point, B.bar(), A.bar(), q)
                    for lam in enumerate_partitions(2, sum(mu)))
        assert total == g_basis(mu, xs, A, B, q)


def test_h_value_examples():
    A, B, q, _ = seqs(7)
    assert h_value((), A, B, 2, q) == 1
    assert h_value((1,), A, B, 1, q) == -A[1] / B[0]
    assert h_value((1, 1), A, B, 2, q) == f_skew((1, 1), (), grid_point_q(A, q, (1, 1), 2), A, B, q)


def test_vanishing_examples():
    A, B, q, _ = seqs(8)
    assert f_skew((2,), (), grid_point_q(A, q, (1,), 1), A, B, q) == 0
    assert f_skew((1,), (), grid_point_q(A, q, (1,), 1), A, B, q) == -A[1] / B[0]
    for mu in enumerate_partitions(2, 3):
        assert f_skew((), (), grid_point_q(A, q, mu, 2), A, B, q) == 1


def test_vanishing_report_small():
    A, B, q, _ = seqs(9)
    rep = vanishing_report(2, 4, A, B, q)
    assert rep.passed
    nonzero = [k for k, v in rep.table.items() if v != 0]
    assert all(contains(mu, lam) for lam, mu in nonzero)
    assert len(nonzero) > len(rep.partitions)


def test_transition_examples():
    A, B, q, _ = seqs(10)
    tr = gf_transition(2, 3, A, B, q)
    assert tr.c((), ()) == 1
    assert tr.triangular() and tr.nonzero_diagonal()
    for mu in tr.partitions:
        assert tr.c(mu, mu) == f_dual(mu, (), grid_point_q(B.bar(), q, mu, 2), B.bar(), A.bar(), q)


@pytest.mark.parametrize("n,m,order", [(1, 1, 6), (2, 2, 8)])
def test_cauchy_examples(n, m, order):
    rep = check_cauchy(n, m, order)
    assert rep.passed
    assert () in rep.partitions and len(rep.partitions) > 1


def test_cauchy_constant_term():
    # The t^0 term is prod 1/(1 - a_i/b_j) from the (a_i/b_j; q) denominators.
    A = ParamSeq.of([Q(k + 2, 2 * k + 3) for k in range(7)], "A")
    B = ParamSeq.of([Q(-(3 * k + 4), k + 2) for k in range(7)], "B")
    rep = check_cauchy(2, 2, 4, A, B)
    expected = Q(1)
    for i in (1, 2):
        for j in (1, 2):
            expected /= 1 - A[i] / B[j]
    assert rep.lhs.coeff(0) == rep.rhs.coeff(0) == expected
    assert expected != 1


def test_cauchy_bound_widening():
    A = ParamSeq.of([Q(k + 2, 2 * k + 3) for k in range(6)], "A")
    B = ParamSeq.of([Q(-(3 * k + 4), k + 2) for k in range(6)], "B")
    args = (1, 2, A, B, [Q(3, 4)], [Q(-5, 3), Q(-7, 5)], Q(3, 5), 6)
    base = adaptive(lambda: cauchy_sides(*args)[:2], 6)[0]
    wide = adaptive(lambda: cauchy_sides(*args, first_max=whittaker.cauchy_bound(6, 1, 2) + 3)[:2], 6)[0]
    assert series_equal_mod(base, wide, 6)


@pytest.mark.parametrize("mu,nu", [((1,), ()), ((), (1,)), ((1,), (1,)), ((2,), (1,))])
def test_skew_cauchy(mu, nu):
    A = ParamSeq.of([Q(k + 2, 2 * k + 3) for k in range(8)], "A")
    B = ParamSeq.of([Q(-(3 * k + 4), k + 2) for k in range(8)], "B")
    order = 5
    lhs, rhs = adaptive(lambda: skew_cauchy_sides(mu, nu, 1, 1, A, B, [Q(3, 4)], [Q(-5, 3)], Q(3, 5), order),
                        order)
    assert series_equal_mod(lhs, rhs, order)
    wide = adaptive(lambda: skew_cauchy_sides(mu, nu, 1, 1, A, B, [Q(3, 4)], [Q(-5, 3)], Q(3, 5), order,
                                              first_max=12)[:1], order)[0]
    assert series_equal_mod(lhs, wide, order)


def test_cauchy_detects_wrong_dual(monkeypatch):
    real = whittaker.f_dual
    monkeypatch.setattr(whittaker, "f_dual", lambda lam, mu, ys, A, B, q: real(lam, mu, ys, A.shift(), B, q))
    assert not check_cauchy(1, 1, 4).passed
