import pytest
from hypothesis import given, settings, strategies as st

import sqw.transfer as transfer
from sqw.partitions import ParamSeq, enumerate_partitions, interlaces
from sqw.sampling import Sampler
from sqw.scalar import Q
from sqw.transfer import (b_element, b_star_element, b_star_element_dual, check_exchange, check_qgauss,
                          exchange_sides, psi, qgauss_sides, ta_element, ta_element_dual, tb_element)
from sqw.scalar import adaptive, series_equal_mod


def seqs(seed, length=8):
    s = Sampler(seed)
    q = s.q()
    vals = s.generic([f"v{i}" for i in range(2 * length + 1)], q)
    v = list(vals.values())
    return ParamSeq.of(v[:length], "A"), ParamSeq.of(v[length:2 * length], "B"), q, v[-1]


def test_transfer_element_examples():
    A, B, q, x = seqs(1)
    assert tb_element(x, A, B, 0, 0, (), (), 1, q) == 1
    assert tb_element(x, A, B, 1, 0, (1,), (), 1, q) == 1
    assert tb_element(x, A, B, 1, 0, (1,), (1,), 1, q) == 0
    assert ta_element(x, A, B, 0, 0, (), (), 1, q) == 1


def test_b_examples():
    A, B, q, x = seqs(2)
    assert b_element(x, A, B, (), (), q) == 1
    assert b_element(x, A, B, (1,), (), q) == (x - A[1]) / (B[0] * (1 - q))
    assert b_element(x, A, B, (1, 1), (), q) == 0
    assert b_star_element(x, A, B, (), (), q) == 1
    assert b_star_element(x, A, B, (2,), (1,), q) == 0


def test_psi_examples():
    A, B, q, _ = seqs(3)
    assert psi((), A, B, q) == 1
    assert psi((1,), A, B, q) == (B[0] / A[0]) * (1 - q) / (1 - A[1] / B[1])
    for lam in enumerate_partitions(3, 4):
        assert psi(lam, A, B, q) == psi(lam, B.bar(), A.bar(), q)


@settings(max_examples=10)
@given(st.integers(0, 10_000))
def test_b_star_two_routes(seed):
    A, B, q, y = seqs(seed)
    parts = enumerate_partitions(3, 3)
    for lam in parts:
        for mu in parts:
            if not interlaces(lam, mu):
                continue
            try:
                direct = b_star_element(y, A, B, mu, lam, q)
                dual = b_star_element_dual(y, A, B, mu, lam, q)
            except ZeroDivisionError:
                continue
            assert direct == dual


def test_ta_duality_and_stability():
    A, B, q, y = seqs(7)
    parts = enumerate_partitions(3, 3)
    for lam in parts:
        for mu in parts:
            if not interlaces(lam, mu):
                continue
            K = (lam[0] if lam else 0) - (mu[0] if mu else 0)
            N = max(len(lam), len(mu))
            v = ta_element(y, A, B, K, 0, mu, lam, N, q)
            assert v == ta_element_dual(y, A, B, K, mu, lam, N, q)
            assert v == ta_element(y, A, B, K, 0, mu, lam, N + 3, q)
            assert b_element(y, A, B, lam, mu, q) == b_element(y, A, B, lam, mu, q, N=N + 3)


@pytest.mark.parametrize("J,L,order", [(0, 0, 8), (1, 0, 10), (0, 2, 12)])
def test_qgauss_examples(J, L, order):
    res = check_qgauss(J, L, Q(2, 3), Q(-5, 4), order)
    assert res.passed
    assert not res.lhs.is_zero()


def test_qgauss_bound_widening():
    a, b, xh, yh, qh = Q(2, 3), Q(-5, 4), Q(3, 2), Q(-2, 5), Q(2, 7)
    order = 8

    def run(i_max):
        return adaptive(lambda: qgauss_sides(1, 2, a, b, xh, yh, qh, order, i_max)[:2], order)
    base = run(None)[0]
    wide = run(order + 2 + 3 + 6)[0]
    assert series_equal_mod(base, wide, order)


@pytest.mark.parametrize("mu,nu,order", [((), (), 8), ((1,), (1,), 8), ((2, 1), (1, 1), 10)])
def test_exchange_examples(mu, nu, order):
    res = check_exchange(mu, nu, order)
    assert res.passed
    assert res.terms > 0


def test_exchange_nonvacuous():
    res = check_exchange((1,), (2,), 8)
    assert res.passed and not res.lhs.is_zero()


def test_exchange_bound_widening():
    A = ParamSeq.of([Q(k + 2, 3 * k + 5) for k in range(7)], "A")
    B = ParamSeq.of([Q(-(2 * k + 7), k + 3) for k in range(7)], "B")
    order = 8

    def run(first_max):
        return adaptive(lambda: exchange_sides((1,), (2,), A, B, Q(5, 3), Q(-3, 4), Q(4, 9), order,
                                               first_max)[:2], order)
    base = run(None)[0]
    wide = run((order + 3 + 2) // 2 + 4)[0]
    assert series_equal_mod(base, wide, order)


def test_exchange_detects_wrong_factor(monkeypatch):
    real = transfer.gauss_factor
    monkeypatch.setattr(transfer, "gauss_factor", lambda a, b, x, y, q, order: real(b, a, x, y, q, order))
    assert not check_exchange((1,), (2,), 6).passed
