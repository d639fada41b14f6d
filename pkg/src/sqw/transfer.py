"""Rank-one row transfer matrices, the row operators B and B*, and their identities."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from .partitions import ParamSeq, interlaces, interlacing_above, interlacing_below, part
from .qkit import q_factorial, q_pochhammer, q_pochhammer_inf, shifted_product
from .scalar import Q, TruncSeries, adaptive, series_equal_mod
from .weights import phi, r_matrix


def _row_labels(lam: Sequence[int], n: int) -> List[int]:
    return [part(lam, r) - part(lam, r + 1) for r in range(1, n + 1)]


def tb_element(x, A: ParamSeq, B: ParamSeq, I: int, L: int,
               bra: Sequence[int], ket: Sequence[int], N: int, q):
    """<bra| T^b_{I,L}(x | A, B) |ket> on N sites.

    The ket labels J_r and bra labels K_r fix the horizontal labels
    L_r = I + J_[1,r] - K_[1,r]; there is at most one configuration.
    """
    if len(bra) > N or len(ket) > N:
        raise ValueError("partition longer than the number of sites")
    J = _row_labels(ket, N)
    K = _row_labels(bra, N)
    value = Q(1)
    left = I
    for r in range(1, N + 1):
        right = left + J[r - 1] - K[r - 1]
        if right < 0:
            return Q(0)
        if J[r - 1] < right:
            return Q(0)
        # W^b_{a_{r+1}, x, b_r}(left, J_r, K_r, right)
        value = value * phi(right, J[r - 1] - right, A[r + 1] / x, x / B[r], q)
        left = right
    if left != L:
        return Q(0)
    return value


def ta_element(y, A: ParamSeq, B: ParamSeq, K: int, J: int,
               bra: Sequence[int], ket: Sequence[int], N: int, q):
    """<bra| T^a_{K,J}(y | A, B) |ket> on N sites; ket gives I_r, bra gives L_r."""
    if len(bra) > N or len(ket) > N:
        raise ValueError("partition longer than the number of sites")
    I = _row_labels(ket, N)
    Lb = _row_labels(bra, N)
    value = Q(1)
    left = K
    scale = y / B[0]
    for r in range(1, N + 1):
        right = left + Lb[r - 1] - I[r - 1]
        if right < 0:
            return Q(0)
        if I[r - 1] < left:
            return Q(0)
        # W^a_{a_r, y, b_r}(I_r, J_r, J_{r-1}, L_r)
        value = value * scale ** (-I[r - 1]) * phi(I[r - 1] - left, left, A[r] / y, y / B[r], q)
        left = right
    if left != J:
        return Q(0)
    return value


def b_element(x, A: ParamSeq, B: ParamSeq, bra: Sequence[int], ket: Sequence[int], q, N: Optional[int] = None):
    """<bra| B(x | A, B) |ket>, zero unless ket interlaces below bra."""
    lam, mu = tuple(bra), tuple(ket)
    if not interlaces(lam, mu):
        return Q(0)
    r = part(lam, 1) - part(mu, 1)
    if N is None:
        N = max(len(lam), len(mu))
    pref = shifted_product(x, A[1], q, r) / (B[0] ** r * q_factorial(q, r))
    return pref * tb_element(x, A, B, r, 0, lam, mu, N, q)


def b_star_element(y, A: ParamSeq, B: ParamSeq, bra: Sequence[int], ket: Sequence[int], q, N: Optional[int] = None):
    """<bra| B*(y | A, B) |ket> from the T^a transfer matrix; bra lies below ket."""
    mu, lam = tuple(bra), tuple(ket)
    if not interlaces(lam, mu):
        return Q(0)
    if N is None:
        N = max(len(lam), len(mu))
    return ta_element(y, A, B, part(lam, 1) - part(mu, 1), 0, mu, lam, N, q)


def psi(lam: Sequence[int], A: ParamSeq, B: ParamSeq, q):
    """Duality coefficient psi_lambda(A, B)."""
    value = Q(1)
    for r in range(0, len(lam)):
        value = value * (B[r] / A[r]) ** part(lam, r + 1)
    for r in range(1, len(lam) + 1):
        k = part(lam, r) - part(lam, r + 1)
        value = value * q_factorial(q, k) / q_pochhammer(A[r] / B[r], q, k)
    return value


def b_star_element_dual(y, A: ParamSeq, B: ParamSeq, bra: Sequence[int], ket: Sequence[int], q):
    """Second route to <bra|B*(y|A,B)|ket>, through B with inverted and swapped sequences."""
    mu, lam = tuple(bra), tuple(ket)
    ratio = psi(lam, A, B, q) / psi(mu, A, B.shift(), q)
    return ratio * b_element(1 / y, B.bar(), A.bar(), lam, mu, q)


def ta_element_dual(y, A: ParamSeq, B: ParamSeq, K: int, bra: Sequence[int], ket: Sequence[int], N: int, q):
    """<bra|T^a_{K,0}(y|A,B)|ket> computed from T^b with inverted and swapped sequences."""
    mu, lam = tuple(bra), tuple(ket)
    pref = (A[0] / y) ** K * q_pochhammer(y / B[1], q, K) / q_factorial(q, K)
    ratio = psi(lam, A, B, q) / psi(mu, A, B.shift(), q)
    return pref * ratio * tb_element(1 / y, B.bar(), A.bar(), K, 0, lam, mu, N, q)


# graded identities ---------------------------------------------------------------

@dataclass
class SeriesCheck:
    """Outcome of comparing two truncated series."""

    lhs: TruncSeries
    rhs: TruncSeries
    order: int
    terms: int = 0
    passed: bool = field(init=False)

    def __post_init__(self):
        self.passed = series_equal_mod(self.lhs, self.rhs, self.order)

    def __bool__(self) -> bool:
        return self.passed


def graded_point(xh, yh, qh):
    """x = t*xh, y = 1/(t*yh), q = t*qh as exact Laurent monomials."""
    x = TruncSeries.monomial(xh, 1)
    y = TruncSeries.monomial(1 / Q(yh), -1)
    qs = TruncSeries.monomial(qh, 1)
    return x, y, qs


def gauss_factor(a, b, x, y, q, order: int):
    """(a/y;q)_inf (x/b;q)_inf / ((a/b;q)_inf (x/y;q)_inf) through t^order."""
    num = q_pochhammer_inf(a / y, q, order) * q_pochhammer_inf(x / b, q, order)
    den = q_pochhammer_inf(a / b, q, order) * q_pochhammer_inf(x / y, q, order)
    return (num / den).truncate(order + 1)


def qgauss_sides(J: int, L: int, a, b, xh, yh, qh, order: int, i_max: Optional[int] = None):
    x, y, q = graded_point(xh, yh, qh)
    if i_max is None:
        i_max = order + 2 + L + J
    lhs = TruncSeries.const(0)
    terms = 0
    for I in range(max(0, L - J), i_max + 1):
        K = I + J - L
        term = ((x / y) ** I * shifted_product(x, a, q, I) / (x ** I * q_factorial(q, I))
                * r_matrix(a, x, y, b, q, I, J, K, L))
        lhs = lhs + term
        terms += 1
    rhs = (gauss_factor(a, b, x, y, q, order) * (x / b) ** L
           * shifted_product(x, a, q, L) / (x ** L * q_factorial(q, L)))
    return lhs, rhs, terms


def check_qgauss(J: int, L: int, a, b, order: int = 10, xh=None, yh=None, qh=None,
                 i_max: Optional[int] = None) -> SeriesCheck:
    """Summation identity for R weighted by (x/y)^I (a/x;q)_I/(q;q)_I, as series in t."""
    xh = Q(3, 2) if xh is None else xh
    yh = Q(-2, 5) if yh is None else yh
    qh = Q(2, 7) if qh is None else qh
    res = {}

    def compute():
        lhs, rhs, n = qgauss_sides(J, L, Q(a), Q(b), Q(xh), Q(yh), Q(qh), order, i_max)
        res["n"] = n
        return lhs, rhs
    lhs, rhs = adaptive(compute, order)
    return SeriesCheck(lhs.truncate(order + 1), rhs.truncate(order + 1), order, res["n"])


def exchange_sides(mu, nu, A: ParamSeq, B: ParamSeq, xh, yh, qh, order: int,
                   first_max: Optional[int] = None):
    x, y, q = graded_point(xh, yh, qh)
    mu, nu = tuple(mu), tuple(nu)
    if first_max is None:
        first_max = (order + part(mu, 1) + part(nu, 1) + 2) // 2
    lhs = TruncSeries.const(0)
    terms = 0
    for lam in interlacing_above(mu, first_max):
        if not interlaces(lam, nu):
            continue
        lhs = lhs + b_star_element(y, A, B, nu, lam, q) * b_element(x, A, B, lam, mu, q)
        terms += 1
    rhs_sum = TruncSeries.const(0)
    for lam in interlacing_below(mu):
        if not interlaces(nu, lam):
            continue
        rhs_sum = rhs_sum + b_element(x, A, B.shift(), nu, lam, q) * b_star_element(y, A.shift(), B, lam, mu, q)
        terms += 1
    rhs = gauss_factor(A[1], B[1], x, y, q, order) * rhs_sum
    return lhs, rhs, terms


def check_exchange(mu, nu, order: int = 10, A: Optional[ParamSeq] = None, B: Optional[ParamSeq] = None,
                   xh=None, yh=None, qh=None, first_max: Optional[int] = None) -> SeriesCheck:
    """B* B against B B* exchange, compared as series in t."""
    n = max(len(mu), len(nu)) + 3
    A = A or ParamSeq.of([Q(k + 2, 3 * k + 5) for k in range(n)], "A")
    B = B or ParamSeq.of([Q(-(2 * k + 7), k + 3) for k in range(n)], "B")
    xh = Q(5, 3) if xh is None else xh
    yh = Q(-3, 4) if yh is None else yh
    qh = Q(4, 9) if qh is None else qh
    res = {}

    def compute():
        lhs, rhs, n_terms = exchange_sides(mu, nu, A, B, Q(xh), Q(yh), Q(qh), order, first_max)
        res["n"] = n_terms
        return lhs, rhs
    lhs, rhs = adaptive(compute, order)
    return SeriesCheck(lhs.truncate(order + 1), rhs.truncate(order + 1), order, res["n"])
