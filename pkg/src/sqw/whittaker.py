"""Inhomogeneous spin q-Whittaker functions, their duals, and the identities they satisfy."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .linalg import solve_many
from .partitions import (ParamSeq, contains, enumerate_partitions, grid_point_q,
                         interlaces, interlacing_below, part, partitions_in_box)
from .poly import MPoly, SymPoly
from .qkit import q_factorial, q_pochhammer, q_pochhammer_inf, shifted_product
from .scalar import Q, TruncSeries, adaptive, series_equal_mod
from .transfer import b_star_element, psi


def symbolic(n: int) -> List[MPoly]:
    """Polynomial variables x_1..x_n for symbolic evaluation."""
    return MPoly.variables(n)


def f_one_var(lam: Sequence[int], mu: Sequence[int], x, A: ParamSeq, B: ParamSeq, q):
    """F_{lam/mu}(x | A, B) from the closed single-variable product."""
    lam, mu = tuple(lam), tuple(mu)
    if not interlaces(lam, mu):
        return Q(0)
    value = Q(1)
    for r in range(1, len(lam) + 1):
        up = part(lam, r) - part(mu, r)
        down = part(mu, r) - part(lam, r + 1)
        row = part(mu, r) - part(mu, r + 1)
        value = value * (shifted_product(x, A[r], q, up) * q_pochhammer(x / B[r], q, down)
                         * (q_factorial(q, row) / (B[r - 1] ** up * q_factorial(q, up) * q_factorial(q, down)
                                                  * q_pochhammer(A[r + 1] / B[r], q, row))))
    return value


OneVar = Callable[[Tuple[int, ...], Tuple[int, ...], object, int], object]


def branch(lam: Sequence[int], nu: Sequence[int], xs: Sequence, one_var: OneVar):
    """Sum over chains nu < ... < lam of products of single-variable factors.

    ``one_var(lam, mu, x, k)`` is the factor for the k-th variable (0-based),
    which is responsible for any parameter shift by k.
    """
    lam, nu = tuple(lam), tuple(nu)
    n = len(xs)
    if not contains(lam, nu) or len(lam) > len(nu) + n:
        return Q(0)
    memo: Dict[Tuple[Tuple[int, ...], int], object] = {}

    def rec(kappa: Tuple[int, ...], k: int):
        key = (kappa, k)
        if key in memo:
            return memo[key]
        if k == n:
            out = Q(1) if kappa == nu else Q(0)
        else:
            out = Q(0)
            left = n - k - 1
            for mu in interlacing_below(kappa):
                if not contains(mu, nu) or len(mu) > len(nu) + left:
                    continue
                tail = rec(mu, k + 1)
                if isinstance(tail, MPoly) and tail.is_zero():
                    continue
                if not isinstance(tail, MPoly) and tail == 0:
                    continue
                out = out + one_var(kappa, mu, xs[k], k) * tail
        memo[key] = out
        return out

    return rec(lam, 0)


def _finish(value, xs):
    if xs and isinstance(xs[0], MPoly):
        if not isinstance(value, MPoly):
            value = MPoly.const(value, xs[0].nvars)
        return SymPoly.from_poly(value)
    return value


def f_skew_raw(lam: Sequence[int], nu: Sequence[int], xs: Sequence, A: ParamSeq, B: ParamSeq, q):
    """The branching sum as a plain polynomial, before any symmetry is assumed."""
    return branch(lam, nu, xs, lambda k1, k2, x, k: f_one_var(k1, k2, x, A.shift(k), B, q))


def f_skew(lam: Sequence[int], nu: Sequence[int], xs: Sequence, A: ParamSeq, B: ParamSeq, q):
    """F_{lam/nu}(x_1..x_n | A, B) by branching; symbolic variables give a SymPoly."""
    return _finish(f_skew_raw(lam, nu, xs, A, B, q), xs)


def f_dual(lam: Sequence[int], mu: Sequence[int], ys: Sequence, A: ParamSeq, B: ParamSeq, q):
    """F*_{lam/mu}(y_1..y_m | A, B) = psi_lam(A,B)/psi_mu(tau^m A, B) F_{lam/mu}."""
    ratio = psi(lam, A, B, q) / psi(mu, A.shift(len(ys)), B, q)
    return f_skew(lam, mu, ys, A, B, q) * ratio


def f_dual_via_rows(lam: Sequence[int], mu: Sequence[int], ys: Sequence, A: ParamSeq, B: ParamSeq, q):
    """F*_{lam/mu}(y | B-bar, A-bar) as a product of B* matrix elements.

    Note the argument order: the result is the dual function with swapped,
    inverted sequences, computed from row operators over (A, B).
    """
    lam, mu = tuple(lam), tuple(mu)
    m = len(ys)
    if not contains(lam, mu):
        return Q(0)
    # apply B*(y_1^{-1}|A,B) first to |lam>, then B*(y_2^{-1}|A,tau B), ...
    states: Dict[Tuple[int, ...], object] = {lam: Q(1)}
    for j in range(m):
        nxt: Dict[Tuple[int, ...], object] = {}
        for kappa, coeff in states.items():
            for nu in interlacing_below(kappa):
                if not contains(nu, mu):
                    continue
                w = b_star_element(1 / ys[j], A, B.shift(j), nu, kappa, q)
                nxt[nu] = nxt.get(nu, Q(0)) + coeff * w
        states = nxt
    return states.get(mu, Q(0))


def g_basis(mu: Sequence[int], xs: Sequence, A: ParamSeq, B: ParamSeq, q):
    """G^n_mu(x_1..x_n | A, B) with n = len(xs)."""
    value = Q(1)
    for i, x in enumerate(xs, start=1):
        for r in range(1, len(mu) + 1):
            k = part(mu, r) - part(mu, r + 1)
            value = value * q_pochhammer(x / B[r], q, k) / q_pochhammer(A[i] / B[r], q, k)
    return _finish(value, xs)


def h_value(lam: Sequence[int], A: ParamSeq, B: ParamSeq, n: int, q):
    """H_lam(A, B): the value of F_lam at its own grid point."""
    l1 = part(lam, 1)
    value = Q(-1) ** l1 * q ** (l1 * (l1 - 1) // 2)
    for i in range(1, n + 1):
        value = value * (A[i] / B[i - 1]) ** part(lam, i)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            k = part(lam, j + i) - part(lam, j + i + 1)
            if k == 0:
                continue
            z = q ** (part(lam, i + 1) - part(lam, i)) * A[j + i] / A[i]
            value = value * q_pochhammer(z, q, k) / q_pochhammer(A[j + i] / B[j], q, k)
    return value


# reports ------------------------------------------------------------------------

@dataclass
class CauchyReport:
    n: int
    m: int
    order: int
    lhs: TruncSeries
    rhs: TruncSeries
    partitions: List[Tuple[int, ...]]
    passed: bool = field(init=False)

    def __post_init__(self):
        self.passed = series_equal_mod(self.lhs, self.rhs, self.order)

    def __bool__(self) -> bool:
        return self.passed


def cauchy_bound(order: int, n: int, m: int) -> int:
    """Largest lambda_1 whose Cauchy term can reach t^order."""
    return (order + n + m) // 2


def cauchy_factor(A: ParamSeq, B: ParamSeq, xs, ys, q, order: int):
    prod = TruncSeries.const(1)
    for i, x in enumerate(xs, start=1):
        for j, y in enumerate(ys, start=1):
            num = q_pochhammer_inf(A[i] * y, q, order) * q_pochhammer_inf(x / B[j], q, order)
            den = q_pochhammer_inf(x * y, q, order) * q_pochhammer_inf(A[i] / B[j], q, order)
            prod = prod * num / den
    return prod


def cauchy_sides(n: int, m: int, A: ParamSeq, B: ParamSeq, xh: Sequence, yh: Sequence, qh, order: int,
                 first_max: Optional[int] = None):
    t = TruncSeries.t()
    xs = [t * v for v in xh]
    ys = [t * v for v in yh]
    q = t * qh
    if first_max is None:
        first_max = cauchy_bound(order, n, m)
    lhs = TruncSeries.const(0)
    used = []
    Bbar, Abar = B.bar(), A.bar()
    for lam in partitions_in_box(min(n, m), first_max):
        term = f_skew(lam, (), xs, A, B, q) * f_dual(lam, (), ys, Bbar, Abar, q)
        if isinstance(term, TruncSeries) and term.is_zero() and term.is_exact:
            continue
        lhs = lhs + term
        used.append(lam)
    rhs = cauchy_factor(A, B, xs, ys, q, order)
    return lhs, rhs, used


def check_cauchy(n: int, m: int, order: int = 8, A: Optional[ParamSeq] = None, B: Optional[ParamSeq] = None,
                 xh: Optional[Sequence] = None, yh: Optional[Sequence] = None, qh=None,
                 first_max: Optional[int] = None) -> CauchyReport:
    """Cauchy identity under x, y, q -> t*x, t*y, t*q, compared through t^order."""
    size = n + m + 3
    A = A or ParamSeq.of([Q(k + 2, 2 * k + 3) for k in range(size)], "A")
    B = B or ParamSeq.of([Q(-(3 * k + 4), k + 2) for k in range(size)], "B")
    xh = xh or [Q(2 * i + 3, i + 4) for i in range(n)]
    yh = yh or [Q(-(i + 5), 2 * i + 3) for i in range(m)]
    qh = Q(3, 5) if qh is None else qh
    res = {}

    def compute():
        lhs, rhs, used = cauchy_sides(n, m, A, B, [Q(v) for v in xh], [Q(v) for v in yh], Q(qh), order, first_max)
        res["used"] = used
        return lhs, rhs
    lhs, rhs = adaptive(compute, order)
    return CauchyReport(n, m, order, lhs.truncate(order + 1), rhs.truncate(order + 1), res["used"])


def skew_cauchy_sides(mu, nu, n: int, m: int, A: ParamSeq, B: ParamSeq, xh, yh, qh, order: int,
                      first_max: Optional[int] = None):
    """Both sides of the skew Cauchy identity as series in t."""
    t = TruncSeries.t()
    xs = [t * v for v in xh]
    ys = [t * v for v in yh]
    q = t * qh
    mu, nu = tuple(mu), tuple(nu)
    if first_max is None:
        first_max = cauchy_bound(order, n, m) + part(mu, 1) + part(nu, 1)
    Bbar, Abar = B.bar(), A.bar()
    lhs = TruncSeries.const(0)
    for lam in partitions_in_box(max(len(mu) + n, len(nu) + m), first_max):
        if not (contains(lam, mu) and contains(lam, nu)):
            continue
        lhs = lhs + f_skew(lam, mu, xs, A, B, q) * f_dual(lam, nu, ys, Bbar, Abar, q)
    rhs_sum = TruncSeries.const(0)
    for lam in partitions_in_box(min(len(mu), len(nu)), min(part(mu, 1), part(nu, 1))):
        if not (contains(mu, lam) and contains(nu, lam)):
            continue
        rhs_sum = rhs_sum + (f_dual(mu, lam, ys, Bbar, Abar.shift(n), q)
                             * f_skew(nu, lam, xs, A, B.shift(m), q))
    rhs = cauchy_factor(A, B, xs, ys, q, order) * rhs_sum
    return lhs, rhs


@dataclass
class VanishingReport:
    n: int
    max_weight: int
    partitions: List[Tuple[int, ...]]
    table: Dict[Tuple[Tuple[int, ...], Tuple[int, ...]], object]
    violations: List[Tuple[Tuple[int, ...], Tuple[int, ...]]]

    @property
    def passed(self) -> bool:
        return not self.violations


def vanishing_report(n: int, max_weight: int, A: ParamSeq, B: ParamSeq, q) -> VanishingReport:
    """Evaluate F_lam at x^n_A(mu) over |lam|, |mu| <= max_weight.

    Flags entries that are nonzero off containment and diagonal entries
    that differ from H_lam or vanish.
    """
    parts = list(enumerate_partitions(n, max_weight))
    table = {}
    bad = []
    for mu in parts:
        point = grid_point_q(A, q, mu, n)
        for lam in parts:
            v = f_skew(lam, (), point, A, B, q)
            table[(lam, mu)] = v
            if lam == mu:
                if v == 0 or v != h_value(lam, A, B, n, q):
                    bad.append((lam, mu))
            elif not contains(mu, lam) and v != 0:
                bad.append((lam, mu))
    return VanishingReport(n, max_weight, parts, table, bad)


@dataclass
class Transition:
    partitions: List[Tuple[int, ...]]
    coeffs: Dict[Tuple[Tuple[int, ...], Tuple[int, ...]], object]

    def c(self, lam, mu):
        return self.coeffs[(tuple(lam), tuple(mu))]

    def triangular(self) -> bool:
        return all(v == 0 for (lam, mu), v in self.coeffs.items() if not contains(mu, lam))

    def nonzero_diagonal(self) -> bool:
        return all(self.coeffs[(mu, mu)] != 0 for mu in self.partitions)


def gf_transition(n: int, max_weight: int, A: ParamSeq, B: ParamSeq, q) -> Transition:
    """Coefficients c_{lam,mu} with G^n_mu = sum_lam c_{lam,mu} F_lam.

    For each mu the values G_mu(x^n_A(nu)) are matched against
    sum_lam c_lam F_lam(x^n_A(nu)) over |nu| <= max_weight and the system is
    solved exactly by general elimination; triangularity of the result is
    checked afterwards, not assumed.
    """
    parts = list(enumerate_partitions(n, max_weight))
    points = [grid_point_q(A, q, nu, n) for nu in parts]
    matrix = [[f_skew(lam, (), pt, A, B, q) for lam in parts] for pt in points]
    columns = [[g_basis(mu, pt, A, B, q) for pt in points] for mu in parts]
    coeffs = {}
    for mu, sol in zip(parts, solve_many(matrix, columns)):
        for lam, c in zip(parts, sol):
            coeffs[(lam, mu)] = c
    return Transition(parts, coeffs)
