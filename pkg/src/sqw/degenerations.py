"""The B -> infinity family F-tilde and its q -> 1 limit F^el."""

from __future__ import annotations

from math import factorial
from typing import Sequence

from .partitions import ParamSeq, interlaces, part
from .qkit import q_factorial, q_pochhammer, shifted_product
from .scalar import Q
from .whittaker import _finish, branch


def f_tilde_one_var(lam: Sequence[int], mu: Sequence[int], x, A: ParamSeq, q):
    lam, mu = tuple(lam), tuple(mu)
    if not interlaces(lam, mu):
        return Q(0)
    value = Q(1)
    for r in range(1, len(lam) + 1):
        up = part(lam, r) - part(mu, r)
        down = part(mu, r) - part(lam, r + 1)
        row = part(mu, r) - part(mu, r + 1)
        value = value * shifted_product(x, A[r], q, up) * (
            q_factorial(q, row) / (q_factorial(q, up) * q_factorial(q, down)))
    return value


def f_tilde(lam: Sequence[int], mu: Sequence[int], xs: Sequence, A: ParamSeq, q):
    """F-tilde_{lam/mu}(x_1..x_n | A, infinity)."""
    value = branch(lam, mu, xs, lambda k1, k2, x, k: f_tilde_one_var(k1, k2, x, A.shift(k), q))
    return _finish(value, xs)


def h_tilde(lam: Sequence[int], A: ParamSeq, q, n: int):
    """Value of F-tilde_lam at its own grid point x^n_A(lam)."""
    l1 = part(lam, 1)
    value = Q(-1) ** l1 * q ** ((l1 * l1 - l1) // 2)
    for i in range(1, n + 1):
        value = value * A[i] ** part(lam, i)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            k = part(lam, j + i) - part(lam, j + i + 1)
            if k:
                value = value * q_pochhammer(q ** (part(lam, i + 1) - part(lam, i)) * A[j + i] / A[i], q, k)
    return value


def f_el_one_var(lam: Sequence[int], mu: Sequence[int], r, C: ParamSeq, d):
    lam, mu = tuple(lam), tuple(mu)
    if not interlaces(lam, mu):
        return Q(0)
    value = Q(1)
    for i in range(1, len(lam) + 1):
        up = part(lam, i) - part(mu, i)
        down = part(mu, i) - part(lam, i + 1)
        row = part(mu, i) - part(mu, i + 1)
        for j in range(up):
            value = value * (r - C[i] - j * d)
        value = value * Q(factorial(row), factorial(up) * factorial(down))
    return value


def f_el(lam: Sequence[int], mu: Sequence[int], rs: Sequence, C: ParamSeq, d):
    """F^el_{lam/mu}(r_1..r_n | C, infinity)."""
    value = branch(lam, mu, rs, lambda k1, k2, r, k: f_el_one_var(k1, k2, r, C.shift(k), d))
    return _finish(value, rs)


def h_el(lam: Sequence[int], C: ParamSeq, d, n: int):
    """Value of F^el_lam at its own grid point r^n_C(lam)."""
    value = Q(-1) ** sum(lam) * (-Q(d)) ** part(lam, 1)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            for k in range(1, part(lam, i + j) - part(lam, i + j + 1) + 1):
                value = value * (C[j + i] - C[i] + d * (part(lam, i + 1) - part(lam, i) + k - 1))
    return value


# top-degree oracles ------------------------------------------------------------

def qwhittaker_branching(lam: Sequence[int], xs: Sequence, q):
    """Symmetric function built from the a-free top term of the F-tilde one-variable weight.

    Its single-variable weight is x^{|lam|-|mu|} prod (q;q)_{mu_r - mu_{r+1}}
    / ((q;q)_{lam_r - mu_r} (q;q)_{mu_r - lam_{r+1}}), the Q-normalised q-Whittaker
    branching coefficient.
    """
    def weight(k1, k2, x, k):
        value = x ** (sum(k1) - sum(k2))
        for r in range(1, len(k1) + 1):
            up = part(k1, r) - part(k2, r)
            down = part(k2, r) - part(k1, r + 1)
            row = part(k2, r) - part(k2, r + 1)
            value = value * q_factorial(q, row) / (q_factorial(q, up) * q_factorial(q, down))
        return value
    return _finish(branch(lam, (), xs, weight), xs)


def qwhittaker_p(lam: Sequence[int], xs: Sequence, q):
    """Monic q-Whittaker polynomial P_lam(x; q, 0) from the classical psi branching coefficients."""
    def weight(k1, k2, x, k):
        value = x ** (sum(k1) - sum(k2))
        for r in range(1, len(k1) + 1):
            value = value * q_factorial(q, part(k1, r) - part(k1, r + 1)) / (
                q_factorial(q, part(k1, r) - part(k2, r)) * q_factorial(q, part(k2, r) - part(k1, r + 1)))
        return value
    return _finish(branch(lam, (), xs, weight), xs)


def q_norm(lam: Sequence[int], q):
    """b_lam(q) = prod 1/(q;q)_{lam_i - lam_{i+1}}, the ratio Q_lam / P_lam at t = 0."""
    value = Q(1)
    for i in range(1, len(lam) + 1):
        value = value / q_factorial(q, part(lam, i) - part(lam, i + 1))
    return value


def gap_factorials(lam: Sequence[int]) -> int:
    """prod (lam_i - lam_{i+1})!."""
    out = 1
    for i in range(1, len(lam) + 1):
        out *= factorial(part(lam, i) - part(lam, i + 1))
    return out
