"""Exact linear solving over the rationals by fraction-free (Bareiss) elimination."""

from __future__ import annotations

from typing import List, Sequence

import gmpy2

from .errors import SingularSystem
from .scalar import Q


def _integer_rows(matrix: Sequence[Sequence], rhs: Sequence[Sequence]) -> List[List]:
    rows = []
    for row, extra in zip(matrix, rhs):
        vals = [Q(v) for v in row] + [Q(v) for v in extra]
        den = gmpy2.mpz(1)
        for v in vals:
            den = gmpy2.lcm(den, v.denominator)
        rows.append([gmpy2.mpz(v * den) for v in vals])
    return rows


def solve_many(matrix: Sequence[Sequence], rhs_columns: Sequence[Sequence]) -> List[List]:
    """Solve M X = B for square M; rhs_columns[k] is the k-th column of B."""
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("matrix is not square")
    k = len(rhs_columns)
    rhs_rows = [[col[i] for col in rhs_columns] for i in range(n)]
    rows = _integer_rows(matrix, rhs_rows)
    width = n + k
    prev = gmpy2.mpz(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if rows[r][c] != 0), None)
        if piv is None:
            raise SingularSystem(f"matrix is singular (no pivot in column {c})")
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
        p = rows[c][c]
        for r in range(c + 1, n):
            f = rows[r][c]
            rr = rows[r]
            pc = rows[c]
            for j in range(c + 1, width):
                rr[j] = (p * rr[j] - f * pc[j]) // prev
            rr[c] = gmpy2.mpz(0)
        prev = p
    out = [[Q(0)] * n for _ in range(k)]
    for col in range(k):
        x = [Q(0)] * n
        for i in range(n - 1, -1, -1):
            s = Q(rows[i][n + col])
            for j in range(i + 1, n):
                s -= rows[i][j] * x[j]
            x[i] = s / rows[i][i]
        out[col] = x
    return out


def solve(matrix: Sequence[Sequence], rhs: Sequence) -> List:
    return solve_many(matrix, [rhs])[0]


def rank(matrix: Sequence[Sequence]) -> int:
    rows = _integer_rows(matrix, [[] for _ in matrix])
    if not rows:
        return 0
    m = len(rows[0])
    r = 0
    prev = gmpy2.mpz(1)
    for c in range(m):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][c]
        for i in range(r + 1, len(rows)):
            f = rows[i][c]
            for j in range(c + 1, m):
                rows[i][j] = (p * rows[i][j] - f * rows[r][j]) // prev
            rows[i][c] = gmpy2.mpz(0)
        prev = p
        r += 1
    return r
