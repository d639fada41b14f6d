"""Vertex weights Phi, W^a, W^b, R and the Yang-Baxter checkers."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Sequence, Tuple, Union

from .errors import BadSignature, SingularDenominator
from .qkit import q_multinomial_ratio, q_pochhammer
from .scalar import Q

Label = Union[int, Sequence[int]]


def _comp(x: Label) -> Tuple[int, ...]:
    return (x,) if isinstance(x, int) else tuple(x)


def _sub(x, y):
    return tuple(a - b for a, b in zip(x, y))


def _add(x, y):
    return tuple(a + b for a, b in zip(x, y))


def phi(X: Label, Y: Label, a, b, q):
    """Phi(X, Y; a, b) for compositions of equal rank."""
    X, Y = _comp(X), _comp(Y)
    if len(X) != len(Y):
        raise ValueError("compositions of different rank")
    for x, y in zip(X, Y):
        if x < 0 and y < 0:
            raise BadSignature(f"both entries negative in X={X}, Y={Y}")
    if all(x + y >= 0 for x, y in zip(X, Y)) and any(x < 0 or y < 0 for x, y in zip(X, Y)):
        return Q(0)
    sx, sy = sum(X), sum(Y)
    cross = sum(X[i] * Y[j] for i in range(len(X)) for j in range(i + 1, len(Y)))
    try:
        value = b ** sx * q ** cross
        value = value * q_pochhammer(a, q, sx) * q_pochhammer(b, q, sy)
        value = value / q_pochhammer(a * b, q, sx + sy)
        for x, y in zip(X, Y):
            value = value * q_multinomial_ratio(x + y, [x, y], q)
    except ZeroDivisionError as exc:
        raise SingularDenominator(f"Phi({X}, {Y}) has a vanishing denominator") from exc
    return value


@dataclass(frozen=True)
class WeightContext:
    """Spectral parameters of one vertex; only the ones a weight uses need be set."""

    q: object
    a1: object = None
    a2: object = None
    b1: object = None
    b2: object = None


def wa(a1, a2, b1, q, I: Label, J: Label, K: Label, L: Label):
    """W^a_{a1,a2,b1}(I,J,K,L)."""
    I, J, K, L = map(_comp, (I, J, K, L))
    if _add(I, J) != _add(K, L):
        return Q(0)
    return phi(_sub(I, K), K, a1 / a2, a2 / b1, q)


def wb(a2, b1, b2, q, I: Label, J: Label, K: Label, L: Label):
    """W^b_{a2,b1,b2}(I,J,K,L)."""
    I, J, K, L = map(_comp, (I, J, K, L))
    if _add(I, J) != _add(K, L):
        return Q(0)
    return phi(L, _sub(J, L), a2 / b1, b1 / b2, q)


def _box(upper: Sequence[int]) -> Iterator[Tuple[int, ...]]:
    return product(*(range(0, u + 1) for u in upper))


def r_matrix(a1, b1, a2, b2, q, I: Label, J: Label, K: Label, L: Label, form: int = 1):
    """R_{a1,b1,a2,b2}(I,J,K,L) as one of its two P-sums."""
    I, J, K, L = map(_comp, (I, J, K, L))
    if _add(I, J) != _add(K, L):
        return Q(0)
    total = Q(0)
    if form == 1:
        for P in _box([min(j, l) for j, l in zip(J, L)]):
            total = total + (phi(_sub(L, P), K, a1 / a2, a2 / b2, q)
                             * phi(P, _sub(J, P), a2 / b1, b1 / b2, q))
    elif form == 2:
        for P in _box([min(i, k) for i, k in zip(I, K)]):
            total = total + (phi(L, _sub(K, P), a1 / b1, b1 / b2, q)
                             * phi(_sub(I, P), P, a1 / a2, a2 / b1, q))
    else:
        raise ValueError(f"unknown R form {form!r}")
    return total


def weight_wa(ctx: WeightContext, I: Label, J: Label, K: Label, L: Label):
    return wa(ctx.a1, ctx.a2, ctx.b1, ctx.q, I, J, K, L)


def weight_wb(ctx: WeightContext, I: Label, J: Label, K: Label, L: Label):
    return wb(ctx.a2, ctx.b1, ctx.b2, ctx.q, I, J, K, L)


def weight_r(ctx: WeightContext, I: Label, J: Label, K: Label, L: Label, form: int = 1):
    return r_matrix(ctx.a1, ctx.b1, ctx.a2, ctx.b2, ctx.q, I, J, K, L, form)


# Yang-Baxter checks ------------------------------------------------------------
#
# Both identities share one label layout.  The boundary is (A1, A2, A3) on one
# side and (B1, B2, B3) on the other; three internal labels C1, C2, C3 are
# fixed by conservation once C2 is chosen.

@dataclass(frozen=True)
class YBEResult:
    lhs: object
    rhs: object

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs

    def __bool__(self) -> bool:
        return self.passed


def _left_labels(A, B):
    """(C1, C2, C3) for the left arrangement."""
    A1, A2, A3 = A
    B1, B2, B3 = B
    for C2 in range(A2 + A3 + 1):
        C3 = A2 + A3 - C2
        C1 = B1 + B2 - C2
        if C1 < 0 or A1 + C3 != B3 + C1:
            continue
        yield C1, C2, C3


def _right_labels(A, B):
    A1, A2, A3 = A
    B1, B2, B3 = B
    for C2 in range(A1 + A2 + 1):
        C1 = A1 + A2 - C2
        C3 = B2 + B3 - C2
        if C3 < 0 or C1 + A3 != C3 + B1:
            continue
        yield C1, C2, C3


def check_ybe_bbb(params: dict, A: Sequence[int], B: Sequence[int]) -> YBEResult:
    """Three W^b vertices on each side, params keys a1..a3, b1..b3, q."""
    p = params
    a1, a2, a3, b1, b2, b3, q = (p[k] for k in ("a1", "a2", "a3", "b1", "b2", "b3", "q"))
    A1, A2, A3 = A
    B1, B2, B3 = B
    lhs = Q(0)
    for C1, C2, C3 in _left_labels(A, B):
        lhs = lhs + (wb(a3, b1, b2, q, C1, C2, B2, B1)
                     * wb(a2, b1, b3, q, A1, C3, B3, C1)
                     * wb(a3, b2, b3, q, A2, A3, C3, C2))
    rhs = Q(0)
    for C1, C2, C3 in _right_labels(A, B):
        rhs = rhs + (wb(a2, b2, b3, q, C2, C3, B3, B2)
                     * wb(a3, b1, b3, q, C1, A3, C3, B1)
                     * wb(a2, b1, b2, q, A1, A2, C2, C1))
    return YBEResult(lhs, rhs)


def check_ybe_mixed(params: dict, A: Sequence[int], B: Sequence[int]) -> YBEResult:
    """W^b, R, W^a on the left against W^a, R, W^b on the right."""
    p = params
    a1, a2, a3, b1, b2, b3, q = (p[k] for k in ("a1", "a2", "a3", "b1", "b2", "b3", "q"))
    A1, A2, A3 = A
    B1, B2, B3 = B
    lhs = Q(0)
    for C1, C2, C3 in _left_labels(A, B):
        lhs = lhs + (wb(a2, b1, b3, q, C1, C2, B2, B1)
                     * r_matrix(a1, b1, a3, b2, q, A1, C3, B3, C1)
                     * wa(a2, a3, b2, q, A2, A3, C3, C2))
    rhs = Q(0)
    for C1, C2, C3 in _right_labels(A, B):
        rhs = rhs + (wa(a1, a3, b2, q, C2, C3, B3, B2)
                     * r_matrix(a2, b1, a3, b3, q, C1, A3, C3, B1)
                     * wb(a2, b1, b2, q, A1, A2, C2, C1))
    return YBEResult(lhs, rhs)
