"""q-Pochhammer symbols and related products, generic over the scalar ring."""

from __future__ import annotations

from typing import Sequence

from .errors import BadSignature, DivergentProduct
from .scalar import INF, Q, TruncSeries, is_scalar


def q_pochhammer(x, q, n: int):
    """(x;q)_n for any integer n, with (x;q)_{-n} = 1/prod_{i=1}^{n}(1 - x q^{-i})."""
    result = Q(1)
    if n >= 0:
        step = Q(1)
        for _ in range(n):
            result = result * (1 - x * step)
            step = step * q
        return result
    qi = Q(1) / q if is_scalar(q) else 1 / q
    step = qi
    for _ in range(-n):
        result = result * (1 - x * step)
        step = step * qi
    return Q(1) / result if is_scalar(result) else 1 / result


def q_factorial(q, n: int):
    """(q;q)_n."""
    return q_pochhammer(q, q, n)


def shifted_product(x, a, q, k: int):
    """prod_{i<k} (x - a q^i), i.e. x^k (a/x;q)_k without dividing by x."""
    result = Q(1)
    step = Q(1)
    for _ in range(k):
        result = result * (x - a * step)
        step = step * q
    return result


def _valuation(x):
    if isinstance(x, TruncSeries):
        return x.valuation()
    if is_scalar(x):
        return INF if Q(x) == 0 else 0
    raise TypeError(f"cannot take valuation of {type(x).__name__}")


def q_pochhammer_inf(x, q, order: int) -> TruncSeries:
    """(x;q)_infinity through t^order; q must have positive valuation."""
    if _valuation(q) < 1:
        raise DivergentProduct("infinite product needs q with positive valuation")
    result = TruncSeries.const(1)
    term = x
    while _valuation(term) <= order:
        result = result * (1 - term)
        term = term * q
    if not isinstance(result, TruncSeries):
        result = TruncSeries.const(result)
    return result.truncate(order + 1)


def q_multinomial_ratio(top: int, bottoms: Sequence[int], q):
    """(q;q)_top / prod (q;q)_{b}, with the standard extension to negative labels.

    With at most one negative bottom b the ratio is rewritten as
    (q^{b+1};q)_{top-b} / prod_{others}(q;q), which vanishes when top >= 0.
    Two or more negative bottoms are rejected.
    """
    negative = [b for b in bottoms if b < 0]
    if len(negative) > 1:
        raise BadSignature(f"more than one negative label in {tuple(bottoms)}")
    if negative:
        b = negative[0]
        if top >= 0:
            return Q(0)
        others = list(bottoms)
        others.remove(b)
        if any(o < 0 for o in others):
            raise BadSignature(f"more than one negative label in {tuple(bottoms)}")
        num = q_pochhammer(q ** (b + 1), q, top - b)
        den = Q(1)
        for o in others:
            den = den * q_factorial(q, o)
        return num / den
    num = q_factorial(q, top)
    den = Q(1)
    for b in bottoms:
        den = den * q_factorial(q, b)
    return num / den
