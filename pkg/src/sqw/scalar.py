"""Exact scalars: rationals and truncated Laurent series in one variable t."""

from __future__ import annotations

import contextlib
import contextvars
import math
from fractions import Fraction
from typing import Iterable, Iterator, Sequence, Union

import gmpy2

from .errors import NotInvertible, PrecisionError

Rational = type(gmpy2.mpq())
INF = math.inf

_working_precision: contextvars.ContextVar[int] = contextvars.ContextVar(
    "working_precision", default=24
)


def Q(value, den=None) -> Rational:
    """Coerce ints, Fractions, mpq values and 'p/q' strings to an exact rational."""
    if den is not None:
        return gmpy2.mpq(value, den)
    if isinstance(value, Fraction):
        return gmpy2.mpq(value.numerator, value.denominator)
    if isinstance(value, float):
        raise TypeError("floats are not exact; pass a string or Fraction")
    return gmpy2.mpq(value)


def rational_str(x) -> str:
    return str(Q(x))


def is_scalar(x) -> bool:
    return isinstance(x, (int, Rational, Fraction))


@contextlib.contextmanager
def working_precision(prec: int) -> Iterator[None]:
    """Cap on the absolute precision of otherwise exact series that must be truncated."""
    token = _working_precision.set(prec)
    try:
        yield
    finally:
        _working_precision.reset(token)


def current_working_precision() -> int:
    return _working_precision.get()


class TruncSeries:
    """A Laurent series sum c_k t^k known modulo t^prec.

    ``prec`` is absolute (exponents >= prec are unknown) and may be ``INF``
    for exactly known finite series.  Coefficients are stored from the
    first nonzero one.
    """

    __slots__ = ("val", "coeffs", "prec", "_hash")

    def __init__(self, val: int, coeffs: Sequence, prec=INF):
        coeffs = [Q(c) for c in coeffs]
        if prec != INF:
            coeffs = coeffs[: max(0, prec - val)]
        start = 0
        while start < len(coeffs) and coeffs[start] == 0:
            start += 1
        end = len(coeffs)
        while end > start and coeffs[end - 1] == 0:
            end -= 1
        self.coeffs = tuple(coeffs[start:end])
        self.val = val + start if self.coeffs else (prec if prec != INF else 0)
        self.prec = prec
        self._hash = None

    # construction -----------------------------------------------------------
    @classmethod
    def from_coeffs(cls, coeffs: Sequence, order: int | None = None, val: int = 0) -> "TruncSeries":
        """Coefficients of t^val, t^(val+1), ...; known through t^order when given."""
        return cls(val, coeffs, INF if order is None else order + 1)

    @classmethod
    def const(cls, c, prec=INF) -> "TruncSeries":
        return cls(0, [c], prec)

    @classmethod
    def monomial(cls, c, k: int) -> "TruncSeries":
        return cls(k, [c])

    @classmethod
    def t(cls) -> "TruncSeries":
        return cls(1, [1])

    # inspection -------------------------------------------------------------
    @property
    def order(self):
        """Highest exponent that is known."""
        return self.prec - 1

    @property
    def is_exact(self) -> bool:
        return self.prec == INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def valuation(self):
        """Exponent of the lowest nonzero known term; a lower bound if all known terms vanish."""
        if not self.coeffs:
            return self.prec
        return self.val

    def coeff(self, k: int) -> Rational:
        if k >= self.prec:
            raise PrecisionError(f"coefficient of t^{k} unknown (precision {self.prec})")
        i = k - self.val
        if self.coeffs and 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Q(0)

    def coefficients(self, lo: int, hi: int) -> list:
        return [self.coeff(k) for k in range(lo, hi + 1)]

    def truncate(self, prec) -> "TruncSeries":
        if prec >= self.prec:
            return self
        return TruncSeries(self.val, self.coeffs, prec)

    def __repr__(self) -> str:
        if not self.coeffs:
            body = "0"
        else:
            body = " + ".join(f"({c})*t^{self.val + i}" for i, c in enumerate(self.coeffs) if c)
        tail = "" if self.prec == INF else f" + O(t^{self.prec})"
        return f"TruncSeries({body}{tail})"

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.val, self.coeffs, self.prec))
        return self._hash

    def __eq__(self, other) -> bool:
        """Structural equality: same known coefficients and same precision."""
        if is_scalar(other):
            other = TruncSeries.const(other)
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return (self.prec == other.prec and self.coeffs == other.coeffs
                and (not self.coeffs or self.val == other.val))

    # arithmetic ---------------------------------------------------------------
    @staticmethod
    def _coerce(x) -> "TruncSeries":
        if isinstance(x, TruncSeries):
            return x
        if is_scalar(x):
            return TruncSeries.const(x)
        return NotImplemented

    def __neg__(self) -> "TruncSeries":
        return TruncSeries(self.val, [-c for c in self.coeffs], self.prec)

    def __pos__(self) -> "TruncSeries":
        return self

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        prec = min(self.prec, other.prec)
        if not self.coeffs:
            return other.truncate(prec)
        if not other.coeffs:
            return self.truncate(prec)
        lo = min(self.val, other.val)
        hi = max(self.val + len(self.coeffs), other.val + len(other.coeffs))
        if prec != INF:
            hi = min(hi, prec)
        if hi <= lo:
            return TruncSeries(lo, [], prec)
        out = [Q(0)] * (hi - lo)
        for s in (self, other):
            off = s.val - lo
            for i, c in enumerate(s.coeffs):
                if off + i < len(out):
                    out[off + i] += c
        return TruncSeries(lo, out, prec)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if is_scalar(other):
            c = Q(other)
            if c == 0:
                return TruncSeries(0, [])
            return TruncSeries(self.val, [c * a for a in self.coeffs], self.prec)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self, other
        va, vb = a.valuation(), b.valuation()
        prec = min(va + b.prec, vb + a.prec)
        if not a.coeffs or not b.coeffs:
            return TruncSeries(0, [], prec)
        val = a.val + b.val
        if prec == INF:
            length = len(a.coeffs) + len(b.coeffs) - 1
            cap = current_working_precision()
            if val + length > cap and length > 1:
                # exact product too long: keep it truncated at the working cap
                prec = max(cap, val + 1)
                length = prec - val
        else:
            length = min(prec - val, len(a.coeffs) + len(b.coeffs) - 1)
        if length <= 0:
            return TruncSeries(val, [], prec)
        out = [Q(0)] * length
        ac, bc = a.coeffs, b.coeffs
        for i, x in enumerate(ac):
            if i >= length:
                break
            if not x:
                continue
            lim = min(len(bc), length - i)
            for j in range(lim):
                out[i + j] += x * bc[j]
        return TruncSeries(val, out, prec)

    __rmul__ = __mul__

    def inverse(self) -> "TruncSeries":
        """Laurent inverse; valuation -v and precision prec - 2v."""
        if not self.coeffs:
            raise NotInvertible("series is zero to known precision")
        v = self.val
        c0 = self.coeffs[0]
        if self.prec == INF and len(self.coeffs) == 1:
            return TruncSeries(-v, [1 / c0])
        if self.prec == INF:
            prec = max(current_working_precision(), -v + 1)
        else:
            prec = self.prec - 2 * v
        n = prec + v
        u = self.coeffs
        inv0 = 1 / c0
        out = [inv0]
        for k in range(1, n):
            s = Q(0)
            for j in range(1, min(k, len(u) - 1) + 1):
                s += u[j] * out[k - j]
            out.append(-s * inv0)
        return TruncSeries(-v, out, prec)

    def __truediv__(self, other):
        if is_scalar(other):
            c = Q(other)
            if c == 0:
                raise ZeroDivisionError("division by zero scalar")
            return self * (1 / c)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n: int) -> "TruncSeries":
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        if self.prec == INF and len(self.coeffs) == 1:
            return TruncSeries(self.val * n, [self.coeffs[0] ** n])
        result = TruncSeries.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def substitute_scale(self, c) -> "TruncSeries":
        """Return the series with t replaced by c*t."""
        c = Q(c)
        return TruncSeries(self.val, [a * c ** (self.val + i) for i, a in enumerate(self.coeffs)], self.prec)


def series_inv(a: TruncSeries) -> TruncSeries:
    """Inverse of a power series with nonzero constant term, to the same order."""
    if not isinstance(a, TruncSeries):
        a = TruncSeries.const(a)
    if not a.coeffs or a.val != 0:
        raise NotInvertible("constant term is zero")
    return a.inverse()


def series_equal_mod(a, b, order: int) -> bool:
    """True when a and b agree in every coefficient through t^order.

    Both must be known through t^order; otherwise PrecisionError.
    """
    a = TruncSeries._coerce(a)
    b = TruncSeries._coerce(b)
    for s in (a, b):
        if s.prec <= order:
            raise PrecisionError(f"series known only below t^{s.prec}, need t^{order}")
    lo = min(a.valuation() if a.coeffs else order + 1, b.valuation() if b.coeffs else order + 1)
    return all(a.coeff(k) == b.coeff(k) for k in range(lo, order + 1))


def min_precision(values: Iterable) -> float:
    p = INF
    for v in values:
        if isinstance(v, TruncSeries):
            p = min(p, v.prec)
    return p


def adaptive(compute, order: int, slack: int = 4, max_slack: int = 256):
    """Run ``compute`` under growing working precision until every series it
    returns is known through t^order.  ``compute`` returns an iterable of series.
    """
    while True:
        with working_precision(order + 1 + slack):
            result = compute()
        if min_precision(result) > order:
            return result
        if slack >= max_slack:
            raise PrecisionError(f"could not reach order {order} with slack {slack}")
        slack *= 2
