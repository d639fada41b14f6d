"""Sparse multivariate polynomials and symmetric polynomials in monomial form."""

from __future__ import annotations

from itertools import permutations
from typing import Dict, Iterable, Mapping, Sequence, Tuple

from .errors import NotSymmetric
from .scalar import Q, Rational, is_scalar

Exponent = Tuple[int, ...]


def _distinct_perms(exps: Sequence[int]) -> set:
    return set(permutations(exps))


class MPoly:
    """Polynomial in ``nvars`` variables with rational coefficients."""

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Exponent, object] | None = None):
        self.nvars = nvars
        clean: Dict[Exponent, Rational] = {}
        for e, c in (terms or {}).items():
            c = Q(c)
            if c:
                clean[tuple(e)] = c
        self.terms = clean
        self._hash = None

    @classmethod
    def var(cls, i: int, nvars: int) -> "MPoly":
        """The variable with 0-based index i."""
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): 1})

    @classmethod
    def variables(cls, nvars: int) -> list:
        return [cls.var(i, nvars) for i in range(nvars)]

    @classmethod
    def const(cls, c, nvars: int) -> "MPoly":
        return cls(nvars, {(0,) * nvars: c})

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            mono = "*".join(f"x{i + 1}^{k}" if k > 1 else f"x{i + 1}" for i, k in enumerate(e) if k)
            parts.append(f"({self.terms[e]})" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def __eq__(self, other) -> bool:
        if is_scalar(other):
            other = MPoly.const(other, self.nvars)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.terms == other.terms

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def _coerce(self, other):
        if isinstance(other, MPoly):
            if other.nvars != self.nvars:
                raise ValueError("variable count mismatch")
            return other
        if is_scalar(other):
            return MPoly.const(other, self.nvars)
        return NotImplemented

    def __neg__(self) -> "MPoly":
        return MPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return MPoly(self.nvars, out)

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
            return MPoly(self.nvars, {e: c * v for e, v in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: Dict[Exponent, Rational] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MPoly(self.nvars, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if is_scalar(other):
            c = Q(other)
            if c == 0:
                raise ZeroDivisionError("division of a polynomial by zero")
            return self * (1 / c)
        if isinstance(other, MPoly) and other.degree() == 0:
            return self / other.terms[(0,) * self.nvars]
        return NotImplemented

    def __pow__(self, n: int) -> "MPoly":
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = MPoly.const(1, self.nvars)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def evaluate(self, point: Sequence):
        """Evaluate at a point whose entries may be any ring elements."""
        total = 0
        for e, c in self.terms.items():
            term = c
            for x, k in zip(point, e):
                if k:
                    term = term * x ** k
            total = total + term
        return total

    def substitute(self, images: Sequence) -> "MPoly":
        """Compose with polynomial images of each variable."""
        return self.evaluate(images)


class SymPoly:
    """Symmetric polynomial in ``nvars`` variables, stored as sum c_lambda m_lambda."""

    __slots__ = ("nvars", "coeffs")

    def __init__(self, nvars: int, coeffs: Mapping[Tuple[int, ...], object] | None = None):
        self.nvars = nvars
        clean = {}
        for lam, c in (coeffs or {}).items():
            lam = tuple(p for p in lam if p)
            if len(lam) > nvars:
                raise ValueError(f"partition {lam} longer than {nvars}")
            c = Q(c)
            if c:
                clean[lam] = clean.get(lam, 0) + c
        self.coeffs = {k: v for k, v in clean.items() if v}

    @classmethod
    def from_poly(cls, p: MPoly) -> "SymPoly":
        coeffs: Dict[Tuple[int, ...], Rational] = {}
        for e, c in p.terms.items():
            lam = tuple(sorted(e, reverse=True))
            if lam in coeffs:
                continue
            for perm in _distinct_perms(lam):
                if p.terms.get(perm, 0) != c:
                    raise NotSymmetric(f"coefficient of {perm} differs from {e}")
            coeffs[lam] = c
        return cls(p.nvars, coeffs)

    @classmethod
    def monomial(cls, lam: Sequence[int], nvars: int) -> "SymPoly":
        return cls(nvars, {tuple(lam): 1})

    def to_poly(self) -> MPoly:
        terms = {}
        for lam, c in self.coeffs.items():
            padded = tuple(lam) + (0,) * (self.nvars - len(lam))
            for perm in _distinct_perms(padded):
                terms[perm] = c
        return MPoly(self.nvars, terms)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "SymPoly(0)"
        items = sorted(self.coeffs.items(), key=lambda kv: (-sum(kv[0]), tuple(-p for p in kv[0])))
        return "SymPoly(" + " + ".join(f"({c})*m{list(lam)}" for lam, c in items) + ")"

    def __eq__(self, other) -> bool:
        if isinstance(other, SymPoly):
            return self.nvars == other.nvars and self.coeffs == other.coeffs
        if isinstance(other, MPoly):
            return self.to_poly() == other
        if is_scalar(other):
            return self == SymPoly(self.nvars, {(): other})
        return NotImplemented

    def __add__(self, other):
        if is_scalar(other):
            other = SymPoly(self.nvars, {(): other})
        if not isinstance(other, SymPoly):
            return NotImplemented
        out = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            out[lam] = out.get(lam, 0) + c
        return SymPoly(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> "SymPoly":
        return SymPoly(self.nvars, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other):
        if is_scalar(other):
            other = SymPoly(self.nvars, {(): other})
        if not isinstance(other, SymPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if is_scalar(other):
            return SymPoly(self.nvars, {k: Q(other) * v for k, v in self.coeffs.items()})
        if isinstance(other, SymPoly):
            return SymPoly.from_poly(self.to_poly() * other.to_poly())
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if is_scalar(other):
            return self * (1 / Q(other))
        return NotImplemented

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        return max((sum(lam) for lam in self.coeffs), default=-1)

    def coefficient(self, lam: Sequence[int]) -> Rational:
        return self.coeffs.get(tuple(p for p in lam if p), Q(0))

    def evaluate(self, point: Sequence):
        total = 0
        for lam, c in self.coeffs.items():
            padded = tuple(lam) + (0,) * (self.nvars - len(lam))
            for perm in _distinct_perms(padded):
                term = c
                for x, k in zip(point, perm):
                    if k:
                        term = term * x ** k
                total = total + term
        return total


def sympoly_top_component(p: SymPoly) -> SymPoly:
    """Homogeneous part of maximal total degree (zero stays zero)."""
    d = p.degree()
    return SymPoly(p.nvars, {lam: c for lam, c in p.coeffs.items() if sum(lam) == d})


def elementary(k: int, nvars: int) -> MPoly:
    terms = {}
    for perm in _distinct_perms((1,) * k + (0,) * (nvars - k)):
        terms[perm] = 1
    return MPoly(nvars, terms)


def conjugate_partition(lam: Sequence[int]) -> Tuple[int, ...]:
    lam = [p for p in lam if p]
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def elementary_product(lam: Sequence[int], nvars: int) -> SymPoly:
    """e_lam = product of e_{lam_i}."""
    p = MPoly.const(1, nvars)
    for k in lam:
        if k > nvars:
            return SymPoly(nvars)
        p = p * elementary(k, nvars)
    return SymPoly.from_poly(p)


def _lex_key(lam: Tuple[int, ...]):
    return (sum(lam), lam)


def sympoly_expand_basis(p: SymPoly, basis: str) -> Dict[Tuple[int, ...], Rational]:
    """Coordinates of p in the monomial basis or the elementary basis e_{lambda'}.

    In the elementary basis the returned keys are the partitions lambda with
    p = sum c_lambda e_{lambda'}, so e_{lambda'} has leading monomial m_lambda.
    """
    if basis in ("monomial", "m"):
        return dict(p.coeffs)
    if basis not in ("elementary", "e"):
        raise ValueError(f"unknown basis {basis!r}")
    rest = SymPoly(p.nvars, p.coeffs)
    out: Dict[Tuple[int, ...], Rational] = {}
    while not rest.is_zero():
        lam = max(rest.coeffs, key=_lex_key)
        c = rest.coeffs[lam]
        out[lam] = c
        rest = rest - elementary_product(conjugate_partition(lam), p.nvars) * c
    return out


def sympoly_from_basis(coords: Mapping[Tuple[int, ...], object], basis: str, nvars: int) -> SymPoly:
    total = SymPoly(nvars)
    for lam, c in coords.items():
        if basis in ("monomial", "m"):
            total = total + SymPoly.monomial(lam, nvars) * c
        else:
            total = total + elementary_product(conjugate_partition(lam), nvars) * c
    return total
