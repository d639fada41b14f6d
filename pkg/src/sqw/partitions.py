"""Partitions, compositions, interlacing and parameter sequences."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, List, Sequence, Tuple

from .errors import PrefixTooShort
from .scalar import Q, Rational

Partition = Tuple[int, ...]
Composition = Tuple[int, ...]


def partition(parts: Sequence[int] = ()) -> Partition:
    """Canonical partition: weakly decreasing positive parts, zeros dropped."""
    parts = tuple(int(p) for p in parts if p)
    if any(p < 0 for p in parts):
        raise ValueError(f"negative part in {parts}")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError(f"parts not weakly decreasing: {parts}")
    return parts


def part(lam: Sequence[int], i: int) -> int:
    """lambda_i with 1-based i, reading 0 past the end."""
    return lam[i - 1] if 1 <= i <= len(lam) else 0


def weight(lam: Sequence[int]) -> int:
    return sum(lam)


def length(lam: Sequence[int]) -> int:
    return sum(1 for p in lam if p)


def contains(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """True if mu is a subset of lambda as Young diagrams."""
    return len(mu) <= len(lam) and all(m <= l for l, m in zip(lam, mu))


def interlaces(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """lambda_i >= mu_i >= lambda_{i+1} for every i."""
    n = max(len(lam), len(mu)) + 1
    return all(part(lam, i) >= part(mu, i) >= part(lam, i + 1) for i in range(1, n + 1))


def conjugate(lam: Sequence[int]) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def differences(lam: Sequence[int], n: int) -> List[int]:
    """[lambda_r - lambda_{r+1} for r = 1..n]."""
    return [part(lam, r) - part(lam, r + 1) for r in range(1, n + 1)]


def _partitions_of(w: int, max_part: int, max_len: int) -> Iterator[Partition]:
    """Partitions of w in reverse-lexicographic order."""
    if w == 0:
        yield ()
        return
    if max_len == 0:
        return
    for first in range(min(w, max_part), 0, -1):
        for rest in _partitions_of(w - first, first, max_len - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def enumerate_partitions(max_len: int, max_weight: int) -> Tuple[Partition, ...]:
    """All partitions with at most max_len parts and weight <= max_weight,
    ordered by weight and then reverse-lexicographically."""
    out: List[Partition] = []
    for w in range(max_weight + 1):
        out.extend(_partitions_of(w, w, max_len))
    return tuple(out)


def partitions_in_box(max_len: int, max_part: int) -> Iterator[Partition]:
    """All partitions with at most max_len parts, each at most max_part."""
    def rec(prefix, bound, left):
        yield prefix
        if left == 0:
            return
        for p in range(1, bound + 1):
            yield from rec(prefix + (p,), p, left - 1)
    yield from rec((), max_part, max_len)


def interlacing_below(lam: Sequence[int]) -> Iterator[Partition]:
    """All mu with lambda interlacing mu (mu obtained by removing a horizontal strip)."""
    lam = tuple(lam)
    ranges = [range(part(lam, i + 1), part(lam, i) + 1) for i in range(1, len(lam) + 1)]

    def rec(i, prefix):
        if i == len(ranges):
            yield partition(prefix)
            return
        for v in ranges[i]:
            yield from rec(i + 1, prefix + (v,))
    yield from rec(0, ())


def interlacing_above(mu: Sequence[int], max_first: int) -> Iterator[Partition]:
    """All lambda interlacing mu (lambda over mu) with lambda_1 <= max_first."""
    mu = tuple(mu)
    k = len(mu) + 1
    ranges = []
    for i in range(1, k + 1):
        lo = part(mu, i)
        hi = part(mu, i - 1) if i > 1 else max_first
        ranges.append(range(lo, hi + 1))

    def rec(i, prefix):
        if i == len(ranges):
            yield partition(prefix)
            return
        for v in ranges[i]:
            yield from rec(i + 1, prefix + (v,))
    yield from rec(0, ())


@dataclass(frozen=True)
class ParamSeq:
    """Finite prefix of a parameter sequence chi_0, chi_1, ... with shift and inversion views."""

    values: Tuple[Rational, ...]
    label: str = "A"
    offset: int = 0
    inverted: bool = False

    @classmethod
    def of(cls, values: Sequence, label: str = "A") -> "ParamSeq":
        return cls(tuple(Q(v) for v in values), label)

    def __getitem__(self, i: int) -> Rational:
        j = i + self.offset
        if i < 0 or j >= len(self.values):
            raise PrefixTooShort(
                f"{self.label}[{i}] needs {j + 1} stored values, have {len(self.values)}")
        v = self.values[j]
        return 1 / v if self.inverted else v

    def __len__(self) -> int:
        return max(0, len(self.values) - self.offset)

    def shift(self, k: int = 1) -> "ParamSeq":
        """tau^k: drop the first k entries."""
        return ParamSeq(self.values, self.label, self.offset + k, self.inverted)

    def bar(self) -> "ParamSeq":
        """Entrywise reciprocal."""
        return ParamSeq(self.values, self.label, self.offset, not self.inverted)

    def prefix(self, n: int) -> Tuple[Rational, ...]:
        return tuple(self[i] for i in range(n))

    def materialize(self) -> "ParamSeq":
        return ParamSeq(tuple(self[i] for i in range(len(self))), self.label)


def grid_point_q(A: ParamSeq, q, mu: Sequence[int], n: int) -> Tuple:
    """(a_1 q^{mu_1 - mu_2}, ..., a_n q^{mu_n})."""
    if len(mu) > n:
        raise ValueError(f"partition {tuple(mu)} has more than {n} parts")
    return tuple(A[i] * q ** (part(mu, i) - part(mu, i + 1)) for i in range(1, n + 1))


def grid_point_lin(C: ParamSeq, d, mu: Sequence[int], n: int) -> Tuple:
    """(c_1 + (mu_1 - mu_2) d, ..., c_n + mu_n d)."""
    if len(mu) > n:
        raise ValueError(f"partition {tuple(mu)} has more than {n} parts")
    return tuple(C[i] + (part(mu, i) - part(mu, i + 1)) * d for i in range(1, n + 1))
