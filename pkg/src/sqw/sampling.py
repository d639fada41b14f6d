"""Seeded draws of random rational parameters, with rejection of degenerate points."""

from __future__ import annotations

import logging
import os
import random
from typing import Callable, Dict, Iterable, List, TypeVar

from .scalar import Q, Rational

log = logging.getLogger(__name__)

T = TypeVar("T")

DEFAULT_SEED = 20240601


def resolve_seed(seed: int | None = None) -> int:
    """SQW_SEED in the environment overrides any seed passed in."""
    env = os.environ.get("SQW_SEED")
    if env is not None and env.strip():
        return int(env)
    return DEFAULT_SEED if seed is None else seed


class Sampler:
    """Draws small random rationals from a private random.Random stream."""

    def __init__(self, seed: int, height: int = 40):
        self.seed = seed
        self.rng = random.Random(seed)
        self.height = height

    def rational(self, nonzero: bool = True) -> Rational:
        while True:
            num = self.rng.randint(-self.height, self.height)
            den = self.rng.randint(1, self.height)
            if num or not nonzero:
                return Q(num, den)

    def q(self) -> Rational:
        """A rational away from 0 and the roots of unity +-1."""
        while True:
            v = self.rational()
            if v not in (1, -1):
                return v

    def distinct(self, k: int, avoid: Iterable = ()) -> List[Rational]:
        seen = set(avoid)
        out: List[Rational] = []
        while len(out) < k:
            v = self.rational()
            if v not in seen:
                seen.add(v)
                out.append(v)
        return out

    def generic(self, names: Iterable[str], q: Rational | None = None, span: int = 12) -> Dict[str, Rational]:
        """Named parameters with no ratio of two of them a power q^k, |k| <= span."""
        names = list(names)
        while True:
            vals = self.distinct(len(names))
            if q is None or ratios_generic(vals, q, span):
                return dict(zip(names, vals))


def ratios_generic(values: List[Rational], q, span: int = 12) -> bool:
    powers = {Q(q) ** k for k in range(-span, span + 1)}
    for i, x in enumerate(values):
        for y in values[i + 1:]:
            if x / y in powers:
                return False
    return True


def with_redraw(draw: Callable[[], T], attempt: Callable[[T], object], tries: int = 50):
    """Call attempt(draw()) until no division by zero occurs; the failing draws are logged."""
    last = None
    for _ in range(tries):
        point = draw()
        try:
            return point, attempt(point)
        except ZeroDivisionError as exc:
            log.info("rejected degenerate parameter draw %r: %s", point, exc)
            last = exc
    raise RuntimeError(f"no non-degenerate draw in {tries} attempts") from last
