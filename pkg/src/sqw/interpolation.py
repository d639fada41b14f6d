"""Interpolation polynomials on n-grids, the Pieri rule, and the perfect-grid classifier.

A grid assigns a value cell(i, j) to row i = 1..n and column j >= 0; the
point of a partition lam is (cell(1, lam_1 - lam_2), ..., cell(n, lam_n)).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from typing import Optional, Sequence, Tuple

from .errors import DepthTooShallow, OutOfRange
from .linalg import solve
from .partitions import enumerate_partitions, part, partition
from .poly import MPoly, SymPoly
from .scalar import Q, Rational


@dataclass(frozen=True)
class Grid:
    rows: Tuple[Tuple[Rational, ...], ...]
    tag: Optional[dict] = field(default=None, compare=False, hash=False)

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def depth(self) -> int:
        """Largest column index available in every row."""
        return min(len(r) for r in self.rows) - 1

    def cell(self, i: int, j: int) -> Rational:
        if not 1 <= i <= self.n:
            raise OutOfRange(f"row {i} outside 1..{self.n}")
        row = self.rows[i - 1]
        if j < 0 or j >= len(row):
            raise DepthTooShallow(f"cell ({i};{j}) beyond stored depth {len(row) - 1}")
        return row[j]

    def point(self, lam: Sequence[int]) -> Tuple[Rational, ...]:
        return tuple(self.cell(i, part(lam, i) - part(lam, i + 1)) for i in range(1, self.n + 1))

    # constructors ---------------------------------------------------------------
    @classmethod
    def from_table(cls, values: Sequence[Sequence], tag: Optional[dict] = None) -> "Grid":
        return cls(tuple(tuple(Q(v) for v in row) for row in values), tag)

    @classmethod
    def q_type(cls, c, q, a: Sequence, depth: int) -> "Grid":
        c, q = Q(c), Q(q)
        rows = [[c + Q(ai) * q ** j for j in range(depth + 1)] for ai in a]
        return cls.from_table(rows, {"type": "q", "c": c, "q": q, "a": [Q(x) for x in a]})

    @classmethod
    def linear_type(cls, d, cs: Sequence, depth: int) -> "Grid":
        d = Q(d)
        rows = [[Q(ci) + j * d for j in range(depth + 1)] for ci in cs]
        return cls.from_table(rows, {"type": "linear", "d": d, "c": [Q(x) for x in cs]})

    def with_cell(self, i: int, j: int, value) -> "Grid":
        rows = [list(r) for r in self.rows]
        rows[i - 1][j] = Q(value)
        return Grid.from_table(rows, None)

    def shifted_by(self, c) -> "Grid":
        """The grid with every cell increased by c."""
        c = Q(c)
        return Grid.from_table([[v + c for v in r] for r in self.rows], None)

    # serialisation --------------------------------------------------------------
    def to_json(self) -> dict:
        tag = None
        if self.tag:
            tag = {k: ([str(x) for x in v] if isinstance(v, list) else (str(v) if not isinstance(v, str) else v))
                   for k, v in self.tag.items()}
        return {"n": self.n, "depth": self.depth, "values": [[str(v) for v in r] for r in self.rows],
                "tag": tag}

    @classmethod
    def from_json(cls, data: dict) -> "Grid":
        values = data["values"]
        if len(values) != data.get("n", len(values)):
            raise ValueError("row count does not match n")
        tag = data.get("tag")
        if tag:
            tag = {k: ([Q(x) for x in v] if isinstance(v, list) else (v if k == "type" else Q(v)))
                   for k, v in tag.items()}
        return cls.from_table(values, tag)


def grid_nondegenerate(g: Grid) -> bool:
    """All stored cells pairwise distinct."""
    cells = [v for r in g.rows for v in r]
    return len(set(cells)) == len(cells)


def grid_restrict(g: Grid, m: int) -> Grid:
    if not 1 <= m <= g.n:
        raise OutOfRange(f"cannot restrict a {g.n}-grid to {m} rows")
    tag = None
    if g.tag:
        tag = dict(g.tag)
        key = "a" if tag["type"] == "q" else "c"
        tag[key] = list(tag[key][:m])
    return Grid(g.rows[:m], tag)


def grid_shift(g: Grid, k: int) -> Grid:
    """Upper shift of the last row by k columns."""
    if k < 0 or k > g.depth:
        raise OutOfRange(f"shift {k} outside 0..{g.depth}")
    rows = list(g.rows)
    rows[-1] = rows[-1][k:]
    tag = None
    if g.tag:
        tag = dict(g.tag)
        if tag["type"] == "q":
            tag["a"] = tag["a"][:-1] + [tag["a"][-1] * tag["q"] ** k]
        else:
            tag["c"] = tag["c"][:-1] + [tag["c"][-1] + k * tag["d"]]
    return Grid(tuple(rows), tag)


def grid_leftshift(g: Grid, l: int) -> Grid:
    """Drop the first l rows."""
    if not 0 <= l < g.n:
        raise OutOfRange(f"left shift {l} outside 0..{g.n - 1}")
    tag = None
    if g.tag:
        tag = dict(g.tag)
        key = "a" if tag["type"] == "q" else "c"
        tag[key] = list(tag[key][l:])
    return Grid(g.rows[l:], tag)


def hook_value(g: Grid, lam: Sequence[int]) -> Rational:
    """Normalising value of F_lam at its own grid point."""
    value = Q(1)
    for r in range(1, len(lam) + 1):
        lo, hi = part(lam, r + 1), part(lam, r)
        for i in range(1, r + 1):
            top = g.cell(i, part(lam, i) - part(lam, i + 1))
            for j in range(lo, hi):
                value *= top - g.cell(r, j - lo)
    return value


@lru_cache(maxsize=None)
def _orbit(mu: Tuple[int, ...], n: int) -> Tuple[Tuple[int, ...], ...]:
    return tuple(set(permutations(tuple(mu) + (0,) * (n - len(mu)))))


def monomial_value(mu: Sequence[int], point: Sequence) -> Rational:
    total = Q(0)
    for e in _orbit(tuple(mu), len(point)):
        term = Q(1)
        for x, k in zip(point, e):
            if k:
                term *= x ** k
        total += term
    return total


def solve_f(g: Grid, lam: Sequence[int]) -> SymPoly:
    """The interpolation polynomial F_lam(x | g) in the monomial basis.

    Unknowns are the coefficients of m_mu, |mu| <= |lam|; equations are
    vanishing at the points of every other such mu and the hook value at lam.
    """
    lam = partition(lam)
    if len(lam) > g.n:
        raise ValueError(f"{lam} has more than {g.n} parts")
    basis = list(enumerate_partitions(g.n, sum(lam)))
    points = [g.point(nu) for nu in basis]
    matrix = [[monomial_value(mu, pt) for mu in basis] for pt in points]
    rhs = [hook_value(g, lam) if nu == lam else Q(0) for nu in basis]
    coeffs = solve(matrix, rhs)
    return SymPoly(g.n, dict(zip(basis, coeffs)))


# explicit small cases ------------------------------------------------------------

def f2_explicit(g: Grid, x1, x2):
    """F_(2)(x1, x2 | g) from its closed form."""
    c = g.cell
    den = c(1, 0) - c(2, 0)
    return (x1 ** 2 + x2 ** 2
            + (c(1, 0) + c(1, 1) - c(2, 0) - c(2, 1)) / den * (x1 * x2)
            - (c(1, 0) ** 2 + c(1, 0) * c(1, 1) - c(2, 0) ** 2 - c(2, 0) * c(2, 1)) / den * (x1 + x2)
            + (c(1, 0) ** 2 * c(1, 1) + c(1, 0) ** 2 * c(2, 0) - c(1, 0) * c(2, 0) ** 2
               - c(2, 0) ** 2 * c(2, 1)) / den)


def kappa2(g: Grid) -> Rational:
    c = g.cell
    return ((c(1, 1) + c(2, 1) - c(1, 2) - c(2, 0)) * (c(1, 0) + c(1, 1) - c(2, 0) - c(2, 1))
            / ((c(1, 0) - c(2, 0)) * (c(1, 1) - c(2, 0))))


def f3_explicit(g: Grid, x1, x2):
    """F_(3)(x1, x2 | g) through one Pieri step from F_(2)."""
    c = g.cell
    return ((x1 + x2 - c(1, 2) - c(2, 0)) * f2_explicit(g, x1, x2)
            - kappa2(g) * (x1 - c(2, 0)) * (x2 - c(2, 0)) * (x1 + x2 - c(1, 0) - c(2, 1)))


def f2_threevar(g: Grid, x1, x2, x3):
    """F_(2)(x1, x2, x3 | g) for a 3-grid whose cell (3;0) is zero."""
    c = g.cell
    if c(3, 0) != 0:
        raise ValueError("the three-variable formula needs cell (3;0) = 0")
    den = c(1, 0) - c(2, 0)
    return (x1 ** 2 + x2 ** 2 + x3 ** 2
            + (c(1, 0) + c(1, 1) - c(2, 0) - c(2, 1)) / den * (x1 * x2 + x1 * x3 + x2 * x3)
            - (c(1, 0) ** 2 + c(1, 0) * c(1, 1) - c(2, 0) ** 2 - c(2, 0) * c(2, 1)) / den * (x1 + x2 + x3)
            + (c(1, 0) ** 2 * c(1, 1) + c(1, 0) ** 2 * c(2, 0) - c(1, 0) * c(2, 0) ** 2
               - c(2, 0) ** 2 * c(2, 1)) / den)


def q_type_two_row(k: int, c, q, a1, a2, x1, x2):
    """F_(k) on the 2-row q-type grid c + a_i q^j, as a sum over splittings of k."""
    from .qkit import q_factorial, shifted_product
    total = Q(0)
    for i in range(k + 1):
        total = total + (shifted_product(x1 - c, a1, q, i) * shifted_product(x2 - c, a2, q, k - i)
                         * (q_factorial(q, k) / (q_factorial(q, i) * q_factorial(q, k - i))))
    return total


def linear_two_row(k: int, d, c1, c2, x1, x2):
    """F_(k) on the 2-row linear grid c_i + j d."""
    value = Q(1)
    for i in range(k):
        value = value * (x1 + x2 - c1 - c2 - i * d)
    return value


# Pieri rule ------------------------------------------------------------------------

def kappa(g: Grid, k: int) -> Rational:
    c = g.cell
    fk = solve_f(grid_restrict(g, 2), (k,))
    num = (c(1, k - 1) + c(2, 1) - c(1, k) - c(2, 0)) * fk.evaluate((c(1, k - 1), c(2, 1)))
    den = (c(2, 1) - c(2, 0)) * (c(1, k - 1) - c(2, 0))
    for i in range(k - 1):
        den *= c(1, k - 1) - c(1, i)
    return num / den


def pieri_residual(g: Grid, k: int) -> SymPoly:
    """Left side minus right side of the two-row Pieri rule for F_(k)."""
    if g.n != 2:
        raise ValueError("the Pieri rule is stated for 2-grids")
    if k < 1:
        raise ValueError("k must be at least 1")
    x1, x2 = MPoly.variables(2)
    c = g.cell
    fk = solve_f(g, (k,)).to_poly()
    fk1 = solve_f(g, (k + 1,)).to_poly()
    fkm = solve_f(grid_shift(g, 1), (k - 1,) if k > 1 else ()).to_poly()
    res = (x1 + x2 - c(1, k) - c(2, 0)) * fk - fk1 - kappa(g, k) * (x1 - c(2, 0)) * (x2 - c(2, 0)) * fkm
    return SymPoly.from_poly(res)


# constraints on perfect grids --------------------------------------------------

def constraint_12(g: Grid, i: int, j: int) -> Rational:
    c = g.cell
    return ((c(i, 1) - c(i + 1, j - 1)) * (c(i, 1) - c(i + 1, j + 1))
            - (c(i, 0) - c(i + 1, j)) * (c(i, 2) - c(i + 1, j)))


def constraint_31(g: Grid) -> Rational:
    """Cell (3;1) minus its value forced by perfection."""
    c = g.cell
    forced = ((c(1, 0) * c(2, 1) - c(1, 1) * c(2, 0) - c(2, 1) * c(3, 0) + c(1, 1) * c(3, 0))
              / (c(1, 0) - c(2, 0)))
    return c(3, 1) - forced


def constraint_final(g: Grid) -> Rational:
    c = g.cell
    return ((c(2, 1) - c(1, 2)) * (c(2, 0) - c(1, 0))
            - (c(2, 1) - c(1, 1)) * (c(2, 0) - c(1, 1)))


# classification -------------------------------------------------------------------

@dataclass
class Classification:
    kind: str  # "q", "linear" or "not_perfect"
    params: dict = field(default_factory=dict)
    cell: Optional[Tuple[int, int]] = None

    def to_json(self) -> dict:
        out = {"kind": self.kind}
        out["params"] = {k: ([str(x) for x in v] if isinstance(v, list) else str(v))
                         for k, v in self.params.items()}
        if self.cell is not None:
            out["violated_cell"] = list(self.cell)
        return out


def classify_grid(g: Grid) -> Classification:
    """Fit a q-type or linear-type generator from the first cells and verify the whole table."""
    if g.n < 3:
        raise ValueError("classification needs rank at least 3")
    if g.depth < 4:
        raise DepthTooShallow("classification needs depth at least 4")
    c = g.cell
    den = c(2, 0) - c(1, 0)
    if den == 0:
        raise ZeroDivisionError("cells (1;0) and (2;0) coincide")
    q = (c(2, 1) - c(1, 1)) / den
    if q != 1:
        a1 = (c(1, 0) - c(1, 1)) / (1 - q)
        shift = c(1, 0) - a1
        a = [c(i, 0) - shift for i in range(1, g.n + 1)]
        model = lambda i, j: shift + a[i - 1] * q ** j
        params = {"c": shift, "q": q, "a": a}
        kind = "q"
    else:
        d = c(1, 1) - c(1, 0)
        cs = [c(i, 0) for i in range(1, g.n + 1)]
        model = lambda i, j: cs[i - 1] + j * d
        params = {"d": d, "c": cs}
        kind = "linear"
    for i in range(1, g.n + 1):
        for j in range(len(g.rows[i - 1])):
            if c(i, j) != model(i, j):
                return Classification("not_perfect", params, (i, j))
    return Classification(kind, params)
