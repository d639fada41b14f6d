"""The twelve acceptance checks, each returning a pass/fail record with a witness on failure."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Dict, List, Optional

from .degenerations import f_el, f_tilde, h_el, h_tilde, qwhittaker_branching
from .interpolation import (Grid, classify_grid, f2_explicit, f2_threevar, f3_explicit,
                            grid_restrict, hook_value, pieri_residual, solve_f)
from .partitions import (ParamSeq, conjugate, contains, enumerate_partitions, grid_point_lin,
                         grid_point_q)
from .poly import MPoly, elementary_product, sympoly_top_component
from .sampling import Sampler, resolve_seed, with_redraw
from .scalar import Q, rational_str
from .transfer import check_exchange, check_qgauss
from .weights import check_ybe_bbb, check_ybe_mixed, r_matrix
from .whittaker import check_cauchy, f_skew, f_skew_raw, gf_transition, vanishing_report


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool
    detail: str = ""
    witness: Optional[dict] = None
    seconds: float = 0.0
    checks: int = 0

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        text = f"[{mark}] {self.number:2d}. {self.title}: {self.checks} checks, {self.seconds:.1f}s"
        return text + (f" ({self.detail})" if self.detail else "")

    def to_json(self) -> dict:
        return {"criterion": self.number, "title": self.title, "passed": self.passed,
                "checks": self.checks, "detail": self.detail, "witness": self.witness}


def _s(x) -> str:
    return rational_str(x)


def _seq(values, label) -> ParamSeq:
    return ParamSeq.of(values, label)


def _draw_sequences(sampler: Sampler, length: int, q=None):
    names = [f"a{i}" for i in range(length)] + [f"b{i}" for i in range(length)]
    p = sampler.generic(names, q)
    return (_seq([p[f"a{i}"] for i in range(length)], "A"),
            _seq([p[f"b{i}"] for i in range(length)], "B"))


# 1 -----------------------------------------------------------------------------

def conserving_boundaries(max_label: int = 3):
    triples = list(product(range(max_label + 1), repeat=3))
    for A in triples:
        for B in triples:
            if sum(A) == sum(B):
                yield A, B


def criterion_ybe(seed: int, points: int = 5) -> CriterionResult:
    checks = 0
    boundaries = list(conserving_boundaries(3))
    for k in range(points):
        sampler = Sampler(seed + k)

        def draw():
            q = sampler.q()
            p = sampler.generic(["a1", "a2", "a3", "b1", "b2", "b3"], q)
            p["q"] = q
            return p

        def attempt(p):
            for A, B in boundaries:
                for name, check in (("bbb", check_ybe_bbb), ("mixed", check_ybe_mixed)):
                    res = check(p, A, B)
                    if not res.passed:
                        return name, A, B, res
            return None
        p, bad = with_redraw(draw, attempt)
        checks += 2 * len(boundaries)
        if bad:
            name, A, B, res = bad
            return CriterionResult(1, "Yang-Baxter equations", False, f"{name} fails",
                                   {"params": {k2: _s(v) for k2, v in p.items()}, "A": A, "B": B,
                                    "lhs": _s(res.lhs), "rhs": _s(res.rhs)}, checks=checks)
    return CriterionResult(1, "Yang-Baxter equations", True, f"{len(boundaries)} boundaries x 2 x {points} points",
                           checks=checks)


# 2 -----------------------------------------------------------------------------

def criterion_r_forms(seed: int, points: int = 5) -> CriterionResult:
    checks = 0
    labels = [(I, J, K, I + J - K) for I, J, K in product(range(5), repeat=3) if 0 <= I + J - K <= 4]
    for k in range(points):
        sampler = Sampler(seed + 100 + k)

        def draw():
            q = sampler.q()
            p = sampler.generic(["a1", "b1", "a2", "b2"], q)
            p["q"] = q
            return p

        def attempt(p):
            for lab in labels:
                one = r_matrix(p["a1"], p["b1"], p["a2"], p["b2"], p["q"], *lab, form=1)
                two = r_matrix(p["a1"], p["b1"], p["a2"], p["b2"], p["q"], *lab, form=2)
                if one != two:
                    return lab, one, two
            return None
        p, bad = with_redraw(draw, attempt)
        checks += len(labels)
        if bad:
            return CriterionResult(2, "R-matrix forms agree", False, "forms differ",
                                   {"params": {k2: _s(v) for k2, v in p.items()}, "labels": bad[0],
                                    "form1": _s(bad[1]), "form2": _s(bad[2])}, checks=checks)
    return CriterionResult(2, "R-matrix forms agree", True, f"{len(labels)} label sets x {points} points",
                           checks=checks)


# 3 -----------------------------------------------------------------------------

def criterion_qgauss(seed: int, order: int = 12) -> CriterionResult:
    sampler = Sampler(seed + 200)
    a, b = sampler.distinct(2)
    xh, yh, qh = sampler.distinct(3)
    checks = 0
    for J in range(4):
        for L in range(4):
            res = check_qgauss(J, L, a, b, order, xh, yh, qh)
            checks += 1
            if not res.passed:
                return CriterionResult(3, "q-Gauss summation", False, f"J={J}, L={L}",
                                       {"J": J, "L": L, "a": _s(a), "b": _s(b)}, checks=checks)
    return CriterionResult(3, "q-Gauss summation", True, f"0<=J,L<=3 mod t^{order + 1}", checks=checks)


# 4 -----------------------------------------------------------------------------

def criterion_exchange(seed: int, order: int = 10, max_weight: int = 3) -> CriterionResult:
    sampler = Sampler(seed + 300)
    parts = enumerate_partitions(max_weight, max_weight)
    length = 2 * max_weight + 4
    A, B = _draw_sequences(sampler, length)
    xh, yh, qh = sampler.distinct(3)
    checks = 0
    for mu in parts:
        for nu in parts:
            res = check_exchange(mu, nu, order, A, B, xh, yh, qh)
            checks += 1
            if not res.passed:
                return CriterionResult(4, "Exchange relation", False, f"mu={mu}, nu={nu}",
                                       {"mu": mu, "nu": nu}, checks=checks)
    return CriterionResult(4, "Exchange relation", True, f"|mu|,|nu|<={max_weight} mod t^{order + 1}",
                           checks=checks)


# 5 -----------------------------------------------------------------------------

def criterion_symmetry(seed: int, max_weight: int = 5) -> CriterionResult:
    sampler = Sampler(seed + 400)
    q = sampler.q()
    A, B = _draw_sequences(sampler, max_weight + 4, q)
    x1, x2 = MPoly.variables(2)
    checks = 0
    for lam in enumerate_partitions(2, max_weight):
        p = f_skew_raw(lam, (), [x1, x2], A, B, q)
        if not isinstance(p, MPoly):
            p = MPoly.const(p, 2)
        checks += 1
        if p != p.substitute([x2, x1]):
            return CriterionResult(5, "Symmetry in two variables", False, f"lambda={lam}",
                                   {"lambda": lam}, checks=checks)
    return CriterionResult(5, "Symmetry in two variables", True, f"|lambda|<={max_weight}", checks=checks)


# 6 -----------------------------------------------------------------------------

CAUCHY_CASES = ((1, 1, 6), (1, 2, 8), (2, 2, 8))


def criterion_cauchy(seed: int, seeds: int = 3) -> CriterionResult:
    checks = 0
    for n, m, order in CAUCHY_CASES:
        for k in range(seeds):
            sampler = Sampler(seed + 500 + 10 * k)

            def draw():
                A, B = _draw_sequences(sampler, n + m + 3)
                return A, B, sampler.distinct(n), sampler.distinct(m), sampler.q()

            def attempt(pt):
                A, B, xh, yh, qh = pt
                return check_cauchy(n, m, order, A, B, xh, yh, qh)
            _, rep = with_redraw(draw, attempt)
            checks += 1
            if not rep.passed:
                return CriterionResult(6, "Cauchy identity", False, f"(n,m,D)=({n},{m},{order}) seed #{k}",
                                       {"n": n, "m": m, "D": order, "partitions": rep.partitions}, checks=checks)
    return CriterionResult(6, "Cauchy identity", True, f"{len(CAUCHY_CASES)} cases x {seeds} seeds", checks=checks)


# 7, 8 ---------------------------------------------------------------------------

def criterion_vanishing(seed: int, n: int = 3, max_weight: int = 5) -> CriterionResult:
    sampler = Sampler(seed + 600)
    q = sampler.q()
    A, B = _draw_sequences(sampler, 2 * n + 3, q)
    rep = vanishing_report(n, max_weight, A, B, q)
    checks = len(rep.table)
    if not rep.passed:
        lam, mu = rep.violations[0]
        return CriterionResult(7, "Vanishing and diagonal values", False, f"lambda={lam}, mu={mu}",
                               {"lambda": lam, "mu": mu, "value": _s(rep.table[(lam, mu)])}, checks=checks)
    return CriterionResult(7, "Vanishing and diagonal values", True, f"n={n}, weights<={max_weight}",
                           checks=checks)


def criterion_characterization(seed: int, n: int = 2, max_weight: int = 4) -> CriterionResult:
    sampler = Sampler(seed + 700)
    q = sampler.q()
    A, B = _draw_sequences(sampler, 2 * n + 3, q)
    rep = vanishing_report(n, max_weight, A, B, q)
    checks = len(rep.table)
    for (lam, mu), v in rep.table.items():
        if (not contains(mu, lam) and v != 0) or (lam == mu and v == 0):
            return CriterionResult(8, "Characterization", False, "evaluation matrix not triangular",
                                   {"lambda": lam, "mu": mu}, checks=checks)
    tr = gf_transition(n, max_weight, A, B, q)
    checks += len(tr.coeffs)
    if not (tr.triangular() and tr.nonzero_diagonal()):
        return CriterionResult(8, "Characterization", False, "G to F transition not triangular-invertible",
                               checks=checks)
    return CriterionResult(8, "Characterization", True, f"n={n}, weights<={max_weight}", checks=checks)


# 9 -----------------------------------------------------------------------------

def criterion_degenerations(seed: int, top_weight: int = 4, vanish_weight: int = 5) -> CriterionResult:
    sampler = Sampler(seed + 800)
    q = sampler.q()
    n_max = 3
    vals = sampler.generic([f"a{i}" for i in range(2 * n_max + 3)], q)
    A = _seq(list(vals.values()), "A")
    d = sampler.rational()
    C = _seq(sampler.distinct(2 * n_max + 3), "C")
    checks = 0
    problems: List[str] = []
    el_failures: List[tuple] = []
    for n in range(1, n_max + 1):
        xs = MPoly.variables(n)
        for lam in enumerate_partitions(n, top_weight):
            checks += 2
            top = sympoly_top_component(f_tilde(lam, (), xs, A, q))
            if top != qwhittaker_branching(lam, xs, q):
                problems.append(f"f_tilde top at {lam}")
            top_el = sympoly_top_component(f_el(lam, (), xs, C, d))
            if top_el != elementary_product(conjugate(lam), n):
                el_failures.append((n, lam))
    n = n_max
    parts = enumerate_partitions(n, vanish_weight)
    for mu in parts:
        pq = grid_point_q(A, q, mu, n)
        pl = grid_point_lin(C, d, mu, n)
        for lam in parts:
            checks += 2
            vq = f_tilde(lam, (), pq, A, q)
            vl = f_el(lam, (), pl, C, d)
            if lam == mu:
                if vq == 0 or vq != h_tilde(lam, A, q, n):
                    problems.append(f"f_tilde diagonal at {lam}")
                if vl == 0 or vl != h_el(lam, C, d, n):
                    problems.append(f"f_el diagonal at {lam}")
            elif not contains(mu, lam):
                if vq != 0:
                    problems.append(f"f_tilde vanishing at {lam},{mu}")
                if vl != 0:
                    problems.append(f"f_el vanishing at {lam},{mu}")
    if el_failures:
        problems.append(f"f_el top differs from e_lambda' for {len(el_failures)} (n, lambda), "
                        f"first {el_failures[0]}")
    passed = not problems
    detail = "; ".join(problems[:3]) if problems else f"tops |lambda|<={top_weight}, tables <={vanish_weight}"
    witness = {"f_el_top_mismatches": [[n_, list(l)] for n_, l in el_failures]} if el_failures else None
    return CriterionResult(9, "Degenerations", passed, detail, witness, checks=checks)


# 10 ----------------------------------------------------------------------------

def criterion_round_trip(seed: int, n: int = 3, max_weight: int = 4) -> CriterionResult:
    sampler = Sampler(seed + 900)
    q = sampler.q()
    a = list(sampler.generic([f"a{i}" for i in range(2 * n + 3)], q).values())
    c = sampler.rational(nonzero=False)
    gq = Grid.q_type(c, q, a[1:n + 1], 2 * max_weight + 2)
    A = _seq(a, "A")
    d = sampler.rational()
    cs = sampler.distinct(2 * n + 3)
    gl = Grid.linear_type(d, cs[1:n + 1], 2 * max_weight + 2)
    C = _seq(cs, "C")
    xs = MPoly.variables(n)
    shifted = [x - c for x in xs]
    checks = 0
    for lam in enumerate_partitions(n, max_weight):
        checks += 2
        lhs = solve_f(gq, lam).to_poly() * h_tilde(lam, A, q, n)
        rhs = f_tilde(lam, (), shifted, A, q).to_poly() * hook_value(gq, lam)
        if lhs != rhs:
            return CriterionResult(10, "Interpolation round trip", False, f"q-type at {lam}",
                                   {"lambda": lam, "grid": gq.to_json()}, checks=checks)
        lhs = solve_f(gl, lam).to_poly() * h_el(lam, C, d, n)
        rhs = f_el(lam, (), xs, C, d).to_poly() * hook_value(gl, lam)
        if lhs != rhs:
            return CriterionResult(10, "Interpolation round trip", False, f"linear type at {lam}",
                                   {"lambda": lam, "grid": gl.to_json()}, checks=checks)
    return CriterionResult(10, "Interpolation round trip", True, f"n={n}, |lambda|<={max_weight}", checks=checks)


# 11 ----------------------------------------------------------------------------

def _families(sampler: Sampler, n: int, depth: int):
    q = sampler.q()
    a = list(sampler.generic([f"a{i}" for i in range(n)], q).values())
    gq = Grid.q_type(sampler.rational(nonzero=False), q, a, depth)
    gl = Grid.linear_type(sampler.rational(), sampler.distinct(n), depth)
    return gq, gl


def criterion_pieri(seed: int, k_max: int = 5) -> CriterionResult:
    sampler = Sampler(seed + 1000)
    gq, gl = _families(sampler, 3, 2 * k_max + 4)
    x1, x2 = MPoly.variables(2)
    y = MPoly.variables(3)
    checks = 0
    for name, g in (("q-type", gq), ("linear", gl)):
        g2 = grid_restrict(g, 2)
        for k in range(1, k_max + 1):
            checks += 1
            if not pieri_residual(g2, k).is_zero():
                return CriterionResult(11, "Pieri rule and small cases", False, f"Pieri k={k} on {name}",
                                       {"k": k, "grid": g2.to_json()}, checks=checks)
        checks += 3
        if f2_explicit(g2, x1, x2) != solve_f(g2, (2,)).to_poly():
            return CriterionResult(11, "Pieri rule and small cases", False, f"F_(2) on {name}", checks=checks)
        if f3_explicit(g2, x1, x2) != solve_f(g2, (3,)).to_poly():
            return CriterionResult(11, "Pieri rule and small cases", False, f"F_(3) on {name}", checks=checks)
        g0 = g.shifted_by(-g.cell(3, 0))
        if f2_threevar(g0, *y) != solve_f(g0, (2,)).to_poly():
            return CriterionResult(11, "Pieri rule and small cases", False, f"three-variable F_(2) on {name}",
                                   checks=checks)
    return CriterionResult(11, "Pieri rule and small cases", True, f"k<={k_max} on both families", checks=checks)


# 12 ----------------------------------------------------------------------------

# f3 at the point of (2,2) only reads rows 1-2, columns 0-2, so perturbations
# are drawn from these cells for the obstruction to be visible.
PERTURBABLE = [(i, j) for i in (1, 2) for j in range(3)]


def criterion_classification(seed: int, tables: int = 20, depth: int = 4, n: int = 3) -> CriterionResult:
    sampler = Sampler(seed + 1100)
    checks = 0

    def fail(detail, witness=None):
        return CriterionResult(12, "Classification and falsification", False, detail, witness, checks=checks)

    generated = []
    for k in range(tables):
        q = sampler.q()
        c = sampler.rational(nonzero=False)
        a = list(sampler.generic([f"a{i}" for i in range(n)], q).values())
        g = Grid.q_type(c, q, a, depth)
        res = classify_grid(g)
        checks += 1
        if res.kind != "q" or res.params != {"c": c, "q": q, "a": a}:
            return fail("q-type parameters not recovered", {"grid": g.to_json(), "result": res.to_json()})
        generated.append(g)
        d = sampler.rational()
        cs = sampler.distinct(n)
        g = Grid.linear_type(d, cs, depth)
        res = classify_grid(g)
        checks += 1
        if res.kind != "linear" or res.params != {"d": d, "c": cs}:
            return fail("linear parameters not recovered", {"grid": g.to_json(), "result": res.to_json()})
        generated.append(g)
    for k in range(tables):
        base = generated[k % len(generated)] if k % 2 == 0 else generated[(k + 1) % len(generated)]
        i, j = PERTURBABLE[sampler.rng.randrange(len(PERTURBABLE))]
        bump = sampler.rational()
        g = base.with_cell(i, j, base.cell(i, j) + bump)
        checks += 1
        res = classify_grid(g)
        if res.kind != "not_perfect":
            return fail(f"perturbed cell ({i};{j}) still classified", {"grid": g.to_json()})
        g2 = grid_restrict(g, 2)
        if f3_explicit(g2, *g2.point((2, 2))) == 0:
            return fail(f"f3 vanishes at (2,2) after perturbing ({i};{j})", {"grid": g.to_json()})
    return CriterionResult(12, "Classification and falsification", True,
                           f"{2 * tables} generated, {tables} perturbed", checks=checks)


CRITERIA: Dict[int, Callable[[int], CriterionResult]] = {
    1: criterion_ybe,
    2: criterion_r_forms,
    3: criterion_qgauss,
    4: criterion_exchange,
    5: criterion_symmetry,
    6: criterion_cauchy,
    7: criterion_vanishing,
    8: criterion_characterization,
    9: criterion_degenerations,
    10: criterion_round_trip,
    11: criterion_pieri,
    12: criterion_classification,
}


def run_criterion(number: int, seed: Optional[int] = None) -> CriterionResult:
    seed = resolve_seed(seed)
    start = time.perf_counter()
    res = CRITERIA[number](seed)
    res.seconds = time.perf_counter() - start
    return res


def run_all(seed: Optional[int] = None, numbers=None) -> List[CriterionResult]:
    return [run_criterion(k, seed) for k in (numbers or sorted(CRITERIA))]
