"""Command line driver: compute polynomials and run verification checks with JSON reports.

Exit status is 0 when every requested check passes, 1 when one fails (the
report then carries a witness) and 2 on bad input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from typing import List, Optional, Sequence

from . import acceptance
from .degenerations import f_el, f_tilde
from .errors import ConfigError, SQWError
from .interpolation import Grid, classify_grid, grid_restrict, pieri_residual, solve_f
from .partitions import ParamSeq, enumerate_partitions, partition
from .poly import MPoly, SymPoly
from .sampling import Sampler, resolve_seed, with_redraw
from .scalar import Q, TruncSeries, rational_str
from .transfer import check_exchange
from .weights import check_ybe_bbb, check_ybe_mixed
from .whittaker import check_cauchy, f_skew, vanishing_report

SCHEMA = 1


# parsing helpers ---------------------------------------------------------------

def parse_partition(text: Optional[str]) -> tuple:
    if text is None or text.strip() in ("", "()", "0"):
        return ()
    try:
        parts = [int(p) for p in text.replace(" ", "").strip("()").split(",") if p]
        return partition(parts)
    except ValueError as exc:
        raise ConfigError(f"bad partition {text!r}: {exc}") from exc


def parse_rational(text) -> object:
    try:
        return Q(text)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise ConfigError(f"bad rational {text!r}") from exc


def load_json(path: str) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot read {path}: {exc}") from exc


def load_grid(path: str) -> Grid:
    try:
        return Grid.from_json(load_json(path))
    except (KeyError, ValueError, TypeError) as exc:
        raise ConfigError(f"bad grid table {path}: {exc}") from exc


def _sequence(params: dict, key: str, length: int, sampler: Sampler) -> ParamSeq:
    if key in params:
        vals = [parse_rational(v) for v in params[key]]
    else:
        vals = sampler.distinct(length)
    return ParamSeq.of(vals, key)


def poly_json(p) -> dict:
    if isinstance(p, SymPoly):
        terms = sorted(p.coeffs.items(), key=lambda kv: (-sum(kv[0]), [-x for x in kv[0]]))
        return {"basis": "monomial_symmetric", "nvars": p.nvars,
                "terms": [{"partition": list(lam), "coeff": rational_str(c)} for lam, c in terms]}
    return {"value": rational_str(p)}


def series_json(s: TruncSeries, order: int) -> List[str]:
    return [rational_str(s.coeff(k)) for k in range(s.valuation() if not s.is_zero() else 0, order + 1)]


# commands -----------------------------------------------------------------------

def cmd_compute(args, seed: int) -> dict:
    lam = parse_partition(args.lam)
    mu = parse_partition(args.mu)
    sampler = Sampler(seed)
    params = load_json(args.params) if args.params else {}
    xs = MPoly.variables(args.n)
    size = args.n + len(lam) + 3
    if args.family == "interp":
        if not args.table:
            raise ConfigError("--family interp needs --table")
        result = solve_f(load_grid(args.table), lam)
    elif args.family == "sqw":
        q = parse_rational(params["q"]) if "q" in params else sampler.q()
        A = _sequence(params, "A", size, sampler)
        B = _sequence(params, "B", size, sampler)
        result = f_skew(lam, mu, xs, A, B, q)
    elif args.family == "tilde":
        q = parse_rational(params["q"]) if "q" in params else sampler.q()
        result = f_tilde(lam, mu, xs, _sequence(params, "A", size, sampler), q)
    else:
        d = parse_rational(params["d"]) if "d" in params else sampler.rational()
        result = f_el(lam, mu, xs, _sequence(params, "C", size, sampler), d)
    return {"passed": True, "family": args.family, "lambda": list(lam), "mu": list(mu), "n": args.n,
            "polynomial": poly_json(result), "text": repr(result)}


def cmd_verify_ybe(args, seed: int) -> dict:
    sampler = Sampler(seed)
    boundaries = list(acceptance.conserving_boundaries(args.max_label))
    points = []
    for _ in range(args.points):
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
                        return {"identity": name, "A": list(A), "B": list(B),
                                "lhs": rational_str(res.lhs), "rhs": rational_str(res.rhs)}
            return None
        p, bad = with_redraw(draw, attempt)
        entry = {"params": {k: rational_str(v) for k, v in sorted(p.items())}}
        if bad:
            return {"passed": False, "witness": dict(entry, **bad), "points": points}
        points.append(entry)
    return {"passed": True, "boundaries": len(boundaries), "points": points}


def cmd_verify_cauchy(args, seed: int) -> dict:
    sampler = Sampler(seed)

    def draw():
        size = args.n + args.m + 3
        return (ParamSeq.of(sampler.distinct(size), "A"), ParamSeq.of(sampler.distinct(size), "B"),
                sampler.distinct(args.n), sampler.distinct(args.m), sampler.q())

    def attempt(pt):
        A, B, xh, yh, qh = pt
        return check_cauchy(args.n, args.m, args.D, A, B, xh, yh, qh)
    (A, B, xh, yh, qh), rep = with_redraw(draw, attempt)
    out = {"passed": rep.passed, "n": args.n, "m": args.m, "D": args.D,
           "partitions": [list(l) for l in rep.partitions],
           "lhs": series_json(rep.lhs, args.D), "rhs": series_json(rep.rhs, args.D)}
    if not rep.passed:
        out["witness"] = {"A": [rational_str(v) for v in A.values], "B": [rational_str(v) for v in B.values],
                          "xhat": [rational_str(v) for v in xh], "yhat": [rational_str(v) for v in yh],
                          "qhat": rational_str(qh)}
    return out


def cmd_verify_exchange(args, seed: int) -> dict:
    mu, nu = parse_partition(args.mu), parse_partition(args.nu)
    sampler = Sampler(seed)
    size = max(len(mu), len(nu)) + 4
    A = ParamSeq.of(sampler.distinct(size), "A")
    B = ParamSeq.of(sampler.distinct(size), "B")
    xh, yh, qh = sampler.distinct(3)
    rep = check_exchange(mu, nu, args.D, A, B, xh, yh, qh)
    out = {"passed": rep.passed, "mu": list(mu), "nu": list(nu), "D": args.D, "terms": rep.terms,
           "lhs": series_json(rep.lhs, args.D), "rhs": series_json(rep.rhs, args.D)}
    if not rep.passed:
        out["witness"] = {"A": [rational_str(v) for v in A.values], "B": [rational_str(v) for v in B.values]}
    return out


def cmd_verify_vanishing(args, seed: int) -> dict:
    sampler = Sampler(seed)
    q = sampler.q()
    vals = sampler.generic([f"v{i}" for i in range(4 * args.n + 6)], q)
    seq = list(vals.values())
    A = ParamSeq.of(seq[:2 * args.n + 3], "A")
    B = ParamSeq.of(seq[2 * args.n + 3:], "B")
    rep = vanishing_report(args.n, args.wmax, A, B, q)
    out = {"passed": rep.passed, "n": args.n, "wmax": args.wmax, "entries": len(rep.table)}
    if not rep.passed:
        lam, mu = rep.violations[0]
        out["witness"] = {"lambda": list(lam), "mu": list(mu), "value": rational_str(rep.table[(lam, mu)]),
                          "q": rational_str(q)}
    return out


def _grid_for(args, seed: int, depth: int) -> Grid:
    if args.table:
        return load_grid(args.table)
    sampler = Sampler(seed)
    if args.family == "q":
        q = sampler.q()
        a = list(sampler.generic(["a1", "a2"], q).values())
        return Grid.q_type(sampler.rational(nonzero=False), q, a, depth)
    return Grid.linear_type(sampler.rational(), sampler.distinct(2), depth)


def cmd_verify_pieri(args, seed: int) -> dict:
    g = _grid_for(args, seed, 2 * args.k + 4)
    if g.n > 2:
        g = grid_restrict(g, 2)
    rows = []
    for k in range(1, args.k + 1):
        res = pieri_residual(g, k)
        rows.append({"k": k, "zero": res.is_zero()})
        if not res.is_zero():
            return {"passed": False, "results": rows,
                    "witness": {"k": k, "grid": g.to_json(), "residual": poly_json(res)}}
    return {"passed": True, "results": rows, "grid": g.to_json()}


def cmd_interpolate(args, seed: int) -> dict:
    g = load_grid(args.table)
    lam = parse_partition(args.lam)
    return {"passed": True, "lambda": list(lam), "polynomial": poly_json(solve_f(g, lam))}


def cmd_classify(args, seed: int) -> dict:
    res = classify_grid(load_grid(args.table))
    return {"passed": True, "classification": res.to_json()}


def cmd_suite(args, seed: int) -> dict:
    numbers = None
    if args.only:
        try:
            numbers = sorted({int(x) for x in args.only.split(",")})
        except ValueError as exc:
            raise ConfigError(f"bad --only list {args.only!r}") from exc
        if any(k not in acceptance.CRITERIA for k in numbers):
            raise ConfigError(f"criteria are numbered 1..{len(acceptance.CRITERIA)}")
    results = acceptance.run_all(seed, numbers)
    for r in results:
        print(r.line(), file=sys.stderr)
    return {"passed": all(r.passed for r in results), "criteria": [r.to_json() for r in results]}


COMMANDS = {
    "compute": cmd_compute,
    "verify-ybe": cmd_verify_ybe,
    "verify-cauchy": cmd_verify_cauchy,
    "verify-exchange": cmd_verify_exchange,
    "verify-vanishing": cmd_verify_vanishing,
    "verify-pieri": cmd_verify_pieri,
    "interpolate": cmd_interpolate,
    "classify-grid": cmd_classify,
    "suite": cmd_suite,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sqw", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=None, help="random seed (SQW_SEED overrides)")
    common.add_argument("--format", choices=("json", "csv", "pretty"), default="json")
    common.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", parents=[common], help="print a polynomial")
    p.add_argument("--family", choices=("sqw", "tilde", "el", "interp"), default="sqw")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", default=None)
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--params", default=None, help="JSON file with A, B, C, q, d as rational strings")
    p.add_argument("--table", default=None, help="grid JSON for --family interp")

    p = sub.add_parser("verify-ybe", parents=[common], help="Yang-Baxter equations")
    p.add_argument("--points", type=int, default=5)
    p.add_argument("--max-label", type=int, default=3)

    p = sub.add_parser("verify-cauchy", parents=[common], help="Cauchy identity as series in t")
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--D", type=int, default=6)

    p = sub.add_parser("verify-exchange", parents=[common], help="row operator exchange relation")
    p.add_argument("--mu", default="")
    p.add_argument("--nu", default="")
    p.add_argument("--D", type=int, default=10)

    p = sub.add_parser("verify-vanishing", parents=[common], help="vanishing on the grid")
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--wmax", type=int, default=4)

    p = sub.add_parser("verify-pieri", parents=[common], help="two-row Pieri rule")
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--family", choices=("q", "linear"), default="q")
    p.add_argument("--table", default=None)

    p = sub.add_parser("interpolate", parents=[common], help="solve for F_lambda on a grid")
    p.add_argument("--table", required=True)
    p.add_argument("--lambda", dest="lam", required=True)

    p = sub.add_parser("classify-grid", parents=[common], help="classify a grid table")
    p.add_argument("--table", required=True)

    p = sub.add_parser("suite", parents=[common], help="run the acceptance criteria")
    p.add_argument("--only", default=None, help="comma separated criterion numbers")
    return parser


def _validate(args) -> None:
    for name in ("n", "m", "D", "k", "points"):
        v = getattr(args, name, None)
        if v is not None and v < 1:
            raise ConfigError(f"--{name} must be at least 1")
    for name in ("wmax", "max_label"):
        v = getattr(args, name, None)
        if v is not None and v < 0:
            raise ConfigError(f"--{name.replace('_', '-')} must be non-negative")


def _flatten(prefix: str, value, rows: list) -> None:
    if isinstance(value, dict):
        for k in sorted(value):
            _flatten(f"{prefix}.{k}" if prefix else k, value[k], rows)
    elif isinstance(value, list) and any(isinstance(v, (dict, list)) for v in value):
        for i, v in enumerate(value):
            _flatten(f"{prefix}[{i}]", v, rows)
    else:
        rows.append((prefix, json.dumps(value) if isinstance(value, list) else value))


def render(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, sort_keys=True, indent=2)
    if fmt == "csv":
        rows: list = []
        _flatten("", report, rows)
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(("key", "value"))
        writer.writerows(rows)
        return buf.getvalue().rstrip("\n")
    lines = [f"{report['command']}: {'PASS' if report.get('passed') else 'FAIL'}"]
    if "text" in report:
        lines.append(report["text"])
    if "classification" in report:
        lines.append(json.dumps(report["classification"], sort_keys=True))
    if "witness" in report:
        lines.append("witness: " + json.dumps(report["witness"], sort_keys=True))
    return "\n".join(lines)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    seed = resolve_seed(args.seed)
    try:
        _validate(args)
        body = COMMANDS[args.command](args, seed)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (SQWError, ZeroDivisionError, ValueError, IndexError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    report = {"schema": SCHEMA, "command": args.command, "seed": seed}
    report.update(body)
    print(render(report, args.format))
    return 0 if report.get("passed") else 1


if __name__ == "__main__":
    sys.exit(main())
