"""Command-line front end.

Every subcommand emits a :class:`~cyclestats.records.ResultRecord` as JSON
(default) or CSV.  Exit codes: 0 success, 2 bad parameters, 3 scan budget
refused, 4 internal invariant violated.
"""

from __future__ import annotations

import argparse
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any

from . import permstats, scanner, series
from .ffpoly import DEFAULT_SEED, BudgetExceeded, DistinctnessError, factor, parse_poly, format_poly
from .ffpoly.structure import distinctness_certificate
from .records import (THREADS_ENV, ResultCache, ResultRecord, decimal_str, rational_str, scan_row)

EXIT_OK, EXIT_PRECONDITION, EXIT_BUDGET, EXIT_INVARIANT = 0, 2, 3, 4

# flags that change how a result is delivered, not what it is
_DELIVERY = {"command", "format", "output", "cache", "cache_dir", "threads", "func"}


@dataclass
class RunConfig:
    command: str
    params: dict[str, Any] = field(default_factory=dict)
    format: str = "json"
    output: str | None = None
    threads: int = 1
    cache: bool = False
    cache_dir: str | None = None

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        params = {k: v for k, v in vars(args).items() if k not in _DELIVERY}
        threads = args.threads or int(os.environ.get(THREADS_ENV, 0)) or os.cpu_count() or 1
        return cls(args.command, params, args.format, args.output, threads, args.cache, args.cache_dir)


def _int_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _shift_list(text: str | None, q: int):
    if text is None:
        return None
    return [parse_poly(tok, q) for tok in text.split(";")]


def _shift_system(q, n, r, shifts_text):
    shifts = _shift_list(shifts_text, q)
    if shifts is None:
        return scanner.ShiftSystem.constants(q, n, r)
    return scanner.ShiftSystem(q, n, tuple(shifts))


# -- subcommands: each returns (payload, provenance) --------------------------

def cmd_stats(p, cfg):
    n, r = p["n"], p["r"]
    if p["which"] == "E":
        if p["float"]:
            value = permstats.E_r_float(n, r)
            return {"n": n, "r": r, "which": "E", "decimal": decimal_str(value)}, "float"
        value = permstats.E_r(n, r)
    else:
        if p["float"]:
            raise ValueError("W is only available exactly")
        value = permstats.W_r_partition_sum(n, r)
    return {"n": n, "r": r, "which": p["which"], "value": rational_str(value),
            "decimal": decimal_str(value)}, "exact"


def cmd_constants(p, cfg):
    r = p["r"]
    c_r = permstats.asymptotic_c_r(r)
    if p["cr_only"]:
        return {"r": r, "c_r": decimal_str(c_r)}, "exact"
    est = series.A_r_product(r, p["K"], p["J"])
    return {"r": r, "c_r": decimal_str(c_r), "A_r": decimal_str(est.value),
            "A_r_lower": decimal_str(est.lower), "A_r_upper": decimal_str(est.upper),
            "tail_bound": decimal_str(est.tail_bound), "width": decimal_str(est.width),
            "terms_used": est.terms_used}, "certified-bracket"


def cmd_series(p, cfg):
    r, N = p["r"], p["N"]
    if p["float"]:
        if p["method"] != "product":
            raise ValueError("float mode is only available for the product method")
        s = series.W_series_product(r, N, exact=False)
        rows = [{"n": n, "W": decimal_str(c)} for n, c in enumerate(s.coeffs)]
        return {"r": r, "N": N, "method": p["method"], "rows": rows}, "float"
    make = series.W_series_product if p["method"] == "product" else series.W_series_exp_polylog
    s = make(r, N)
    rows = [{"n": n, "W": rational_str(c), "decimal": decimal_str(c)} for n, c in enumerate(s.coeffs)]
    return {"r": r, "N": N, "method": p["method"], "rows": rows}, "exact"


def cmd_scan(p, cfg):
    sys_ = _shift_system(p["q"], p["n"], p["r"], p["shifts"])
    rep = scanner.scan(sys_, p["alpha"], p["k"], p["allow_large"])
    return {"shifts": list(rep.shifts), "rows": [scan_row(rep)]}, "exact"


def _sweep_one(args):
    n, r, alpha, q, k, shifts_text, allow_large = args
    sys_ = _shift_system(q, n, r, shifts_text)
    return scanner.scan(sys_, alpha, k, allow_large)


def cmd_sweep(p, cfg):
    primes = p["primes"]
    for q in primes:
        scanner.check_budget(q, p["n"], p["allow_large"])
    jobs = [(p["n"], p["r"], p["alpha"], q, p["k"], p["shifts"], p["allow_large"]) for q in primes]
    if cfg.threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=cfg.threads) as pool:
            reports = list(pool.map(_sweep_one, jobs))      # map keeps prime order
    else:
        reports = [_sweep_one(j) for j in jobs]
    return {"rows": [scan_row(rep) for rep in reports]}, "exact"


def cmd_census(p, cfg):
    sys_ = _shift_system(p["q"], p["n"], p["r"], p["shifts"])
    census = scanner.joint_census(sys_, p["allow_large"])
    rows = [{"types": " | ".join(str(lam) for lam in key), "count": count}
            for key, count in sorted(census.items(), key=lambda kv: tuple(lam.mult for lam in kv[0]))]
    total = sum(census.values())
    return {"q": p["q"], "n": p["n"], "total": total,
            "max_deviation": decimal_str(scanner.census_max_deviation(census, p["q"], p["n"])),
            "rows": rows}, "exact"


def cmd_probe(p, cfg):
    found = scanner.collision_probe(p["n"], p["q"], p["allow_large"])
    cert = distinctness_certificate(p["n"], "phi")
    if cert.certifies(p["q"]) and found:
        raise AssertionError(f"phi collisions above the certified threshold {cert.q_threshold}")
    rows = [{"phi": c.phi_value, "first": str(c.first), "second": str(c.second)} for c in found]
    return {"n": p["n"], "q": p["q"], "q_threshold": cert.q_threshold,
            "above_threshold": cert.certifies(p["q"]), "collisions": len(found), "rows": rows}, "exact"


def cmd_certify(p, cfg):
    cert = distinctness_certificate(p["n"], p["which"])
    rows = [{"q": q, "first": str(a), "second": str(b)} for q, a, b in cert.colliding_pairs]
    return {"n": cert.n, "which": cert.which, "q_threshold": cert.q_threshold,
            "pairs_checked": cert.pairs_checked, "collisions": len(rows), "rows": rows}, "exact"


def cmd_trend(p, cfg):
    r, ns = p["r"], p["n_list"]
    if p["target"].startswith("E"):
        rows = permstats.trend_E(r, ns)
        provenance = "float" if any(row["mode"] == "float" for row in rows) else "exact"
    else:
        rows = series.trend_W(r, ns)
        provenance = "float"
    rows = [{k: decimal_str(v) if isinstance(v, float) else v for k, v in row.items()} for row in rows]
    return {"r": r, "target": p["target"], "rows": rows}, provenance


def cmd_factor(p, cfg):
    f = parse_poly(p["poly"], p["q"])
    fac = factor(f, seed=p["seed"])
    rows = [{"factor": format_poly(P), "exponent": e} for P, e in fac.factors]
    return {"q": p["q"], "poly": format_poly(f), "unit": fac.unit, "rows": rows}, "exact"


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "csv"], default="json")
    common.add_argument("--output", "-o", help="write to this file instead of stdout")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for equal-degree splitting")
    common.add_argument("--threads", type=int, default=0,
                        help=f"worker processes (default: ${THREADS_ENV} or the CPU count)")
    common.add_argument("--cache", action="store_true", help="reuse and store results in the cache")
    common.add_argument("--cache-dir", help="cache directory (default: $CYCLESTATS_CACHE_DIR)")
    common.add_argument("--allow-large", action="store_true", help="lift the q^n <= 1e8 scan guard")

    parser = argparse.ArgumentParser(prog="cyclestats", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(func=func)
        return sp

    sp = add("stats", cmd_stats, "exact E_r(n) or W_r(n)")
    sp.add_argument("--which", choices=["E", "W"], required=True)
    sp.add_argument("-n", type=int, required=True)
    sp.add_argument("-r", type=int, default=2)
    sp.add_argument("--float", action="store_true", help="float recurrence for large n (E only)")

    sp = add("constants", cmd_constants, "bracket A_r and evaluate c_r")
    sp.add_argument("-r", type=int, required=True)
    sp.add_argument("-K", type=int, default=None, help="number of product factors")
    sp.add_argument("-J", type=int, default=30, help="terms per factor")
    sp.add_argument("--cr-only", action="store_true")

    sp = add("series", cmd_series, "coefficients of the W_r generating function")
    sp.add_argument("-r", type=int, required=True)
    sp.add_argument("-N", type=int, required=True)
    sp.add_argument("--method", choices=["product", "exppolylog"], default="product")
    sp.add_argument("--float", action="store_true")

    def scan_args(sp, single_q=True):
        if single_q:
            sp.add_argument("--q", type=int, required=True)
        sp.add_argument("-n", type=int, required=True)
        sp.add_argument("-r", type=int, default=2)
        sp.add_argument("--shifts", help='";"-separated polynomials "c0,c1,..." (default: 0..r-1)')

    sp = add("scan", cmd_scan, "exhaustive coincidence count for one field")
    scan_args(sp)
    sp.add_argument("--alpha", choices=list(scanner.ALPHAS), required=True)
    sp.add_argument("--k", type=int, default=None, help="k for d_k")

    sp = add("sweep", cmd_sweep, "scan over several primes")
    sp.add_argument("--primes", type=_int_list, required=True)
    scan_args(sp, single_q=False)
    sp.add_argument("--alpha", choices=list(scanner.ALPHAS), required=True)
    sp.add_argument("--k", type=int, default=None)

    sp = add("census", cmd_census, "joint cycle-type census of the shifted polynomials")
    scan_args(sp)

    sp = add("probe", cmd_probe, "phi collisions between distinct squarefree cycle types")
    sp.add_argument("-n", type=int, required=True)
    sp.add_argument("--q", type=int, required=True)

    sp = add("certify", cmd_certify, "distinctness certificate for structure polynomials")
    sp.add_argument("-n", type=int, required=True)
    sp.add_argument("--which", choices=["phi", "sigma"], default="phi")

    sp = add("trend", cmd_trend, "ratios against the leading asymptotics")
    sp.add_argument("-r", type=int, default=2)
    sp.add_argument("--n-list", type=_int_list, required=True)
    sp.add_argument("--target", choices=["E", "W", "E-asymptotic", "W-asymptotic"], default="E")

    sp = add("factor", cmd_factor, "factor a polynomial given as c0,c1,...")
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--poly", required=True)
    return parser


def run(cfg: RunConfig, func) -> ResultRecord:
    cache = ResultCache(cfg.cache_dir) if cfg.cache else None
    if cache is not None:
        hit = cache.get(cfg.command, cfg.params)
        if hit is not None:
            return hit
    payload, provenance = func(cfg.params, cfg)
    record = ResultRecord(cfg.command, cfg.params, payload, provenance)
    if cache is not None:
        cache.put(record)
    return record


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = RunConfig.from_args(args)
    try:
        record = run(cfg, args.func)
    except BudgetExceeded as exc:
        print(f"cyclestats: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (DistinctnessError, AssertionError) as exc:
        print(f"cyclestats: invariant violated: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except (ValueError, ZeroDivisionError) as exc:
        print(f"cyclestats: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    text = record.to_json() if cfg.format == "json" else record.to_csv()
    if cfg.output:
        with open(cfg.output, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text.rstrip("\n"))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
