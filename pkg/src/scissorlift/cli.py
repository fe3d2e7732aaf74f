"""Command line entry point.

Exit codes: 0 success, 1 invalid input, 2 singular point, 3 no feasible
placement, 4 verification failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from .config import ConfigError, RunConfig, load_config
from .errors import ScissorLiftError
from .forces import analyze_at, velocity_ratio
from .model import check_theta
from .report import candidate_record, row_record, rows_to_csv, rows_to_json, rows_to_svg, search_report
from .search import evaluate, grid_search, refine, sweep
from .verify import run_all

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_SINGULAR = 2
EXIT_INFEASIBLE = 3
EXIT_VERIFY_FAILED = 4


def _fail(message: str, code: int = EXIT_INVALID) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def _load(path: str, need_placement: bool = False) -> RunConfig:
    cfg = load_config(path)
    if need_placement and cfg.placement is None:
        raise ConfigError("placement", "missing")
    return cfg


def cmd_analyze(args) -> int:
    cfg = _load(args.config, need_placement=True)
    theta = check_theta(math.radians(args.theta_deg))
    row = analyze_at(cfg.lift, cfg.placement, theta)
    print(json.dumps(row_record(row), indent=2, allow_nan=False))
    if row.singular:
        ratio = velocity_ratio(cfg.placement, cfg.lift.n, theta)
        return _fail(f"singular point: {ratio}", EXIT_SINGULAR)
    return EXIT_OK


def cmd_sweep(args) -> int:
    cfg = _load(args.config, need_placement=True)
    rows = sweep(cfg.lift, cfg.placement, cfg.dom, args.samples)
    render = {"csv": rows_to_csv, "json": rows_to_json, "svg": rows_to_svg}[args.format]
    text = render(rows)
    try:
        Path(args.out).write_text(text, encoding="utf-8")
    except OSError as exc:
        return _fail(f"cannot write {args.out}: {exc.strerror}")
    singular = sum(r.singular for r in rows)
    print(f"wrote {len(rows)} rows ({singular} singular) to {args.out}")
    return EXIT_OK


def cmd_optimize(args) -> int:
    cfg = _load(args.config)
    if cfg.search is None:
        raise ConfigError("search", "missing; optimize needs a search section")
    problem = cfg.search
    result = grid_search(problem)
    refined = None
    if cfg.refine and result.best is not None:
        p = refine(problem.lift, result.best.placement, problem)
        refined = evaluate(problem, p)
    report = search_report(result, problem.objective.value, refined)
    try:
        Path(args.out).write_text(report, encoding="utf-8")
    except OSError as exc:
        return _fail(f"cannot write {args.out}: {exc.strerror}")
    best = result.best
    if best is None:
        print(f"no feasible placement among {len(result.ranked)} candidates; report in {args.out}")
        return EXIT_INFEASIBLE
    print(f"best of {len(result.ranked)} candidates: {json.dumps(candidate_record(best))}")
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.trials < 1:
        return _fail(f"--trials must be at least 1, got {args.trials}")
    cfg = _load(args.config)
    b_range = cfg.search.b_range if cfg.search is not None else (-1.0, 3.0)
    results = run_all(cfg.lift, cfg.dom, args.trials, args.seed, b_range)
    failed = []
    for r in results:
        status = "ok" if r.passed else "FAIL"
        print(f"{r.name:<10} cases={r.cases:<6} max_rel_dev={r.max_deviation:.3e} tol={r.tolerance:.0e} {status}")
        if not r.passed:
            failed.append(r)
    if failed:
        for r in failed:
            if r.worst is None:
                print(f"{r.name}: no admissible cases in the configured domain", file=sys.stderr)
                continue
            p, t1, t2 = r.worst
            where = f"theta={t1!r}" if t1 == t2 else f"theta in [{t1!r}, {t2!r}]"
            print(
                f"{r.name}: worst a={p.a!r} b={p.b!r} i={p.i} slope={p.slope.value} {where}",
                file=sys.stderr,
            )
        return EXIT_VERIFY_FAILED
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="scissorlift", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="force and velocity ratio at one angle")
    p.add_argument("--config", required=True)
    p.add_argument("--theta-deg", type=float, required=True)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("sweep", help="tabulate or plot over the configured angle range")
    p.add_argument("--config", required=True)
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("--format", choices=("csv", "json", "svg"), default="csv")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("optimize", help="rank actuator placements")
    p.add_argument("--config", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_optimize)

    p = sub.add_parser("verify", help="randomized checks against the geometry oracle")
    p.add_argument("--config", required=True)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ScissorLiftError as exc:
        return _fail(str(exc))


if __name__ == "__main__":
    raise SystemExit(main())
