"""Command line: ``specscan {solve,sweep,tiling}``.

Exit codes: 0 success, 2 configuration error, 3 solver error,
4 verification failure.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import replace
from pathlib import Path

import numpy as np

from .errors import ConfigError, ConsistencyError, DomainError
from .scenario import load_config, packaged_config
from .svg import heatmap_svg
from .sweep import run_solve, run_sweep, run_tiling

EXIT_OK, EXIT_CONFIG, EXIT_SOLVER, EXIT_VERIFY = 0, 2, 3, 4


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="specscan", description="Scanner vs Invader bandwidth games.")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, help_ in (("solve", "solve one scenario"), ("sweep", "sweep F and/or q0")):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--config", help="scenario file (default: the shipped illustration)")
        p.add_argument("--out", help="CSV output path (default: stdout)")
        p.add_argument("--verify", action="store_true", help="confirm with the grid oracles")
        p.add_argument("--seed", type=int, help="override the scenario seed")
        if name == "sweep":
            p.add_argument("--svg", help="write heatmaps of x and the last reported y(c)")

    p = sub.add_parser("tiling", help="band-placement strategies for fixed widths")
    p.add_argument("x")
    p.add_argument("y")
    p.add_argument("--trials", type=int, help="Monte Carlo trials")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="report path (default: stdout)")
    return parser


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _config(args, default_name):
    cfg = load_config(args.config) if args.config else packaged_config(default_name)
    if args.seed is not None:
        cfg = replace(cfg, seed=args.seed)
    return cfg


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "tiling":
            if args.trials is not None and args.trials < 1:
                raise ConfigError("--trials", "must be >= 1")
            return _tiling(args)
        cfg = _config(args, "illustration.cfg" if args.command == "solve" else "illustration_sweep.cfg")
        if args.command == "solve" and cfg.sweep:
            raise ConfigError("sweep", "solve takes a scenario without sweep axes; use 'sweep'")
        if args.command == "sweep" and not cfg.sweep:
            raise ConfigError("sweep", "no sweep axes in the scenario")
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (DomainError, ConsistencyError) as exc:
        print(f"solver error: {exc}", file=sys.stderr)
        return EXIT_SOLVER

    verify = args.verify or cfg.verify
    try:
        if args.command == "solve":
            res = run_solve(cfg, verify)
            if args.out:
                Path(args.out).write_text(res.csv)
                sys.stdout.write(res.text)
            else:
                sys.stdout.write(res.text + "\n" + res.csv)
            if verify and not res.verified:
                print("verification failed", file=sys.stderr)
                return EXIT_VERIFY
            return EXIT_OK

        res = run_sweep(cfg, verify)
    except (DomainError, ConsistencyError) as exc:
        print(f"solver error: {exc}", file=sys.stderr)
        return EXIT_SOLVER
    _emit(res.csv, args.out)
    if args.out:
        out = Path(args.out)
        out.with_name(out.stem + "_jumps.csv").write_text(res.jumps_csv)
    else:
        sys.stderr.write(res.jumps_csv)
    if args.svg:
        x = np.array([r.x for r in res.results]).reshape(len(res.F), len(res.q0))
        panels = [("x", x)]
        if cfg.report_types:
            c = cfg.report_types[-1]
            panels.append((f"y({c:g})", np.array([r.ys[c] for r in res.results]).reshape(x.shape)))
        Path(args.svg).write_text(heatmap_svg(panels, res.F, res.q0))
    if res.failures:
        for f in res.failures:
            print(f"verification failed at {f}", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def _tiling(args) -> int:
    try:
        text = run_tiling(args.x, args.y, args.trials, args.seed)
    except DomainError as exc:
        print(f"solver error: {exc}", file=sys.stderr)
        return EXIT_SOLVER
    _emit(text, args.out)
    return EXIT_OK
