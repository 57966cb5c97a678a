"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -s`` to see the lines as they are
produced; they are also repeated in the terminal summary of any run.
"""

import time
from fractions import Fraction

import numpy as np

from conftest import random_params, random_piecewise_prior
from specscan import cli
from specscan.bayesian import solve_bayesian
from specscan.linear import best_response_invader, solve_known_characteristics
from specscan.oracle import GridSpec, grid_equilibrium_search, monte_carlo_detection
from specscan.params import payoff_scanner_expected
from specscan.priors import TypeDistribution
from specscan.scenario import packaged_config
from specscan.sweep import run_sweep
from specscan.tiling import (
    build_tiling,
    detection_value,
    guarantee_check,
    matrix_value,
    separation_violations,
)

RESULTS: list[str] = []

# The 50 x 50 grid over (0, 0.45]^2, held as exact rationals.
AXIS = [Fraction(9 * k, 1000) for k in range(1, 51)]


def record(number: int, name: str, ok: bool, detail: str) -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {name} ({detail})"
    RESULTS.append(line)
    print(line)
    assert ok, line


def test_criterion_1_tiling_value():
    t0 = time.perf_counter()
    mismatches, brackets = [], []
    max_step = 0.0
    for x in AXIS:
        for y in AXIS:
            sol = build_tiling(x, y)
            v = detection_value(x, y)
            if matrix_value(sol) != v:
                mismatches.append((x, y))
            g = guarantee_check(sol, 10_001)
            max_step = max(max_step, g.grid_step)
            # Both sweeps must land on the value; one grid step is the allowance.
            if not (abs(g.min_detect - float(v)) <= g.grid_step
                    and abs(g.max_detect - float(v)) <= g.grid_step
                    and g.min_detect >= float(v) - 1e-12 and g.max_detect <= float(v) + 1e-12):
                brackets.append((x, y, g.min_detect, g.max_detect, v))
    elapsed = time.perf_counter() - t0
    ok = not mismatches and not brackets and elapsed < 60
    record(1, "tiling value correctness", ok,
           f"2500 points, {len(mismatches)} matrix mismatches, {len(brackets)} bracket misses, "
           f"grid step <= {max_step:.3g}, {elapsed:.1f}s of 60s")


def test_criterion_2_separation_invariants():
    bad = []
    for x in AXIS:
        for y in AXIS:
            bad += separation_violations(build_tiling(x, y))
    record(2, "tiling separation invariants", not bad,
           f"2500 points, {len(bad)} violations" + (f", first: {bad[0]}" if bad else ""))


def test_criterion_3_nash_oracle():
    rng = np.random.default_rng(20240601)
    misses, eps = [], []
    for _ in range(60):
        p = random_params(rng)
        rep = solve_known_characteristics(p)
        g = grid_equilibrium_search(p, GridSpec(400, 400))
        eps.append(g.eps_grid)
        if not g.near(rep.x, rep.y):
            misses.append((p, rep.case_label))
    record(3, "Nash oracle equivalence", not misses,
           f"60 draws on a 400x400 grid, {len(misses)} misses, "
           f"eps_grid in [{min(eps):.2e}, {max(eps):.2e}]")


def test_criterion_4_bayesian_reduction():
    rng = np.random.default_rng(4)
    worst = 0.0
    for _ in range(50):
        p = random_params(rng).with_(q0=1.0)
        known = solve_known_characteristics(p)
        eq = solve_bayesian(p, TypeDistribution.point(p.c))
        worst = max(worst, abs(eq.x - known.x), abs(eq.y(p.c) - known.y))
    record(4, "Bayesian reduction to a point mass", worst <= 1e-9,
           f"50 draws with q0=1, max coordinate gap {worst:.2e} (tol 1e-9)")


def test_criterion_5_bayesian_fixed_point():
    rng = np.random.default_rng(5)
    worst_y = worst_x = 0.0
    for _ in range(50):
        p = random_params(rng)
        q = random_piecewise_prior(rng, p.a, p.b)
        eq = solve_bayesian(p, q)
        for c in q.sample_types(100, rng):
            br = best_response_invader(p.with_(c=float(c)), eq.x)
            worst_y = max(worst_y, abs(eq.y(float(c)) - br))
        v = payoff_scanner_expected(p, q, eq.x, eq.y_policy)
        alt = max(payoff_scanner_expected(p, q, xx, eq.y_policy) for xx in (p.a, p.b))
        worst_x = max(worst_x, alt - v)
    ok = worst_y <= 1e-10 and worst_x <= 1e-9
    record(5, "Bayesian fixed point", ok,
           f"50 priors x 100 types, max |y - BR| {worst_y:.2e} (tol 1e-10), "
           f"max Scanner gain over {{a, b}} {worst_x:.2e} (tol 1e-9)")


def test_criterion_6_default_sweep():
    cfg = packaged_config("illustration_sweep.cfg")
    t0 = time.perf_counter()
    out = run_sweep(cfg)
    elapsed = time.perf_counter() - t0
    nF, nq = len(out.F), len(out.q0)
    b0 = max(cfg.report_types)
    x = np.array([r.x for r in out.results]).reshape(nF, nq)
    y = np.array([r.ys[b0] for r in out.results]).reshape(nF, nq)
    a = cfg.params.a
    p_u = np.array([r.row(cfg)[-1] for r in out.results]).reshape(nF, nq)
    tol = 1e-9
    x_mono = bool((np.diff(x, axis=0) >= -tol).all() and (np.diff(x, axis=1) >= -tol).all())
    y_mono = bool((np.diff(y, axis=0) <= tol).all() and (np.diff(y, axis=1) <= tol).all())
    # Jump records are already confirmed by bisection; keep only discontinuities in x.
    x_jumps = [ln for ln in out.jumps_csv.splitlines()[1:]
               if ln.split(",")[3] == "x" and float(ln.split(",")[-1]) > 1e-3]
    det = x + y
    d = np.diff(det, axis=0)
    non_mono = [j for j in range(nq) if (d[:, j] > tol).any() and (d[:, j] < -tol).any()]
    pu_ok = bool(np.abs(p_u - (x + a)).max() <= 1e-12)
    ok = x_mono and bool(x_jumps) and y_mono and bool(non_mono) and pu_ok and elapsed < 30
    record(6, "default (F, q0) sweep", ok,
           f"{nF}x{nq} grid, x monotone={x_mono} with {len(x_jumps)} confirmed jumps, "
           f"y({b0:g}) non-increasing={y_mono}, non-monotone detection on {len(non_mono)} q0 slices, "
           f"P_U=x+a {pu_ok}, {elapsed:.1f}s of 30s")


def test_criterion_7_touch_points():
    bad = []
    for n in range(2, 11):
        total = Fraction(1, n)
        for share in (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)):
            x, y = total * share, total * (1 - share)
            v = detection_value(x, y)
            if v != x + y or matrix_value(build_tiling(x, y)) != x + y:
                bad.append((n, share))
    record(7, "linearization touch points", not bad,
           f"n=2..10 with three splits each, {len(bad)} inexact")


def test_criterion_8_monte_carlo():
    rng = np.random.default_rng(8)
    misses, repro = [], True
    worst = 0.0
    for _ in range(10):
        x, y = (float(v) for v in rng.uniform(0.02, 0.45, size=2))
        sol = build_tiling(x, y)
        est = monte_carlo_detection(sol, 1_000_000, seed=123)
        again = monte_carlo_detection(sol, 1_000_000, seed=123)
        repro &= est == again
        gap = abs(est.estimate - float(detection_value(x, y)))
        if gap > 3 * est.half_width:
            misses.append((x, y, est))
        if est.half_width > 0:
            worst = max(worst, gap / est.half_width)
    ok = not misses and repro
    record(8, "Monte Carlo consistency", ok,
           f"10 points x 1e6 trials, {len(misses)} outside 3 half-widths, "
           f"worst {worst:.2f} half-widths, bit-reproducible={repro}")


def test_criterion_9_determinism(tmp_path):
    paths = [tmp_path / f"run{i}.csv" for i in range(2)]
    codes = [cli.main(["sweep", "--seed", "11", "--out", str(path)]) for path in paths]
    same = paths[0].read_bytes() == paths[1].read_bytes()
    jumps_same = (tmp_path / "run0_jumps.csv").read_bytes() == (tmp_path / "run1_jumps.csv").read_bytes()
    ok = codes == [0, 0] and same and jumps_same
    record(9, "deterministic CSV", ok,
           f"two sweep runs, exit codes {codes}, CSV identical={same}, jumps identical={jumps_same}")
