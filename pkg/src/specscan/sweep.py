"""Single solves, (F, q0) sweeps and tiling reports behind the command line."""

from __future__ import annotations

import io
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .bayesian import check_bayesian_equilibrium, solve_bayesian
from .errors import DomainError
from .linear import find_jumps, jump_threshold, solve_known_characteristics
from .oracle import GridSpec, bayesian_grid_search, grid_equilibrium_search
from .params import NetworkParams, payoff_invader, payoff_scanner_expected, payoff_unrelated_invader
from .scenario import ScenarioConfig
from .simulate import validate_tiling


class VerificationError(Exception):
    """An oracle failed to confirm an analytic equilibrium."""


def fmt(v) -> str:
    return format(float(v), ".12g")


def csv_columns(cfg: ScenarioConfig) -> list[str]:
    cols = ["F", "q0", "x", "scanner_payoff"]
    for c in cfg.report_types:
        cols += [f"y({c:g})", f"invader_payoff({c:g})", f"detection({c:g})"]
    return cols + ["payoff_U", "detection_U"]


@dataclass
class PointResult:
    params: NetworkParams
    x: float
    label: str
    scanner_payoff: float
    ys: dict                     # report type -> y
    extra: dict = field(default_factory=dict)

    def row(self, cfg: ScenarioConfig) -> list[float]:
        p = self.params
        vals = [p.F, p.q0, self.x, self.scanner_payoff]
        for c in cfg.report_types:
            y = self.ys[c]
            vals += [y, payoff_invader(p.with_(c=c), self.x, y, check=False), self.x + y]
        return vals + [payoff_unrelated_invader(p, self.x), self.x + p.a]


def solve_point(cfg: ScenarioConfig, p: NetworkParams, check: bool = True) -> PointResult:
    if cfg.point_prior:
        rep = solve_known_characteristics(p)
        return PointResult(p, rep.x, rep.case_label, rep.scanner_payoff,
                           {c: rep.y for c in cfg.report_types}, {"report": rep})
    eq = solve_bayesian(p, cfg.prior, verify=check)
    return PointResult(p, eq.x, f"bayesian/{eq.regime}",
                       payoff_scanner_expected(p, cfg.prior, eq.x, eq.y_policy),
                       {c: float(eq.y(c)) for c in cfg.report_types}, {"equilibrium": eq})


def verify_point(cfg: ScenarioConfig, res: PointResult, grid: GridSpec) -> tuple[bool, str]:
    """Oracle confirmation of one solved point; returns (ok, message)."""
    p = res.params
    if cfg.point_prior:
        y = res.ys[cfg.report_types[0]] if cfg.report_types else res.extra["report"].y
        g = grid_equilibrium_search(p, grid)
        ok = g.near(res.x, y)
        return ok, f"grid {grid.x_points}x{grid.y_points}: eps_grid={fmt(g.eps_grid)}, " \
                   f"{len(g.points)} certified points, analytic point {'inside' if ok else 'OUTSIDE'} one cell"
    atoms = cfg.prior.discretize(64)
    eq_d = solve_bayesian(p, atoms, verify=False)
    g = bayesian_grid_search(p, atoms, grid)
    spot = check_bayesian_equilibrium(p, cfg.prior, res.extra["equilibrium"], seed=cfg.seed)
    ok = g.near(eq_d.x) and spot["ok"]
    return ok, f"grid {grid.x_points}x{grid.y_points} on 64 atoms: eps_grid={fmt(g.eps_grid)}, " \
               f"x={fmt(eq_d.x)} {'inside' if g.near(eq_d.x) else 'OUTSIDE'} one cell; " \
               f"spot check gains S={spot['scanner_gain']:.3g} I={spot['invader_gain']:.3g}"


def _csv(cfg, results) -> str:
    buf = io.StringIO()
    buf.write(",".join(csv_columns(cfg)) + "\n")
    for r in results:
        buf.write(",".join(fmt(v) for v in r.row(cfg)) + "\n")
    return buf.getvalue()


@dataclass
class SolveOutput:
    text: str
    csv: str
    verified: bool | None = None


def run_solve(cfg: ScenarioConfig, verify: bool | None = None) -> SolveOutput:
    if cfg.sweep:
        raise DomainError("solve takes a scenario without sweep axes")
    verify = cfg.verify if verify is None else verify
    res = solve_point(cfg, cfg.params)
    p = res.params
    lines = [f"case: {res.label}", f"x = {fmt(res.x)}"]
    for c in cfg.report_types:
        lines.append(f"y({c:g}) = {fmt(res.ys[c])}  P_R({c:g}) = {fmt(res.x + res.ys[c])}")
    if not cfg.point_prior:
        eq = res.extra["equilibrium"]
        lines.append(f"y(c) = clamp({fmt(eq.y_policy.L)}, a, c); y_bar = {fmt(eq.y_bar)}"
                     + ("  [flat aggregate response]" if eq.flat else ""))
    lines.append(f"P_U = {fmt(res.x + p.a)}")
    lines.append(f"scanner_payoff = {fmt(res.scanner_payoff)}")
    lines.append(f"payoff_U = {fmt(payoff_unrelated_invader(p, res.x))}")
    verified = None
    if verify:
        verified, msg = verify_point(cfg, res, GridSpec(400, 400))
        lines.append(f"verify: {'ok' if verified else 'FAILED'} ({msg})")
    return SolveOutput("\n".join(lines) + "\n", _csv(cfg, [res]), verified)


def sweep_grid(cfg: ScenarioConfig):
    """Parameter points in row order: F outer, q0 inner."""
    axes = {a.parameter: a for a in cfg.sweep}
    def values(name):
        if name in axes:
            ax = axes[name]
            return np.linspace(ax.lo, ax.hi, ax.steps)
        return np.array([getattr(cfg.params, name)])
    return values("F"), values("q0")


@dataclass
class SweepOutput:
    csv: str
    jumps_csv: str
    results: list
    F: np.ndarray
    q0: np.ndarray
    failures: list = field(default_factory=list)


JUMP_COLUMNS = ["axis", "fixed", "fixed_value", "variable", "left", "right",
                "left_value", "right_value", "left_case", "right_case", "location", "gap"]


def run_sweep(cfg: ScenarioConfig, verify: bool | None = None,
              verify_grid: GridSpec = GridSpec(100, 100)) -> SweepOutput:
    if not cfg.sweep:
        raise DomainError("sweep needs at least one sweep axis")
    verify = cfg.verify if verify is None else verify
    Fs, qs = sweep_grid(cfg)
    results = [solve_point(cfg, cfg.params.with_(F=float(F), q0=float(q0))) for F in Fs for q0 in qs]
    failures = []
    if verify:
        for r in results:
            ok, msg = verify_point(cfg, r, verify_grid)
            if not ok:
                failures.append(f"F={fmt(r.params.F)} q0={fmt(r.params.q0)}: {msg}")
    grid = np.array(results, dtype=object).reshape(len(Fs), len(qs))
    jumps = []
    axes = {a.parameter: a for a in cfg.sweep}
    for axis, line_vals, fixed_name, fixed_vals, lines in (
        ("F", Fs, "q0", qs, [grid[:, j] for j in range(len(qs))]),
        ("q0", qs, "F", Fs, [grid[i, :] for i in range(len(Fs))]),
    ):
        if axis not in axes or len(line_vals) < 2:
            continue
        ax = axes[axis]
        thr = jump_threshold(ax.hi - ax.lo, ax.steps)
        for fixed, line in zip(fixed_vals, lines):
            series = {"x": [r.x for r in line]}
            for c in cfg.report_types:
                series[f"y({c:g})"] = [r.ys[c] for r in line]

            def values_at(v, axis=axis, fixed_name=fixed_name, fixed=fixed):
                r = solve_point(cfg, cfg.params.with_(**{axis: v, fixed_name: float(fixed)}),
                                check=False)
                return {"x": r.x, **{f"y({c:g})": r.ys[c] for c in cfg.report_types}}

            for jr in find_jumps(line_vals, series, [r.label for r in line], thr, values_at):
                jumps.append([axis, fixed_name, fmt(fixed), jr.variable, fmt(jr.left_param),
                              fmt(jr.right_param), fmt(jr.left_value), fmt(jr.right_value),
                              jr.left_label, jr.right_label, fmt(jr.location), fmt(jr.confirmed_gap)])
    jbuf = io.StringIO()
    jbuf.write(",".join(JUMP_COLUMNS) + "\n")
    for j in jumps:
        jbuf.write(",".join(j) + "\n")
    return SweepOutput(_csv(cfg, results), jbuf.getvalue(), results, Fs, qs, failures)


def parse_width(raw) -> Fraction | float:
    """Decimal strings become exact fractions, so tilings are built without round-off."""
    if isinstance(raw, str):
        try:
            return Fraction(raw)
        except (ValueError, ZeroDivisionError):
            raise DomainError(f"not a number: {raw!r}") from None
    return raw


def run_tiling(x, y, trials: int | None = None, seed: int = 0,
               grid_resolution: int = 10_001) -> str:
    x, y = parse_width(x), parse_width(y)
    rep = validate_tiling(x, y, grid_resolution, trials, seed)
    sol = rep.solution
    out = [
        f"regime: {sol.regime}",
        f"M = {sol.M}",
        f"epsilon = {sol.epsilon}",
        f"value P(x,y) = {rep.analytic_value} ({fmt(rep.analytic_value)})",
        f"scanner bands ({len(sol.scanner_bands)}):",
        *[f"  [{b.start}, {b.end}]" for b in sol.scanner_bands],
        f"invader bands ({len(sol.invader_bands)}):",
        *[f"  [{b.start}, {b.end}]" for b in sol.invader_bands],
        f"overlap-matrix value = {rep.matrix_value}",
        f"guarantee sweep: min detection = {fmt(rep.guarantee_min)}, "
        f"max detection = {fmt(rep.guarantee_max)} (grid step {rep.grid_step:.3g})",
        f"separation: {'ok' if rep.separation_ok else '; '.join(rep.violations)}",
    ]
    if rep.mc is not None:
        out.append(f"monte carlo ({rep.mc.trials} trials, seed {seed}): "
                   f"{fmt(rep.mc.estimate)} +/- {fmt(rep.mc.half_width)}")
    return "\n".join(out) + "\n"
