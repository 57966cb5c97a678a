"""Brute-force checks for the analytic solvers.

Grid searches certify epsilon-equilibria of the bandwidth game; the overlap
matrix and Monte Carlo sampler check the band-placement value.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .params import NetworkParams
from .priors import TypeDistribution
from .tiling import TilingSolution, guarantee_check, matrix_value, overlap_matrix

MC_BLOCK = 1 << 16
Z95 = 1.959963984540054


@dataclass(frozen=True)
class GridSpec:
    x_points: int = 400
    y_points: int = 400

    def __post_init__(self):
        if self.x_points < 2 or self.y_points < 2:
            raise DomainError("grids need at least 2 points per axis")


@dataclass(frozen=True)
class GridSearchResult:
    points: np.ndarray   # rows of (x, y, max unilateral gain)
    eps_grid: float
    dx: float
    dy: float

    def near(self, x: float, y: float, cells: float = 1.0) -> bool:
        """True when some certified point lies within ``cells`` grid cells of ``(x, y)``."""
        if len(self.points) == 0:
            return False
        tol = 1e-12
        ok = (np.abs(self.points[:, 0] - x) <= cells * self.dx + tol) & \
             (np.abs(self.points[:, 1] - y) <= cells * self.dy + tol)
        return bool(ok.any())


def _corner_max(f, xs, ys):
    return max(abs(f(x, y)) for x in xs for y in ys)


def grid_slack(p: NetworkParams, dx: float, dy: float) -> float:
    """Largest unilateral gain a grid point next to a true equilibrium can show.

    For a player with payoff Lipschitz constants ``L_own`` and ``L_other``,
    the gain at the nearest grid point is at most
    ``L_own * h_own / 2 + L_other * h_other``. All partial derivatives are
    affine, so their maxima sit at the corners of the strategy box.
    """
    xs, ys = (p.a, p.b), (p.a, p.c)
    s_dx = _corner_max(lambda x, y: p.F + p.q0 * p.V * y + (1 - p.q0) * p.V * p.a - p.C_S, xs, ys)
    s_dy = _corner_max(lambda x, y: p.q0 * (p.F - p.V * (1 - x - 2 * y)), xs, ys)
    i_dy = _corner_max(lambda x, y: p.U * (1 - x) - p.F - p.C_I - 2 * p.U * y, xs, ys)
    i_dx = _corner_max(lambda x, y: p.U * y + p.F, xs, ys)
    return max(s_dx * dx / 2 + s_dy * dy, i_dy * dy / 2 + i_dx * dx)


def grid_equilibrium_search(p: NetworkParams, grid: GridSpec = GridSpec()) -> GridSearchResult:
    """Every grid point where neither player gains more than ``eps_grid`` by a grid deviation.

    The Scanner's payoff is the q0-weighted mix against a related Invader
    playing ``y`` and an unrelated one playing ``a``.
    """
    xs = np.linspace(p.a, p.b, grid.x_points)
    ys = np.linspace(p.a, p.c, grid.y_points)
    X, Y = np.meshgrid(xs, ys, indexing="ij")
    gain = lambda yy: p.F * (X + yy) - p.V * yy * (1 - X - yy)  # noqa: E731
    S = p.q0 * gain(Y) + (1 - p.q0) * gain(p.a) - p.C_S * X
    I = p.U * (1 - X - Y) * Y - p.F * (X + Y) - p.C_I * Y
    g_s = S.max(axis=0, keepdims=True) - S
    g_i = I.max(axis=1, keepdims=True) - I
    g = np.maximum(g_s, g_i)
    dx = xs[1] - xs[0]
    dy = ys[1] - ys[0]
    eps = grid_slack(p, dx, dy)
    mask = g <= eps + 1e-15
    pts = np.column_stack([X[mask], Y[mask], g[mask]])
    return GridSearchResult(pts, float(eps), float(dx), float(dy))


@dataclass(frozen=True)
class BayesianGridResult:
    xs: np.ndarray            # certified Scanner grid points
    gains: np.ndarray         # Scanner's unilateral gain at each
    eps_grid: float
    dx: float
    atoms: TypeDistribution

    def near(self, x: float, cells: float = 1.0) -> bool:
        return bool(np.any(np.abs(self.xs - x) <= cells * self.dx + 1e-12))


def bayesian_grid_search(p: NetworkParams, q: TypeDistribution, grid: GridSpec = GridSpec(),
                         n_atoms: int = 64) -> BayesianGridResult:
    """Grid search for the Bayesian game on a discretized prior.

    Each type picks its grid best response on ``[a, c]``; a Scanner grid
    point is certified when its gain against those responses is at most
    ``q0 V (dx/4 + dy/2)(b - a)``, the slope error a half-cell offset induces.
    """
    atoms = q.discretize(n_atoms)
    cs = np.array([c for c, _ in atoms.atoms])
    ws = np.array([w for _, w in atoms.atoms])
    xs = np.linspace(p.a, p.b, grid.x_points)
    t = np.linspace(0.0, 1.0, grid.y_points)
    Y = p.a + t[None, :] * (cs[:, None] - p.a)            # (types, y_points)
    X = xs[:, None, None]
    I = p.U * (1 - X - Y) * Y - p.F * (X + Y) - p.C_I * Y  # (x, types, y)
    y_best = np.take_along_axis(Y[None].repeat(len(xs), 0), I.argmax(axis=2)[..., None], 2)[..., 0]
    m1 = y_best @ ws
    m2 = (y_best**2) @ ws
    # Scanner payoff at x' against the responses chosen at x_i
    XP = xs[None, :]
    related = p.F * (XP + m1[:, None]) - p.V * (m1[:, None] * (1 - XP) - m2[:, None])
    unrelated = p.F * (XP + p.a) - p.V * p.a * (1 - XP - p.a)
    S = p.q0 * related + (1 - p.q0) * unrelated - p.C_S * XP
    own = np.diag(S)
    g = S.max(axis=1) - own
    dx = xs[1] - xs[0]
    dy = float((cs.max() - p.a) / (grid.y_points - 1))
    eps = p.q0 * p.V * (dx / 4 + dy / 2) * (p.b - p.a)
    mask = g <= eps + 1e-15
    return BayesianGridResult(xs[mask], g[mask], float(eps), float(dx), atoms)


@dataclass(frozen=True)
class OverlapOracleResult:
    matrix_value: object
    guarantee_min: float
    guarantee_max: float
    grid_step: float


def overlap_value_oracle(x, y, sol: TilingSolution, grid_resolution: int = 10_001) -> OverlapOracleResult:
    """Value of the finite game restricted to the tiling's bands, plus the continuum sweep."""
    if sol.x != x or sol.y != y:
        raise DomainError(f"tiling was built for ({sol.x}, {sol.y}), not ({x}, {y})")
    g = guarantee_check(sol, grid_resolution)
    return OverlapOracleResult(matrix_value(sol), g.min_detect, g.max_detect, g.grid_step)


@dataclass(frozen=True)
class MonteCarloEstimate:
    estimate: float
    half_width: float
    trials: int


def monte_carlo_detection(sol: TilingSolution, trials: int, seed: int = 0) -> MonteCarloEstimate:
    """Empirical detection rate with both players drawing bands uniformly.

    Trials run in blocks of ``MC_BLOCK`` with one child seed per block, so
    the estimate depends only on ``(trials, seed)``.
    """
    if trials < 1:
        raise DomainError("trials must be >= 1")
    mat = overlap_matrix(sol)
    n_s, n_i = mat.shape
    n_blocks = -(-trials // MC_BLOCK)
    children = np.random.SeedSequence(seed).spawn(n_blocks)
    hits = 0
    remaining = trials
    for child in children:
        n = min(MC_BLOCK, remaining)
        rng = np.random.default_rng(child)
        i = rng.integers(0, n_s, size=n)
        j = rng.integers(0, n_i, size=n)
        hits += int(mat[i, j].sum())
        remaining -= n
    p_hat = hits / trials
    half = Z95 * np.sqrt(p_hat * (1 - p_hat) / trials)
    return MonteCarloEstimate(p_hat, float(half), trials)
