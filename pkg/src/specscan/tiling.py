"""Maxmin band placement for fixed widths: uniform tiling strategies.

The Scanner scans a band of width ``x``, the Invader occupies a band of width
``y`` and detection happens when the closed bands intersect. Both players mix
uniformly over a finite set of bands; the value of the game is ``1/M`` or
``1/(M+1)`` with ``M = floor(1/(x+y))``.

Positions are computed exactly when the widths are ``int`` or
``fractions.Fraction``; float widths use float arithmetic and a ``1e-12``
tolerance for equality tests.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import DomainError
from .params import Band

FLOAT_TOL = 1e-12

M_REGIME = "M-regime"
M_PLUS_REGIME = "M+1-regime"
OVERLAP_REGIME = "overlap-forced"


def _is_exact(*vals) -> bool:
    return all(isinstance(v, (int, Fraction)) and not isinstance(v, bool) for v in vals)


def _tol(x, y):
    return 0 if _is_exact(x, y) else FLOAT_TOL


def _check_widths(x, y):
    if not x > 0 or not y > 0:
        raise DomainError(f"band widths must be positive, got x={x}, y={y}")


def tile_count(x, y) -> int:
    """``M = floor(1/(x+y))``, robust to float round-off near ``1/n``."""
    s = x + y
    if _is_exact(x, y):
        return math.floor(Fraction(1) / s)
    return math.floor(1.0 / s + FLOAT_TOL)


def regime(x, y) -> str:
    _check_widths(x, y)
    if x + y >= 1 - _tol(x, y):
        return OVERLAP_REGIME
    M = tile_count(x, y)
    if 1 - (x + y) * M <= y + _tol(x, y):
        return M_REGIME
    return M_PLUS_REGIME


def detection_value(x, y):
    """Value ``P(x, y)`` of the band-placement game (worst-case detection probability).

    Returns a ``Fraction`` for exact inputs and a float otherwise.
    """
    reg = regime(x, y)
    one = Fraction(1) if _is_exact(x, y) else 1.0
    if reg == OVERLAP_REGIME:
        return one
    M = tile_count(x, y)
    return one / M if reg == M_REGIME else one / (M + 1)


@dataclass(frozen=True)
class TilingSolution:
    x: object
    y: object
    scanner_bands: tuple
    invader_bands: tuple
    value: object
    M: int
    epsilon: object
    regime: str

    @property
    def exact(self) -> bool:
        return _is_exact(self.x, self.y)


def epsilon_bounds(x, y):
    """Open interval of admissible spacing parameters, or None when unused."""
    reg = regime(x, y)
    M = tile_count(x, y)
    if reg == M_REGIME:
        return (0, x / M)
    if reg == M_PLUS_REGIME and M > 1:
        return (0, (1 - y - M * (x + y)) / (M - 1))
    return None


def default_epsilon(x, y):
    bounds = epsilon_bounds(x, y)
    if bounds is None:
        return 0
    return bounds[1] / 2


def build_tiling(x, y, epsilon=None) -> TilingSolution:
    """Equilibrium band sets for widths ``(x, y)``.

    ``epsilon`` defaults to the midpoint of its admissible interval. The
    Invader's shifted bands in the ``M`` regime keep their width ``y``: band
    ``k`` starts at ``k(x+y) - y - epsilon(M+1-k)``.
    """
    _check_widths(x, y)
    if x > 1 or y > 1:
        raise DomainError(f"band widths must be <= 1, got x={x}, y={y}")
    reg = regime(x, y)
    M = tile_count(x, y)
    exact = _is_exact(x, y)
    one = Fraction(1) if exact else 1.0
    s = x + y

    if reg == OVERLAP_REGIME:
        return TilingSolution(x, y, (Band(0 * one, x),), (Band(one - y, y),), one, M, 0, reg)

    bounds = epsilon_bounds(x, y)
    if epsilon is None:
        epsilon = default_epsilon(x, y)
    elif bounds is not None and not bounds[0] < epsilon < bounds[1]:
        raise DomainError(
            f"epsilon={epsilon} outside the admissible interval ({bounds[0]}, {bounds[1]}) for {reg}"
        )
    elif bounds is None:
        epsilon = 0

    def band(lo, hi):
        return Band(lo, hi - lo)

    scanner = [band(k * s - x, k * s) for k in range(1, M + 1)]
    if reg == M_REGIME:
        invader = []
        for k in range(1, M + 1):
            lo = k * s - y - epsilon * (M + 1 - k)
            invader.append(band(lo, lo + y))
        value = one / M
    else:
        scanner.append(band(one - x, one))
        invader = []
        for k in range(1, M + 1):
            lo = (k - 1) * (s + epsilon)
            invader.append(band(lo, lo + y))
        invader.append(band(one - y, one))
        value = one / (M + 1)
    return TilingSolution(x, y, tuple(scanner), tuple(invader), value, M, epsilon, reg)


def separation_violations(sol: TilingSolution) -> list[str]:
    """Structural checks on a tiling; returns human-readable violations (empty when sound).

    Scanner bands are at most ``y`` apart so no Invader band fits between
    them; Invader bands are more than ``x`` apart so no Scanner band touches two.
    """
    tol = 0 if sol.exact else FLOAT_TOL
    out = []
    for who, bands, w in (("scanner", sol.scanner_bands, sol.x), ("invader", sol.invader_bands, sol.y)):
        for i, bnd in enumerate(bands):
            if abs(bnd.width - w) > tol:
                out.append(f"{who} band {i} has width {bnd.width}, expected {w}")
            if bnd.start < -tol or bnd.end > 1 + tol:
                out.append(f"{who} band {i} [{bnd.start}, {bnd.end}] leaves [0, 1]")
        if any(b1.start < b0.start for b0, b1 in zip(bands, bands[1:])):
            out.append(f"{who} bands are not ordered by start")
    if sol.regime == OVERLAP_REGIME:
        return out
    for i, (b0, b1) in enumerate(zip(sol.scanner_bands, sol.scanner_bands[1:])):
        gap = b1.start - b0.end
        if gap > sol.y + tol:
            out.append(f"scanner gap {i} is {gap} > y={sol.y}")
    s = sol.scanner_bands
    if s[0].start > sol.y + tol or 1 - s[-1].end > sol.y + tol:
        out.append("scanner bands leave room for an undetected Invader at an edge")
    for i, (b0, b1) in enumerate(zip(sol.invader_bands, sol.invader_bands[1:])):
        gap = b1.start - b0.end
        if not gap - sol.x > tol:
            out.append(f"invader gap {i} is {gap} <= x={sol.x}")
    return out


def overlap_matrix(sol: TilingSolution) -> np.ndarray:
    """0/1 matrix: entry ``[i, j]`` is 1 when scanner band i meets invader band j."""
    tol = 0 if sol.exact else FLOAT_TOL
    return np.array(
        [[int(sb.intersects(ib, tol)) for ib in sol.invader_bands] for sb in sol.scanner_bands],
        dtype=np.int64,
    )


def matrix_value(sol: TilingSolution):
    """Detection probability when both players mix uniformly over their bands."""
    mat = overlap_matrix(sol)
    hits = int(mat.sum())
    total = mat.size
    return Fraction(hits, total) if sol.exact else hits / total


@dataclass(frozen=True)
class GuaranteeReport:
    min_detect: float      # worst case for the Scanner's mix over pure Invader bands
    min_position: float
    max_detect: float      # best case for a pure Scanner band against the Invader's mix
    max_position: float
    grid_step: float


def _sweep_counts(starts, ends, width, positions, tol):
    """Vectorized count of bands in (sorted) [starts, ends] meeting [t, t+width]."""
    starts = np.sort(starts)
    ends = np.sort(ends)
    n_start_ok = np.searchsorted(starts, positions + width + tol, side="right")
    n_end_before = np.searchsorted(ends, positions - tol, side="left")
    return n_start_ok - n_end_before


def _positions(span, grid_resolution, critical):
    grid = np.linspace(0.0, span, grid_resolution) if span > 0 else np.zeros(1)
    crit = np.clip(np.asarray(critical, dtype=float), 0.0, max(span, 0.0))
    crit = np.unique(crit)
    mids = (crit[:-1] + crit[1:]) / 2
    return np.unique(np.concatenate([grid, crit, mids]))


def guarantee_check(sol: TilingSolution, grid_resolution: int = 10_001) -> GuaranteeReport:
    """Sweep pure opponent bands across the spectrum against each player's mix.

    Candidate start positions are a uniform grid of ``grid_resolution`` points
    plus every position where an endpoint of the swept band meets a band of
    the mix (and midpoints between those), so the extremes are exact up to
    float tolerance.
    """
    x, y = float(sol.x), float(sol.y)
    s_start = np.array([float(b.start) for b in sol.scanner_bands])
    s_end = np.array([float(b.end) for b in sol.scanner_bands])
    i_start = np.array([float(b.start) for b in sol.invader_bands])
    i_end = np.array([float(b.end) for b in sol.invader_bands])
    tol = FLOAT_TOL

    span_i = 1.0 - y
    pos_i = _positions(span_i, grid_resolution, np.concatenate([s_start - y, s_end, [0.0, span_i]]))
    det_i = _sweep_counts(s_start, s_end, y, pos_i, tol) / len(s_start)
    k_min = int(np.argmin(det_i))

    span_s = 1.0 - x
    pos_s = _positions(span_s, grid_resolution, np.concatenate([i_start - x, i_end, [0.0, span_s]]))
    det_s = _sweep_counts(i_start, i_end, x, pos_s, tol) / len(i_start)
    k_max = int(np.argmax(det_s))

    step = max(span_i, span_s, 0.0) / max(grid_resolution - 1, 1)
    return GuaranteeReport(float(det_i[k_min]), float(pos_i[k_min]),
                           float(det_s[k_max]), float(pos_s[k_max]), step)
