"""Best responses and the closed-form Nash equilibrium with a known Invader capability."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConsistencyError, DomainError
from .params import (
    NetworkParams,
    _check_x,
    payoff_invader,
    payoff_scanner_mixed,
    payoff_unrelated_invader,
    response_line,
)

CASES = tuple(f"i{k}" for k in range(1, 12))
CLASSIFY_TOL = 1e-12


@dataclass(frozen=True)
class ScannerResponse:
    """Best-response set ``[low, high]`` of the Scanner; ``indifferent`` when it is all of ``[a, b]``."""

    low: float
    high: float
    indifferent: bool

    def contains(self, x: float, tol: float = 0.0) -> bool:
        return self.low - tol <= x <= self.high + tol


@dataclass(frozen=True)
class EquilibriumReport:
    x: float
    y: float
    case_label: str
    P_R: float               # detection probability of a bandwidth-related Invader
    P_U: float               # detection probability of a reward-unrelated Invader
    scanner_payoff: float    # q0-weighted
    invader_payoff: float    # bandwidth-related Invader
    unrelated_payoff: float


def best_response_scanner(p: NetworkParams, y_bar: float) -> ScannerResponse:
    """Scanner's best response to an aggregate Invader bandwidth ``y_bar``.

    The q0-weighted Scanner payoff is affine in ``x`` with slope proportional
    to ``y_bar - R_q0``.
    """
    r = p.R_q0
    if y_bar < r:
        return ScannerResponse(p.a, p.a, False)
    if y_bar > r:
        return ScannerResponse(p.b, p.b, False)
    return ScannerResponse(p.a, p.b, True)


def best_response_invader(p: NetworkParams, x: float, cap: float | None = None) -> float:
    """Bandwidth maximizing the related Invader's payoff over ``[a, cap]``."""
    cap = p.c if cap is None else cap
    _check_x(p, x)
    if not p.a <= cap <= p.b:
        raise DomainError(f"capability cap={cap} outside [a, b] = [{p.a}, {p.b}]")
    L = response_line(p, x)
    if cap <= L:
        return cap
    if L <= p.a:
        return p.a
    return L


def _rows(p: NetworkParams, tol: float):
    def le(u, v):
        return u <= v + tol

    def lt(u, v):
        return u < v - tol

    a, c = p.a, p.c
    r = p.R_q0
    La, Lb = response_line(p, p.a), response_line(p, p.b)
    low, high, mid = lt(r, a), lt(c, r), le(a, r) and le(r, c)
    rows = (
        ("i1", low and lt(Lb, a)),
        ("i2", low and le(a, Lb) and le(Lb, c)),
        ("i3", low and lt(c, Lb)),
        ("i4", high and lt(La, a)),
        ("i5", high and le(a, La) and le(La, c)),
        ("i6", high and lt(c, La)),
        ("i7", mid and le(Lb, r) and le(r, La)),
        ("i8", mid and le(La, a)),
        ("i9", mid and lt(a, La) and lt(La, r)),
        ("i10", mid and lt(c, Lb)),
        ("i11", mid and lt(r, Lb) and le(Lb, c)),
    )
    return rows, (r, La, Lb)


def matching_rows(p: NetworkParams, tol: float = CLASSIFY_TOL) -> list[str]:
    """Every table row whose conditions hold at ``p``."""
    return [label for label, hit in _rows(p, tol)[0] if hit]


def classify(p: NetworkParams, tol: float = CLASSIFY_TOL) -> str:
    """Case label of the equilibrium table for ``p``.

    Rows are tested in order and the first match wins. Non-strict
    comparisons accept ``tol`` of round-off and strict ones demand a margin
    of ``tol``, so ties at row boundaries resolve to the earliest row. Row
    i11 is closed at ``L(b) = c`` (where it agrees with i10) so the rows
    cover every point.
    """
    rows, (r, La, Lb) = _rows(p, tol)
    a, c = p.a, p.c
    for label, hit in rows:
        if hit:
            return label
    raise ConsistencyError("no equilibrium case matches", R_q0=r, L_a=La, L_b=Lb, a=a, c=c)


def case_strategies(p: NetworkParams, label: str) -> tuple[float, float]:
    a, b, c = p.a, p.b, p.c
    La, Lb = response_line(p, a), response_line(p, b)
    table = {
        "i1": lambda: (b, a),
        "i2": lambda: (b, Lb),
        "i3": lambda: (b, c),
        "i4": lambda: (a, a),
        "i5": lambda: (a, La),
        "i6": lambda: (a, c),
        "i7": lambda: (p.T - 2 * p.R_q0, p.R_q0),
        "i8": lambda: (a, a),
        "i9": lambda: (a, La),
        "i10": lambda: (b, c),
        "i11": lambda: (b, Lb),
    }
    return table[label]()


def report_for(p: NetworkParams, x: float, y: float, label: str) -> EquilibriumReport:
    return EquilibriumReport(
        x=x,
        y=y,
        case_label=label,
        P_R=x + y,
        P_U=x + p.a,
        scanner_payoff=payoff_scanner_mixed(p, x, y),
        invader_payoff=payoff_invader(p, x, y, check=False),
        unrelated_payoff=payoff_unrelated_invader(p, x),
    )


def solve_known_characteristics(p: NetworkParams) -> EquilibriumReport:
    """Unique pure Nash equilibrium when the Invader's capability ``c`` is known.

    >>> from specscan.params import NetworkParams
    >>> p = NetworkParams(U=1, V=1, C_S=0.4, C_I=0.1, F=0.2, a=0.01, b=0.3, c=0.3, q0=1)
    >>> r = solve_known_characteristics(p)
    >>> r.case_label, round(r.x, 12), round(r.y, 12)
    ('i7', 0.3, 0.2)
    """
    label = classify(p)
    x, y = case_strategies(p, label)
    # guard against round-off pushing the i7 root a few ulps outside the box
    x = min(max(x, p.a), p.b)
    y = min(max(y, p.a), p.c)
    return report_for(p, x, y, label)


@dataclass(frozen=True)
class JumpRecord:
    variable: str          # "x" or "y"
    left_param: float
    right_param: float
    left_value: float
    right_value: float
    left_label: str
    right_label: str
    location: float | None = None      # bisection estimate of the break point
    confirmed_gap: float | None = None  # gap left once the bracket has shrunk

    @property
    def size(self) -> float:
        return self.right_value - self.left_value


def jump_threshold(width: float, steps: int) -> float:
    return max(5 * width / steps, 1e-3)


def refine_jump(values_at, variable: str, lo: float, hi: float,
                min_gap: float = 1e-3, iters: int = 50) -> tuple[float, float] | None:
    """Bisect ``[lo, hi]`` towards the half that carries the larger move.

    ``values_at(v)`` returns a dict of series values at parameter ``v``. A
    steep but continuous stretch loses its gap as the bracket shrinks; a
    discontinuity keeps it. Returns ``(location, gap)`` or ``None`` when the
    remaining gap is at most ``min_gap``.
    """
    f = lambda v: values_at(v)[variable]  # noqa: E731
    f_lo, f_hi = f(lo), f(hi)
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        f_mid = f(mid)
        if abs(f_mid - f_lo) >= abs(f_hi - f_mid):
            hi, f_hi = mid, f_mid
        else:
            lo, f_lo = mid, f_mid
    gap = abs(f_hi - f_lo)
    return (0.5 * (lo + hi), gap) if gap > min_gap else None


def find_jumps(grid, series: dict, labels, threshold: float, values_at=None) -> list[JumpRecord]:
    """Adjacent grid points whose series values differ by more than ``threshold``.

    With ``values_at`` each candidate is confirmed by :func:`refine_jump` and
    dropped when it turns out to be continuous.
    """
    out = []
    for name, values in series.items():
        values = np.asarray(values, dtype=float)
        for i in np.flatnonzero(np.abs(np.diff(values)) > threshold):
            loc = gap = None
            if values_at is not None:
                refined = refine_jump(values_at, name, float(grid[i]), float(grid[i + 1]))
                if refined is None:
                    continue
                loc, gap = refined
            out.append(JumpRecord(name, float(grid[i]), float(grid[i + 1]),
                                  float(values[i]), float(values[i + 1]),
                                  labels[i], labels[i + 1], loc, gap))
    out.sort(key=lambda j: (j.left_param, j.variable))
    return out


def detect_jumps(p_base: NetworkParams, parameter: str, range_: tuple[float, float],
                 steps: int = 30, threshold: float | None = None) -> list[JumpRecord]:
    """Sweep ``F`` or ``q0`` and report discontinuities of the equilibrium strategies."""
    if parameter not in ("F", "q0"):
        raise DomainError(f"can only sweep F or q0, got {parameter!r}")
    lo, hi = range_
    grid = np.linspace(lo, hi, steps)
    sols = [solve_known_characteristics(p_base.with_(**{parameter: float(v)})) for v in grid]
    thr = jump_threshold(hi - lo, steps) if threshold is None else threshold

    def values_at(v):
        s = solve_known_characteristics(p_base.with_(**{parameter: v}))
        return {"x": s.x, "y": s.y}

    return find_jumps(grid, {"x": [s.x for s in sols], "y": [s.y for s in sols]},
                      [s.case_label for s in sols], thr, values_at)
