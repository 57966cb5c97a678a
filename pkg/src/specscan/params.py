"""Model parameters and the linearized payoffs of the bandwidth-selection game.

Bandwidths are fractions of the normalized spectrum ``[0, 1]``. Detection
probability in the bandwidth game is linearized to ``P(x, y) = x + y``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from .errors import DomainError, UndefinedThresholdError


@dataclass(frozen=True)
class DerivedQuantities:
    """Best-response thresholds computed from a parameter set."""

    T: float
    R: float
    R_q0: float | None  # None when q0 == 0


@dataclass(frozen=True)
class NetworkParams:
    """Scalar parameters of the Scanner/Invader model.

    Parameters
    ----------
    U, V : reward rate of the Invader and damage rate to the Scanner, per unit bandwidth.
    C_S, C_I : scanning and intrusion cost rates.
    F : fine paid by a detected Invader.
    a : minimum bandwidth for both players.
    b : Scanner's maximum bandwidth.
    c : Invader's maximum bandwidth when it is known.
    q0 : probability that the Invader's reward depends on bandwidth.
    """

    U: float
    V: float
    C_S: float
    C_I: float
    F: float
    a: float
    b: float
    c: float
    q0: float = 1.0

    def __post_init__(self):
        for name in ("U", "V", "C_S", "C_I", "F", "a", "b", "c", "q0"):
            value = getattr(self, name)
            if not isinstance(value, (int, float)) or not math.isfinite(value):
                raise DomainError(f"{name} must be a finite number, got {value!r}")
        for name in ("U", "V", "C_S", "C_I"):
            if getattr(self, name) <= 0:
                raise DomainError(f"{name} must be > 0, got {getattr(self, name)}")
        if self.F < 0:
            raise DomainError(f"F must be >= 0, got {self.F}")
        if not 0 < self.a:
            raise DomainError(f"a must be > 0, got {self.a}")
        if not self.a <= self.c:
            raise DomainError(f"c must be >= a, got a={self.a}, c={self.c}")
        if not self.c <= self.b:
            raise DomainError(f"c must be <= b, got c={self.c}, b={self.b}")
        if not self.b < 0.5:
            raise DomainError(f"b must be < 1/2, got {self.b}")
        if not 0 <= self.q0 <= 1:
            raise DomainError(f"q0 must lie in [0, 1], got {self.q0}")

    def with_(self, **changes) -> NetworkParams:
        return replace(self, **changes)

    @property
    def T(self) -> float:
        return (self.U - self.F - self.C_I) / self.U

    @property
    def R(self) -> float:
        return (self.C_S - self.F) / self.V

    @property
    def R_q0(self) -> float:
        """Aggregate Invader bandwidth at which the Scanner is indifferent.

        Raises UndefinedThresholdError for ``q0 == 0``.
        """
        if self.q0 == 0:
            raise UndefinedThresholdError("R_q0 is undefined for q0 = 0")
        return (self.R - self.a * (1 - self.q0)) / self.q0

    def derived(self) -> DerivedQuantities:
        r_q0 = None if self.q0 == 0 else self.R_q0
        return DerivedQuantities(T=self.T, R=self.R, R_q0=r_q0)


@dataclass(frozen=True)
class Band:
    """Closed sub-interval ``[start, start + width]`` of the unit spectrum.

    Coordinates may be floats or ``fractions.Fraction``.
    """

    start: object
    width: object

    def __post_init__(self):
        if self.width < 0 or self.start < -1e-12 or self.start + self.width > 1 + 1e-12:
            raise DomainError(f"band [{self.start}, {self.start + self.width}] is not inside [0, 1]")

    @property
    def end(self):
        return self.start + self.width

    def intersects(self, other: Band, tol: float = 0.0) -> bool:
        """Closed-interval intersection; touching endpoints count."""
        return self.start <= other.end + tol and other.start <= self.end + tol


def _check_x(p: NetworkParams, x: float) -> None:
    if not p.a <= x <= p.b:
        raise DomainError(f"Scanner bandwidth x={x} outside [a, b] = [{p.a}, {p.b}]")


def _check_y(p: NetworkParams, y: float, cap: float | None = None) -> None:
    cap = p.c if cap is None else cap
    if not p.a <= y <= cap:
        raise DomainError(f"Invader bandwidth y={y} outside [a, c] = [{p.a}, {cap}]")


def payoff_invader(p: NetworkParams, x: float, y: float, *, check: bool = True) -> float:
    """Payoff ``U(1-x-y)y - F(x+y) - C_I y`` of a bandwidth-related Invader.

    ``check=False`` skips the range checks, which the oracles use to evaluate
    the payoff on arbitrary grids and at the origin.
    """
    if check:
        _check_x(p, x)
        _check_y(p, y)
    return p.U * (1 - x - y) * y - p.F * (x + y) - p.C_I * y


def payoff_scanner(p: NetworkParams, x: float, y: float, *, check: bool = True) -> float:
    """Scanner payoff ``F(x+y) - V y (1-x-y) - C_S x`` against a known Invader width."""
    if check:
        _check_x(p, x)
        _check_y(p, y)
    return p.F * (x + y) - p.V * y * (1 - x - y) - p.C_S * x


def payoff_unrelated_invader(p: NetworkParams, x: float) -> float:
    """Payoff of the Invader whose reward ``U`` does not grow with bandwidth.

    That Invader always plays the minimum width ``a``.
    """
    pd = x + p.a
    return p.U * (1 - pd) - p.F * pd - p.C_I * p.a


def payoff_scanner_mixed(p: NetworkParams, x: float, y: float) -> float:
    """Scanner payoff when the Invader is bandwidth-related with probability q0.

    The remaining ``1 - q0`` mass plays ``a``.
    """
    detect_gain = lambda yy: p.F * (x + yy) - p.V * yy * (1 - x - yy)  # noqa: E731
    return p.q0 * detect_gain(y) + (1 - p.q0) * detect_gain(p.a) - p.C_S * x


def payoff_scanner_expected(p: NetworkParams, q, x: float, y_policy, *, check: bool = True) -> float:
    """Scanner payoff averaged over Invader types drawn from the prior ``q``.

    ``y_policy`` maps a type ``c`` to the bandwidth that type plays. Policies
    exposing ``moments(q)`` (see :class:`specscan.bayesian.ClampPolicy`) are
    integrated in closed form; any other callable is integrated per piece
    with adaptive quadrature. ``check=False`` evaluates the formula for
    policies that leave ``[a, c]``.
    """
    if check:
        _check_x(p, x)
        q.check_policy(p, y_policy)
    if hasattr(y_policy, "moments"):
        m1, m2 = y_policy.moments(q)
    else:
        m1 = q.expect(y_policy)
        m2 = q.expect(lambda c: y_policy(c) ** 2)
    related = p.F * (x + m1) - p.V * (m1 * (1 - x) - m2)
    unrelated = p.F * (x + p.a) - p.V * p.a * (1 - x - p.a)
    return p.q0 * related + (1 - p.q0) * unrelated - p.C_S * x


def response_line(p: NetworkParams, x: float) -> float:
    """Unconstrained Invader best response ``L(x) = (T - x) / 2``."""
    return (p.T - x) / 2


ILLUSTRATION = NetworkParams(U=1.0, V=1.0, C_S=0.4, C_I=0.1, F=0.3, a=0.01, b=0.3, c=0.3, q0=0.9)
"""Parameter set of the reference numerical illustration (F and q0 are swept there)."""
