"""Bayesian equilibrium when the Invader's capability is known only through a prior."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConsistencyError, DomainError
from .params import NetworkParams, _check_x, payoff_invader, payoff_scanner_expected, response_line
from .priors import TypeDistribution

BISECT_XTOL = 1e-12
FLAT_PROBE = 1e-6


@dataclass(frozen=True)
class ClampPolicy:
    """Invader policy ``y(c) = clamp(L, a, c)``: every type plays ``L`` capped to its own range."""

    L: float
    a: float

    def __call__(self, c):
        return np.minimum(np.maximum(self.L, self.a), c) if np.ndim(c) else min(max(self.L, self.a), c)

    def moments(self, q: TypeDistribution) -> tuple[float, float]:
        return q.clamp_moment(self.L, self.a, 1), q.clamp_moment(self.L, self.a, 2)


@dataclass(frozen=True)
class BayesianEquilibrium:
    x: float
    y_policy: ClampPolicy
    y_bar: float
    regime: str          # "x=a", "interior" or "x=b"
    flat: bool           # aggregate response is flat at x, so the Scanner is indifferent nearby
    R_q0: float
    br_at_a: float
    br_at_b: float

    def y(self, c):
        return self.y_policy(c)


def aggregate_best_response(p: NetworkParams, q: TypeDistribution, x: float) -> float:
    """Type-averaged Invader best response ``E[clamp(L(x), a, c)]``."""
    _check_x(p, x)
    return q.clamp_moment(response_line(p, x), p.a, 1)


def invert_aggregate_best_response(p: NetworkParams, q: TypeDistribution, target: float,
                                   xtol: float = BISECT_XTOL) -> float:
    """Smallest ``x`` in ``[a, b]`` with ``aggregate_best_response(x) == target``.

    Bisection on the non-increasing aggregate response. The bracket keeps
    ``BR(lo) > target >= BR(hi)``, so the returned ``hi`` approaches the
    left end of any flat stretch at the target level.
    """
    br_a = aggregate_best_response(p, q, p.a)
    br_b = aggregate_best_response(p, q, p.b)
    if not br_b <= target <= br_a:
        raise DomainError(f"target {target} outside the aggregate response range [{br_b}, {br_a}]")
    if br_a <= target:
        return p.a
    lo, hi = p.a, p.b
    while hi - lo > xtol:
        mid = 0.5 * (lo + hi)
        if aggregate_best_response(p, q, mid) > target:
            lo = mid
        else:
            hi = mid
    return hi


def _is_flat(p, q, x, level):
    if x >= p.b:
        return False
    probe = min(p.b, x + FLAT_PROBE)
    return aggregate_best_response(p, q, probe) >= level - 1e-13


def check_bayesian_equilibrium(p: NetworkParams, q: TypeDistribution, eq: BayesianEquilibrium,
                               n_types: int = 100, seed: int = 0, tol: float = 1e-9) -> dict:
    """Spot-check both equilibrium inequalities; returns the largest violations found."""
    v_star = payoff_scanner_expected(p, q, eq.x, eq.y_policy)
    scanner_gain = max(payoff_scanner_expected(p, q, xx, eq.y_policy) - v_star
                       for xx in (p.a, p.b, 0.5 * (p.a + p.b)))
    rng = np.random.default_rng(seed)
    types = q.sample_types(n_types, rng)
    invader_gain = 0.0
    for c in types:
        pc = p.with_(c=float(c))
        y_star = eq.y(float(c))
        v = payoff_invader(pc, eq.x, y_star, check=False)
        ys = np.linspace(p.a, c, 65)
        alt = max(payoff_invader(pc, eq.x, float(yy), check=False) for yy in ys)
        invader_gain = max(invader_gain, alt - v)
    return {"scanner_gain": max(scanner_gain, 0.0), "invader_gain": invader_gain,
            "ok": scanner_gain <= tol and invader_gain <= tol}


def solve_bayesian(p: NetworkParams, q: TypeDistribution, verify: bool = True) -> BayesianEquilibrium:
    """Unique Bayesian equilibrium ``(x, y(.))`` of the bandwidth game.

    The Scanner plays ``b`` when the threshold ``R_q0`` is at most the
    aggregate response at ``b``, ``a`` when it is at least the aggregate
    response at ``a``, and the inverse of the aggregate response in between.
    Ties resolve to the boundary branch.
    """
    q.check_support(p.a, p.b)
    r = p.R_q0
    br_a = aggregate_best_response(p, q, p.a)
    br_b = aggregate_best_response(p, q, p.b)
    if r <= br_b:
        x, reg = p.b, "x=b"
    elif br_a <= r:
        x, reg = p.a, "x=a"
    else:
        x, reg = invert_aggregate_best_response(p, q, r), "interior"
    policy = ClampPolicy(response_line(p, x), p.a)
    y_bar = q.clamp_moment(policy.L, p.a, 1)
    flat = reg == "interior" and _is_flat(p, q, x, y_bar)
    eq = BayesianEquilibrium(x, policy, y_bar, reg, flat, r, br_a, br_b)
    if verify:
        report = check_bayesian_equilibrium(p, q, eq, n_types=16)
        if not report["ok"]:
            raise ConsistencyError("Bayesian equilibrium spot check failed", x=x, **report)
    return eq
