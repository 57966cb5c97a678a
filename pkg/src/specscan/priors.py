"""Scanner's prior over Invader capability types ``c``."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import integrate

from .errors import DomainError

MASS_TOL = 1e-12


def _clamp(L, lo, hi):
    return np.minimum(np.maximum(L, lo), hi)


@dataclass(frozen=True)
class TypeDistribution:
    """Discrete atoms or a piecewise-constant density over types.

    Use the constructors :meth:`point`, :meth:`discrete`, :meth:`uniform`
    and :meth:`piecewise` rather than the raw fields.
    """

    kind: str
    atoms: tuple = ()   # ((c, weight), ...)
    pieces: tuple = ()  # ((lo, hi, density), ...)

    def __post_init__(self):
        if self.kind == "discrete":
            if not self.atoms:
                raise DomainError("discrete prior needs at least one atom")
            if any(w <= 0 for _, w in self.atoms):
                raise DomainError("atom weights must be > 0")
            mass = sum(w for _, w in self.atoms)
        elif self.kind == "piecewise-uniform":
            if not self.pieces:
                raise DomainError("piecewise prior needs at least one piece")
            for lo, hi, d in self.pieces:
                if not lo < hi:
                    raise DomainError(f"piece [{lo}, {hi}] is empty")
                if d < 0:
                    raise DomainError(f"density on [{lo}, {hi}] is negative")
            ordered = sorted(self.pieces)
            for (_, hi0, _), (lo1, _, _) in zip(ordered, ordered[1:]):
                if lo1 < hi0:
                    raise DomainError("prior pieces overlap")
            mass = sum((hi - lo) * d for lo, hi, d in self.pieces)
        else:
            raise DomainError(f"unknown prior kind {self.kind!r}")
        if abs(mass - 1) > MASS_TOL:
            raise DomainError(f"prior mass is {mass!r}, expected 1")

    @classmethod
    def point(cls, c: float) -> TypeDistribution:
        return cls("discrete", atoms=((float(c), 1.0),))

    @classmethod
    def discrete(cls, atoms, normalize: bool = False) -> TypeDistribution:
        atoms = tuple((float(c), float(w)) for c, w in atoms)
        if normalize:
            total = sum(w for _, w in atoms)
            atoms = tuple((c, w / total) for c, w in atoms)
        return cls("discrete", atoms=atoms)

    @classmethod
    def uniform(cls, lo: float, hi: float) -> TypeDistribution:
        return cls("piecewise-uniform", pieces=((float(lo), float(hi), 1.0 / (hi - lo)),))

    @classmethod
    def piecewise(cls, pieces, normalize: bool = False) -> TypeDistribution:
        pieces = tuple(sorted((float(lo), float(hi), float(d)) for lo, hi, d in pieces))
        if normalize:
            total = sum((hi - lo) * d for lo, hi, d in pieces)
            pieces = tuple((lo, hi, d / total) for lo, hi, d in pieces)
        return cls("piecewise-uniform", pieces=pieces)

    @property
    def is_discrete(self) -> bool:
        return self.kind == "discrete"

    @property
    def support_bounds(self) -> tuple[float, float]:
        if self.is_discrete:
            cs = [c for c, _ in self.atoms]
        else:
            cs = [v for lo, hi, d in self.pieces if d > 0 for v in (lo, hi)]
        return min(cs), max(cs)

    def in_support(self, c: float, tol: float = 1e-12) -> bool:
        if self.is_discrete:
            return any(abs(c - ci) <= tol for ci, _ in self.atoms)
        return any(lo - tol <= c <= hi + tol for lo, hi, d in self.pieces if d > 0)

    def check_support(self, a: float, b: float) -> None:
        lo, hi = self.support_bounds
        if lo < a or hi > b:
            raise DomainError(f"prior support [{lo}, {hi}] is not inside [a, b] = [{a}, {b}]")

    def mean(self) -> float:
        return self.moment(1)

    def moment(self, k: int) -> float:
        if self.is_discrete:
            return sum(w * c**k for c, w in self.atoms)
        return sum(d * (hi ** (k + 1) - lo ** (k + 1)) / (k + 1) for lo, hi, d in self.pieces)

    def clamp_moment(self, L: float, a: float, k: int = 1) -> float:
        """Closed form of ``E[clamp(L, a, c) ** k]`` for ``c`` drawn from the prior.

        Assumes the support lies in ``[a, inf)`` so that ``clamp(L, a, c)`` is
        ``a`` when ``L <= a``, ``c`` for types below ``L`` and ``L`` above it.
        """
        if self.is_discrete:
            return sum(w * float(_clamp(L, a, c)) ** k for c, w in self.atoms)
        if L <= a:
            return a**k
        total = 0.0
        for lo, hi, d in self.pieces:
            m = min(max(L, lo), hi)
            total += d * ((m ** (k + 1) - lo ** (k + 1)) / (k + 1) + L**k * (hi - m))
        return total

    def expect(self, func) -> float:
        """``E[func(c)]``; adaptive quadrature on each density piece."""
        if self.is_discrete:
            return sum(w * func(c) for c, w in self.atoms)
        total = 0.0
        for lo, hi, d in self.pieces:
            if d == 0:
                continue
            val, _ = integrate.quad(func, lo, hi, epsabs=1e-14, epsrel=1e-13, limit=200)
            total += d * val
        return total

    def sample_types(self, n: int, rng: np.random.Generator) -> np.ndarray:
        """Draw ``n`` types from the prior."""
        if self.is_discrete:
            cs = np.array([c for c, _ in self.atoms])
            ws = np.array([w for _, w in self.atoms])
            return rng.choice(cs, size=n, p=ws / ws.sum())
        los, his, ds = (np.array(v) for v in zip(*self.pieces))
        masses = (his - los) * ds
        idx = rng.choice(len(los), size=n, p=masses / masses.sum())
        return los[idx] + rng.random(n) * (his[idx] - los[idx])

    def discretize(self, n_atoms: int = 64) -> TypeDistribution:
        """Midpoint-rule atoms: ``n_atoms`` per density piece, weighted by mass."""
        if self.is_discrete:
            return self
        atoms = []
        for lo, hi, d in self.pieces:
            if d == 0:
                continue
            h = (hi - lo) / n_atoms
            atoms.extend((lo + (i + 0.5) * h, d * h) for i in range(n_atoms))
        return TypeDistribution.discrete(atoms, normalize=True)

    def check_policy(self, p, policy, n_probe: int = 17) -> None:
        """Raise DomainError if ``policy(c)`` leaves ``[a, c]`` at a probed support type."""
        if self.is_discrete:
            probes = [c for c, _ in self.atoms]
        else:
            probes = [float(v) for lo, hi, d in self.pieces if d > 0
                      for v in np.linspace(lo, hi, n_probe)]
        for c in probes:
            y = policy(c)
            if not p.a - 1e-12 <= y <= c + 1e-12:
                raise DomainError(f"policy plays y={y} for type c={c}, outside [a, c] = [{p.a}, {c}]")
