"""One-call validation of a band-placement tiling."""

from __future__ import annotations

from dataclasses import dataclass

from .oracle import MonteCarloEstimate, monte_carlo_detection, overlap_value_oracle
from .tiling import TilingSolution, build_tiling, detection_value, separation_violations


@dataclass(frozen=True)
class ValidationReport:
    analytic_value: object
    matrix_value: object
    guarantee_min: float
    guarantee_max: float
    grid_step: float
    separation_ok: bool
    violations: tuple = ()
    mc: MonteCarloEstimate | None = None
    solution: TilingSolution | None = None

    @property
    def ok(self) -> bool:
        v = float(self.analytic_value)
        return (self.analytic_value == self.matrix_value
                and self.guarantee_min >= v - 1e-12
                and self.guarantee_max <= v + 1e-12
                and self.separation_ok)


def validate_tiling(x, y, grid_resolution: int = 10_001, trials: int | None = None,
                    seed: int = 0) -> ValidationReport:
    sol = build_tiling(x, y)
    oracle = overlap_value_oracle(x, y, sol, grid_resolution)
    violations = tuple(separation_violations(sol))
    mc = monte_carlo_detection(sol, trials, seed) if trials else None
    return ValidationReport(
        analytic_value=detection_value(x, y),
        matrix_value=oracle.matrix_value,
        guarantee_min=oracle.guarantee_min,
        guarantee_max=oracle.guarantee_max,
        grid_step=oracle.grid_step,
        separation_ok=not violations,
        violations=violations,
        mc=mc,
        solution=sol,
    )
