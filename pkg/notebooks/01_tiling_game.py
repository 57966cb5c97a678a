"""
The tiling game on the unit spectrum
====================================

A Scanner listens on a band of width x, an Invader transmits on a band of
width y, both inside [0, 1]. Detection happens when the bands meet. This
script builds the optimal mixed strategies for a few width pairs and checks
them three ways.
"""

from fractions import Fraction

import numpy as np

from specscan import build_tiling, detection_value, guarantee_check, monte_carlo_detection
from specscan.tiling import matrix_value, separation_violations

# Exact rationals give exact values; floats work too with a 1e-12 tolerance.
for x, y in [(Fraction(1, 10), Fraction(1, 20)), (Fraction(3, 10), Fraction(1, 5)),
             (Fraction(1, 4), Fraction(1, 10)), (Fraction(3, 5), Fraction(1, 2))]:
    sol = build_tiling(x, y)
    print(f"x={x}, y={y}: {sol.regime}, M={sol.M}, value={sol.value}")
    print("  scanner bands:", [f"[{float(b.start):.4f}, {float(b.end):.4f}]" for b in sol.scanner_bands])
    print("  invader bands:", [f"[{float(b.start):.4f}, {float(b.end):.4f}]" for b in sol.invader_bands])

    # Uniform mixing over the bands reproduces the closed-form value exactly.
    assert matrix_value(sol) == detection_value(x, y)
    assert not separation_violations(sol)

    # Neither player can do better with a pure band anywhere on the spectrum.
    g = guarantee_check(sol)
    print(f"  worst Invader band: {g.min_detect:.6f}, best Scanner band: {g.max_detect:.6f}")

# The value is a step function of x + y, touching the line x + y at 1/n.
s = np.linspace(0.02, 0.9, 12)
print("\n x+y    value    x+y")
for total in s:
    print(f"{total:5.3f}  {float(detection_value(total / 2, total / 2)):7.4f}  {total:7.4f}")

# A simulated run agrees with the exact value.
sol = build_tiling(0.1, 0.05)
mc = monte_carlo_detection(sol, 1_000_000, seed=7)
print(f"\nMonte Carlo: {mc.estimate:.5f} +/- {mc.half_width:.5f} (exact {float(sol.value):.5f})")
