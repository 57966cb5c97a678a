"""
Equilibrium when the Scanner knows the Invader's maximal bandwidth
==================================================================

With the detection probability replaced by x + y, both payoffs are
quadratic and the equilibrium follows from a case table. Sweeping the fine F
shows the Scanner's band growing and, at a threshold, jumping.
"""

import numpy as np

from specscan import ILLUSTRATION, detect_jumps, grid_equilibrium_search, solve_known_characteristics
from specscan.linear import matching_rows

# q0 = 0.9: the detected Invader is related with probability 0.9.
p = ILLUSTRATION
rep = solve_known_characteristics(p)
print(f"case {rep.case_label}: x={rep.x:.4f}, y={rep.y:.4f}, detection={rep.P_R:.4f}")
print(f"thresholds: T={p.T:.4f}, R={p.R:.4f}, R_q0={p.R_q0:.4f}")

# A brute-force grid search agrees to within one cell.
g = grid_equilibrium_search(p)
print(f"grid oracle: {len(g.points)} certified points, eps_grid={g.eps_grid:.2e}, "
      f"analytic point inside one cell: {g.near(rep.x, rep.y)}")

print("\n   F    case     x       y     x+y")
for F in np.linspace(0.1, 0.4, 13):
    r = solve_known_characteristics(p.with_(F=float(F)))
    print(f"{F:5.3f}  {r.case_label:>4}  {r.x:6.4f}  {r.y:6.4f}  {r.P_R:6.4f}"
          + ("  (boundary: " + ",".join(matching_rows(p.with_(F=float(F)))) + ")"
             if len(matching_rows(p.with_(F=float(F)))) > 1 else ""))

for j in detect_jumps(p, "F", (0.1, 0.4), 30):
    print(f"jump in {j.variable} near F={j.location:.4f}: {j.left_value:.4f} -> {j.right_value:.4f} "
          f"({j.left_label} -> {j.right_label})")
