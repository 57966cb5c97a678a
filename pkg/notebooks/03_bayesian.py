"""
Bayesian game: a continuum of Invader types
===========================================

The Scanner faces a related Invader with probability q0 and does not know
its maximal bandwidth c, only a prior over it. Each type clamps the same
response line to [a, c]; the Scanner's band solves a one-dimensional fixed
point of the aggregate response.
"""

import numpy as np

from specscan import ILLUSTRATION, TypeDistribution, aggregate_best_response, solve_bayesian
from specscan.bayesian import check_bayesian_equilibrium

p = ILLUSTRATION
q = TypeDistribution.uniform(0.039, 0.3)

eq = solve_bayesian(p, q)
print(f"x = {eq.x:.4f} ({eq.regime}), threshold R_q0 = {eq.R_q0:.4f}")
for c in (0.039, 0.1, 0.2, 0.3):
    print(f"  type c={c}: y = {eq.y(c):.4f}")
print("spot check:", check_bayesian_equilibrium(p, q, eq))

# The aggregate response is non-increasing in x; the solution sits where it
# crosses R_q0 (or at an end of [a, b]).
for F in (0.15, 0.2, 0.25, 0.3):
    pf = p.with_(F=F)
    e = solve_bayesian(pf, q)
    xs = np.linspace(pf.a, pf.b, 5)
    br = ", ".join(f"{aggregate_best_response(pf, q, x):.4f}" for x in xs)
    print(f"F={F}: R_q0={pf.R_q0:.4f}, aggregate response on [a, b]: {br} -> x={e.x:.4f}")

# Priors may mix atoms or piecewise-uniform pieces.
q2 = TypeDistribution.piecewise([(0.05, 0.1, 2.0), (0.2, 0.3, 1.0)], normalize=True)
e2 = solve_bayesian(p.with_(F=0.2), q2)
print(f"\ntwo-piece prior: x={e2.x:.4f}, y(0.07)={e2.y(0.07):.4f}, y(0.25)={e2.y(0.25):.4f}")
