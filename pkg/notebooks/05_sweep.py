"""
Sweeping the fine and the related-Invader probability
=====================================================

The shipped scenario sweeps F over [0.1, 0.4] and q0 over [0.01, 0.99].
The Scanner's band grows with both, with jumps where it leaves the lower
bound; the largest type's band shrinks. Heatmaps go to sweep.svg.
"""

import csv
import io

import numpy as np

from specscan.scenario import packaged_config
from specscan.svg import heatmap_svg
from specscan.sweep import run_sweep

cfg = packaged_config("illustration_sweep.cfg")
out = run_sweep(cfg)
rows = list(csv.DictReader(io.StringIO(out.csv)))
nF, nq = len(out.F), len(out.q0)
x = np.array([float(r["x"]) for r in rows]).reshape(nF, nq)
y = np.array([float(r["y(0.3)"]) for r in rows]).reshape(nF, nq)

print("x along F for a few q0 slices")
for j in (0, nq // 2, nq - 1):
    print(f"q0={out.q0[j]:.3f}:", " ".join(f"{v:.3f}" for v in x[::3, j]))

det = x + y
j = nq - 1
print(f"\ndetection x+y(0.3) at q0={out.q0[j]:.2f}:", " ".join(f"{v:.3f}" for v in det[::3, j]))

print("\nconfirmed jumps:")
print(out.jumps_csv)

with open("sweep.svg", "w") as fh:
    fh.write(heatmap_svg([("x", x), ("y(0.3)", y), ("x + y(0.3)", det)], out.F, out.q0))
print("wrote sweep.svg")
