#!/usr/bin/env python3
"""Gallery of the weighted inequalities on showcase profiles.

Prints the measured left/right sides and sharpness ratios for the trace
bounds and the Hardy family, including the stress profiles that approach
the constant 2, then runs the full seeded suite and reports the worst
margins per inequality.
"""

import math
from collections import defaultdict

import numpy as np

from mhdbl.grid import build_grid
from mhdbl.norms import verify_hardy, verify_trace, verify_trace0
from mhdbl.verify import inequality_suite

grid = build_grid(64, 257, 12.0)
X, Y = grid.mesh()
y = grid.y

print("trace bounds (f = e^{-y} (1 + 0.3 cos x)):")
f = np.exp(-Y) * (1.0 + 0.3 * np.cos(X))
for rep in (verify_trace(f, f, grid, decay_tol=1e-2),
            verify_trace0(f, grid, decay_tol=1e-2)):
    print(f"  {rep.ineq:8s} lhs={rep.lhs:8.4f} rhs={rep.rhs:8.4f} "
          f"ratio={rep.ratio:.4f}  {'ok' if rep.passed else 'VIOLATED'}")

print("\nweighted Hardy, lambda = 1 (constant 2):")
profiles = {
    "e^{-y}": np.exp(-y),
    "y e^{-y}": y * np.exp(-y),
    "(1+y)^{-0.55}": (1.0 + y) ** -0.55,
    "unit bump at 0.4": np.exp(-0.5 * ((y - 0.4) / 0.15) ** 2)
                        / (0.15 * math.sqrt(2.0 * math.pi)),
}
for name, prof in profiles.items():
    rep = verify_hardy(prof, grid, 1.0, "normal1")
    print(f"  {name:18s} ratio = {rep.ratio:.4f}  (< 2)")

print("\nfull seeded suite (200 draws x 9 inequalities):")
reports = inequality_suite(seed=0, count=200)
worst = defaultdict(float)
for rep in reports:
    worst[rep.ineq] = max(worst[rep.ineq], rep.ratio)
for ineq, ratio in sorted(worst.items()):
    print(f"  {ineq:18s} worst ratio {ratio:.4f}")
print(f"  all {len(reports)} checks pass: {all(r.passed for r in reports)}")
