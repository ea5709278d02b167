"""Positions of the minimizing Bloch vectors as alpha varies.

Below the critical angle the two minima sit half-way between the axes. Past
it each one splits and the pieces drift towards the axes, meeting them at
alpha = pi/2, then recombine on the perpendicular bisector at pi - a*.
"""
import math

import numpy as np

from entropic_uncertainty import critical_angle, numeric_minima

a_bar = critical_angle().value
checkpoints = [0.5, a_bar - 1e-6, a_bar + 1e-6, 1.3, math.pi / 2, 1.85,
               math.pi - a_bar - 1e-6, math.pi - a_bar + 1e-6, 2.6]
for a in checkpoints:
    prof = numeric_minima(a)
    thetas = " ".join(f"{t:8.5f}" for t in prof.thetas)
    print(f"alpha={a:8.5f}  {prof.regime!s:>7}  bound={prof.bound:.8f}  theta: {thetas}")

# just past the split the two children are a few milliradians apart
prof = numeric_minima(a_bar + 1e-6)
print(f"\nsplit width at a*+1e-6: {prof.thetas[1] - prof.thetas[0]:.3e} rad")
