"""Where does the pair of minima split in two?

The entropy sum f(theta) = H0(cos theta) + H0(cos(alpha - theta)) is always
stationary at theta = alpha/2. Its curvature there,

    -cos(alpha/2) * log(tan(alpha/4)**2) - 2,

is positive for small alpha and changes sign at one angle in (0, pi/2).
"""
import math

import numpy as np

from entropic_uncertainty import critical_angle, entropy_sum_d2

crit = critical_angle()
print(f"critical angle: {crit.value:.12f} rad = {math.degrees(crit.value):.6f} deg")
print(f"equation residual: {crit.residual:.2e}")

print("\ncurvature of the entropy sum at theta = alpha/2")
for alpha in np.linspace(0.6, 1.6, 11):
    d2 = entropy_sum_d2(alpha / 2, alpha)
    kind = "minimum" if d2 > 0 else "maximum"
    print(f"  alpha={alpha:5.2f}  d2={d2:+.5f}  -> local {kind}")
