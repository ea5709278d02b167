"""Optimal bound against the Deutsch and Maassen-Uffink estimates.

Prints a coarse table and, if matplotlib is installed, writes
``bound_curves.png`` next to this script.
"""
import math
from pathlib import Path

import numpy as np

from entropic_uncertainty import bound_report, classify_regime

alphas = np.linspace(0, math.pi, 13, endpoint=False)
print(f"{'alpha':>7} {'regime':>8} {'optimal':>9} {'M-U':>9} {'Deutsch':>9}")
for a in alphas:
    r = bound_report(a)
    print(f"{a:7.3f} {classify_regime(a)!s:>8} {r.optimal:9.5f} {r.maassen_uffink:9.5f} {r.deutsch:9.5f}")

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    raise SystemExit(0)

fine = np.linspace(0, math.pi, 600, endpoint=False)
reports = [bound_report(a) for a in fine]
fig, ax = plt.subplots(figsize=(5, 3.5))
ax.plot(fine, [r.optimal for r in reports], "k-", label="optimal")
ax.plot(fine, [r.maassen_uffink for r in reports], "k--", label="Maassen-Uffink")
ax.plot(fine, [r.deutsch for r in reports], "k:", label="Deutsch")
ax.set_xlabel(r"$\alpha$")
ax.set_ylabel("entropy sum lower bound (nats)")
ax.legend()
fig.tight_layout()
out = Path(__file__).with_name("bound_curves.png")
fig.savefig(out, dpi=120)
print(f"\nwrote {out}")
