"""Exit criteria for the package, one test per criterion."""

import csv
import math
import time

import numpy as np

from entropic_uncertainty.cli import main
from entropic_uncertainty.entropy import LN2, entropy_sum, entropy_sum_d1, entropy_sum_d2
from entropic_uncertainty.oracle import plane_grid_min, sphere_grid_min
from entropic_uncertainty.reference import maassen_uffink_bound
from entropic_uncertainty.solver import (
    analytic_bound_high,
    analytic_bound_low,
    critical_angle,
    numeric_minima,
    optimal_bound,
    solve_critical_angle,
)
from entropic_uncertainty.sweeps import SweepSpec, bound_rows
from entropic_uncertainty.verification import sample_regular_points

A_BAR = critical_angle().value
RNG_SEED = 2024


def test_critical_angle(report, capsys):
    assert main(["critical-angle"]) == 0
    printed = float(capsys.readouterr().out.split()[1])
    timings = []
    for _ in range(20):
        t0 = time.perf_counter()
        crit = solve_critical_angle()
        timings.append(time.perf_counter() - t0)
    best = min(timings)
    ok = abs(printed - 1.17056) <= 1e-4 and abs(crit.residual) <= 1e-12 and best < 1e-3
    report(1, ok, f"alpha_bar={printed} residual={crit.residual:.1e} time={best * 1e6:.0f}us")


def test_complementary_observables(report):
    opt = optimal_bound(math.pi / 2)
    mu = maassen_uffink_bound(math.pi / 2)
    err = max(abs(opt - LN2), abs(opt - mu))
    report(2, err <= 1e-9, f"optimal(pi/2)={opt!r} |err|={err:.1e}")


def test_degenerate_pair(report):
    v = optimal_bound(0.0)
    report(3, abs(v) <= 1e-12, f"optimal(0)={v!r}")


def test_analytic_vs_numeric(report):
    rng = np.random.default_rng(RNG_SEED)
    low = rng.uniform(0.0, A_BAR - 1e-3, 50)
    high = rng.uniform(math.pi - A_BAR + 1e-3, math.pi - 1e-3, 50)
    err = max(
        max(abs(analytic_bound_low(a) - numeric_minima(a).bound) for a in low),
        max(abs(analytic_bound_high(a) - numeric_minima(a).bound) for a in high),
    )
    report(4, err <= 1e-9, f"max |analytic - numeric| = {err:.1e} over 100 alphas")


def test_oracle_equivalence(report):
    rng = np.random.default_rng(RNG_SEED + 1)
    alphas = rng.uniform(0.0, math.pi, 100)
    t0 = time.perf_counter()
    err = max(abs(optimal_bound(a) - plane_grid_min(a, 8192).value) for a in alphas)
    elapsed = time.perf_counter() - t0
    report(5, err <= 1e-5 and elapsed < 30, f"max gap {err:.1e} in {elapsed:.2f}s")


def test_planar_restriction(report):
    rng = np.random.default_rng(RNG_SEED + 2)
    worst = -math.inf
    for a in rng.uniform(0.0, math.pi, 50):
        gap = plane_grid_min(a, 512).value - sphere_grid_min(a, 512).value
        worst = max(worst, gap)
    report(6, worst <= 1e-9, f"max undercut of plane by sphere = {worst:.1e}")


def test_bifurcation(report):
    counts = {
        "a-": len(numeric_minima(A_BAR - 1e-6).minima),
        "a+": len(numeric_minima(A_BAR + 1e-6).minima),
        "b-": len(numeric_minima(math.pi - A_BAR - 1e-6).minima),
        "b+": len(numeric_minima(math.pi - A_BAR + 1e-6).minima),
    }
    ok = counts == {"a-": 2, "a+": 4, "b-": 4, "b+": 2}
    pos_err = 0.0
    for a in np.linspace(0.0, A_BAR, 60):
        want = [a / 2, math.pi + a / 2]
        pos_err = max(pos_err, np.max(np.abs(np.array(numeric_minima(a).thetas) - want)))
    for a in np.linspace(math.pi - A_BAR, math.pi, 60, endpoint=False):
        want = [(math.pi + a) / 2, (3 * math.pi + a) / 2]
        pos_err = max(pos_err, np.max(np.abs(np.array(numeric_minima(a).thetas) - want)))
    ok = ok and pos_err <= 1e-8
    report(7, ok, f"counts at edges +-1e-6: {counts}; max position error {pos_err:.1e}")


def test_bound_ordering(report):
    rows = bound_rows(SweepSpec(0.0, math.pi, 1000))
    slack = min(
        min(r["maassen_uffink"] - r["deutsch"], r["optimal"] - r["maassen_uffink"])
        for r in rows
    )
    outside = [r for r in rows if abs(r["alpha"] - math.pi / 2) >= 0.05]
    weak = [r["alpha"] for r in outside if not r["optimal"] - r["maassen_uffink"] > 1e-4]
    ok = slack >= -1e-12 and not weak
    detail = f"min ordering slack {slack:.1e}; rows without >1e-4 improvement: {len(weak)}"
    if weak:
        detail += " at alpha=" + ", ".join(f"{a:.5f}" for a in weak)
    report(8, ok, detail)


def test_symmetry(report):
    rng = np.random.default_rng(RNG_SEED + 3)
    alphas = rng.uniform(1e-9, math.pi, 200)
    err = max(abs(optimal_bound(a) - optimal_bound(math.pi - a)) for a in alphas)
    report(9, err <= 1e-9, f"max |f(a) - f(pi - a)| = {err:.1e}")


def test_derivatives(report):
    rng = np.random.default_rng(RNG_SEED + 4)
    t, a = sample_regular_points(rng, 1000)
    h = 1e-6
    fd1 = (entropy_sum(t + h, a) - entropy_sum(t - h, a)) / (2 * h)
    fd2 = (entropy_sum_d1(t + h, a) - entropy_sum_d1(t - h, a)) / (2 * h)
    d1, d2 = entropy_sum_d1(t, a), entropy_sum_d2(t, a)
    e1 = np.max(np.abs(d1 - fd1) / (1 + np.abs(d1)))
    e2 = np.max(np.abs(d2 - fd2) / (1 + np.abs(d2)))
    report(10, max(e1, e2) <= 1e-6, f"max rel err d1={e1:.1e} d2={e2:.1e}")


def test_determinism(report, tmp_path):
    paths = [tmp_path / "a.csv", tmp_path / "b.csv"]
    for p in paths:
        assert main(["sweep", "--steps", "1000", "-o", str(p)]) == 0
    same = paths[0].read_bytes() == paths[1].read_bytes()
    n = len(list(csv.reader(paths[0].read_text().splitlines()))) - 1
    report(11, same, f"two 1000-step sweeps byte-identical ({n} rows)")
