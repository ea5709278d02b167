"""Cross-checks of the solver against the brute-force oracles.

Each check returns a :class:`CheckResult` carrying the worst measured
discrepancy next to the tolerance it was held to. Derivatives are looked up
through the :mod:`entropy` module at call time so a deliberately broken one
can be swapped in to confirm the harness notices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, List

import numpy as np

from . import entropy, oracle, solver
from .reference import deutsch_bound, maassen_uffink_bound

FD_STEP = 1e-6
FD_RTOL = 1e-6
#: derivative samples keep at least this distance from eigenstate points
FD_MARGIN = 1e-3


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    discrepancy: float
    tolerance: float

    def line(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        return f"{tag}  {self.name:<28} discrepancy={self.discrepancy:.3e}  tol={self.tolerance:.1e}"


def _check(name, discrepancy, tolerance) -> CheckResult:
    discrepancy = float(discrepancy)
    return CheckResult(name, bool(discrepancy <= tolerance), discrepancy, tolerance)


def sample_alphas(rng: np.random.Generator, n: int) -> np.ndarray:
    return rng.uniform(0.0, math.pi, n)


def sample_regular_points(rng: np.random.Generator, n: int):
    """(theta, alpha) pairs at least FD_MARGIN away from eigenstate points."""
    thetas, alphas = [], []
    while len(thetas) < n:
        t = rng.uniform(0.0, 2.0 * math.pi)
        a = rng.uniform(0.0, math.pi)
        if entropy.distance_to_singular(t, a) >= FD_MARGIN:
            thetas.append(t)
            alphas.append(a)
    return np.array(thetas), np.array(alphas)


def check_solver_below_oracle(alphas, resolution) -> CheckResult:
    # any grid value is an upper bound on the true minimum
    worst = max(
        solver.optimal_bound(a) - oracle.plane_grid_min(a, resolution).value
        for a in alphas
    )
    return _check("solver <= oracle", worst, 1e-12)


def check_oracle_gap(alphas, resolution) -> CheckResult:
    worst = max(
        oracle.plane_grid_min(a, resolution).value - solver.optimal_bound(a)
        for a in alphas
    )
    return _check("oracle - solver <= grid err", worst, oracle.plane_error_bound(resolution))


def check_planar_restriction(alphas, resolution) -> CheckResult:
    # the sphere grid contains the plane grid, so equality is the expected outcome
    worst = max(
        oracle.plane_grid_min(a, resolution).value
        - oracle.sphere_grid_min(a, resolution).value
        for a in alphas
    )
    return _check("planar restriction", worst, 1e-9)


def check_mirror_symmetry(alphas) -> CheckResult:
    worst = max(
        abs(solver.optimal_bound(a) - solver.optimal_bound(math.pi - a))
        for a in alphas
        if a > 0.0
    )
    return _check("mirror symmetry", worst, 1e-9)


def check_objective_symmetry(thetas, alphas) -> CheckResult:
    f = entropy.entropy_sum
    swap = np.abs(f(thetas, alphas) - f(alphas - thetas, alphas))
    shift = np.abs(f(thetas, alphas) - f(thetas + math.pi, alphas))
    return _check("objective symmetries", max(swap.max(), shift.max()), 1e-12)


def check_ordering(alphas) -> CheckResult:
    worst = -math.inf
    for a in alphas:
        d, mu, opt = deutsch_bound(a), maassen_uffink_bound(a), solver.optimal_bound(a)
        worst = max(worst, d - mu, mu - opt)
    return _check("bound ordering", worst, 1e-12)


def _rel_err(exact, approx):
    return np.abs(exact - approx) / (1.0 + np.abs(exact))


def check_first_derivative(thetas, alphas) -> CheckResult:
    f = entropy.entropy_sum
    h = FD_STEP
    fd = (f(thetas + h, alphas) - f(thetas - h, alphas)) / (2 * h)
    d1 = entropy.entropy_sum_d1(thetas, alphas)
    return _check("first derivative vs FD", _rel_err(d1, fd).max(), FD_RTOL)


def check_second_derivative(thetas, alphas) -> CheckResult:
    d1 = entropy.entropy_sum_d1
    h = FD_STEP
    fd = (d1(thetas + h, alphas) - d1(thetas - h, alphas)) / (2 * h)
    d2 = entropy.entropy_sum_d2(thetas, alphas)
    return _check("second derivative vs FD", _rel_err(d2, fd).max(), FD_RTOL)


def check_stationarity(alphas) -> CheckResult:
    """Reported minima are critical points that no nearby point undercuts."""
    worst = 0.0
    for a in alphas:
        prof = solver.numeric_minima(a)
        for theta, value in prof.minima:
            for step in (-1e-4, 1e-4):
                worst = max(worst, value - entropy.entropy_sum(theta + step, a) - 1e-12)
            if entropy.distance_to_singular(theta, a) > entropy.SINGULAR_WINDOW:
                worst = max(worst, abs(entropy.entropy_sum_d1(theta, a)) - 1e-8)
                worst = max(worst, -entropy.entropy_sum_d2(theta, a) - 1e-8)
    return _check("stationarity of minima", max(worst, 0.0), 0.0)


def run_checks(resolution: int = 2048, samples: int = 50, seed: int = 0) -> List[CheckResult]:
    rng = np.random.default_rng(seed)
    alphas = sample_alphas(rng, samples)
    thetas, palphas = sample_regular_points(rng, max(samples, 1000))
    checks: List[Callable[[], CheckResult]] = [
        lambda: check_solver_below_oracle(alphas, resolution),
        lambda: check_oracle_gap(alphas, resolution),
        lambda: check_planar_restriction(alphas, resolution),
        lambda: check_mirror_symmetry(alphas),
        lambda: check_objective_symmetry(thetas, palphas),
        lambda: check_ordering(alphas),
        lambda: check_first_derivative(thetas, palphas),
        lambda: check_second_derivative(thetas, palphas),
        lambda: check_stationarity(alphas),
    ]
    return [c() for c in checks]
