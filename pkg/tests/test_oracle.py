import math

import numpy as np
import pytest

from entropic_uncertainty.entropy import LN2
from entropic_uncertainty.errors import DomainError
from entropic_uncertainty.oracle import (
    SLOPE_MAX,
    plane_error_bound,
    plane_grid_min,
    sphere_error_bound,
    sphere_grid_min,
)
from entropic_uncertainty.solver import analytic_bound_low, optimal_bound


def test_slope_constant_bounds_the_entropy_slope():
    phi = np.linspace(1e-9, math.pi - 1e-9, 2_000_001)
    slope = np.abs(np.sin(phi) * np.log(np.tan(phi / 2)))
    assert slope.max() <= SLOPE_MAX
    assert SLOPE_MAX - slope.max() < 1e-4


def test_plane_examples():
    r = plane_grid_min(0.0, 64)
    assert r.value == 0.0
    assert r.argmin.dot(r.argmin) == pytest.approx(1.0)
    assert r.argmin.x == pytest.approx(1.0)
    assert plane_grid_min(math.pi / 2, 4096).value == pytest.approx(LN2, abs=1e-6)


def test_sphere_examples():
    assert sphere_grid_min(math.pi / 2, 512).value == pytest.approx(LN2, abs=2e-4)
    r = sphere_grid_min(0.8, 512)
    exact = analytic_bound_low(0.8)
    assert exact - 1e-12 <= r.value <= exact + sphere_error_bound(512)


@pytest.mark.parametrize("alpha", [0.0, 0.4, 1.2, math.pi / 2, 2.1, 3.0])
def test_sphere_argmin_in_plane(alpha):
    r = sphere_grid_min(alpha, 256)
    assert abs(r.argmin.z) <= math.sin(math.pi / 256)


def test_oracles_consistent():
    for alpha in np.linspace(0, math.pi, 12, endpoint=False):
        plane = plane_grid_min(alpha, 512).value
        sphere = sphere_grid_min(alpha, 512).value
        assert plane >= sphere - 1e-12
        assert plane <= sphere + sphere_error_bound(512)


def test_planar_restriction_lemma():
    for alpha in np.linspace(0.01, math.pi - 0.01, 50):
        plane = plane_grid_min(alpha, 128).value
        assert sphere_grid_min(alpha, 128).value >= plane - 1e-9


def test_error_bounds_hold():
    for alpha in (0.3, 1.3, 1.6, 2.9):
        exact = optimal_bound(alpha)
        for res in (64, 256, 1024):
            assert 0 <= plane_grid_min(alpha, res).value - exact + 1e-12 <= plane_error_bound(res)
            assert 0 <= sphere_grid_min(alpha, res).value - exact + 1e-12 <= sphere_error_bound(res)


def test_monotone_refinement():
    for alpha in (0.5, 1.3, 2.2):
        prev = plane_grid_min(alpha, 128).value
        for res in (256, 512, 1024, 2048):
            cur = plane_grid_min(alpha, res).value
            assert cur <= prev + 1e-12
            prev = cur


def test_domain():
    with pytest.raises(DomainError):
        plane_grid_min(math.pi, 128)
    with pytest.raises(DomainError):
        sphere_grid_min(0.3, 32)
