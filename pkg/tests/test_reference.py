import math

import numpy as np
import pytest

from entropic_uncertainty.entropy import LN2
from entropic_uncertainty.errors import DomainError
from entropic_uncertainty.geometry import frame_from_alpha
from entropic_uncertainty.reference import (
    bound_report,
    deutsch_bound,
    deutsch_from_overlap,
    maassen_uffink_bound,
    maassen_uffink_from_overlap,
    max_overlap,
    max_overlap_from_axes,
)
from entropic_uncertainty.solver import optimal_bound


def spinor_max_overlap(alpha):
    """max |<a_i|b_j>| from eigenvectors of sigma_x and cos a sigma_x + sin a sigma_y."""
    sx = np.array([[0, 1], [1, 0]], dtype=complex)
    sy = np.array([[0, -1j], [1j, 0]])
    _, va = np.linalg.eigh(sx)
    _, vb = np.linalg.eigh(math.cos(alpha) * sx + math.sin(alpha) * sy)
    return np.abs(va.conj().T @ vb).max()


def test_max_overlap_examples():
    assert max_overlap(0.0) == 1.0
    assert max_overlap(math.pi / 2) == pytest.approx(1 / math.sqrt(2), abs=1e-15)
    assert max_overlap(2.0) == math.sin(1.0)


def test_max_overlap_matches_paper_piecewise_form():
    for a in np.linspace(0, math.pi, 400, endpoint=False):
        c = math.cos(a / 2) if a < math.pi / 2 else math.sin(a / 2)
        assert max_overlap(a) == pytest.approx(c, abs=1e-16)


def test_deutsch_examples():
    assert deutsch_bound(0.0) == 0.0
    # 40-digit value of 2 log(2/(1 + 1/sqrt 2))
    assert deutsch_bound(math.pi / 2) == pytest.approx(0.31669436764074988, abs=1e-15)
    assert deutsch_bound(math.pi / 3) < maassen_uffink_bound(math.pi / 3)


def test_maassen_uffink_examples():
    assert maassen_uffink_bound(math.pi / 2) == pytest.approx(LN2, abs=1e-15)
    assert maassen_uffink_bound(0.0) == 0.0
    assert maassen_uffink_bound(1.0) == pytest.approx(-2 * math.log(math.cos(0.5)), abs=1e-15)


def test_general_forms_against_spinors():
    rng = np.random.default_rng(7)
    for a in rng.uniform(0, math.pi, 100):
        c_spinor = spinor_max_overlap(a)
        f = frame_from_alpha(a)
        c_axes = max_overlap_from_axes(f.m, f.n)
        assert c_axes == pytest.approx(c_spinor, abs=1e-12)
        assert deutsch_from_overlap(c_spinor) == pytest.approx(deutsch_bound(a), abs=1e-12)
        assert maassen_uffink_from_overlap(c_spinor) == pytest.approx(
            maassen_uffink_bound(a), abs=1e-12
        )


def test_overlap_domain():
    with pytest.raises(DomainError):
        deutsch_from_overlap(0.0)
    with pytest.raises(DomainError):
        maassen_uffink_from_overlap(1.5)
    with pytest.raises(DomainError):
        deutsch_bound(math.pi)


def test_report_examples():
    r = bound_report(math.pi / 2)
    assert r.optimal == pytest.approx(LN2, abs=1e-12)
    assert r.maassen_uffink == pytest.approx(LN2, abs=1e-12)
    assert r.deutsch < r.maassen_uffink
    r = bound_report(0.0)
    assert r.optimal == r.maassen_uffink == r.deutsch == 0.0
    r = bound_report(0.9)
    # 40-digit values: 2 H0(cos .45), -2 log cos .45, 2 log(2/(1 + cos .45))
    assert r.optimal == pytest.approx(0.39571296750006598, abs=1e-14)
    assert r.maassen_uffink == pytest.approx(0.20972771724098042, abs=1e-14)
    assert r.deutsch == pytest.approx(0.10211601008506977, abs=1e-14)
    assert r.deutsch < r.maassen_uffink < r.optimal


def test_ordering_and_symmetry_on_grid():
    for a in np.arange(0, math.pi, 1e-3):
        r = bound_report(a)
        assert r.deutsch <= r.maassen_uffink + 1e-12
        assert r.maassen_uffink <= r.optimal + 1e-12
        if a > 0:
            b = math.pi - a
            assert abs(deutsch_bound(a) - deutsch_bound(b)) <= 1e-12
            assert abs(maassen_uffink_bound(a) - maassen_uffink_bound(b)) <= 1e-12


def test_optimal_meets_maassen_uffink_only_at_complementarity():
    # alpha = 0 is excluded: every bound is 0 there
    for a in np.linspace(1e-3, math.pi - 1e-3, 2001):
        if abs(optimal_bound(a) - maassen_uffink_bound(a)) <= 1e-12:
            assert abs(a - math.pi / 2) <= 1e-6
