"""Shannon entropies of qubit measurements and the planar entropy sum.

All entropies are in nats. For a Bloch state ``k`` measured along ``m`` the
outcome probabilities are ``(1 +- m.k)/2``, so the entropy is the binary
entropy ``H0(m.k)``. Restricted to the plane of the two axes, the quantity to
minimize is

    f(theta; alpha) = H0(cos theta) + H0(cos(alpha - theta)).

Writing ``H0(cos phi)`` through ``sin^2(phi/2)`` and ``cos^2(phi/2)`` keeps full
relative precision near the eigenstates, where ``1 - cos phi`` would cancel.
"""

from __future__ import annotations

import math

import numpy as np
from scipy.special import entr

from .errors import DomainError, NearSingular
from .geometry import UnitVector3

LN2 = math.log(2.0)

#: half-width of the exclusion window around eigenstate points for d1/d2
SINGULAR_WINDOW = 1e-9

_CLAMP_TOL = 1e-12


def _scalar_or_array(x):
    return float(x) if np.ndim(x) == 0 else x


def binary_entropy(x):
    """H0(x) = entropy of the distribution ((1-x)/2, (1+x)/2), in nats.

    Accepts scalars or arrays. Inputs within 1e-12 outside [-1, 1] are
    clamped; anything further out raises :class:`DomainError`.
    """
    x = np.asarray(x, dtype=float)
    if np.any(np.abs(x) > 1.0 + _CLAMP_TOL) or np.any(np.isnan(x)):
        raise DomainError("binary entropy argument must lie in [-1, 1]")
    x = np.clip(x, -1.0, 1.0)
    # entr(0) == 0 exactly, which is the 0 log 0 convention
    h = entr(0.5 * (1.0 - x)) + entr(0.5 * (1.0 + x))
    return _scalar_or_array(h)


def shannon_entropy(axis: UnitVector3, state: UnitVector3) -> float:
    """Entropy of measuring ``sigma . axis`` on the Bloch state ``state``."""
    return binary_entropy(axis.dot(state))


def _h0_of_cos(phi):
    s = np.sin(0.5 * phi)
    c = np.cos(0.5 * phi)
    return entr(s * s) + entr(c * c)


def entropy_sum(theta, alpha):
    """f(theta; alpha): entropy sum for a planar state at angle ``theta``."""
    theta = np.asarray(theta, dtype=float)
    return _scalar_or_array(_h0_of_cos(theta) + _h0_of_cos(alpha - theta))


# d/dphi H0(cos phi) = sin(phi) artanh(cos phi) = -sin(phi) log|tan(phi/2)|,
# which tends to 0 at phi = 0 (mod pi); the limit is filled in explicitly.
def _slope(phi):
    phi = np.asarray(phi, dtype=float)
    with np.errstate(divide="ignore", invalid="ignore"):
        out = -np.sin(phi) * np.log(np.abs(np.tan(0.5 * phi)))
    return np.where(np.isfinite(out), out, 0.0)


# d^2/dphi^2 H0(cos phi) = cos(phi) artanh(cos phi) - 1, diverging to +inf
# logarithmically at phi = 0 (mod pi).
def _curvature(phi):
    phi = np.asarray(phi, dtype=float)
    with np.errstate(divide="ignore", invalid="ignore"):
        out = -np.cos(phi) * np.log(np.abs(np.tan(0.5 * phi))) - 1.0
    return np.where(np.isnan(out), np.inf, out)


def _d1(theta, alpha):
    return _slope(theta) - _slope(alpha - theta)


def _d2(theta, alpha):
    return _curvature(theta) + _curvature(alpha - theta)


def distance_to_singular(theta, alpha):
    """Angular distance from ``theta`` to the nearest eigenstate point.

    Eigenstate points are where ``cos theta`` or ``cos(alpha - theta)`` is
    +-1, i.e. ``theta = 0`` or ``theta = alpha`` modulo pi.
    """
    theta = np.asarray(theta, dtype=float)

    def dist(phi):
        r = np.mod(phi, math.pi)
        return np.minimum(r, math.pi - r)

    return _scalar_or_array(np.minimum(dist(theta), dist(theta - alpha)))


def _check_window(theta, alpha):
    if np.any(distance_to_singular(theta, alpha) < SINGULAR_WINDOW):
        raise NearSingular(
            f"theta within {SINGULAR_WINDOW:g} of an eigenstate point (alpha={alpha!r})"
        )


def entropy_sum_d1(theta, alpha):
    """First theta-derivative of the entropy sum.

    ``sin(theta) artanh(cos theta) - sin(alpha - theta) artanh(cos(alpha - theta))``
    """
    _check_window(theta, alpha)
    return _scalar_or_array(_d1(theta, alpha))


def entropy_sum_d2(theta, alpha):
    """Second theta-derivative of the entropy sum.

    ``cos(theta) artanh(cos theta) + cos(alpha - theta) artanh(cos(alpha - theta)) - 2``
    """
    _check_window(theta, alpha)
    return _scalar_or_array(_d2(theta, alpha))


class ObjectiveSample:
    """Value and theta-derivatives of the entropy sum at one point.

    Derivatives are ``nan`` inside the eigenstate exclusion window.
    """

    __slots__ = ("theta", "value", "d1", "d2")

    def __init__(self, theta: float, alpha: float):
        self.theta = float(theta)
        self.value = entropy_sum(theta, alpha)
        if distance_to_singular(theta, alpha) < SINGULAR_WINDOW:
            self.d1 = self.d2 = math.nan
        else:
            self.d1 = float(_d1(theta, alpha))
            self.d2 = float(_d2(theta, alpha))

    def __repr__(self):
        return (
            f"ObjectiveSample(theta={self.theta!r}, value={self.value!r}, "
            f"d1={self.d1!r}, d2={self.d2!r})"
        )
