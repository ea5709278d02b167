"""Brute-force grid minimizers of the entropy sum.

These are the slow, trusted reference path. They evaluate the entropy sum
straight from Bloch-vector dot products with their own entropy formula and
share no code with the solver.

Error bound. As a function of the angle between ``k`` and an axis, each
entropy term ``H0(cos phi)`` has derivative ``sin(phi) artanh(cos phi)``,
bounded in magnitude by ``SLOPE_MAX ~ 0.66274``. The sum is therefore
Lipschitz on the sphere (geodesic metric) with constant ``2 * SLOPE_MAX``, and
a grid whose points are within geodesic distance ``r`` of every point of the
search set overestimates the minimum by at most ``2 * SLOPE_MAX * r``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .geometry import UnitVector3

#: max over phi of |sin(phi) log|tan(phi/2)||, rounded up
SLOPE_MAX = 0.66275
LIPSCHITZ = 2.0 * SLOPE_MAX

_MIN_RESOLUTION = 64
_ROW_CHUNK = 256


@dataclass(frozen=True)
class OracleResult:
    value: float
    argmin: UnitVector3
    resolution: int


def _check(alpha, resolution):
    if not (0.0 <= alpha < math.pi):
        raise DomainError(f"alpha must lie in [0, pi), got {alpha!r}")
    if resolution < _MIN_RESOLUTION:
        raise DomainError(f"resolution must be >= {_MIN_RESOLUTION}, got {resolution}")


def _neg_plogp(p):
    safe = np.where(p > 0, p, 1.0)
    return np.where(p > 0, -p * np.log(safe), 0.0)


def _h0(x):
    return _neg_plogp(0.5 * (1.0 - x)) + _neg_plogp(0.5 * (1.0 + x))


def _axes(alpha):
    # the pair's plane is the equator z = 0
    m = np.array([1.0, 0.0, 0.0])
    n = np.array([math.cos(alpha), math.sin(alpha), 0.0])
    return m, n


def plane_error_bound(resolution: int) -> float:
    """Worst-case overestimate of :func:`plane_grid_min` at ``resolution``."""
    return LIPSCHITZ * math.pi / resolution


def sphere_error_bound(resolution: int) -> float:
    """Worst-case overestimate of :func:`sphere_grid_min` at ``resolution``."""
    d_polar = math.pi / resolution
    d_azim = 2.0 * math.pi / resolution
    return LIPSCHITZ * 0.5 * math.hypot(d_polar, d_azim)


def plane_grid_min(alpha: float, resolution: int) -> OracleResult:
    """Minimum over ``resolution`` equally spaced in-plane Bloch vectors."""
    _check(alpha, resolution)
    m, n = _axes(alpha)
    phi = 2.0 * math.pi * np.arange(resolution) / resolution
    k = np.stack([np.cos(phi), np.sin(phi), np.zeros_like(phi)], axis=1)
    vals = _h0(np.clip(k @ m, -1, 1)) + _h0(np.clip(k @ n, -1, 1))
    i = int(np.argmin(vals))
    return OracleResult(float(vals[i]), UnitVector3.from_array(k[i]), resolution)


def sphere_grid_min(alpha: float, resolution: int) -> OracleResult:
    """Minimum over a latitude-longitude grid of the full Bloch sphere.

    The polar grid always contains the equator and the azimuthal grid is the
    one used by :func:`plane_grid_min`, so every in-plane candidate of the
    planar oracle at the same resolution is also a sphere candidate.
    """
    _check(alpha, resolution)
    m, n = _axes(alpha)
    polar = np.union1d(np.linspace(0.0, math.pi, resolution + 1), [0.5 * math.pi])
    phi = 2.0 * math.pi * np.arange(resolution) / resolution
    cphi, sphi = np.cos(phi), np.sin(phi)
    best = (math.inf, None)
    for start in range(0, polar.size, _ROW_CHUNK):
        beta = polar[start : start + _ROW_CHUNK]
        sb = np.sin(beta)[:, None]
        cb = np.cos(beta)[:, None]
        if 0.5 * math.pi in beta:
            sb[beta == 0.5 * math.pi] = 1.0
            cb[beta == 0.5 * math.pi] = 0.0
        kx, ky = sb * cphi, sb * sphi
        kz = np.broadcast_to(cb, kx.shape)
        vals = _h0(np.clip(kx * m[0] + ky * m[1], -1, 1)) + _h0(
            np.clip(kx * n[0] + ky * n[1], -1, 1)
        )
        i, j = np.unravel_index(int(np.argmin(vals)), vals.shape)
        if vals[i, j] < best[0]:
            best = (float(vals[i, j]), (kx[i, j], ky[i, j], kz[i, j]))
    return OracleResult(best[0], UnitVector3(*best[1]), resolution)
