"""Bloch-sphere geometry for qubit observables.

An observable ``offset * I + scale * sigma . axis`` is stored through its
affine parameters. Only the axis (and the sign of ``scale``) matters for any
entropy: the eigenbasis of the operator is the eigenbasis of ``sigma . axis``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .errors import DomainError

_PARALLEL_TOL = 1e-12


@dataclass(frozen=True)
class UnitVector3:
    """A direction in R^3. Components are normalized on construction."""

    x: float
    y: float
    z: float

    def __post_init__(self):
        comps = (float(self.x), float(self.y), float(self.z))
        if not all(math.isfinite(c) for c in comps):
            raise DomainError(f"non-finite vector components {comps}")
        norm = math.sqrt(sum(c * c for c in comps))
        if norm == 0.0:
            raise DomainError("cannot normalize the zero vector")
        for name, c in zip("xyz", comps):
            object.__setattr__(self, name, c / norm)

    @classmethod
    def from_array(cls, v: Iterable[float]) -> "UnitVector3":
        x, y, z = (float(c) for c in v)
        return cls(x, y, z)

    def as_array(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z])

    def dot(self, other: "UnitVector3") -> float:
        d = self.x * other.x + self.y * other.y + self.z * other.z
        # rounding can push |d| a hair past 1 for (anti)parallel vectors
        return min(1.0, max(-1.0, d))

    def cross(self, other: "UnitVector3") -> np.ndarray:
        return np.cross(self.as_array(), other.as_array())

    def __neg__(self) -> "UnitVector3":
        return UnitVector3(-self.x, -self.y, -self.z)


PLUS_X = UnitVector3(1.0, 0.0, 0.0)
PLUS_Y = UnitVector3(0.0, 1.0, 0.0)
PLUS_Z = UnitVector3(0.0, 0.0, 1.0)


@dataclass(frozen=True)
class QubitObservable:
    """The Hermitian operator ``offset * I + scale * sigma . axis``."""

    offset: float
    scale: float
    axis: UnitVector3

    def __post_init__(self):
        if not isinstance(self.axis, UnitVector3):
            object.__setattr__(self, "axis", UnitVector3.from_array(self.axis))
        if not math.isfinite(self.offset) or not math.isfinite(self.scale):
            raise DomainError("offset and scale must be finite")
        if self.scale == 0.0:
            raise DomainError("scale must be non-zero; a multiple of I has no axis")

    def matrix(self) -> np.ndarray:
        """The 2x2 Hermitian matrix of the operator."""
        a = self.axis
        sigma_n = np.array(
            [[a.z, a.x - 1j * a.y], [a.x + 1j * a.y, -a.z]], dtype=complex
        )
        return self.offset * np.eye(2) + self.scale * sigma_n


@dataclass(frozen=True)
class ObservablePairFrame:
    """Planar frame of an observable pair.

    ``e1`` is the canonical axis of the first observable and the second one
    is ``cos(alpha) e1 + sin(alpha) e2``. ``degenerate`` is set when the two
    axes are (anti)parallel and ``e2`` had to be chosen by convention.
    """

    alpha: float
    e1: UnitVector3
    e2: UnitVector3
    degenerate: bool = False

    @property
    def m(self) -> UnitVector3:
        return self.e1

    @property
    def n(self) -> UnitVector3:
        return state_on_plane(self, self.alpha)


def canonical_axis(obs: QubitObservable) -> UnitVector3:
    """Axis whose +1 Bloch state is the eigenvector of the larger eigenvalue."""
    return obs.axis if obs.scale > 0 else -obs.axis


def overlap_probability(a: UnitVector3, k: UnitVector3) -> float:
    """|<a up|k up>|^2 for the Bloch states of directions ``a`` and ``k``."""
    return 0.5 * (1.0 + a.dot(k))


def _fallback_e2(e1: UnitVector3) -> UnitVector3:
    ref = PLUS_X if abs(e1.x) < 0.9 else PLUS_Y
    v = ref.as_array() - e1.dot(ref) * e1.as_array()
    return UnitVector3.from_array(v)


def pair_frame(obs_a: QubitObservable, obs_b: QubitObservable) -> ObservablePairFrame:
    """Reduce a pair of observables to the angle between their axes.

    Antiparallel axes share an eigenbasis and are folded onto ``alpha = 0``.
    """
    a = canonical_axis(obs_a)
    b = canonical_axis(obs_b)
    cross = a.cross(b)
    sin_ab = float(np.linalg.norm(cross))
    cos_ab = a.dot(b)
    if sin_ab < _PARALLEL_TOL:
        return ObservablePairFrame(0.0, a, _fallback_e2(a), degenerate=True)
    alpha = math.atan2(sin_ab, cos_ab)
    e2 = UnitVector3.from_array(b.as_array() - cos_ab * a.as_array())
    return ObservablePairFrame(alpha, a, e2)


def frame_from_alpha(alpha: float) -> ObservablePairFrame:
    """Standard frame with ``e1 = +x`` and ``e2 = +y``."""
    if not (0.0 <= alpha < math.pi):
        raise DomainError(f"alpha must lie in [0, pi), got {alpha!r}")
    return ObservablePairFrame(float(alpha), PLUS_X, PLUS_Y, degenerate=alpha == 0.0)


def state_on_plane(frame: ObservablePairFrame, theta: float) -> UnitVector3:
    """Bloch vector at angle ``theta`` from ``e1`` inside the pair's plane."""
    c, s = math.cos(theta), math.sin(theta)
    v = c * frame.e1.as_array() + s * frame.e2.as_array()
    return UnitVector3.from_array(v)
