"""Optimal entropic bound for a pair of qubit observables at angle alpha.

The minimum of the planar entropy sum over theta has two regimes:

* alpha in [0, a*] or [pi - a*, pi): two minima sitting on the symmetry
  axes theta = alpha/2 or theta = (pi + alpha)/2 (mod pi), with closed-form
  value ``2 H0(cos(alpha/2))`` or ``2 H0(sin(alpha/2))``;
* alpha in (a*, pi - a*): the symmetric point turns into a local maximum and
  splits into two minima per half period, found numerically.

``a*`` is the root of ``-cos(a/2) log(tan^2(a/4)) - 2``, which is the
curvature of the entropy sum at theta = alpha/2.
"""

from __future__ import annotations

import enum
import functools
import math
from dataclasses import dataclass, field
from typing import List, NamedTuple, Optional

import numpy as np
from scipy.optimize import brentq
from scipy.special import entr

from .entropy import _d1, _d2, entropy_sum
from .errors import ConvergenceFailure, DomainError

_ROOT_BRACKET = (0.5, 1.5)


class Regime(str, enum.Enum):
    TWO_LOW = "TwoLow"
    FOUR = "Four"
    TWO_HIGH = "TwoHigh"

    def __str__(self):
        return self.value

    @property
    def n_minima(self) -> int:
        return 4 if self is Regime.FOUR else 2


@dataclass(frozen=True)
class CriticalAngle:
    value: float
    residual: float


class Minimum(NamedTuple):
    theta: float
    value: float


@dataclass(frozen=True)
class SolverOptions:
    """Tuning knobs for :func:`numeric_minima`.

    ``pitchfork_radius`` and ``curvature_tol`` control how candidates close
    to a symmetry point are merged into it when that point is itself a
    (possibly flat) minimum, i.e. when its curvature is >= -curvature_tol.
    """

    grid: int = 4096
    theta_tol: float = 1e-12
    value_merge: float = 1e-10
    merge_radius: float = 1e-6
    curvature_tol: float = 1e-8
    pitchfork_radius: float = 1e-3


DEFAULT_OPTIONS = SolverOptions()


@dataclass(frozen=True)
class MinimaProfile:
    alpha: float
    regime: Regime
    minima: List[Minimum] = field(default_factory=list)
    bound: float = math.nan

    @property
    def thetas(self) -> List[float]:
        return [m.theta for m in self.minima]


def check_alpha(alpha: float) -> float:
    alpha = float(alpha)
    if not (0.0 <= alpha < math.pi):
        raise DomainError(f"alpha must lie in [0, pi), got {alpha!r}")
    return alpha


def critical_angle_equation(alpha: float) -> float:
    """Curvature of the entropy sum at theta = alpha/2."""
    return -math.cos(0.5 * alpha) * math.log(math.tan(0.25 * alpha) ** 2) - 2.0


def solve_critical_angle(tol: float = 1e-12) -> CriticalAngle:
    """Root of :func:`critical_angle_equation` in (0, pi/2) by Brent's method."""
    lo, hi = _ROOT_BRACKET
    f_lo, f_hi = critical_angle_equation(lo), critical_angle_equation(hi)
    if f_lo * f_hi >= 0.0:
        raise ConvergenceFailure(f"no sign change on [{lo}, {hi}]")
    root = brentq(critical_angle_equation, lo, hi, xtol=1e-16)
    residual = critical_angle_equation(root)
    if not abs(residual) <= tol:
        raise ConvergenceFailure(
            f"residual {residual:.3e} at {root!r} exceeds tolerance {tol:g}"
        )
    return CriticalAngle(root, residual)


@functools.lru_cache(maxsize=1)
def critical_angle() -> CriticalAngle:
    """The bifurcation angle, solved once and cached."""
    return solve_critical_angle()


def classify_regime(alpha: float) -> Regime:
    alpha = check_alpha(alpha)
    a_bar = critical_angle().value
    if alpha <= a_bar:
        return Regime.TWO_LOW
    if alpha < math.pi - a_bar:
        return Regime.FOUR
    return Regime.TWO_HIGH


def _twice_h0_half_angle(phi: float) -> float:
    # 2 H0(cos(phi)) with the probabilities written as sin^2/cos^2 of phi/2
    s, c = math.sin(0.5 * phi), math.cos(0.5 * phi)
    return float(2.0 * (entr(s * s) + entr(c * c)))


def analytic_bound_low(alpha: float) -> float:
    """``-(1-c) log((1-c)/2) - (1+c) log((1+c)/2)`` with ``c = cos(alpha/2)``."""
    alpha = check_alpha(alpha)
    if alpha > critical_angle().value + 1e-12:
        raise DomainError(f"alpha={alpha!r} is past the critical angle")
    return _twice_h0_half_angle(0.5 * alpha)


def analytic_bound_high(alpha: float) -> float:
    """``-(1+s) log((1+s)/2) - (1-s) log((1-s)/2)`` with ``s = sin(alpha/2)``."""
    alpha = check_alpha(alpha)
    if alpha < math.pi - critical_angle().value - 1e-12:
        raise DomainError(f"alpha={alpha!r} is below pi minus the critical angle")
    # sin(alpha/2) = cos((pi - alpha)/2)
    return _twice_h0_half_angle(0.5 * (math.pi - alpha))


def _circ_dist(a: float, b: float, period: float) -> float:
    d = (a - b) % period
    return min(d, period - d)


def _cluster(thetas, radius: float, period: float) -> List[float]:
    """Merge angles closer than ``radius`` (circularly), averaging each group."""
    reps: List[List[float]] = []
    for t in sorted(thetas):
        for group in reps:
            if _circ_dist(t, group[0], period) < radius:
                group.append(t)
                break
        else:
            reps.append([t])
    out = []
    for group in reps:
        ref = group[0]
        offsets = [((t - ref + 0.5 * period) % period) - 0.5 * period for t in group]
        out.append((ref + sum(offsets) / len(offsets)) % period)
    return out


def _half_period_candidates(alpha: float, opts: SolverOptions) -> List[float]:
    """Local minima of the entropy sum in [0, pi) from sign changes of d1."""
    n = opts.grid
    grid = np.linspace(0.0, math.pi, n + 1)
    d = _d1(grid, alpha)
    d[n] = d[0]  # period pi
    idx = np.nonzero((d[:-1] < 0.0) & (d[1:] >= 0.0))[0]
    roots = []
    for i in idx:
        a, b = grid[i], grid[i + 1]
        if d[i + 1] == 0.0:
            roots.append(b)
            continue
        roots.append(
            brentq(lambda t: float(_d1(t, alpha)), a, b, xtol=opts.theta_tol)
        )
    return [r % math.pi for r in roots]


def numeric_minima(alpha: float, opts: Optional[SolverOptions] = None) -> MinimaProfile:
    """All global minima of the entropy sum over theta in [0, 2 pi).

    A grid of ``opts.grid`` cells over [0, pi) brackets every sign change of
    the derivative, each bracket is refined with Brent's method, and the
    candidates are closed under the two symmetries of the objective
    (theta -> alpha - theta and theta -> theta + pi).
    """
    alpha = check_alpha(alpha)
    opts = opts or DEFAULT_OPTIONS
    period = math.pi

    found = _half_period_candidates(alpha, opts)
    closed = found + [(alpha - t) % period for t in found]

    for s in (0.5 * alpha, (0.5 * alpha + 0.5 * math.pi) % period):
        if float(_d2(s, alpha)) >= -opts.curvature_tol:
            closed = [
                s if _circ_dist(t, s, period) < opts.pitchfork_radius else t
                for t in closed
            ]

    reps = _cluster(closed, opts.merge_radius, period)
    reps = [0.0 if period - t < opts.theta_tol else t for t in reps]
    values = [float(entropy_sum(t, alpha)) for t in reps]
    best = min(values)
    kept = [t for t, v in zip(reps, values) if v <= best + opts.value_merge]

    thetas = sorted(kept + [t + math.pi for t in kept])
    minima = [Minimum(t, float(entropy_sum(t, alpha))) for t in thetas]
    return MinimaProfile(alpha, classify_regime(alpha), minima, best)


def optimal_bound(alpha: float, opts: Optional[SolverOptions] = None) -> float:
    """min over pure states of S(A) + S(B) for axes at angle ``alpha``."""
    regime = classify_regime(alpha)
    if regime is Regime.TWO_LOW:
        return analytic_bound_low(alpha)
    if regime is Regime.TWO_HIGH:
        return analytic_bound_high(alpha)
    return numeric_minima(alpha, opts).bound
