"""Optimal entropic uncertainty relation for a pair of qubit observables.

For observables ``A = a1 I + b1 sigma.m`` and ``B = a2 I + b2 sigma.n`` the
package computes the exact minimum over pure states of ``S(A) + S(B)`` as a
function of the angle between ``m`` and ``n``, locates the minimizing Bloch
vectors, and compares the result with the Deutsch and Maassen-Uffink bounds.
"""

from .entropy import (
    ObjectiveSample,
    binary_entropy,
    entropy_sum,
    entropy_sum_d1,
    entropy_sum_d2,
    shannon_entropy,
)
from .errors import BoundOrderingError, ConvergenceFailure, DomainError, NearSingular
from .geometry import (
    ObservablePairFrame,
    QubitObservable,
    UnitVector3,
    canonical_axis,
    frame_from_alpha,
    overlap_probability,
    pair_frame,
    state_on_plane,
)
from .oracle import OracleResult, plane_grid_min, sphere_grid_min
from .reference import (
    BoundReport,
    bound_report,
    deutsch_bound,
    maassen_uffink_bound,
    max_overlap,
)
from .solver import (
    CriticalAngle,
    MinimaProfile,
    Minimum,
    Regime,
    SolverOptions,
    analytic_bound_high,
    analytic_bound_low,
    classify_regime,
    critical_angle,
    numeric_minima,
    optimal_bound,
)

__version__ = "0.1.0"
