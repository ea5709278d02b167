"""Tables behind the bound-vs-angle curves and the minima pitchfork.

Rows are plain dicts so they serialize the same way to CSV and JSON.
Numbers are written with 12 significant digits.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass
from typing import Dict, List

import numpy as np

from .errors import DomainError
from .reference import bound_report
from .solver import classify_regime, numeric_minima

BOUND_FIELDS = ("alpha", "optimal", "maassen_uffink", "deutsch", "regime", "n_minima")
MINIMA_FIELDS = ("alpha", "theta", "value")
LN2 = math.log(2.0)


@dataclass(frozen=True)
class SweepSpec:
    """Evenly spaced angles ``start + i (end - start)/steps``, i < steps.

    The end point is excluded, so ``end = pi`` is allowed.
    """

    alpha_start: float = 0.0
    alpha_end: float = math.pi
    steps: int = 1000

    def __post_init__(self):
        if self.steps < 2:
            raise DomainError(f"steps must be >= 2, got {self.steps}")
        if not (0.0 <= self.alpha_start < self.alpha_end <= math.pi):
            raise DomainError(
                f"need 0 <= start < end <= pi, got [{self.alpha_start}, {self.alpha_end})"
            )

    def alphas(self) -> np.ndarray:
        i = np.arange(self.steps)
        return self.alpha_start + (self.alpha_end - self.alpha_start) * i / self.steps


def bound_rows(spec: SweepSpec) -> List[Dict]:
    rows = []
    for a in spec.alphas():
        rep = bound_report(a)
        rows.append(
            {
                "alpha": rep.alpha,
                "optimal": rep.optimal,
                "maassen_uffink": rep.maassen_uffink,
                "deutsch": rep.deutsch,
                "regime": str(classify_regime(a)),
                "n_minima": len(numeric_minima(a).minima),
            }
        )
    return rows


def minima_rows(spec: SweepSpec) -> List[Dict]:
    rows = []
    for a in spec.alphas():
        for theta, value in numeric_minima(a).minima:
            rows.append({"alpha": float(a), "theta": theta, "value": value})
    return rows


def convert_units(rows: List[Dict], degrees: bool = False, bits: bool = False) -> List[Dict]:
    angle_keys = ("alpha", "theta")
    entropy_keys = ("optimal", "maassen_uffink", "deutsch", "value")
    out = []
    for row in rows:
        row = dict(row)
        for k in angle_keys:
            if degrees and k in row:
                row[k] = math.degrees(row[k])
        for k in entropy_keys:
            if bits and k in row:
                row[k] = row[k] / LN2
        out.append(row)
    return out


def fmt(x) -> str:
    if isinstance(x, (int, np.integer)) or isinstance(x, str):
        return str(x)
    # + 0.0 turns -0.0 into 0.0
    return format(float(x) + 0.0, ".12g")


def to_csv(rows: List[Dict], fields) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(fields)
    for row in rows:
        writer.writerow([fmt(row[f]) for f in fields])
    return buf.getvalue()


def to_json(rows: List[Dict], fields) -> str:
    def value(v):
        if isinstance(v, str):
            return v
        if isinstance(v, (int, np.integer)):
            return int(v)
        return float(fmt(v))

    data = [{f: value(row[f]) for f in fields} for row in rows]
    return json.dumps(data, indent=1) + "\n"
