"""Labeled probability, occupation, and quantum state vectors.

Each type pins its defining invariant at construction time (total mass or
norm) and carries the node labels of the graph it was computed on, so
downstream serialization never has to guess an index order.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatchError

_SUM_TOL_PROBABILITY = 1e-10
_SUM_TOL_OCCUPATION = 1e-9
_NEGATIVE_TOL = 1e-12
_NORM_TOL = 1e-10


def _as_clamped_distribution(values, labels, sum_tol) -> np.ndarray:
    arr = np.asarray(values, dtype=float).copy()
    if arr.ndim != 1 or arr.shape[0] != len(labels):
        raise DimensionMismatchError(
            f"expected {len(labels)} values, got shape {arr.shape}"
        )
    if arr.min(initial=0.0) < -_NEGATIVE_TOL:
        raise ValueError(f"negative entry {arr.min()} below tolerance")
    total = arr.sum()
    if abs(total - 1.0) > sum_tol:
        raise ValueError(f"entries sum to {total}, not 1")
    np.clip(arr, 0.0, None, out=arr)
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True)
class ProbabilityVector:
    """Nonnegative vector summing to 1, indexed like the graph's nodes."""

    values: np.ndarray
    labels: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(
            self,
            "values",
            _as_clamped_distribution(self.values, self.labels, _SUM_TOL_PROBABILITY),
        )

    def __getitem__(self, label: str) -> float:
        return float(self.values[self.labels.index(label)])


@dataclass(frozen=True)
class OccupationVector:
    """Occupation centrality values; ``kind`` is ``classical`` or ``quantum``."""

    values: np.ndarray
    labels: tuple[str, ...]
    kind: str

    def __post_init__(self):
        if self.kind not in ("classical", "quantum"):
            raise ValueError(f"kind must be 'classical' or 'quantum', got {self.kind!r}")
        object.__setattr__(
            self,
            "values",
            _as_clamped_distribution(self.values, self.labels, _SUM_TOL_OCCUPATION),
        )

    def __getitem__(self, label: str) -> float:
        return float(self.values[self.labels.index(label)])

    @property
    def value_column(self) -> str:
        return "op_c" if self.kind == "classical" else "op_q"


@dataclass(frozen=True)
class QuantumState:
    """Complex amplitude vector of unit norm over the node basis."""

    amplitudes: np.ndarray
    labels: tuple[str, ...]

    def __post_init__(self):
        arr = _checked_amplitudes(self.amplitudes, self.labels, _NORM_TOL)
        object.__setattr__(self, "amplitudes", arr)

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))


def _checked_amplitudes(amplitudes, labels, norm_tol) -> np.ndarray:
    arr = np.asarray(amplitudes, dtype=complex).copy()
    if arr.ndim != 1 or arr.shape[0] != len(labels):
        raise DimensionMismatchError(
            f"expected {len(labels)} amplitudes, got shape {arr.shape}"
        )
    norm = np.linalg.norm(arr)
    if abs(norm - 1.0) > norm_tol:
        raise ValueError(f"state norm is {norm}, not 1")
    arr.flags.writeable = False
    return arr


def quantum_state_with_drift(amplitudes, labels, norm_tol) -> QuantumState:
    """Construct a QuantumState admitting integrator norm drift up to ``norm_tol``.

    Time-stepped trajectories are only approximately norm-preserving; callers
    must bound the drift themselves (the integrators raise past their alarm
    threshold).
    """
    arr = _checked_amplitudes(amplitudes, labels, norm_tol)
    obj = object.__new__(QuantumState)
    object.__setattr__(obj, "amplitudes", arr)
    object.__setattr__(obj, "labels", tuple(labels))
    return obj


def probability_with_drift(values, labels, sum_tol) -> ProbabilityVector:
    """Construct a ProbabilityVector admitting accumulated summation drift."""
    arr = _as_clamped_distribution(values, labels, sum_tol)
    obj = object.__new__(ProbabilityVector)
    object.__setattr__(obj, "values", arr)
    object.__setattr__(obj, "labels", tuple(labels))
    return obj
