"""Continuous-time classical random walks and their occupation centrality.

Two generator kinds are supported, and they relax to different stationary
states, so they are kept explicitly apart:

* ``unnormalized_rate``: hop rate ``gamma`` per edge per unit time, giving
  the generator ``gamma * L`` (graph Laplacian). Its dynamics relax to the
  uniform distribution on a connected graph.
* ``normalized``: the random-walk generator ``L @ inv(D)``, whose columns
  describe a walker leaving node j at unit total rate split across the
  incident edges. Its stationary state is degree-proportional.

Both generators have columns summing to zero, so every evolution below
conserves total probability; the explicit Euler step is written in the
probability-conserving form ``p <- (I - dt*H) @ p``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import (
    DimensionMismatchError,
    DisconnectedGraphError,
    InvalidConfigError,
    UnstableStepError,
)
from .graphs import Graph, adjacency_matrix, connected_components, degree_vector, laplacian
from .graphs import _require_no_isolated
from .spectral import decompose_symmetric
from .state import OccupationVector, ProbabilityVector, probability_with_drift

# Successive-difference convergence must hold for this many consecutive
# steps before the evolution is declared stationary.
CONVERGENCE_STREAK = 3

# Per-step probability-sum drift budget used when validating long
# trajectories (the step itself conserves the sum exactly in exact
# arithmetic).
_STEP_SUM_DRIFT = 1e-12


class GeneratorKind(enum.Enum):
    UNNORMALIZED_RATE = "unnormalized_rate"
    NORMALIZED = "normalized"


@dataclass(frozen=True)
class GeneratorMatrix:
    """A walk generator together with the data needed to exponentiate it.

    ``strengths`` keeps the degree vector of the originating graph; the
    ``normalized`` kind is similar to a symmetric operator via D^(1/2), and
    that similarity is what makes a dense spectral propagator possible.
    """

    matrix: np.ndarray
    kind: GeneratorKind
    gamma: float
    strengths: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=float)
        col_sums = m.sum(axis=0)
        if np.max(np.abs(col_sums)) > 1e-12 * max(1.0, np.max(np.abs(m))):
            raise ValueError(f"generator columns must sum to 0, max drift {np.max(np.abs(col_sums))}")
        off = m - np.diag(np.diag(m))
        if off.max(initial=0.0) > 1e-12 or np.diag(m).min(initial=0.0) < -1e-12:
            raise ValueError("generator must have nonpositive off-diagonal and nonnegative diagonal")
        m = m.copy()
        m.flags.writeable = False
        object.__setattr__(self, "matrix", m)
        s = np.asarray(self.strengths, dtype=float).copy()
        s.flags.writeable = False
        object.__setattr__(self, "strengths", s)

    @property
    def n(self) -> int:
        return self.matrix.shape[0]

    def max_exit_rate(self) -> float:
        return float(np.max(np.diag(self.matrix)))


@dataclass(frozen=True)
class IntegrationConfig:
    """Time step, total horizon, and stationarity threshold for evolutions."""

    dt: float
    horizon: float
    tolerance: float = 1e-10

    def __post_init__(self):
        if self.dt <= 0 or self.horizon <= 0 or self.tolerance <= 0:
            raise InvalidConfigError("dt, horizon and tolerance must be positive")
        if self.dt >= self.horizon:
            raise InvalidConfigError(f"dt={self.dt} must be smaller than horizon={self.horizon}")

    @property
    def steps(self) -> int:
        return int(round(self.horizon / self.dt))


class EulerResult(NamedTuple):
    trajectory: list[ProbabilityVector]
    converged: bool

    @property
    def final(self) -> ProbabilityVector:
        return self.trajectory[-1]


def discrete_step(transition: np.ndarray, p: ProbabilityVector) -> ProbabilityVector:
    """One hop of the discrete-time walk: ``p <- M @ p``.

    ``transition`` must be column-stochastic; the result is again a valid
    probability vector.
    """
    m = np.asarray(transition, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] != p.values.shape[0]:
        raise DimensionMismatchError(
            f"transition shape {m.shape} incompatible with vector of length {p.values.shape[0]}"
        )
    col_sums = m.sum(axis=0)
    if np.max(np.abs(col_sums - 1.0)) > 1e-8 or m.min() < -1e-12:
        raise ValueError("transition matrix must be column-stochastic")
    return ProbabilityVector(m @ p.values, p.labels)


def generator_matrix(g: Graph, kind=GeneratorKind.NORMALIZED, gamma: float = 1.0) -> GeneratorMatrix:
    """Build the continuous-time walk generator of the requested kind.

    ``unnormalized_rate`` gives ``gamma * L`` (diagonal ``gamma * degree``,
    off-diagonal ``-gamma * weight``); ``normalized`` gives ``L @ inv(D)``
    and requires every node to have positive degree.
    """
    kind = GeneratorKind(kind)
    if gamma <= 0:
        raise InvalidConfigError(f"gamma must be positive, got {gamma}")
    deg = degree_vector(g)
    lap = laplacian(g)
    if kind is GeneratorKind.UNNORMALIZED_RATE:
        matrix = gamma * lap
    else:
        _require_no_isolated(g, deg)
        matrix = lap / deg[np.newaxis, :]
    return GeneratorMatrix(matrix, kind, gamma, deg)


def default_time_step(h: GeneratorMatrix) -> float:
    """Conservative Euler step: a tenth of the fastest exit time scale."""
    return 0.1 / h.max_exit_rate()


def propagator(h: GeneratorMatrix, t: float) -> np.ndarray:
    """Evaluate ``expm(-t * H)`` through a symmetric eigendecomposition.

    The ``unnormalized_rate`` generator is already symmetric. The
    ``normalized`` generator satisfies
    ``inv(sqrt(D)) @ H @ sqrt(D) = normalized Laplacian``, so its
    exponential is the symmetric one conjugated back by ``sqrt(D)``. The
    result is column-stochastic and equals the identity at ``t = 0``.
    """
    if t < 0:
        raise ValueError(f"t must be nonnegative, got {t}")
    if h.kind is GeneratorKind.UNNORMALIZED_RATE:
        decomp = decompose_symmetric(h.matrix)
        v = decomp.eigenvectors
        return (v * np.exp(-decomp.eigenvalues * t)[np.newaxis, :]) @ v.T
    root = np.sqrt(h.strengths)
    sym = h.matrix * (root[np.newaxis, :] / root[:, np.newaxis])
    decomp = decompose_symmetric((sym + sym.T) / 2.0)
    v = decomp.eigenvectors
    core = (v * np.exp(-decomp.eigenvalues * t)[np.newaxis, :]) @ v.T
    return core * (root[:, np.newaxis] / root[np.newaxis, :])


def euler_evolve(h: GeneratorMatrix, p0: ProbabilityVector, cfg: IntegrationConfig) -> EulerResult:
    """Explicit Euler evolution ``p_{k+1} = (I - dt*H) @ p_k``.

    The step conserves the probability sum exactly because the generator's
    columns sum to zero. Raises UnstableStepError unless
    ``1 - dt * max(diag(H)) >= 0``. Declares convergence once the sup-norm
    difference between successive steps stays below ``cfg.tolerance`` for
    three consecutive steps, and stops there; otherwise runs to the horizon.
    Trajectory entry k is the distribution at time ``k * dt``.
    """
    if p0.values.shape[0] != h.n:
        raise DimensionMismatchError(
            f"initial vector of length {p0.values.shape[0]} does not match generator size {h.n}"
        )
    if 1.0 - cfg.dt * h.max_exit_rate() < 0:
        raise UnstableStepError(
            f"dt={cfg.dt} violates 1 - dt*max(diag(H)) >= 0 (max exit rate {h.max_exit_rate()})"
        )
    matrix = h.matrix
    p = p0.values.copy()
    raw = [p.copy()]
    streak = 0
    converged = False
    for _ in range(cfg.steps):
        step = matrix @ p
        p = p - cfg.dt * step
        raw.append(p.copy())
        if cfg.dt * np.max(np.abs(step)) < cfg.tolerance:
            streak += 1
            if streak >= CONVERGENCE_STREAK:
                converged = True
                break
        else:
            streak = 0
    trajectory = [
        probability_with_drift(values, p0.labels, 1e-10 + _STEP_SUM_DRIFT * k)
        for k, values in enumerate(raw)
    ]
    return EulerResult(trajectory, converged)


def stationary_occupation(g: Graph) -> OccupationVector:
    """Closed-form stationary occupation: degree over total degree.

    Defined for connected graphs; the limit of the normalized-generator
    dynamics for any starting distribution.
    """
    components = connected_components(g)
    if len(components) != 1:
        raise DisconnectedGraphError(
            f"graph has {len(components)} components; analyze per component or supply a connected graph"
        )
    deg = degree_vector(g)
    _require_no_isolated(g, deg)
    return OccupationVector(deg / deg.sum(), g.nodes, "classical")
