"""Dense symmetric eigendecomposition with degenerate-eigenvalue grouping.

The grouping matters: time averages of walk dynamics keep every cross term
within a repeated eigenvalue, so projectors must span whole eigenspaces, not
individual eigenvectors.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import EigensolverError

# Two eigenvalues belong to one degenerate group when their gap is below
# this relative tolerance; symmetric solvers resolve well-separated
# eigenvalues to near machine precision at the matrix sizes targeted here.
DEGENERACY_RTOL = 1e-8


@dataclass(frozen=True)
class SpectralDecomposition:
    """Eigenvalues (ascending), orthonormal eigenvector columns, and the
    partition of eigenvalue indices into degenerate groups."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    groups: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return self.eigenvalues.shape[0]

    def reconstruct(self) -> np.ndarray:
        v = self.eigenvectors
        return (v * self.eigenvalues[np.newaxis, :]) @ v.T

    def orthonormality_defect(self) -> float:
        v = self.eigenvectors
        return float(np.max(np.abs(v.T @ v - np.eye(self.n))))


def group_degenerate(eigenvalues: np.ndarray, rtol: float = DEGENERACY_RTOL) -> tuple[tuple[int, ...], ...]:
    """Chain consecutive ascending eigenvalues into clusters.

    Adjacent values i, i+1 share a cluster when their gap is at most
    ``rtol * max(1, |value|)``.
    """
    groups: list[tuple[int, ...]] = []
    current = [0]
    for i in range(1, len(eigenvalues)):
        gap_tol = rtol * max(1.0, abs(eigenvalues[i]))
        if eigenvalues[i] - eigenvalues[current[-1]] <= gap_tol:
            current.append(i)
        else:
            groups.append(tuple(current))
            current = [i]
    groups.append(tuple(current))
    return tuple(groups)


def decompose_symmetric(matrix: np.ndarray, rtol: float = DEGENERACY_RTOL) -> SpectralDecomposition:
    """Eigendecompose a real symmetric matrix.

    Raises EigensolverError if the solver does not converge or the input is
    not symmetric.
    """
    a = np.asarray(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise EigensolverError(f"expected a square matrix, got shape {a.shape}")
    if not np.allclose(a, a.T, atol=1e-10):
        raise EigensolverError("matrix is not symmetric")
    try:
        eigenvalues, eigenvectors = np.linalg.eigh((a + a.T) / 2.0)
    except np.linalg.LinAlgError as exc:
        raise EigensolverError(str(exc)) from exc
    eigenvalues.flags.writeable = False
    eigenvectors.flags.writeable = False
    return SpectralDecomposition(
        eigenvalues, eigenvectors, group_degenerate(eigenvalues, rtol)
    )
