"""Dense complex linear algebra for small bipartite systems (Hilbert dimension <= 9)."""

from __future__ import annotations

import numpy as np
import scipy.linalg

from .errors import DimensionMismatchError, NonHermitianError

# Every operator handled here is O(1) in norm, so tolerances are absolute.
HERMITICITY_TOL = 1e-10


def tensor_product(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Tensor (Kronecker) product; the first factor carries the slow index."""
    return np.kron(np.asarray(a), np.asarray(b))


def hermitian_eigensystem(h: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues in descending order plus the matching eigenvector columns.

    Raises NonHermitianError when max|h - h^dagger| exceeds HERMITICITY_TOL.
    """
    h = np.asarray(h, dtype=complex)
    if h.ndim != 2 or h.shape[0] != h.shape[1]:
        raise DimensionMismatchError(f"expected a square matrix, got shape {h.shape}")
    defect = float(np.max(np.abs(h - h.conj().T)))
    if defect > HERMITICITY_TOL:
        raise NonHermitianError(f"matrix is not Hermitian: max|h - h^dag| = {defect:.3e}")
    eigvals, eigvecs = np.linalg.eigh(h)
    return eigvals[::-1].copy(), eigvecs[:, ::-1].copy()


def matrix_exponential(m: np.ndarray) -> np.ndarray:
    """exp(m) of a general square complex matrix via scaling and squaring."""
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionMismatchError(f"expected a square matrix, got shape {m.shape}")
    return scipy.linalg.expm(m)


def partial_trace(rho: np.ndarray, keep: int, dims: tuple[int, int]) -> np.ndarray:
    """Reduced matrix of subsystem `keep` (1 or 2) of a bipartite operator."""
    rho = np.asarray(rho, dtype=complex)
    d1, d2 = dims
    if rho.shape != (d1 * d2, d1 * d2):
        raise DimensionMismatchError(
            f"operator shape {rho.shape} does not match subsystem dims {dims}"
        )
    if keep not in (1, 2):
        raise ValueError(f"keep must be 1 or 2, got {keep!r}")
    blocks = rho.reshape(d1, d2, d1, d2)
    if keep == 1:
        return np.einsum("ijkj->ik", blocks)
    return np.einsum("ijil->jl", blocks)


def partial_transpose(rho: np.ndarray, sub: int, dims: tuple[int, int]) -> np.ndarray:
    """Transpose of one tensor factor (1 or 2) of a bipartite operator."""
    rho = np.asarray(rho, dtype=complex)
    d1, d2 = dims
    if rho.shape != (d1 * d2, d1 * d2):
        raise DimensionMismatchError(
            f"operator shape {rho.shape} does not match subsystem dims {dims}"
        )
    if sub not in (1, 2):
        raise ValueError(f"sub must be 1 or 2, got {sub!r}")
    blocks = rho.reshape(d1, d2, d1, d2)
    if sub == 1:
        blocks = blocks.transpose(2, 1, 0, 3)
    else:
        blocks = blocks.transpose(0, 3, 2, 1)
    return blocks.reshape(d1 * d2, d1 * d2).copy()
