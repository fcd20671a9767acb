"""Collective-dephasing generators, exact propagation, and the stationary-state projector.

The generator of the dynamics is

    d(rho)/dt = -i/2 * omega1 * [sx_1, rho] * (drive on)
                + gamma/2 * (2 Jz rho Jz - Jz^2 rho - rho Jz^2)

with Jz the collective z-spin operator of the pair. Because Jz is diagonal,
every matrix element |m><m'| decays at rate gamma*(m - m')^2 / 2, so the
infinite-time limit of the drive-free channel is the projector onto the
degenerate Jz blocks.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    DephasimError,
    DimensionMismatchError,
    DriveNotSupportedError,
    NotXFormError,
    UnsupportedDimensionError,
)
from .linalg import matrix_exponential, tensor_product
from .states import DensityMatrix

# Single-party operators in the basis order |1>, |0> (and |1>, |0>, |-1>).
_SIGMA_X = np.array([[0.0, 1.0], [1.0, 0.0]])

TRACE_PRESERVATION_TOL = 1e-12
_XFORM_RESIDUAL_TOL = 1e-8


@dataclass(frozen=True)
class ModelParams:
    """Drive ratio omega1 = Omega_1/gamma, decay rate gamma, scaled action time T = gamma*T."""

    omega1: float
    gamma: float = 1.0
    T: float = 0.0

    def __post_init__(self):
        if not self.gamma > 0:
            raise ValueError(f"gamma must be positive, got {self.gamma!r}")
        if self.T < 0:
            raise ValueError(f"action time must be nonnegative, got {self.T!r}")
        if self.omega1 < 0:
            raise ValueError(f"drive ratio must be nonnegative, got {self.omega1!r}")


@dataclass(frozen=True)
class Superoperator:
    """Generator (or propagator) acting on column-vectorized density matrices."""

    matrix: np.ndarray
    dim: int

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=complex)
        if m.shape != (self.dim**2, self.dim**2):
            raise DimensionMismatchError(
                f"superoperator shape {m.shape} does not match dim {self.dim}"
            )
        object.__setattr__(self, "matrix", m)
        # <<I| L = 0 is trace preservation for the vectorized generator.
        vec_id = np.eye(self.dim, dtype=complex).reshape(-1, order="F")
        residual = float(np.max(np.abs(vec_id.conj() @ m)))
        if residual > TRACE_PRESERVATION_TOL:
            raise DephasimError(f"generator is not trace-preserving: residual {residual:.3e}")


@dataclass(frozen=True)
class StationaryXForm:
    """Populations a, b, c, d on |11>,|10>,|01>,|00> plus the central coherence f = <10|rho|01>."""

    a: float
    b: float
    c: float
    d: float
    f: complex

    def __post_init__(self):
        total = self.a + self.b + self.c + self.d
        if abs(total - 1.0) > 1e-10:
            raise NotXFormError(f"populations sum to {total!r}, not 1")
        least = min(self.a, self.b, self.c, self.d)
        if least < -1e-9:
            raise NotXFormError(f"negative population {least!r}")
        if abs(self.f) ** 2 > self.b * self.c + 1e-9:
            raise NotXFormError(
                f"coherence |f|^2 = {abs(self.f)**2!r} exceeds b*c = {self.b * self.c!r}"
            )


def _vec(rho: np.ndarray) -> np.ndarray:
    # Column-stacking convention: vec(A rho B) = (B^T kron A) vec(rho).
    return rho.reshape(-1, order="F")


def _unvec(v: np.ndarray, dim: int) -> np.ndarray:
    return v.reshape((dim, dim), order="F")


def _check_pair_dims(dims: tuple[int, int]) -> int:
    if dims not in ((2, 2), (3, 3)):
        raise UnsupportedDimensionError(f"supported pairs are (2, 2) and (3, 3), got {dims}")
    return dims[0]


def collective_jz(dims: tuple[int, int]) -> np.ndarray:
    """Collective z-spin operator of the pair, diagonal in the lexicographic basis.

    Qubits use the spin-1/2 convention sz/2 per party (spectrum 1, 0, 0, -1);
    qutrits use the spin-1 projector form |1><1| - |-1><-1| per party
    (spectrum 2, 1, 1, 0, 0, 0, -1, -1, -2).
    """
    d = _check_pair_dims(dims)
    if d == 2:
        jz_single = np.diag([0.5, -0.5])
    else:
        jz_single = np.diag([1.0, 0.0, -1.0])
    eye = np.eye(d)
    return tensor_product(jz_single, eye) + tensor_product(eye, jz_single)


def build_liouvillian(
    dims: tuple[int, int], params: ModelParams, drive_on: bool = False
) -> Superoperator:
    """Vectorized generator of collective dephasing, optionally with the party-1 drive.

    The drive term is -i/2 * Omega_1 [sx_1, rho] with Omega_1 = omega1 * gamma;
    the dephasing term is gamma/2 * (2 Jz rho Jz - Jz^2 rho - rho Jz^2).
    """
    d = _check_pair_dims(dims)
    if drive_on and d != 2:
        raise DriveNotSupportedError("the local drive is only available for qubit pairs")
    dim = d * d
    jz = collective_jz(dims)
    jz_sq = jz @ jz
    eye = np.eye(dim)
    gen = params.gamma * (
        np.kron(jz.T, jz) - 0.5 * np.kron(eye, jz_sq) - 0.5 * np.kron(jz_sq.T, eye)
    )
    gen = gen.astype(complex)
    if drive_on:
        h = 0.5 * params.omega1 * params.gamma * tensor_product(_SIGMA_X, np.eye(2))
        gen = gen + (-1j) * (np.kron(eye, h) - np.kron(h.T, eye))
    return Superoperator(gen, dim)


def evolve(rho0: DensityMatrix, generator: Superoperator, t: float) -> DensityMatrix:
    """Propagate exactly: unvec(exp(L t) vec(rho0))."""
    if not np.isfinite(t) or t < 0:
        raise ValueError(f"time must be finite and nonnegative, got {t!r}")
    if rho0.dim != generator.dim:
        raise DimensionMismatchError(
            f"state dim {rho0.dim} does not match generator dim {generator.dim}"
        )
    propagator = matrix_exponential(generator.matrix * t)
    return DensityMatrix(_unvec(propagator @ _vec(rho0.matrix), generator.dim), rho0.dims)


def dephasing_fixed_point(rho: DensityMatrix) -> DensityMatrix:
    """Infinite-time limit of the drive-free channel: keep only degenerate Jz blocks.

    For qubits this keeps the four populations and the |10><01| coherence; for
    qutrits it keeps the 3x3 m=0 block, the two 2x2 m=+-1 blocks, and the
    m=+-2 diagonal entries.
    """
    levels = np.diag(collective_jz(rho.dims))
    mask = levels[:, None] == levels[None, :]
    return DensityMatrix(rho.matrix * mask, rho.dims)


def stationary_state(rho0: DensityMatrix, params: ModelParams) -> DensityMatrix:
    """Stationary state after driving for the scaled time T and dephasing forever."""
    if rho0.dims != (2, 2):
        raise UnsupportedDimensionError(f"driven stationary states need qubit dims, got {rho0.dims}")
    generator = build_liouvillian((2, 2), params, drive_on=True)
    driven = evolve(rho0, generator, params.T / params.gamma)
    return dephasing_fixed_point(driven)


# Positions allowed to be nonzero in the stationary form (diagonal + central coherence).
_X_MASK = np.zeros((4, 4), dtype=bool)
_X_MASK[np.arange(4), np.arange(4)] = True
_X_MASK[1, 2] = _X_MASK[2, 1] = True


def extract_xform(rho_s: DensityMatrix) -> StationaryXForm:
    """Read (a, b, c, d, f) off a stationary-form two-qubit matrix.

    Raises NotXFormError when any element outside the diagonal and the central
    coherence pair exceeds 1e-8 in magnitude.
    """
    if rho_s.dims != (2, 2):
        raise DimensionMismatchError(f"stationary form is a two-qubit notion, got dims {rho_s.dims}")
    m = rho_s.matrix
    residual = float(np.max(np.abs(m[~_X_MASK])))
    if residual > _XFORM_RESIDUAL_TOL:
        raise NotXFormError(f"off-form residual {residual:.3e} exceeds {_XFORM_RESIDUAL_TOL:g}")
    return StationaryXForm(
        a=float(m[0, 0].real),
        b=float(m[1, 1].real),
        c=float(m[2, 2].real),
        d=float(m[3, 3].real),
        f=complex(m[1, 2]),
    )
