"""
Dense linear algebra for the 2x2 and 4x4 Hermitian matrices of two-spin systems.

Matrices are numpy complex128 arrays. Hermitian 4x4 matrices are diagonalised
by a cyclic complex Jacobi scheme; matrix functions (exp, sqrt) go through the
spectral decomposition.
"""

import logging
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np
from numpy.typing import ArrayLike, NDArray

from ..errors import ConvergenceError, NotHermitianError, NotPositiveSemidefiniteError

logger = logging.getLogger(__name__)

Mat2 = NDArray[np.complex128]
Hermitian4 = NDArray[np.complex128]

# Tolerances
HERMITIAN_TOL = 1e-12  # |m[i,j] - conj(m[j,i])|, scaled by max(1, max|m|)
PSD_CLAMP_TOL = 1e-10  # eigenvalues in [-PSD_CLAMP_TOL, 0) are clamped to 0
JACOBI_OFF_TOL = 1e-15  # off-diagonal Frobenius norm relative to ||m||_F
JACOBI_MAX_SWEEPS = 100

IDENTITY2: Mat2 = np.eye(2, dtype=np.complex128)
SIGMA_X: Mat2 = np.array([[0, 1], [1, 0]], dtype=np.complex128)
SIGMA_Y: Mat2 = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
SIGMA_Z: Mat2 = np.array([[1, 0], [0, -1]], dtype=np.complex128)


@dataclass(frozen=True)
class EigenSystem4:
    """Eigenvalues ascending; column i of eigenvectors pairs with eigenvalue i."""

    eigenvalues: NDArray[np.float64]
    eigenvectors: NDArray[np.complex128]

    def reconstruct(self) -> Hermitian4:
        """Sum of lambda_i v_i v_i^dagger."""
        return spectral_function(self, lambda x: x)


def _as_complex_matrix(m: ArrayLike, size: int) -> NDArray[np.complex128]:
    arr = np.asarray(m, dtype=np.complex128)
    if arr.shape != (size, size):
        raise NotHermitianError(f"Expected a {size}x{size} matrix, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise NotHermitianError("Matrix has non-finite entries")
    return arr


def as_mat2(a: ArrayLike) -> Mat2:
    """Validate a finite 2x2 matrix and return it as complex128."""
    return _as_complex_matrix(a, 2)


def adjoint(m: ArrayLike) -> NDArray[np.complex128]:
    """Conjugate transpose."""
    return np.conj(np.asarray(m, dtype=np.complex128)).T


def as_hermitian4(m: ArrayLike) -> Hermitian4:
    """
    Validate a 4x4 Hermitian matrix.

    Args:
        m: Anything numpy can turn into a 4x4 complex array

    Returns:
        The matrix as a complex128 array

    Raises:
        NotHermitianError: wrong shape, non-finite entries, or
            |m[i,j] - conj(m[j,i])| above HERMITIAN_TOL
    """
    arr = _as_complex_matrix(m, 4)
    scale = max(1.0, float(np.abs(arr).max()))
    asymmetry = float(np.abs(arr - adjoint(arr)).max())
    if asymmetry > HERMITIAN_TOL * scale:
        raise NotHermitianError(f"Matrix is not Hermitian (max asymmetry {asymmetry:.3e})")
    return arr


def hermitize(m: ArrayLike) -> Hermitian4:
    """Hermitian part (m + m^dagger)/2; strips round-off asymmetry from products."""
    arr = np.asarray(m, dtype=np.complex128)
    return 0.5 * (arr + adjoint(arr))


def kron(a: ArrayLike, b: ArrayLike) -> NDArray[np.complex128]:
    """
    Kronecker product of two 2x2 matrices.

    Row-major block convention: (a x b)[2i+k, 2j+l] = a[i, j] * b[k, l], so the
    first factor is the electron (or spin 1) and the basis order is
    (up-up, up-down, down-up, down-down).
    """
    return np.kron(as_mat2(a), as_mat2(b))


def _off_diagonal_norm(a: NDArray[np.complex128]) -> float:
    return float(np.linalg.norm(a - np.diag(np.diag(a))))


def eigendecompose_hermitian(m: ArrayLike) -> EigenSystem4:
    """
    Diagonalise a 4x4 Hermitian matrix by cyclic complex Jacobi rotations.

    Each rotation annihilates one off-diagonal pair (p, q). The complex phase of
    a[p, q] is absorbed into the rotation, so the 2x2 subproblem is the real
    symmetric one. Pairs that are exactly zero are skipped, which keeps the
    block structure of the Hamiltonians intact.

    Args:
        m: 4x4 Hermitian matrix

    Returns:
        EigenSystem4 with ascending eigenvalues and orthonormal eigenvectors

    Raises:
        NotHermitianError: input fails the construction check
        ConvergenceError: off-diagonal norm still above tolerance after
            JACOBI_MAX_SWEEPS sweeps
    """
    a = hermitize(as_hermitian4(m))
    n = 4
    v = np.eye(n, dtype=np.complex128)
    scale = float(np.linalg.norm(a))

    if scale == 0.0:
        return EigenSystem4(eigenvalues=np.zeros(n), eigenvectors=v)

    for sweep in range(JACOBI_MAX_SWEEPS + 1):
        off = _off_diagonal_norm(a)
        if off <= JACOBI_OFF_TOL * scale:
            logger.debug("Jacobi converged after %d sweeps (off=%.3e)", sweep, off)
            break
        if sweep == JACOBI_MAX_SWEEPS:
            raise ConvergenceError(
                f"Jacobi did not converge in {JACOBI_MAX_SWEEPS} sweeps (off={off:.3e})"
            )

        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                magnitude = abs(apq)
                if magnitude == 0.0:
                    continue
                phase = apq / magnitude
                tau = (a[q, q].real - a[p, p].real) / (2.0 * magnitude)
                t = math.copysign(1.0, tau) / (abs(tau) + math.hypot(1.0, tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c

                rotation = np.eye(n, dtype=np.complex128)
                rotation[p, p] = c
                rotation[q, q] = c
                rotation[p, q] = s * phase
                rotation[q, p] = -s * np.conj(phase)

                a = hermitize(adjoint(rotation) @ a @ rotation)
                a[p, q] = 0.0
                a[q, p] = 0.0
                v = v @ rotation

    eigenvalues = np.real(np.diag(a)).copy()
    order = np.argsort(eigenvalues, kind="stable")
    return EigenSystem4(eigenvalues=eigenvalues[order], eigenvectors=v[:, order])


def spectral_function(es: EigenSystem4, f: Callable[[float], float]) -> Hermitian4:
    """Sum of f(lambda_i) v_i v_i^dagger for an existing eigensystem."""
    values = np.array([f(float(x)) for x in es.eigenvalues], dtype=np.float64)
    vecs = es.eigenvectors
    return hermitize((vecs * values) @ adjoint(vecs))


def matrix_function_hermitian(m: ArrayLike, f: Callable[[float], float]) -> Hermitian4:
    """
    Apply a real scalar function to a Hermitian matrix through its spectrum.

    Args:
        m: 4x4 Hermitian matrix
        f: real function of a real argument, e.g. math.exp

    Returns:
        Hermitian matrix sum_i f(lambda_i) v_i v_i^dagger
    """
    return spectral_function(eigendecompose_hermitian(m), f)


def psd_sqrt(m: ArrayLike) -> Hermitian4:
    """
    Principal square root of a positive semidefinite Hermitian matrix.

    Eigenvalues in [-PSD_CLAMP_TOL, 0) are round-off and are clamped to zero.

    Raises:
        NotPositiveSemidefiniteError: an eigenvalue is below -PSD_CLAMP_TOL
    """
    es = eigendecompose_hermitian(m)
    lowest = float(es.eigenvalues[0])
    if lowest < -PSD_CLAMP_TOL:
        raise NotPositiveSemidefiniteError(
            f"Matrix is not positive semidefinite (lowest eigenvalue {lowest:.3e})"
        )
    return spectral_function(es, lambda x: math.sqrt(max(x, 0.0)))


def hermitian_exp(m: ArrayLike, scale: float = 1.0) -> Hermitian4:
    """exp(scale * m) for a Hermitian m; no shift, so large scale*m can overflow."""
    return matrix_function_hermitian(m, lambda x: math.exp(scale * x))
