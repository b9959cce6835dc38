"""
Two-qubit entanglement and coherence of arbitrary 4x4 density matrices.

These are the basis-general measures: the Wootters spin-flip concurrence and
the l1-norm coherence. The closed forms in the model modules are checked
against them.
"""

import logging
import math

import numpy as np
from numpy.typing import ArrayLike, NDArray

from ..errors import InvalidDensityMatrixError, NotPositiveSemidefiniteError
from .linalg import (
    PSD_CLAMP_TOL,
    SIGMA_Y,
    Hermitian4,
    as_hermitian4,
    eigendecompose_hermitian,
    hermitize,
    kron,
    psd_sqrt,
    spectral_function,
)

logger = logging.getLogger(__name__)

DensityMatrix4 = Hermitian4

TRACE_TOL = 1e-12

# sigma_y x sigma_y is real: antidiag(-1, 1, 1, -1)
SPIN_FLIP: NDArray[np.complex128] = kron(SIGMA_Y, SIGMA_Y)


def as_density_matrix(m: ArrayLike) -> DensityMatrix4:
    """
    Validate a two-qubit density matrix.

    Args:
        m: 4x4 matrix

    Returns:
        The matrix as a complex128 array

    Raises:
        NotHermitianError: fails the Hermitian construction check
        InvalidDensityMatrixError: trace differs from 1 by more than TRACE_TOL
        NotPositiveSemidefiniteError: an eigenvalue is below -PSD_CLAMP_TOL
    """
    rho = as_hermitian4(m)
    trace = complex(np.trace(rho))
    if abs(trace - 1.0) > TRACE_TOL:
        raise InvalidDensityMatrixError(
            f"Density matrix trace is {trace.real:.15g}, expected 1"
        )
    lowest = float(eigendecompose_hermitian(rho).eigenvalues[0])
    if lowest < -PSD_CLAMP_TOL:
        raise NotPositiveSemidefiniteError(
            f"Density matrix has negative eigenvalue {lowest:.3e}"
        )
    return rho


def pure_state_density(psi: ArrayLike) -> DensityMatrix4:
    """Projector |psi><psi| of a normalised 4-component state vector."""
    vec = np.asarray(psi, dtype=np.complex128).reshape(4)
    vec = vec / np.linalg.norm(vec)
    return hermitize(np.outer(vec, np.conj(vec)))


def gibbs_state(hamiltonian: ArrayLike, temperature: float) -> DensityMatrix4:
    """
    Thermal state exp(-H/T)/Z of a 4x4 Hamiltonian.

    Energies and temperature share one unit. Exponents are shifted by the
    ground-state energy, so nothing overflows at low temperature.

    Args:
        hamiltonian: 4x4 Hermitian matrix
        temperature: strictly positive temperature in the energy unit of H

    Returns:
        Density matrix with unit trace
    """
    es = eigendecompose_hermitian(hamiltonian)
    ground = float(es.eigenvalues[0])
    weights = spectral_function(es, lambda e: math.exp(-(e - ground) / temperature))
    return weights / np.trace(weights).real


def spin_flip(rho: ArrayLike) -> Hermitian4:
    """Wootters spin flip (sigma_y x sigma_y) rho* (sigma_y x sigma_y)."""
    state = as_hermitian4(rho)
    return hermitize(SPIN_FLIP @ np.conj(state) @ SPIN_FLIP)


def wootters_lambdas(rho: ArrayLike) -> NDArray[np.float64]:
    """
    Eigenvalues of R = sqrt(sqrt(rho) rho~ sqrt(rho)), descending.

    R^2 = F F^dagger with F = sqrt(rho) (sigma_y x sigma_y) sqrt(rho)*, so the
    spectrum of R is the singular spectrum of F. Taking singular values keeps
    the small lambdas at absolute accuracy instead of square-rooting round-off
    in the eigenvalues of R^2.
    """
    root = psd_sqrt(as_density_matrix(rho))
    factor = root @ SPIN_FLIP @ np.conj(root)
    singular = np.linalg.svd(factor, compute_uv=False)
    return np.sort(singular)[::-1]


def wootters_concurrence(rho: ArrayLike) -> float:
    """
    Concurrence max{0, l1 - l2 - l3 - l4} of a two-qubit density matrix.

    Args:
        rho: 4x4 density matrix in the product basis

    Returns:
        Concurrence in [0, 1]

    Raises:
        NotPositiveSemidefiniteError: rho is not a valid state
    """
    lambdas = wootters_lambdas(rho)
    value = float(lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3])
    return min(1.0, max(0.0, value))


def wootters_r_matrix(rho: ArrayLike) -> Hermitian4:
    """The Hermitian matrix R = sqrt(sqrt(rho) rho~ sqrt(rho))."""
    root = psd_sqrt(as_density_matrix(rho))
    return psd_sqrt(hermitize(root @ spin_flip(rho) @ root))


def product_route_lambdas(rho: ArrayLike) -> NDArray[np.float64]:
    """
    Square roots of the eigenvalues of the non-Hermitian product rho rho~.

    Debug cross-check for wootters_lambdas; less accurate for near-singular
    states because it square-roots round-off.
    """
    state = as_density_matrix(rho)
    eigenvalues = np.linalg.eigvals(state @ spin_flip(state))
    roots = np.sqrt(np.clip(np.real(eigenvalues), 0.0, None))
    return np.sort(roots)[::-1]


def pure_state_concurrence(psi: ArrayLike) -> float:
    """|<psi| sigma_y x sigma_y |psi*>| for a normalised pure state."""
    vec = np.asarray(psi, dtype=np.complex128).reshape(4)
    vec = vec / np.linalg.norm(vec)
    return float(abs(np.vdot(vec, SPIN_FLIP @ np.conj(vec))))


def l1_coherence(rho: ArrayLike) -> float:
    """
    l1-norm coherence: sum of |rho_ij| over i != j.

    Computed in the basis the matrix is supplied in (the product basis for
    every state this package builds).
    """
    state = as_density_matrix(rho)
    off_diagonal = ~np.eye(4, dtype=bool)
    return float(np.abs(state)[off_diagonal].sum())
