"""
Tests for the basis-general concurrence and l1 coherence
"""

import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from hfs_entangle.core.entanglement import (
    as_density_matrix,
    gibbs_state,
    l1_coherence,
    product_route_lambdas,
    pure_state_concurrence,
    pure_state_density,
    spin_flip,
    wootters_concurrence,
    wootters_lambdas,
    wootters_r_matrix,
)
from hfs_entangle.core.linalg import eigendecompose_hermitian
from hfs_entangle.errors import (
    InvalidDensityMatrixError,
    NotHermitianError,
    NotPositiveSemidefiniteError,
)

SQRT_HALF = 1 / math.sqrt(2)

BELL_STATES = {
    "phi+": [SQRT_HALF, 0, 0, SQRT_HALF],
    "phi-": [SQRT_HALF, 0, 0, -SQRT_HALF],
    "psi+": [0, SQRT_HALF, SQRT_HALF, 0],
    "psi-": [0, SQRT_HALF, -SQRT_HALF, 0],
}


def random_unitary2(rng: np.random.Generator) -> np.ndarray:
    z = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def random_pure_state(rng: np.random.Generator) -> np.ndarray:
    psi = rng.normal(size=4) + 1j * rng.normal(size=4)
    return psi / np.linalg.norm(psi)


def random_density(rng: np.random.Generator) -> np.ndarray:
    g = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


def werner(p: float) -> np.ndarray:
    bell = pure_state_density(BELL_STATES["phi+"])
    return p * bell + (1 - p) * np.eye(4) / 4


@pytest.mark.parametrize("name", sorted(BELL_STATES))
def test_bell_states_are_maximally_entangled(name):
    rho = pure_state_density(BELL_STATES[name])
    assert wootters_concurrence(rho) == pytest.approx(1.0, abs=1e-12)
    assert l1_coherence(rho) == pytest.approx(1.0, abs=1e-12)


def test_product_states_are_separable():
    up = np.array([1, 0])
    plus = np.array([1, 1]) / math.sqrt(2)
    for psi in (np.kron(up, up), np.kron(plus, up), np.kron(plus, plus)):
        assert wootters_concurrence(pure_state_density(psi)) == pytest.approx(0.0, abs=1e-12)


def test_maximally_mixed_state():
    rho = np.eye(4) / 4
    assert wootters_concurrence(rho) == 0.0
    assert l1_coherence(rho) == 0.0
    assert_allclose(spin_flip(rho), rho)


@pytest.mark.parametrize("p", [0.1, 1 / 3, 0.5, 0.8, 1.0])
def test_werner_state_concurrence(p):
    """C = max(0, (3p - 1)/2)"""
    assert wootters_concurrence(werner(p)) == pytest.approx(max(0.0, (3 * p - 1) / 2), abs=1e-12)


def test_spin_flip_examples():
    up_up = pure_state_density([1, 0, 0, 0])
    down_down = pure_state_density([0, 0, 0, 1])
    assert_allclose(spin_flip(up_up), down_down, atol=1e-15)
    singlet = pure_state_density(BELL_STATES["psi-"])
    assert_allclose(spin_flip(singlet), singlet, atol=1e-15)


def test_spin_flip_is_an_involution_on_real_states():
    rng = np.random.default_rng(8)
    g = rng.normal(size=(4, 4))
    rho = g @ g.T
    rho /= np.trace(rho)
    assert_allclose(spin_flip(spin_flip(rho)), rho, atol=1e-12)


def test_pure_state_concurrence_agrees_with_wootters():
    rng = np.random.default_rng(42)
    for _ in range(100):
        psi = random_pure_state(rng)
        assert wootters_concurrence(pure_state_density(psi)) == pytest.approx(
            pure_state_concurrence(psi), abs=1e-10
        )


def test_concurrence_is_invariant_under_local_unitaries():
    rng = np.random.default_rng(1234)
    bell = pure_state_density(BELL_STATES["psi+"])
    for trial in range(120):
        weight = rng.uniform(0.0, 1.0)
        rho = weight * bell + (1 - weight) * random_density(rng)
        u = np.kron(random_unitary2(rng), random_unitary2(rng))
        rotated = u @ rho @ u.conj().T
        assert wootters_concurrence(rotated) == pytest.approx(
            wootters_concurrence(rho), abs=1e-9
        ), f"trial {trial}"


def test_concurrence_stays_in_unit_interval():
    rng = np.random.default_rng(99)
    for _ in range(100):
        c = wootters_concurrence(random_density(rng))
        assert 0.0 <= c <= 1.0


def test_lambda_routes_agree():
    """Hermitian R, singular values and the rho rho~ product give the same spectrum"""
    rng = np.random.default_rng(6)
    for _ in range(20):
        rho = 0.6 * werner(0.9) + 0.4 * random_density(rng)
        lambdas = wootters_lambdas(rho)
        r_spectrum = np.sort(eigendecompose_hermitian(wootters_r_matrix(rho)).eigenvalues)[::-1]
        assert_allclose(lambdas, r_spectrum, atol=1e-9)
        assert_allclose(lambdas, product_route_lambdas(rho), atol=1e-6)
        assert np.all(np.diff(lambdas) <= 0)


def test_l1_coherence_of_plus_plus_state():
    """Every entry of |++><++| is 1/4, twelve are off-diagonal"""
    plus = np.array([1, 1]) / math.sqrt(2)
    assert l1_coherence(pure_state_density(np.kron(plus, plus))) == pytest.approx(3.0)


def test_l1_coherence_vanishes_iff_diagonal():
    diagonal = np.diag([0.4, 0.3, 0.2, 0.1])
    assert l1_coherence(diagonal) == 0.0
    nearly = diagonal.astype(complex)
    nearly[1, 2] = nearly[2, 1] = 1e-9
    assert l1_coherence(nearly) > 1e-12


def test_as_density_matrix_validation():
    with pytest.raises(InvalidDensityMatrixError):
        as_density_matrix(np.eye(4) / 2)
    with pytest.raises(NotPositiveSemidefiniteError):
        as_density_matrix(np.diag([1.5, -0.5, 0.0, 0.0]))
    with pytest.raises(NotHermitianError):
        as_density_matrix(np.triu(np.ones((4, 4))) / 4)


def test_wootters_concurrence_rejects_non_states():
    with pytest.raises(NotPositiveSemidefiniteError):
        wootters_concurrence(np.diag([0.6, 0.6, -0.2, 0.0]))


def test_gibbs_state_weights():
    energies = np.array([-1.0, 0.0, 0.5, 2.0])
    rho = gibbs_state(np.diag(energies), 0.7)
    weights = np.exp(-energies / 0.7)
    assert_allclose(np.diag(rho).real, weights / weights.sum(), rtol=1e-13)
    assert np.trace(rho).real == pytest.approx(1.0, abs=1e-14)


def test_gibbs_state_low_temperature_does_not_overflow():
    rho = gibbs_state(np.diag([-1000.0, 0.0, 0.0, 1000.0]), 0.01)
    assert np.all(np.isfinite(rho))
    assert_allclose(rho, np.diag([1.0, 0.0, 0.0, 0.0]), atol=1e-15)
