"""
Heisenberg XXX two-qubit chain in a uniform field, used as a comparison model.

H/|J| = sign(J) (sigma_1 . sigma_2) + 2 xi (sigma_1^z + sigma_2^z), with
T = kB tau / |J| and xi = mu_B B / (2|J|). Antiferromagnetic means J > 0.
Both spins couple to the field, unlike the hyperfine case.
"""

import math
from dataclasses import dataclass
from typing import Dict, Tuple

import numpy as np
from numpy.typing import NDArray
from pydantic import BaseModel, ConfigDict, Field

from ..core.entanglement import DensityMatrix4, gibbs_state
from ..core.linalg import IDENTITY2, SIGMA_X, SIGMA_Y, SIGMA_Z, Hermitian4, kron

_INV_SQRT2 = 1.0 / math.sqrt(2.0)

# Level kets in the (uu, ud, du, dd) basis; 1..3 triplet, 4 singlet
_HC_STATES: Dict[int, Tuple[float, float, float, float]] = {
    1: (1.0, 0.0, 0.0, 0.0),
    2: (0.0, 0.0, 0.0, 1.0),
    3: (0.0, _INV_SQRT2, _INV_SQRT2, 0.0),
    4: (0.0, _INV_SQRT2, -_INV_SQRT2, 0.0),
}


class HcParams(BaseModel):
    """State point of the chain: temperature and field in units of |J|."""

    model_config = ConfigDict(frozen=True)

    temperature: float = Field(gt=0, allow_inf_nan=False)
    xi: float = Field(ge=0, allow_inf_nan=False)
    antiferromagnetic: bool = True


@dataclass(frozen=True)
class HcEigenSystem:
    energies: Dict[int, float]
    states: Dict[int, NDArray[np.complex128]]


def _sign(p: HcParams) -> float:
    return 1.0 if p.antiferromagnetic else -1.0


def build_hc_hamiltonian(p: HcParams) -> Hermitian4:
    exchange = kron(SIGMA_X, SIGMA_X) + kron(SIGMA_Y, SIGMA_Y) + kron(SIGMA_Z, SIGMA_Z)
    field = kron(SIGMA_Z, IDENTITY2) + kron(IDENTITY2, SIGMA_Z)
    return _sign(p) * exchange + 2.0 * p.xi * field


def hc_energies(p: HcParams) -> Dict[int, float]:
    """E1 = J + 4 mu_B B, E2 = J - 4 mu_B B, E3 = J, E4 = -3J (units of |J|)."""
    j = _sign(p)
    return {1: j + 4.0 * p.xi, 2: j - 4.0 * p.xi, 3: j, 4: -3.0 * j}


def hc_eigensystem(p: HcParams) -> HcEigenSystem:
    states = {
        level: np.array(amplitudes, dtype=np.complex128)
        for level, amplitudes in _HC_STATES.items()
    }
    return HcEigenSystem(energies=hc_energies(p), states=states)


def hc_thermal_state(p: HcParams) -> DensityMatrix4:
    return gibbs_state(build_hc_hamiltonian(p), p.temperature)


def _scaled_terms(p: HcParams) -> Tuple[float, float, float, float]:
    # With x = 4 J beta, the Boltzmann weights over exp(-J beta) are
    # exp(x) for the singlet, 1 for the m=0 triplet and exp(-/+ x xi) for m=+/-1.
    x = 4.0 * _sign(p) / p.temperature
    xb = x * p.xi
    shift = max(0.0, x, abs(xb))
    return (
        math.exp(x - shift),
        math.exp(-shift),
        math.exp(xb - shift),
        math.exp(-xb - shift),
    )


def hc_concurrence(p: HcParams) -> float:
    """
    C = max{0, (exp(4J/T) - 3) / (1 + exp(4J/T) + 2 cosh(4 J xi / T))}.

    Evaluated with all exponents shifted by the largest, so the low-temperature
    limit is finite. The field does not move the point where C vanishes.
    """
    singlet, triplet0, up, down = _scaled_terms(p)
    numerator = singlet - 3.0 * triplet0
    if numerator <= 0.0:
        return 0.0
    return numerator / (singlet + triplet0 + up + down)


def hc_coherence(p: HcParams) -> float:
    """l1 coherence |exp(4J/T) - 1| / (1 + exp(4J/T) + 2 cosh(4 J xi / T))."""
    singlet, triplet0, up, down = _scaled_terms(p)
    return abs(singlet - triplet0) / (singlet + triplet0 + up + down)


def hc_entanglement_condition(p: HcParams) -> bool:
    singlet, triplet0, _, _ = _scaled_terms(p)
    return singlet - 3.0 * triplet0 > 0.0


def hc_critical_temperature() -> float:
    """4/ln3, independent of field; ferromagnetic chains never entangle."""
    return 4.0 / math.log(3.0)
