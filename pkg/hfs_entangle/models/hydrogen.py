"""
Hyperfine structure of ground-state hydrogen in a magnetic field.

Spin Hamiltonian H = A (sigma_e . sigma_p) + mu_B B sigma_e^z, with the nuclear
Zeeman term neglected. Everything here is dimensionless: energies in units of
A, temperature T = 1/(beta A), field xi = mu_B B / (2A).

Basis order is (up-up, up-down, down-up, down-down) with the electron first.
The level kets are usually written in the order (up-up, down-down, up-down,
down-up); LEVEL_ORDER_TO_CANONICAL maps that order onto the canonical one.

The closed forms for C and D are evaluated after multiplying numerator and
denominator by 2 exp(-2 beta sqrt(1+xi^2)), which leaves only non-positive
exponents and keeps them finite at any temperature and field.
"""

import logging
import math
from dataclasses import dataclass
from typing import Callable, Dict, NamedTuple, Optional

import numpy as np
from numpy.typing import NDArray
from pydantic import BaseModel, ConfigDict, Field
from scipy.optimize import brentq, minimize_scalar

from ..core.entanglement import DensityMatrix4, gibbs_state
from ..core.linalg import IDENTITY2, SIGMA_X, SIGMA_Y, SIGMA_Z, Hermitian4, kron
from ..errors import DomainError

logger = logging.getLogger(__name__)

# Zero-field critical temperature, 4/ln3
ZERO_FIELD_CRITICAL_TEMPERATURE = 4.0 / math.log(3.0)

# Validity floor of the high-temperature critical-field approximation
HIGH_T_APPROX_MIN_TEMPERATURE = 5.0

ROOT_MAX_ITERATIONS = 200
ROOT_RTOL = 1e-14
MAX_BRACKET_DOUBLINGS = 64

# Level-ket order (uu, dd, ud, du) -> canonical index
LEVEL_ORDER_TO_CANONICAL = (0, 3, 1, 2)

LEVELS = ("a", "b", "c", "d")


class HfsParams(BaseModel):
    """Dimensionless state point: T = 1/(beta A) and xi = mu_B B / (2A)."""

    model_config = ConfigDict(frozen=True)

    temperature: float = Field(gt=0, allow_inf_nan=False)
    xi: float = Field(ge=0, allow_inf_nan=False)


@dataclass(frozen=True)
class HfsEigenSystem:
    """Analytic levels a..d: energies over A and kets in the canonical basis."""

    energies_over_A: Dict[str, float]
    states: Dict[str, NDArray[np.complex128]]
    x_plus: float
    x_minus: float
    y_plus: float
    y_minus: float

    def eigenvalues_ascending(self) -> NDArray[np.float64]:
        return np.sort(np.array([self.energies_over_A[level] for level in LEVELS]))


class MiePeak(NamedTuple):
    xi: float
    concurrence: float


# Scalar core. No validation here, so the even-in-xi checks can pass xi < 0.


def _root(xi: float) -> float:
    return math.hypot(1.0, xi)


def _witness(beta: float, s: float) -> float:
    """2 exp(-2 beta s) [sinh(2 beta s) - s exp(-2 beta)]; sign of the condition."""
    return -math.expm1(-4.0 * beta * s) - 2.0 * s * math.exp(-2.0 * beta * (1.0 + s))


def _scaled_g(beta: float, xi: float, s: float) -> float:
    """2 exp(-2 beta s) G, with G = exp(-2 beta) cosh(2 beta xi) + cosh(2 beta s)."""
    return (
        math.exp(-2.0 * beta * (1.0 + s - xi))
        + math.exp(-2.0 * beta * (1.0 + s + xi))
        + 1.0
        + math.exp(-4.0 * beta * s)
    )


def _concurrence(temperature: float, xi: float) -> float:
    beta = 1.0 / temperature
    s = _root(xi)
    witness = _witness(beta, s)
    if witness <= 0.0:
        return 0.0
    return witness / (s * _scaled_g(beta, xi, s))


def _coherence(temperature: float, xi: float) -> float:
    beta = 1.0 / temperature
    s = _root(xi)
    return -math.expm1(-4.0 * beta * s) / (s * _scaled_g(beta, xi, s))


def _coherence_threshold(temperature: float, xi: float) -> float:
    beta = 1.0 / temperature
    s = _root(xi)
    return 2.0 * math.exp(-2.0 * beta * (1.0 + s)) / _scaled_g(beta, xi, s)


def _hamiltonian(xi: float) -> Hermitian4:
    exchange = kron(SIGMA_X, SIGMA_X) + kron(SIGMA_Y, SIGMA_Y) + kron(SIGMA_Z, SIGMA_Z)
    return exchange + 2.0 * xi * kron(SIGMA_Z, IDENTITY2)


# Hamiltonian and levels


def energies_over_A(xi: float) -> Dict[str, float]:
    """E_{a,c} = -1 -/+ 2 sqrt(1+xi^2), E_{b,d} = 1 -/+ 2 xi (units of A)."""
    s = _root(xi)
    return {
        "a": -1.0 - 2.0 * s,
        "b": 1.0 - 2.0 * xi,
        "c": -1.0 + 2.0 * s,
        "d": 1.0 + 2.0 * xi,
    }


def build_hamiltonian(p: HfsParams) -> Hermitian4:
    """
    Hyperfine Hamiltonian over A in the canonical basis.

    sigma_e . sigma_p + 2 xi sigma_e^z: diagonal (1+2xi, -1+2xi, -1-2xi, 1-2xi)
    with 2 coupling up-down and down-up. The field acts on the electron only.
    """
    return _hamiltonian(p.xi)


def analytic_eigensystem(p: HfsParams) -> HfsEigenSystem:
    """
    Closed-form eigenpairs of the hyperfine Hamiltonian.

    |d> = up-up, |b> = down-down, |c> = x+ up-down + y+ down-up,
    |a> = x- up-down + y- down-up, with
    x_pm = (s pm xi)/sqrt(1+(s pm xi)^2), y_pm = pm 1/sqrt(1+(s pm xi)^2),
    s = sqrt(1+xi^2).

    Args:
        p: State point (only xi matters)

    Returns:
        HfsEigenSystem keyed by level a..d
    """
    xi = p.xi
    s = _root(xi)
    r_plus = s + xi
    # s - xi without cancellation
    r_minus = 1.0 / r_plus
    n_plus = math.sqrt(1.0 + r_plus**2)
    n_minus = math.sqrt(1.0 + r_minus**2)
    x_plus, y_plus = r_plus / n_plus, 1.0 / n_plus
    x_minus, y_minus = r_minus / n_minus, -1.0 / n_minus

    level_rows = {
        "d": (1.0, 0.0, 0.0, 0.0),
        "b": (0.0, 1.0, 0.0, 0.0),
        "c": (0.0, 0.0, x_plus, y_plus),
        "a": (0.0, 0.0, x_minus, y_minus),
    }
    states: Dict[str, NDArray[np.complex128]] = {}
    for level in LEVELS:
        ket = np.zeros(4, dtype=np.complex128)
        for level_index, amplitude in enumerate(level_rows[level]):
            ket[LEVEL_ORDER_TO_CANONICAL[level_index]] = amplitude
        states[level] = ket

    return HfsEigenSystem(
        energies_over_A=energies_over_A(xi),
        states=states,
        x_plus=x_plus,
        x_minus=x_minus,
        y_plus=y_plus,
        y_minus=y_minus,
    )


def thermal_state(p: HfsParams) -> DensityMatrix4:
    """
    Gibbs state exp(-H/T)/Z of the hyperfine Hamiltonian.

    Exponents are always shifted by the ground energy, so the low-temperature
    limit needs no separate path.
    """
    return gibbs_state(build_hamiltonian(p), p.temperature)


def log_partition_function(p: HfsParams) -> float:
    """ln Z with Z = sum_u exp(-E_u/T)."""
    exponents = [-energy / p.temperature for energy in energies_over_A(p.xi).values()]
    top = max(exponents)
    return top + math.log(math.fsum(math.exp(x - top) for x in exponents))


def partition_function(p: HfsParams) -> float:
    """
    Z = sum_u exp(-E_u/T).

    Raises:
        DomainError: Z overflows a float (use log_partition_function)
    """
    try:
        return math.exp(log_partition_function(p))
    except OverflowError as e:
        raise DomainError(f"Partition function overflows at T={p.temperature}") from e


def g_function(p: HfsParams) -> float:
    """
    G = exp(-2/T) cosh(2 xi/T) + cosh(2 sqrt(1+xi^2)/T); equals Z exp(-1/T)/2.

    Raises:
        DomainError: G overflows a float
    """
    beta = 1.0 / p.temperature
    s = _root(p.xi)
    try:
        return math.exp(2.0 * beta * s) * _scaled_g(beta, p.xi, s) / 2.0
    except OverflowError as e:
        raise DomainError(f"G overflows at T={p.temperature}, xi={p.xi}") from e


# Entanglement and coherence


def concurrence_closed_form(p: HfsParams) -> float:
    """
    Thermal concurrence of the hyperfine states.

    C = max{0, sinh(2 s/T)/s - exp(-2/T)} / G with s = sqrt(1+xi^2).

    Args:
        p: State point

    Returns:
        Concurrence in [0, 1]
    """
    return _concurrence(p.temperature, p.xi)


def coherence_closed_form(p: HfsParams) -> float:
    """l1-norm coherence D = sinh(2 s/T) / (G s)."""
    return _coherence(p.temperature, p.xi)


def entanglement_condition(p: HfsParams) -> bool:
    """sinh(2 s/T) - s exp(-2/T) > 0; true exactly when the concurrence is positive."""
    return _witness(1.0 / p.temperature, _root(p.xi)) > 0.0


def coherence_threshold(p: HfsParams) -> float:
    """exp(-2/T)/G: the state is entangled iff D exceeds this value."""
    return _coherence_threshold(p.temperature, p.xi)


# Limits


def low_temperature_concurrence(xi: float) -> float:
    """T -> 0 plateau of both C and D: 1/sqrt(1+xi^2)."""
    return 1.0 / _root(xi)


def strong_field_coherence(p: HfsParams) -> float:
    """
    xi >> 1 approximation D ~ (1 - exp(-2/T))/xi.

    Raises:
        DomainError: xi is zero
    """
    if p.xi == 0.0:
        raise DomainError("Strong-field coherence needs xi > 0")
    return -math.expm1(-2.0 / p.temperature) / p.xi


def strong_field_energies(xi: float) -> Dict[str, float]:
    """xi >> 1 asymptotes of the mixed levels: E_c ~ -1+2xi, E_a ~ -1-2xi."""
    return {"a": -1.0 - 2.0 * xi, "c": -1.0 + 2.0 * xi}


# Critical points


def _brent(f: Callable[[float], float], lo: float, hi: float) -> float:
    return float(
        brentq(f, lo, hi, xtol=1e-300, rtol=ROOT_RTOL, maxiter=ROOT_MAX_ITERATIONS)
    )


def _check_xi(xi: float) -> None:
    if not math.isfinite(xi) or xi < 0.0:
        raise DomainError(f"xi must be finite and >= 0, got {xi}")


def _check_temperature(temperature: float) -> None:
    if not math.isfinite(temperature) or temperature <= 0.0:
        raise DomainError(f"Temperature must be finite and > 0, got {temperature}")


def critical_temperature(xi: float) -> float:
    """
    Temperature at which the concurrence vanishes for a fixed field.

    Solves sinh(2 beta s) = s exp(-2 beta) for beta = 1/T with Brent's method.
    The scaled witness is negative as beta -> 0 and increases through a single
    root, so the bracket is [tiny, 1] expanded by doubling.

    Args:
        xi: Normalised field, >= 0

    Returns:
        Dimensionless T_c; 4/ln3 at zero field

    Raises:
        DomainError: xi out of range or no bracket found
    """
    _check_xi(xi)
    s = _root(xi)

    def witness(beta: float) -> float:
        return _witness(beta, s)

    beta_lo, beta_hi = 1e-12, 1.0
    for _ in range(MAX_BRACKET_DOUBLINGS):
        if witness(beta_hi) > 0.0:
            break
        beta_hi *= 2.0
    else:
        raise DomainError(f"No critical temperature bracket for xi={xi}")
    if witness(beta_lo) >= 0.0:
        raise DomainError(f"No critical temperature bracket for xi={xi}")

    beta = _brent(witness, beta_lo, beta_hi)
    logger.debug(
        "critical_temperature(xi=%g): beta=%.17g residual=%.3e", xi, beta, witness(beta)
    )
    return 1.0 / beta


def critical_field(temperature: float) -> Optional[float]:
    """
    Smallest field that induces entanglement at a fixed temperature.

    sinh(2 beta s)/s grows with s, so the condition changes sign once in xi.
    Returns None when the state is already entangled at zero field
    (T < 4/ln3).

    Args:
        temperature: Dimensionless T > 0

    Returns:
        xi_c, or None below the zero-field critical temperature

    Raises:
        DomainError: temperature out of range or the bracket cannot be found
    """
    _check_temperature(temperature)
    beta = 1.0 / temperature

    def witness(xi: float) -> float:
        return _witness(beta, _root(xi))

    at_zero = witness(0.0)
    if at_zero > 0.0:
        return None
    if at_zero == 0.0:
        return 0.0

    xi_hi = 1.0
    for _ in range(MAX_BRACKET_DOUBLINGS):
        if witness(xi_hi) > 0.0:
            break
        xi_hi *= 2.0
    else:
        raise DomainError(f"No critical field bracket for T={temperature}")

    xi_c = _brent(witness, 0.0, xi_hi)
    logger.debug(
        "critical_field(T=%g): bracket [0, %g] -> xi_c=%.17g", temperature, xi_hi, xi_c
    )
    return xi_c


def _approx_rhs(xi: float) -> float:
    return math.log(2.0 * xi) / (xi + 1.0)


def high_temperature_approx_temperature(xi_c: float) -> float:
    """Invert 2/T = ln(2 xi_c)/(xi_c + 1) for T; meaningful for xi_c >> 1."""
    if not math.isfinite(xi_c) or xi_c <= 0.5:
        raise DomainError(f"xi_c must exceed 1/2, got {xi_c}")
    return 2.0 / _approx_rhs(xi_c)


def critical_field_high_T_approx(temperature: float) -> float:
    """
    High-temperature estimate of the critical field.

    Solves 2/T = ln(2 xi)/(xi + 1), reading the logarithm as ln(2 xi). The
    right-hand side rises to a maximum near xi ~ 2.2 and then decays; the
    root on the decaying branch is the large-field estimate.

    Args:
        temperature: T >= 5

    Returns:
        Estimated xi_c

    Raises:
        DomainError: temperature below the validity floor
    """
    if not math.isfinite(temperature) or temperature < HIGH_T_APPROX_MIN_TEMPERATURE:
        raise DomainError(
            f"High-temperature approximation needs T >= {HIGH_T_APPROX_MIN_TEMPERATURE}, "
            f"got {temperature}"
        )
    target = 2.0 / temperature

    # d/dxi [ln(2xi)/(xi+1)] = 0  <=>  ln(2xi) = 1 + 1/xi
    xi_peak = brentq(lambda x: math.log(2.0 * x) - 1.0 - 1.0 / x, 1.0, 10.0)

    def residual(xi: float) -> float:
        return _approx_rhs(xi) - target

    xi_hi = 2.0 * xi_peak
    for _ in range(MAX_BRACKET_DOUBLINGS):
        if residual(xi_hi) < 0.0:
            break
        xi_hi *= 2.0
    else:
        raise DomainError(f"No approximation bracket for T={temperature}")

    return _brent(residual, xi_peak, xi_hi)


def peak_mie_concurrence(temperature: float) -> MiePeak:
    """
    Largest magnetically induced concurrence at a fixed temperature.

    Above 4/ln3 the concurrence is zero up to xi_c, rises, and rolls off again.
    A log-spaced scan past xi_c locates the maximum, which a bounded scalar
    minimisation then refines.

    Args:
        temperature: T >= 4/ln3

    Returns:
        MiePeak(xi, concurrence)

    Raises:
        DomainError: temperature below 4/ln3
    """
    _check_temperature(temperature)
    if temperature < ZERO_FIELD_CRITICAL_TEMPERATURE:
        raise DomainError(
            f"Induced entanglement needs T >= 4/ln3 = {ZERO_FIELD_CRITICAL_TEMPERATURE:.7f}, "
            f"got {temperature}"
        )
    xi_c = critical_field(temperature) or 0.0

    grid = xi_c + np.geomspace(1e-6, 1e3 * (1.0 + xi_c), 400)
    values = np.array([_concurrence(temperature, float(x)) for x in grid])
    best = int(np.argmax(values))
    lower = float(grid[max(best - 1, 0)])
    upper = float(grid[min(best + 1, len(grid) - 1)])

    result = minimize_scalar(
        lambda x: -_concurrence(temperature, x),
        bounds=(lower, upper),
        method="bounded",
        options={"xatol": 1e-10},
    )
    xi_peak = float(result.x)
    return MiePeak(xi=xi_peak, concurrence=_concurrence(temperature, xi_peak))
