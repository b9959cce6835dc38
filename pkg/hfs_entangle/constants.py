"""
Physical constants and the SI boundary of the hydrogen model.

All physics in this package runs in dimensionless units (energies in units of
the hyperfine constant A, T = kB tau / A, xi = mu_B B / (2A)). This module
holds the CODATA constants used to leave those units, and the conversions.

Defaults are CODATA values as shipped by scipy.constants. The hyperfine
splitting is the measured 1S hydrogen frequency. Any subset can be overridden
by a flat key=value file in SI units.
"""

import hashlib
import logging
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, model_validator
from scipy import constants as codata

from .errors import ConfigurationError

logger = logging.getLogger(__name__)

# Measured hydrogen 1S hyperfine frequency, Hz
HYDROGEN_HFS_FREQUENCY_HZ = 1_420_405_751.768

MU_B_CONSISTENCY_TOL = 1e-6

LN3 = math.log(3.0)


class PhysicalConstants(BaseModel):
    """CODATA-style constants in SI units; g-factors are positive magnitudes."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    hbar: float = Field(gt=0, allow_inf_nan=False, description="reduced Planck constant, J s")
    kB: float = Field(gt=0, allow_inf_nan=False, description="Boltzmann constant, J/K")
    c: float = Field(gt=0, allow_inf_nan=False, description="speed of light, m/s")
    e_charge: float = Field(gt=0, allow_inf_nan=False, description="elementary charge, C")
    eps0: float = Field(gt=0, allow_inf_nan=False, description="vacuum permittivity, F/m")
    me: float = Field(gt=0, allow_inf_nan=False, description="electron mass, kg")
    mp: float = Field(gt=0, allow_inf_nan=False, description="proton mass, kg")
    a0: float = Field(gt=0, allow_inf_nan=False, description="Bohr radius, m")
    alpha: float = Field(gt=0, allow_inf_nan=False, description="fine-structure constant")
    mu_B: float = Field(gt=0, allow_inf_nan=False, description="Bohr magneton, J/T")
    mu_N: float = Field(gt=0, allow_inf_nan=False, description="nuclear magneton, J/T")
    g_e: float = Field(gt=0, allow_inf_nan=False, description="|electron g-factor|")
    g_p: float = Field(gt=0, allow_inf_nan=False, description="proton g-factor")
    rydberg: float = Field(gt=0, allow_inf_nan=False, description="Rydberg constant, 1/m")
    hfs_splitting_freq: float = Field(
        gt=0, allow_inf_nan=False, description="hyperfine splitting frequency, Hz"
    )

    @model_validator(mode="after")
    def _check_bohr_magneton(self) -> "PhysicalConstants":
        expected = self.e_charge * self.hbar / (2.0 * self.me)
        deviation = abs(self.mu_B / expected - 1.0)
        if deviation > MU_B_CONSISTENCY_TOL:
            raise ValueError(
                f"mu_B is inconsistent with e*hbar/(2*me) (relative deviation {deviation:.3e})"
            )
        return self

    @property
    def h(self) -> float:
        """Planck constant, J s."""
        return 2.0 * math.pi * self.hbar

    @property
    def splitting_energy(self) -> float:
        """Zero-field splitting Delta E = h f = 4A, joules."""
        return self.h * self.hfs_splitting_freq

    @property
    def hyperfine_constant(self) -> float:
        """Hyperfine constant A = Delta E / 4, joules."""
        return self.splitting_energy / 4.0

    def checksum(self) -> str:
        """Short SHA-256 over the key=value lines; identifies a constants set."""
        lines = "\n".join(f"{key}={value!r}" for key, value in self.model_dump().items())
        return hashlib.sha256(lines.encode("utf-8")).hexdigest()[:16]


def codata_defaults() -> PhysicalConstants:
    """Constants from scipy's CODATA table plus the measured hydrogen splitting."""
    table = codata.physical_constants
    return PhysicalConstants(
        hbar=codata.hbar,
        kB=codata.k,
        c=codata.c,
        e_charge=codata.e,
        eps0=codata.epsilon_0,
        me=codata.m_e,
        mp=codata.m_p,
        a0=table["Bohr radius"][0],
        alpha=codata.alpha,
        mu_B=table["Bohr magneton"][0],
        mu_N=table["nuclear magneton"][0],
        g_e=abs(table["electron g factor"][0]),
        g_p=table["proton g factor"][0],
        rydberg=codata.Rydberg,
        hfs_splitting_freq=HYDROGEN_HFS_FREQUENCY_HZ,
    )


def read_constants_file(path: Union[str, Path]) -> Dict[str, float]:
    """
    Parse a flat key=value constants file.

    Blank lines and lines starting with '#' are ignored. Keys must be
    PhysicalConstants field names; each may appear once.

    Args:
        path: File to read

    Returns:
        Mapping of overridden keys to float values

    Raises:
        ConfigurationError: unreadable file, malformed line, unknown or
            duplicate key, or a value that is not a finite number
    """
    file_path = Path(path)
    try:
        text = file_path.read_text(encoding="utf-8")
    except OSError as e:
        raise ConfigurationError(f"Cannot read constants file {file_path}: {e}") from e

    known = set(PhysicalConstants.model_fields)
    overrides: Dict[str, float] = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ConfigurationError(f"{file_path}:{number}: expected key=value, got {line!r}")
        key, _, value = (part.strip() for part in line.partition("="))
        if key not in known:
            raise ConfigurationError(f"{file_path}:{number}: unknown constant {key!r}")
        if key in overrides:
            raise ConfigurationError(f"{file_path}:{number}: duplicate constant {key!r}")
        try:
            number_value = float(value)
        except ValueError as e:
            raise ConfigurationError(
                f"{file_path}:{number}: value of {key!r} is not a number: {value!r}"
            ) from e
        if not math.isfinite(number_value):
            raise ConfigurationError(f"{file_path}:{number}: value of {key!r} is not finite")
        overrides[key] = number_value

    logger.debug("Read %d constant overrides from %s", len(overrides), file_path)
    return overrides


def load_constants(path: Optional[Union[str, Path]] = None) -> PhysicalConstants:
    """
    CODATA defaults, optionally overridden from a constants file.

    Raises:
        ConfigurationError: see read_constants_file
        pydantic.ValidationError: an overridden value breaks a field or
            consistency check
    """
    defaults = codata_defaults()
    if path is None:
        return defaults
    overrides = read_constants_file(path)
    return PhysicalConstants(**{**defaults.model_dump(), **overrides})


# SI conversions


def xi_to_tesla(xi: float, k: PhysicalConstants) -> float:
    """B = 2 A xi / mu_B, with A from the measured splitting."""
    return 2.0 * k.hyperfine_constant * xi / k.mu_B


def tesla_to_xi(field_tesla: float, k: PhysicalConstants) -> float:
    """xi = mu_B B / (2A)."""
    return k.mu_B * field_tesla / (2.0 * k.hyperfine_constant)


def temperature_to_kelvin(temperature: float, k: PhysicalConstants) -> float:
    """tau = T A / kB."""
    return temperature * k.hyperfine_constant / k.kB


def kelvin_to_temperature(kelvin: float, k: PhysicalConstants) -> float:
    """T = kB tau / A."""
    return k.kB * kelvin / k.hyperfine_constant


def joules_to_ev(energy: float, k: PhysicalConstants) -> float:
    return energy / k.e_charge


def hyperfine_constant_formula(k: PhysicalConstants) -> float:
    """
    Hyperfine constant A from fundamental constants, joules.

    SI reading of the contact-interaction bracket:
    (2pi/3) (1/(4 pi eps0 c^2)) (hbar^2/(pi a0^3)) (g_e e/2me) (g_p e/2mp).
    The Gaussian-unit version carries a single 1/c because its magnetons do.
    """
    return (
        (2.0 * math.pi / 3.0)
        * (1.0 / (4.0 * math.pi * k.eps0 * k.c**2))
        * (k.hbar**2 / (math.pi * k.a0**3))
        * (k.g_e * k.e_charge / (2.0 * k.me))
        * (k.g_p * k.e_charge / (2.0 * k.mp))
    )


def tau_c_formula_energy(k: PhysicalConstants) -> float:
    """kB tau_c = (2/(3 ln3)) (alpha^2 hbar^2 / a0^2) (g_e g_p / mp), joules."""
    return (2.0 / (3.0 * LN3)) * (k.alpha**2 * k.hbar**2 / k.a0**2) * (k.g_e * k.g_p / k.mp)


def tau_c_rydberg_form_energy(k: PhysicalConstants) -> float:
    """
    kB tau_c = (4 alpha^2 hbar c / (3 ln3)) (me/mp) g_e g_p R_inf, joules.

    With R_inf tabulated per metre this lands a factor 2pi below the other
    paths; it is reported, not used.
    """
    return (
        (4.0 * k.alpha**2 * k.hbar * k.c / (3.0 * LN3))
        * (k.me / k.mp)
        * k.g_e
        * k.g_p
        * k.rydberg
    )


@dataclass(frozen=True)
class CriticalThreshold:
    """Zero-field entanglement threshold in SI units."""

    energy_eV: float
    temperature_K: float
    splitting_eV: float
    hyperfine_constant_eV: float
    formula_energy_eV: float
    formula_relative_deviation: float
    rydberg_form_energy_eV: float
    rydberg_form_relative_deviation: float


def tau_c_physical(k: PhysicalConstants) -> CriticalThreshold:
    """
    Critical temperature of the zero-field hyperfine entanglement.

    Primary path: kB tau_c = Delta E / ln3 with Delta E = h f from the measured
    splitting. The fundamental-constants expressions are evaluated alongside
    and reported with their relative deviation from the primary value.

    Args:
        k: Constants set

    Returns:
        CriticalThreshold with kB tau_c in eV and tau_c in kelvin
    """
    primary = k.splitting_energy / LN3
    formula = tau_c_formula_energy(k)
    rydberg_form = tau_c_rydberg_form_energy(k)
    return CriticalThreshold(
        energy_eV=joules_to_ev(primary, k),
        temperature_K=primary / k.kB,
        splitting_eV=joules_to_ev(k.splitting_energy, k),
        hyperfine_constant_eV=joules_to_ev(k.hyperfine_constant, k),
        formula_energy_eV=joules_to_ev(formula, k),
        formula_relative_deviation=formula / primary - 1.0,
        rydberg_form_energy_eV=joules_to_ev(rydberg_form, k),
        rydberg_form_relative_deviation=rydberg_form / primary - 1.0,
    )
