"""
Tests for the constants set, the constants file, and the SI conversions
"""

import math

import pytest
from pydantic import ValidationError

from hfs_entangle.constants import (
    HYDROGEN_HFS_FREQUENCY_HZ,
    PhysicalConstants,
    codata_defaults,
    hyperfine_constant_formula,
    kelvin_to_temperature,
    load_constants,
    read_constants_file,
    tau_c_physical,
    temperature_to_kelvin,
    tesla_to_xi,
    xi_to_tesla,
)
from hfs_entangle.errors import ConfigurationError
from hfs_entangle.models.hydrogen import ZERO_FIELD_CRITICAL_TEMPERATURE


@pytest.fixture
def k() -> PhysicalConstants:
    return codata_defaults()


def test_codata_defaults(k):
    assert k.g_e == pytest.approx(2.00231930436, rel=1e-10)
    assert k.g_p == pytest.approx(5.5856946893, rel=1e-8)
    assert k.hfs_splitting_freq == HYDROGEN_HFS_FREQUENCY_HZ
    assert k.mu_B == pytest.approx(k.e_charge * k.hbar / (2 * k.me), rel=1e-6)


def test_constants_are_immutable(k):
    with pytest.raises(ValidationError):
        k.kB = 1.0


def test_splitting_and_hyperfine_constant(k):
    splitting_ev = k.splitting_energy / k.e_charge
    assert splitting_ev == pytest.approx(5.87433e-6, rel=1e-5)
    assert k.hyperfine_constant == pytest.approx(k.splitting_energy / 4)


def test_critical_threshold_in_si(k):
    threshold = tau_c_physical(k)
    assert threshold.energy_eV == pytest.approx(5.35e-6, rel=0.01)
    assert 0.057 <= threshold.temperature_K <= 0.065
    assert threshold.splitting_eV == pytest.approx(4 * threshold.hyperfine_constant_eV)


def test_critical_threshold_formula_paths(k):
    threshold = tau_c_physical(k)
    assert abs(threshold.formula_relative_deviation) < 0.01
    # R_inf is per metre, so this form sits a factor 2 pi low
    ratio = (1 + threshold.rydberg_form_relative_deviation) * 2 * math.pi
    assert ratio == pytest.approx(1.0, rel=0.01)


def test_hyperfine_constant_formula_close_to_measured(k):
    assert hyperfine_constant_formula(k) / k.hyperfine_constant == pytest.approx(1.0, rel=0.01)


def test_doubling_the_splitting_doubles_the_threshold(k):
    doubled = PhysicalConstants(
        **{**k.model_dump(), "hfs_splitting_freq": 2 * k.hfs_splitting_freq}
    )
    base, scaled = tau_c_physical(k), tau_c_physical(doubled)
    assert scaled.energy_eV == pytest.approx(2 * base.energy_eV, rel=1e-14)
    assert scaled.temperature_K == pytest.approx(2 * base.temperature_K, rel=1e-14)


def test_field_conversion(k):
    assert xi_to_tesla(0.0, k) == 0.0
    one = xi_to_tesla(1.0, k)
    assert one == pytest.approx(0.0507, abs=1e-4)
    assert xi_to_tesla(16.5, k) == pytest.approx(16.5 * one, rel=1e-14)
    for xi in (1e-3, 0.7, 16.5, 1e4):
        assert tesla_to_xi(xi_to_tesla(xi, k), k) == pytest.approx(xi, rel=1e-12)


def test_temperature_conversion(k):
    kelvin = temperature_to_kelvin(ZERO_FIELD_CRITICAL_TEMPERATURE, k)
    assert kelvin == pytest.approx(tau_c_physical(k).temperature_K, rel=1e-12)
    assert kelvin_to_temperature(kelvin, k) == pytest.approx(
        ZERO_FIELD_CRITICAL_TEMPERATURE, rel=1e-12
    )


def test_checksum_tracks_values(k):
    assert k.checksum() == codata_defaults().checksum()
    assert len(k.checksum()) == 16
    changed = PhysicalConstants(**{**k.model_dump(), "kB": k.kB * 1.001})
    assert changed.checksum() != k.checksum()


def test_read_constants_file(tmp_path):
    path = tmp_path / "constants.txt"
    path.write_text(
        "# deuterium-like splitting\n\nhfs_splitting_freq = 327384352.5\n  kB=1.380649e-23  \n",
        encoding="utf-8",
    )
    assert read_constants_file(path) == {
        "hfs_splitting_freq": 327384352.5,
        "kB": 1.380649e-23,
    }
    k = load_constants(path)
    assert k.hfs_splitting_freq == 327384352.5
    assert k.me == codata_defaults().me


@pytest.mark.parametrize(
    "content, message",
    [
        ("planck = 1.0\n", "unknown constant"),
        ("kB = 1.0\nkB = 2.0\n", "duplicate constant"),
        ("kB = big\n", "not a number"),
        ("kB = nan\n", "not finite"),
        ("kB 1.0\n", "expected key=value"),
    ],
)
def test_read_constants_file_rejects_bad_input(tmp_path, content, message):
    path = tmp_path / "bad.txt"
    path.write_text(content, encoding="utf-8")
    with pytest.raises(ConfigurationError, match=message):
        read_constants_file(path)


def test_missing_constants_file(tmp_path):
    with pytest.raises(ConfigurationError):
        read_constants_file(tmp_path / "absent.txt")


def test_inconsistent_bohr_magneton_is_rejected(tmp_path):
    path = tmp_path / "constants.txt"
    path.write_text("mu_B = 1e-23\n", encoding="utf-8")
    with pytest.raises(ValidationError, match="mu_B"):
        load_constants(path)


def test_non_positive_override_is_rejected(tmp_path):
    path = tmp_path / "constants.txt"
    path.write_text("kB = -1.0\n", encoding="utf-8")
    with pytest.raises(ValidationError):
        load_constants(path)
