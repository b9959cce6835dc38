"""
Command line for hfs-entangle: python -m hfs_entangle or `hfs-entangle`.

    hfs-entangle sweep --axis field --range 0:40:801 --series 4,6,10
    hfs-entangle figure fig2b --out figures/
    hfs-entangle solve critical-field 10
    hfs-entangle constants

Exit codes: 0 success, 1 usage error, 2 numeric or domain error.
"""

import logging
import sys
from pathlib import Path
from typing import List, Optional, Sequence

import click
from pydantic import ValidationError

from . import __version__, config
from .constants import (
    PhysicalConstants,
    hyperfine_constant_formula,
    joules_to_ev,
    load_constants,
    read_constants_file,
    tau_c_physical,
    temperature_to_kelvin,
    xi_to_tesla,
)
from .errors import ConfigurationError, HfsEntangleError
from .models import hydrogen
from .sweep import presets
from .sweep.runner import run_sweep
from .sweep.spec import AxisRange, SweepSpec
from .sweep.writers import render_gnuplot, write_table

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NUMERIC = 2

SOLVE_KINDS = ["critical-temperature", "critical-field", "critical-field-approx", "mie-peak"]


def _configure_logging(verbose: bool) -> None:
    level = logging.DEBUG if verbose else getattr(logging, config.log_level(), logging.INFO)
    logging.basicConfig(level=level, format=config.LOG_FORMAT, stream=sys.stderr)
    logging.getLogger("hfs_entangle").setLevel(level)
    # Reduce verbosity of specific loggers
    logging.getLogger("asyncio").setLevel(logging.WARNING)


def format_validation_error(error: ValidationError) -> str:
    """One `field: message` fragment per pydantic error."""
    parts = []
    for item in error.errors():
        location = ".".join(str(part) for part in item["loc"]) or "value"
        parts.append(f"{location}: {item['msg']}")
    return "; ".join(parts)


class RangeParamType(click.ParamType):
    """MIN:MAX:N or MIN:MAX:N:log."""

    name = "MIN:MAX:N[:log]"

    def convert(
        self, value: object, param: Optional[click.Parameter], ctx: Optional[click.Context]
    ) -> AxisRange:
        if isinstance(value, AxisRange):
            return value
        parts = str(value).split(":")
        if len(parts) not in (3, 4) or (len(parts) == 4 and parts[3] not in ("log", "linear")):
            self.fail(f"expected MIN:MAX:N[:log], got {value!r}", param, ctx)
        try:
            lo, hi, points = float(parts[0]), float(parts[1]), int(parts[2])
        except ValueError:
            self.fail(f"MIN and MAX must be numbers and N an integer, got {value!r}", param, ctx)
        spacing = parts[3] if len(parts) == 4 else "linear"
        try:
            return AxisRange(min=lo, max=hi, points=points, spacing=spacing)
        except ValidationError as e:
            self.fail(format_validation_error(e), param, ctx)


class SeriesParamType(click.ParamType):
    """Comma-separated list of numbers."""

    name = "v1,v2,..."

    def convert(
        self, value: object, param: Optional[click.Parameter], ctx: Optional[click.Context]
    ) -> List[float]:
        if isinstance(value, list):
            return value
        try:
            return [float(item) for item in str(value).split(",") if item.strip()]
        except ValueError:
            self.fail(f"expected comma-separated numbers, got {value!r}", param, ctx)


RANGE = RangeParamType()
SERIES = SeriesParamType()

constants_option = click.option(
    "--constants",
    "constants_file",
    type=click.Path(exists=True, dir_okay=False, path_type=Path),
    default=None,
    help="key=value file (SI units) overriding CODATA constants.",
)
out_option = click.option(
    "--out",
    type=click.Path(file_okay=False, path_type=Path),
    default=None,
    help=f"Output directory (default: ${config.OUTPUT_DIR_ENV} or the working directory).",
)


def _constants(path: Optional[Path]) -> PhysicalConstants:
    k = load_constants(path)
    logger.debug(f"Using constants {k.checksum()} from {path or 'CODATA defaults'}")
    return k


@click.group()
@click.version_option(__version__, prog_name=config.APP_NAME)
@click.option("--verbose", "-v", is_flag=True, help="Log at DEBUG level.")
def cli(verbose: bool) -> None:
    """Thermal entanglement of the hydrogen hyperfine states."""
    _configure_logging(verbose)


@cli.command()
@click.option(
    "--model",
    type=click.Choice(["hydrogen-hfs", "heisenberg"]),
    default="hydrogen-hfs",
    show_default=True,
)
@click.option("--axis", type=click.Choice(["temperature", "field"]), required=True)
@click.option("--range", "axis_range", type=RANGE, required=True, help="Axis grid.")
@click.option(
    "--series", type=SERIES, required=True, help="Fixed values of the other parameter."
)
@click.option(
    "--quantities",
    default="concurrence",
    show_default=True,
    help="Comma-separated subset of concurrence,coherence,energies,condition.",
)
@click.option("--name", default="sweep", show_default=True, help="Output file stem.")
@out_option
@constants_option
def sweep(
    model: str,
    axis: str,
    axis_range: AxisRange,
    series: List[float],
    quantities: str,
    name: str,
    out: Optional[Path],
    constants_file: Optional[Path],
) -> None:
    """Sweep one parameter and write NAME.csv and NAME.gp."""
    try:
        spec = SweepSpec(
            model=model,
            sweep_axis=axis,
            axis_range=axis_range,
            fixed_values=series,
            quantities=[q.strip() for q in quantities.split(",") if q.strip()],
        )
    except ValidationError as e:
        raise click.UsageError(f"Invalid sweep: {format_validation_error(e)}") from e

    k = _constants(constants_file)
    table = run_sweep(spec, constants=k)
    script = render_gnuplot(
        table,
        f"{name}.csv",
        title=f"{model} {axis} sweep",
        logscale_x=axis_range.spacing == "log",
    )
    csv_path, _ = write_table(table, out or config.default_output_dir(), name, script)
    click.echo(str(csv_path))


@cli.command(epilog="\b\nPresets:\n" + presets.preset_help())
@click.argument("name", type=click.Choice([*presets.PRESETS, "all"]))
@out_option
@constants_option
def figure(name: str, out: Optional[Path], constants_file: Optional[Path]) -> None:
    """Write the CSV and gnuplot script of a figure preset (or all of them)."""
    k = _constants(constants_file)
    out_dir = out or config.default_output_dir()
    names = list(presets.PRESETS) if name == "all" else [name]
    for preset_name in names:
        presets.figure_preset(preset_name, out_dir, constants=k)
        click.echo(str(out_dir / f"{preset_name}.csv"))


@cli.command(context_settings={"ignore_unknown_options": True})
@click.argument("kind", type=click.Choice(SOLVE_KINDS))
@click.argument("value", type=float)
@constants_option
def solve(kind: str, value: float, constants_file: Optional[Path]) -> None:
    """
    Critical points of the hyperfine model.

    \b
    critical-temperature XI     T at which C vanishes for field XI
    critical-field T            smallest field giving C > 0 at temperature T
    critical-field-approx T     high-temperature estimate of the same (T >= 5)
    mie-peak T                  maximum induced concurrence at T >= 4/ln3
    """
    k = _constants(constants_file)

    if kind == "critical-temperature":
        t_c = hydrogen.critical_temperature(value)
        kelvin = temperature_to_kelvin(t_c, k)
        click.echo(f"xi   = {value:.10g}  (B = {xi_to_tesla(value, k):.6g} T)")
        click.echo(f"T_c  = {t_c:.10f}")
        click.echo(f"tau_c = {kelvin:.6g} K ({kelvin * 1e3:.4g} mK)")
        return

    temperature = value
    kelvin = temperature_to_kelvin(temperature, k)
    click.echo(f"T    = {temperature:.10g}  (tau = {kelvin:.6g} K)")

    if kind == "critical-field":
        xi_c = hydrogen.critical_field(temperature)
        if xi_c is None:
            click.echo(
                "entangled at zero field: T is below 4/ln3 = "
                f"{hydrogen.ZERO_FIELD_CRITICAL_TEMPERATURE:.7f}, no critical field"
            )
            return
        click.echo(f"xi_c = {xi_c:.10g}  (B = {xi_to_tesla(xi_c, k):.6g} T)")
    elif kind == "critical-field-approx":
        xi_approx = hydrogen.critical_field_high_T_approx(temperature)
        click.echo(f"xi_c ~ {xi_approx:.10g}  (B = {xi_to_tesla(xi_approx, k):.6g} T)")
        exact = hydrogen.critical_field(temperature)
        if exact is not None:
            click.echo(f"exact xi_c = {exact:.10g}")
    else:
        peak = hydrogen.peak_mie_concurrence(temperature)
        click.echo(f"xi_peak = {peak.xi:.10g}  (B = {xi_to_tesla(peak.xi, k):.6g} T)")
        click.echo(f"C_peak  = {peak.concurrence:.10g}")


@cli.command("constants")
@constants_option
def constants_command(constants_file: Optional[Path]) -> None:
    """Print the constants set and the zero-field critical temperature in SI units."""
    k = _constants(constants_file)
    if constants_file is None:
        click.echo("source: CODATA (scipy.constants), measured 1S hyperfine frequency")
    else:
        overridden = ", ".join(read_constants_file(constants_file)) or "none"
        click.echo(f"source: {constants_file} (overrides: {overridden})")
    click.echo(f"checksum: {k.checksum()}")
    for key, number in k.model_dump().items():
        click.echo(f"  {key:<20} {number:.12g}")

    threshold = tau_c_physical(k)
    a_formula = joules_to_ev(hyperfine_constant_formula(k), k)
    a_deviation = a_formula / threshold.hyperfine_constant_eV - 1.0
    click.echo(f"Delta E = 4A        {threshold.splitting_eV * 1e6:.6g} ueV")
    click.echo(f"A (measured)        {threshold.hyperfine_constant_eV * 1e6:.6g} ueV")
    click.echo(f"A (formula)         {a_formula * 1e6:.6g} ueV  ({a_deviation:+.3%})")
    click.echo(f"kB tau_c            {threshold.energy_eV * 1e6:.6g} ueV")
    click.echo(f"tau_c               {threshold.temperature_K * 1e3:.6g} mK")
    click.echo(
        f"kB tau_c (formula)  {threshold.formula_energy_eV * 1e6:.6g} ueV  "
        f"({threshold.formula_relative_deviation:+.3%})"
    )
    click.echo(
        f"kB tau_c (R_inf)    {threshold.rydberg_form_energy_eV * 1e6:.6g} ueV  "
        f"({threshold.rydberg_form_relative_deviation:+.3%})"
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run the command line and map failures onto exit codes."""
    try:
        result = cli.main(args=list(argv) if argv is not None else None, standalone_mode=False)
    except click.exceptions.UsageError as e:
        e.show()
        return EXIT_USAGE
    except click.exceptions.Abort:
        click.echo("Aborted!", err=True)
        return EXIT_USAGE
    except HfsEntangleError as e:
        click.echo(f"Error: {e}", err=True)
        return EXIT_NUMERIC
    except ConfigurationError as e:
        click.echo(f"Error: {e}", err=True)
        return EXIT_USAGE
    except ValidationError as e:
        click.echo(f"Error: {format_validation_error(e)}", err=True)
        return EXIT_USAGE
    except OSError as e:
        click.echo(f"Error: cannot write output: {e}", err=True)
        return EXIT_USAGE
    return result if isinstance(result, int) else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
