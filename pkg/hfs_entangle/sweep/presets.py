"""
Figure presets: fixed sweeps that redraw the standard plots of the hydrogen
hyperfine and Heisenberg-chain entanglement curves.

Axis extents are read off the published plots; each preset records its range
and series in the CSV header.
"""

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, Optional, Tuple

from ..constants import PhysicalConstants
from .runner import run_sweep
from .spec import Axis, AxisRange, Model, Quantity, SweepSpec, SweepTable
from .writers import render_gnuplot, write_table

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FigurePreset:
    name: str
    title: str
    spec: SweepSpec
    xlabel: str
    ylabel: str

    def describe(self) -> str:
        """One-line summary for --help."""
        r = self.spec.axis_range
        values = ", ".join(f"{v:g}" for v in self.spec.fixed_values)
        return (
            f"{self.name}: {self.title}; {self.spec.sweep_axis} in [{r.min:g}, {r.max:g}] "
            f"({r.points} pts), {self.spec.fixed_symbol} in {{{values}}}"
        )


def _preset(
    name: str,
    title: str,
    model: Model,
    axis: Axis,
    axis_range: Tuple[float, float, int],
    fixed_values: Tuple[float, ...],
    quantity: Quantity,
    ylabel: str,
) -> FigurePreset:
    lo, hi, points = axis_range
    spec = SweepSpec(
        model=model,
        sweep_axis=axis,
        axis_range=AxisRange(min=lo, max=hi, points=points),
        fixed_values=list(fixed_values),
        quantities=[quantity],
    )
    xlabel = "T" if axis == "temperature" else "xi"
    return FigurePreset(name=name, title=title, spec=spec, xlabel=xlabel, ylabel=ylabel)


PRESETS: Dict[str, FigurePreset] = {
    p.name: p
    for p in (
        _preset(
            "fig1a", "HFS levels vs field", "hydrogen-hfs", "field",
            (0.0, 3.0, 301), (1.0,), "energies", "E/A",
        ),
        _preset(
            "fig1b", "HFS concurrence vs temperature", "hydrogen-hfs", "temperature",
            (0.1, 6.0, 600), (0.0, 1.0, 2.0, 5.0), "concurrence", "C",
        ),
        _preset(
            "fig2a", "HFS concurrence vs field, T <= 3.5", "hydrogen-hfs", "field",
            (0.0, 10.0, 501), (0.5, 1.0, 2.0, 3.0, 3.5), "concurrence", "C",
        ),
        _preset(
            "fig2b", "Magnetically induced HFS concurrence", "hydrogen-hfs", "field",
            (0.0, 40.0, 801), (4.0, 6.0, 10.0), "concurrence", "C",
        ),
        _preset(
            "fig3a", "HFS coherence vs temperature", "hydrogen-hfs", "temperature",
            (0.1, 10.0, 500), (0.0, 1.0, 2.0, 5.0), "coherence", "D",
        ),
        _preset(
            "fig3b", "HFS coherence vs field", "hydrogen-hfs", "field",
            (0.0, 40.0, 801), (0.1, 0.3, 0.5), "coherence", "D",
        ),
        _preset(
            "fig4a", "Heisenberg pair concurrence vs temperature", "heisenberg",
            "temperature", (0.05, 5.0, 500), (0.0, 0.5, 0.9, 1.5), "concurrence", "C",
        ),
        _preset(
            "fig4b", "Heisenberg pair concurrence vs field", "heisenberg", "field",
            (0.0, 3.0, 601), (0.01, 0.5, 1.0, 2.0), "concurrence", "C",
        ),
    )
}


def preset_help() -> str:
    return "\n".join(preset.describe() for preset in PRESETS.values())


def figure_preset(
    name: str,
    out_dir: Path,
    constants: Optional[PhysicalConstants] = None,
    parallel: Optional[bool] = None,
) -> Tuple[SweepTable, str]:
    """
    Run a preset and write `<name>.csv` and `<name>.gp` into out_dir.

    Args:
        name: Preset key, e.g. "fig1b"
        out_dir: Output directory (created if missing)
        constants: Constants set recorded in the header
        parallel: Forwarded to run_sweep

    Returns:
        (table, gnuplot script text)

    Raises:
        KeyError: unknown preset
        OSError: output directory not writable
    """
    preset = PRESETS[name]
    logger.debug(f"Running preset {preset.describe()}")
    table = run_sweep(
        preset.spec,
        constants=constants,
        extra_metadata={"preset": preset.name, "title": preset.title},
        parallel=parallel,
    )
    script = render_gnuplot(
        table,
        f"{preset.name}.csv",
        preset.title,
        preset.xlabel,
        preset.ylabel,
        preset.spec.axis_range.spacing == "log",
    )
    write_table(table, out_dir, preset.name, script)
    return table, script
