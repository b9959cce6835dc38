"""
Evaluate a SweepSpec into a SweepTable.

Series (one per fixed value) are independent, so the parallel path evaluates
them concurrently with asyncio.to_thread and gathers the results in spec
order. Serial and parallel runs give identical tables.
"""

import asyncio
import logging
from typing import Callable, Dict, List, Optional

from .. import __version__, config
from ..constants import PhysicalConstants, codata_defaults
from ..models import heisenberg, hydrogen
from .spec import AXIS_COLUMN, Model, Quantity, SweepSpec, SweepTable

logger = logging.getLogger(__name__)

# Columns per quantity; the energies quantity expands to one column per level
ENERGY_LEVELS: Dict[str, List[str]] = {
    "hydrogen-hfs": list(hydrogen.LEVELS),
    "heisenberg": ["1", "2", "3", "4"],
}

Evaluator = Callable[[float, float], List[float]]


def _hydrogen_evaluator(quantity: Quantity) -> Evaluator:
    def evaluate(temperature: float, xi: float) -> List[float]:
        p = hydrogen.HfsParams(temperature=temperature, xi=xi)
        if quantity == "concurrence":
            return [hydrogen.concurrence_closed_form(p)]
        if quantity == "coherence":
            return [hydrogen.coherence_closed_form(p)]
        if quantity == "condition":
            return [float(hydrogen.entanglement_condition(p))]
        energies = hydrogen.energies_over_A(xi)
        return [energies[level] for level in hydrogen.LEVELS]

    return evaluate


def _heisenberg_evaluator(quantity: Quantity) -> Evaluator:
    def evaluate(temperature: float, xi: float) -> List[float]:
        p = heisenberg.HcParams(temperature=temperature, xi=xi)
        if quantity == "concurrence":
            return [heisenberg.hc_concurrence(p)]
        if quantity == "coherence":
            return [heisenberg.hc_coherence(p)]
        if quantity == "condition":
            return [float(heisenberg.hc_entanglement_condition(p))]
        energies = heisenberg.hc_energies(p)
        return [energies[level] for level in sorted(energies)]

    return evaluate


def evaluator_for(model: Model, quantity: Quantity) -> Evaluator:
    """Function (T, xi) -> list of cells for one quantity of one model."""
    if model == "hydrogen-hfs":
        return _hydrogen_evaluator(quantity)
    return _heisenberg_evaluator(quantity)


def series_label(spec: SweepSpec, value: float) -> str:
    return f"{spec.fixed_symbol}={value:g}"


def column_names(spec: SweepSpec) -> List[str]:
    """Axis column, then for each series every quantity's columns in spec order."""
    names = [AXIS_COLUMN[spec.sweep_axis]]
    for value in spec.fixed_values:
        label = series_label(spec, value)
        for quantity in spec.quantities:
            if quantity == "energies":
                names.extend(f"E_{level}[{label}]" for level in ENERGY_LEVELS[spec.model])
            else:
                names.append(f"{quantity}[{label}]")
    return names


def evaluate_series(spec: SweepSpec, fixed_value: float) -> List[List[float]]:
    """
    Cells of one series, one inner list per axis point.

    Args:
        spec: Sweep description
        fixed_value: Value of the non-swept parameter for this series

    Returns:
        For each axis value, the concatenated cells of all quantities
    """
    evaluators = [evaluator_for(spec.model, q) for q in spec.quantities]
    cells: List[List[float]] = []
    for axis_value in spec.axis_range.values():
        if spec.sweep_axis == "temperature":
            temperature, xi = float(axis_value), fixed_value
        else:
            temperature, xi = fixed_value, float(axis_value)
        row: List[float] = []
        for evaluate in evaluators:
            row.extend(evaluate(temperature, xi))
        cells.append(row)
    logger.debug("Evaluated series %s (%d points)", series_label(spec, fixed_value), len(cells))
    return cells


def _metadata(spec: SweepSpec, constants: PhysicalConstants) -> Dict[str, str]:
    return {
        "model": spec.model,
        "spec": spec.model_dump_json(),
        "version": __version__,
        "constants": constants.checksum(),
    }


def _assemble(
    spec: SweepSpec,
    series: List[List[List[float]]],
    metadata: Dict[str, str],
) -> SweepTable:
    rows: List[List[float]] = []
    for index, axis_value in enumerate(spec.axis_range.values()):
        row = [float(axis_value)]
        for cells in series:
            row.extend(cells[index])
        rows.append(row)
    return SweepTable(metadata=metadata, columns=column_names(spec), rows=rows)


async def run_sweep_async(
    spec: SweepSpec,
    constants: Optional[PhysicalConstants] = None,
    extra_metadata: Optional[Dict[str, str]] = None,
) -> SweepTable:
    """Evaluate every series in a worker thread and gather them in spec order."""
    k = constants or codata_defaults()
    tasks = [asyncio.to_thread(evaluate_series, spec, value) for value in spec.fixed_values]
    series = await asyncio.gather(*tasks)
    return _assemble(spec, list(series), {**_metadata(spec, k), **(extra_metadata or {})})


def run_sweep(
    spec: SweepSpec,
    constants: Optional[PhysicalConstants] = None,
    extra_metadata: Optional[Dict[str, str]] = None,
    parallel: Optional[bool] = None,
) -> SweepTable:
    """
    Evaluate a sweep into a table.

    Rows are in ascending axis order; columns follow column_names(spec). The
    metadata header records the model, the spec as JSON, the library version
    and the constants checksum, plus any extra entries.

    Args:
        spec: Validated sweep description
        constants: Constants set recorded in the header (CODATA by default)
        extra_metadata: Additional header entries, e.g. the preset name
        parallel: Evaluate series concurrently; defaults to config.SWEEP_PARALLEL.
            Must be False when called from inside a running event loop.

    Returns:
        SweepTable
    """
    use_parallel = config.SWEEP_PARALLEL if parallel is None else parallel
    logger.debug(
        "Sweep %s over %s: %d series x %d points (parallel=%s)",
        spec.model,
        spec.sweep_axis,
        len(spec.fixed_values),
        spec.axis_range.points,
        use_parallel,
    )
    if use_parallel and len(spec.fixed_values) > 1:
        return asyncio.run(run_sweep_async(spec, constants, extra_metadata))

    k = constants or codata_defaults()
    series = [evaluate_series(spec, value) for value in spec.fixed_values]
    return _assemble(spec, series, {**_metadata(spec, k), **(extra_metadata or {})})
