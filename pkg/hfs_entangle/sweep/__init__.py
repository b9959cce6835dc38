# Parameter sweeps, figure presets and file output
from .presets import PRESETS, figure_preset
from .runner import run_sweep
from .spec import AxisRange, SweepSpec, SweepTable

__all__ = ["PRESETS", "AxisRange", "SweepSpec", "SweepTable", "figure_preset", "run_sweep"]
