"""
Sweep description and result table.
"""

import math
from typing import Dict, List, Literal

import numpy as np
from numpy.typing import NDArray
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

Model = Literal["hydrogen-hfs", "heisenberg"]
Axis = Literal["temperature", "field"]
Quantity = Literal["concurrence", "coherence", "energies", "condition"]
Spacing = Literal["linear", "log"]

# Column name of the swept parameter
AXIS_COLUMN: Dict[str, str] = {"temperature": "T", "field": "xi"}


class AxisRange(BaseModel):
    """Grid of the swept parameter: `points` values from min to max inclusive."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    min: float = Field(allow_inf_nan=False)
    max: float = Field(allow_inf_nan=False)
    points: int = Field(ge=2)
    spacing: Spacing = "linear"

    @model_validator(mode="after")
    def _check_bounds(self) -> "AxisRange":
        if not self.min < self.max:
            raise ValueError(f"min must be below max, got {self.min} >= {self.max}")
        if self.spacing == "log" and self.min <= 0:
            raise ValueError("log spacing requires min > 0")
        return self

    def values(self) -> NDArray[np.float64]:
        """Ascending grid; the end points are exact."""
        if self.spacing == "log":
            grid = np.geomspace(self.min, self.max, self.points)
        else:
            grid = np.linspace(self.min, self.max, self.points)
        grid[0], grid[-1] = self.min, self.max
        return grid


class SweepSpec(BaseModel):
    """
    One model, one swept axis, one series per fixed value of the other axis.

    For a temperature sweep the fixed values are fields xi >= 0; for a field
    sweep they are temperatures T > 0.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    model: Model
    sweep_axis: Axis
    axis_range: AxisRange
    fixed_values: List[float] = Field(min_length=1)
    quantities: List[Quantity] = Field(default=["concurrence"], min_length=1)

    @field_validator("fixed_values")
    @classmethod
    def _check_finite(cls, values: List[float]) -> List[float]:
        if not all(math.isfinite(v) for v in values):
            raise ValueError("fixed values must be finite")
        return values

    @field_validator("quantities")
    @classmethod
    def _check_unique(cls, quantities: List[Quantity]) -> List[Quantity]:
        if len(set(quantities)) != len(quantities):
            raise ValueError("quantities must not repeat")
        return quantities

    @model_validator(mode="after")
    def _check_domain(self) -> "SweepSpec":
        if self.sweep_axis == "temperature":
            if self.axis_range.min <= 0:
                raise ValueError("temperature axis must start above 0")
            if any(v < 0 for v in self.fixed_values):
                raise ValueError("fixed field values must be >= 0")
        else:
            if self.axis_range.min < 0:
                raise ValueError("field axis must start at or above 0")
            if any(v <= 0 for v in self.fixed_values):
                raise ValueError("fixed temperatures must be > 0")
        return self

    @property
    def fixed_symbol(self) -> str:
        """Symbol of the non-swept parameter, used in series labels."""
        return "xi" if self.sweep_axis == "temperature" else "T"


class SweepTable(BaseModel):
    """Metadata header plus rows of (axis value, one column per series and quantity)."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    metadata: Dict[str, str]
    columns: List[str]
    rows: List[List[float]]

    @model_validator(mode="after")
    def _check_cells(self) -> "SweepTable":
        width = len(self.columns)
        for index, row in enumerate(self.rows):
            if len(row) != width:
                raise ValueError(f"row {index} has {len(row)} cells, expected {width}")
            if any(math.isnan(cell) for cell in row):
                raise ValueError(f"row {index} contains NaN")
        return self

    def column(self, name: str) -> List[float]:
        """All values of one column, top to bottom."""
        index = self.columns.index(name)
        return [row[index] for row in self.rows]
