"""
CSV and gnuplot emission for sweep tables.

CSV layout: `# key: value` header lines, then the table as written by
pandas: one column-name row and the data rows. Floats use
config.CSV_FLOAT_FORMAT, newlines are `\\n` and the encoding is UTF-8, so
identical tables give identical bytes.
"""

import logging
from pathlib import Path
from typing import Optional, Tuple

import pandas as pd

from ..config import CSV_FLOAT_FORMAT
from .spec import SweepTable

logger = logging.getLogger(__name__)


def render_csv(table: SweepTable) -> str:
    """Serialise a table to CSV text."""
    header = "".join(f"# {key}: {value}\n" for key, value in table.metadata.items())
    frame = pd.DataFrame(table.rows, columns=table.columns, dtype=float)
    body = frame.to_csv(index=False, float_format=CSV_FLOAT_FORMAT, lineterminator="\n")
    return header + body


def render_gnuplot(
    table: SweepTable,
    csv_name: str,
    title: str,
    xlabel: Optional[str] = None,
    ylabel: str = "",
    logscale_x: bool = False,
) -> str:
    """
    gnuplot script that plots every data column of `csv_name` against column 1.

    The CSV is referenced by its bare file name, so the script has to run from
    the directory holding both files. Output is `<stem>.png`.
    """
    stem = Path(csv_name).stem
    lines = [
        "set datafile separator ','",
        "set datafile commentschars '#'",
        "set key autotitle columnhead",
        "set terminal pngcairo size 900,600",
        f"set output '{stem}.png'",
        f"set title \"{title}\"",
        f"set xlabel \"{xlabel or table.columns[0]}\"",
        f"set ylabel \"{ylabel}\"",
    ]
    if logscale_x:
        lines.append("set logscale x")
    plots = [
        f"'{csv_name}' using 1:{index} with lines"
        if index == 2
        else f"'' using 1:{index} with lines"
        for index in range(2, len(table.columns) + 1)
    ]
    lines.append("plot " + ", \\\n     ".join(plots))
    return "\n".join(lines) + "\n"


def write_table(
    table: SweepTable, out_dir: Path, name: str, script: str
) -> Tuple[Path, Path]:
    """
    Write `<name>.csv` and the gnuplot script `<name>.gp` into out_dir.

    The directory is created if missing. The script should come from
    render_gnuplot with csv_name `<name>.csv`.

    Returns:
        (csv path, gnuplot script path)

    Raises:
        OSError: the directory or files cannot be written
    """
    out_dir.mkdir(parents=True, exist_ok=True)
    csv_path = out_dir / f"{name}.csv"
    script_path = out_dir / f"{name}.gp"
    csv_path.write_text(render_csv(table), encoding="utf-8", newline="\n")
    script_path.write_text(script, encoding="utf-8", newline="\n")
    logger.info(f"✅ Wrote {csv_path} and {script_path.name}")
    return csv_path, script_path
