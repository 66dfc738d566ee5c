"""
CSV output for beampattern grids and column tables.

Files start with the `# fda-beam v1` format line, followed by a header row of
unit-suffixed column names. Floats are written with a fixed `%.10e` format so
identical inputs give byte-identical files.
"""

import logging
from pathlib import Path
from typing import Dict, List, Mapping, Optional

import numpy as np

from ..core.grid import BeamGrid

logger = logging.getLogger(__name__)

FORMAT_LINE = "# fda-beam v1"
FLOAT_FORMAT = "%.10e"
DB_FLOOR = -300.0

AXIS_COLUMNS: Dict[str, str] = {"time": "time_s", "range": "range_m", "angle": "angle_deg"}


def power_to_db(power: np.ndarray, reference: float) -> np.ndarray:
    """10 log10(power / reference), floored at DB_FLOOR for zero power."""
    power = np.asarray(power, dtype=float)
    with np.errstate(divide="ignore"):
        db = 10.0 * np.log10(power / reference)
    return np.maximum(db, DB_FLOOR)


def write_columns_csv(path: Path, columns: Mapping[str, np.ndarray], comments: Optional[List[str]] = None) -> Path:
    """
    Write equal-length columns to a CSV file.

    Args:
        path: Destination file; parent directories are created
        columns: Ordered mapping of column name to values
        comments: Extra `#` lines placed after the format line

    Returns:
        The path written
    """
    names = list(columns)
    data = np.column_stack([np.asarray(columns[name], dtype=float).ravel() for name in names])
    header_lines = [FORMAT_LINE] + [f"# {line}" for line in (comments or [])] + [",".join(names)]

    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    np.savetxt(path, data, fmt=FLOAT_FORMAT, delimiter=",", header="\n".join(header_lines), comments="")
    logger.debug("Wrote %d rows x %d columns to %s", data.shape[0], data.shape[1], path)
    return path


def grid_columns(grid: BeamGrid) -> Dict[str, np.ndarray]:
    """Flatten a grid into row-major axis columns followed by power_lin and power_db."""
    mesh = np.meshgrid(*(axis.values for axis in grid.axes), indexing="ij")
    columns: Dict[str, np.ndarray] = {}
    for axis, values in zip(grid.axes, mesh):
        flat = values.ravel()
        columns[AXIS_COLUMNS[axis.name]] = np.degrees(flat) if axis.name == "angle" else flat
    reference = float(grid.config.m_antennas ** 2)
    columns["power_lin"] = grid.power.ravel()
    columns["power_db"] = power_to_db(grid.power.ravel(), reference)
    return columns


def write_grid_csv(grid: BeamGrid, path: Path, comments: Optional[List[str]] = None) -> Path:
    """Write a BeamGrid with dB referenced to M^2."""
    fixed = [f"{name} = {value!r}" for name, value in sorted(grid.fixed.items())]
    return write_columns_csv(path, grid_columns(grid), fixed + (comments or []))
