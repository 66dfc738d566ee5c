"""
Summary metrics over sampled beampattern grids.
"""

from typing import Dict

import numpy as np

from ..core.grid import BeamGrid, GridAxisError


def peak_location(grid: BeamGrid) -> Dict[str, float]:
    """Axis coordinates and power of the grid maximum (first one on ties)."""
    index = np.unravel_index(int(np.argmax(grid.power)), grid.power.shape)
    location = {axis.name: float(axis.values[i]) for axis, i in zip(grid.axes, index)}
    location["power"] = float(grid.power[index])
    return location


def beam_pointing(angles: np.ndarray, power: np.ndarray) -> float:
    """
    Power centroid of a pattern in f_theta = sin(theta)/2, taken on the circle.

    Samples are weighted by cos(theta) so a uniform angle grid integrates with
    the sin(theta)-uniform measure. Returns NaN for an all-zero pattern.
    """
    weight = np.asarray(power) * np.cos(angles)
    resultant = np.sum(weight * np.exp(1j * np.pi * np.sin(angles)))
    if abs(resultant) == 0.0:
        return float("nan")
    return float(np.angle(resultant) / (2 * np.pi))


def range_tilt(grid: BeamGrid) -> float:
    """
    Slope of beam pointing (f_theta per metre) across the range axis.

    Rows that are not illuminated are skipped; fewer than two illuminated rows
    give a tilt of 0.

    Raises:
        GridAxisError: If the grid is not a range x angle sweep
    """
    if set(grid.axis_names) != {"range", "angle"}:
        raise GridAxisError(f"range tilt needs a range x angle grid, got {grid.axis_names}")
    power = grid.power if grid.axis_names[0] == "range" else grid.power.T
    ranges = grid.values("range")
    angles = grid.values("angle")

    pointing = np.array([beam_pointing(angles, row) for row in power])
    lit = np.isfinite(pointing)
    if np.count_nonzero(lit) < 2:
        return 0.0
    unwrapped = np.unwrap(2 * np.pi * pointing[lit]) / (2 * np.pi)
    slope, _ = np.polyfit(ranges[lit], unwrapped, 1)
    return float(slope)
