"""
Desired beampatterns sampled on the f_theta design grid.

The grid is f_k = -0.5 + k / K for k = 0..K-1, half-open on [-0.5, 0.5), so
it contains f_theta = 0 and theta = +/-90 deg share the bin at -0.5.
"""

from dataclasses import dataclass, field
from typing import Iterable, List, Sequence, Tuple

import numpy as np

# Slack on region edges so bins that land exactly on an edge are not lost to rounding.
_EDGE_TOLERANCE_DEG = 1e-9


class DesignError(ValueError):
    """Raised for invalid desired regions, masks or grid sizes."""
    pass


def f_theta_grid(grid_size: int) -> np.ndarray:
    if grid_size < 2:
        raise DesignError(f"design grid needs K >= 2 bins, got {grid_size}")
    return -0.5 + np.arange(grid_size) / grid_size


def angles_from_f_theta(f_theta: np.ndarray) -> np.ndarray:
    """theta = asin(2 f_theta) in radians."""
    return np.arcsin(np.clip(2.0 * np.asarray(f_theta, dtype=float), -1.0, 1.0))


@dataclass(frozen=True, eq=False)
class DesiredPattern:
    """Desired |AF| per design bin, plus the angular regions that produced it."""
    grid_size: int
    mask: np.ndarray
    regions_deg: Tuple[Tuple[float, float], ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        mask = np.asarray(self.mask, dtype=float)
        if self.grid_size < 2:
            raise DesignError(f"design grid needs K >= 2 bins, got {self.grid_size}")
        if mask.shape != (self.grid_size,):
            raise DesignError(f"mask has shape {mask.shape}, expected ({self.grid_size},)")
        if not np.all(np.isfinite(mask)) or np.any(mask < 0):
            raise DesignError("mask entries must be finite and non-negative")
        object.__setattr__(self, "mask", mask)

    @property
    def f_theta(self) -> np.ndarray:
        return f_theta_grid(self.grid_size)

    @property
    def angles_rad(self) -> np.ndarray:
        return angles_from_f_theta(self.f_theta)

    @classmethod
    def from_values(cls, mask: Sequence[float]) -> "DesiredPattern":
        values = np.asarray(mask, dtype=float)
        return cls(grid_size=int(values.size), mask=values)


def _normalise_regions(regions: Iterable[Sequence[float]]) -> List[Tuple[float, float]]:
    intervals = []
    for region in regions:
        if len(region) != 2:
            raise DesignError(f"region {list(region)} must be a [start, stop] pair in degrees")
        lo, hi = sorted(float(edge) for edge in region)
        if lo < -90.0 or hi > 90.0:
            raise DesignError(f"region [{lo}, {hi}] deg leaves [-90, 90]")
        intervals.append((lo, hi))
    if not intervals:
        raise DesignError("at least one desired region is required")
    return intervals


def region_mask(regions: Iterable[Sequence[float]], grid_size: int) -> DesiredPattern:
    """
    Binary mask with ones on bins whose angle asin(2 f_k) falls in any region.

    Args:
        regions: Angular intervals in degrees; endpoints may be given in either order
        grid_size: Number of design bins K

    Returns:
        DesiredPattern over the K-bin grid

    Raises:
        DesignError: If the list is empty, an interval leaves [-90, 90] or K < 2
    """
    intervals = _normalise_regions(regions)
    angles_deg = np.degrees(angles_from_f_theta(f_theta_grid(grid_size)))
    mask = np.zeros(grid_size)
    for lo, hi in intervals:
        inside = (angles_deg >= lo - _EDGE_TOLERANCE_DEG) & (angles_deg <= hi + _EDGE_TOLERANCE_DEG)
        mask[inside] = 1.0
    return DesiredPattern(grid_size=grid_size, mask=mask, regions_deg=tuple(intervals))


def impulse_mask(f_theta: float, grid_size: int) -> DesiredPattern:
    """Single-bin mask at the design bin nearest f_theta (a steered conventional beam)."""
    grid = f_theta_grid(grid_size)
    wrapped = (f_theta + 0.5) % 1.0 - 0.5
    distance = np.abs((grid - wrapped + 0.5) % 1.0 - 0.5)
    k = int(np.argmin(distance))
    mask = np.zeros(grid_size)
    mask[k] = 1.0
    angle = float(np.degrees(np.arcsin(2.0 * grid[k])))
    return DesiredPattern(grid_size=grid_size, mask=mask, regions_deg=((angle, angle),))
