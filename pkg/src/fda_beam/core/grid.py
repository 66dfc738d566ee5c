"""
Dense beampattern sweeps over one or two of the (time, range, angle) axes.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, Mapping, Optional, Sequence, Tuple

import numpy as np

from ..common.models import ArrayConfig, Model, Target
from .array_factor import evaluate_array_factor
from .timing import active_mask

logger = logging.getLogger(__name__)

AXIS_NAMES: Tuple[str, ...] = ("time", "range", "angle")
AXIS_UNITS: Dict[str, str] = {"time": "s", "range": "m", "angle": "rad"}


class GridAxisError(ValueError):
    """Raised for empty, non-monotone, unknown or duplicated sweep axes."""
    pass


@dataclass(frozen=True, eq=False)
class Axis:
    """A named, strictly monotone sample vector. Angles are in radians."""
    name: str
    values: np.ndarray

    def __post_init__(self) -> None:
        if self.name not in AXIS_NAMES:
            raise GridAxisError(f"unknown axis '{self.name}', expected one of {AXIS_NAMES}")
        values = np.atleast_1d(np.asarray(self.values, dtype=float))
        if values.ndim != 1 or values.size == 0:
            raise GridAxisError(f"axis '{self.name}' is empty")
        if not np.all(np.isfinite(values)):
            raise GridAxisError(f"axis '{self.name}' has non-finite samples")
        if values.size > 1:
            steps = np.diff(values)
            if not (np.all(steps > 0) or np.all(steps < 0)):
                raise GridAxisError(f"axis '{self.name}' is not strictly monotone")
        object.__setattr__(self, "values", values)

    @classmethod
    def linspace(cls, name: str, start: float, stop: float, count: int) -> "Axis":
        if count < 1:
            raise GridAxisError(f"axis '{name}' needs at least one sample, got {count}")
        return cls(name, np.linspace(start, stop, count))

    def __len__(self) -> int:
        return int(self.values.size)


@dataclass(frozen=True, eq=False)
class BeamGrid:
    """Beampattern samples on a row-major lattice of one or two swept axes."""
    axes: Tuple[Axis, ...]
    power: np.ndarray
    af: np.ndarray
    config: ArrayConfig
    model: Model
    fixed: Dict[str, float] = field(default_factory=dict)
    active_counts: Optional[np.ndarray] = None

    @property
    def shape(self) -> Tuple[int, ...]:
        return tuple(len(axis) for axis in self.axes)

    @property
    def axis_names(self) -> Tuple[str, ...]:
        return tuple(axis.name for axis in self.axes)

    def values(self, name: str) -> np.ndarray:
        for axis in self.axes:
            if axis.name == name:
                return axis.values
        raise GridAxisError(f"grid has no '{name}' axis (axes: {self.axis_names})")


def _check_axes(axes: Sequence[Axis], fixed: Mapping[str, float]) -> None:
    if not 1 <= len(axes) <= 2:
        raise GridAxisError(f"a sweep takes one or two axes, got {len(axes)}")
    names = [axis.name for axis in axes]
    if len(set(names)) != len(names):
        raise GridAxisError(f"duplicate sweep axes: {names}")
    for name in AXIS_NAMES:
        if name not in names and name not in fixed:
            raise GridAxisError(f"coordinate '{name}' is neither swept nor fixed")


def sweep(
    config: ArrayConfig,
    axes: Sequence[Axis],
    fixed: Mapping[str, float],
    model: Model = Model.EXACT,
) -> BeamGrid:
    """
    Evaluate the beampattern on the lattice spanned by the swept axes.

    Args:
        config: Array geometry, waveform and weights
        axes: One or two swept axes; the first indexes rows
        fixed: Values for the coordinates that are not swept
        model: EXACT or COMPACT expression

    Returns:
        BeamGrid with power of shape (len(axes[0]), len(axes[1]))

    Raises:
        GridAxisError: If the axis set is invalid
    """
    _check_axes(axes, fixed)
    swept = [axis.name for axis in axes]
    held = {name: float(fixed[name]) for name in AXIS_NAMES if name not in swept}
    mesh = np.meshgrid(*(axis.values for axis in axes), indexing="ij")
    coords = {axis.name: grid for axis, grid in zip(axes, mesh)}
    for name, value in held.items():
        coords[name] = np.asarray(value)

    logger.debug("Sweeping %s over %s cells (%s model)", swept, mesh[0].size, model.value)
    af = evaluate_array_factor(config, coords["time"], coords["range"], coords["angle"], model)
    af = np.broadcast_to(af, mesh[0].shape).copy()

    return BeamGrid(
        axes=tuple(axes),
        power=np.abs(af) ** 2,
        af=af,
        config=config,
        model=model,
        fixed=held,
    )


def transient_pattern(
    config: ArrayConfig,
    target: Target,
    t: float,
    angles: np.ndarray,
    model: Model = Model.EXACT,
) -> BeamGrid:
    """
    Pattern over angle of the partial array active at the target at instant t.

    The active element set is frozen by the target's own timing, then the
    beampattern of those elements is evaluated across `angles` at range R_o.
    """
    mask = active_mask(config, target, t)
    axis = Axis("angle", angles)
    af = evaluate_array_factor(config, t, target.range_m, axis.values, model, frozen_active=mask)
    return BeamGrid(
        axes=(axis,),
        power=np.abs(af) ** 2,
        af=af,
        config=config,
        model=model,
        fixed={"time": float(t), "range": target.range_m},
        active_counts=np.array([int(mask.sum())]),
    )


def transient_sweep(
    config: ArrayConfig,
    target: Target,
    times: np.ndarray,
    angles: np.ndarray,
    model: Model = Model.EXACT,
) -> BeamGrid:
    """Stack `transient_pattern` rows for each instant in `times` into a time x angle grid."""
    time_axis = Axis("time", times)
    angle_axis = Axis("angle", angles)
    rows = [transient_pattern(config, target, float(t), angle_axis.values, model) for t in time_axis.values]
    af = np.vstack([row.af for row in rows])
    counts = np.concatenate([row.active_counts for row in rows if row.active_counts is not None])
    return BeamGrid(
        axes=(time_axis, angle_axis),
        power=np.abs(af) ** 2,
        af=af,
        config=config,
        model=model,
        fixed={"range": target.range_m},
        active_counts=counts,
    )
