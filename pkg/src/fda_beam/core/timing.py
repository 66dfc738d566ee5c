"""
Per-element pulse timing with path differences.

Element m's pulse reaches a far-field target after travelling R_o - m d sin(theta),
so it is active at the target on the closed interval [arrival_m, arrival_m + T].
Counting active elements at an instant gives the beampattern state.
"""

import math
from typing import Tuple, Union

import numpy as np

from ..common.config import SPEED_OF_LIGHT
from ..common.models import ArrayConfig, BeamState, BeamStateKind, Target


class ElementIndexError(IndexError):
    """Raised when an element index falls outside [0, M)."""
    pass


ArrayLike = Union[float, np.ndarray]


def arrival_time(range_m: ArrayLike, sin_theta: ArrayLike, m: int, spacing: float) -> ArrayLike:
    """
    Leading-edge arrival time of element m's pulse.

    Shared by the state classifier and the array-factor kernel so both see
    identical support boundaries.
    """
    return (range_m - m * spacing * sin_theta) / SPEED_OF_LIGHT


def propagation_delay(target: Target) -> float:
    """t_o = R_o / c for the reference element."""
    return target.range_m / SPEED_OF_LIGHT


def path_difference_delay(config: ArrayConfig, target: Target, m: int) -> float:
    """tau_m(theta) = m d sin(theta) / c."""
    _check_index(config, m)
    return m * config.spacing * math.sin(target.angle_rad) / SPEED_OF_LIGHT


def element_delay(config: ArrayConfig, target: Target, m: int) -> float:
    """
    Arrival time at the target of element m's pulse.

    Args:
        config: Array geometry and waveform
        target: Far-field point
        m: Element index in [0, M)

    Returns:
        (R_o - m d sin(theta)) / c in seconds

    Raises:
        ElementIndexError: If m is out of range
    """
    _check_index(config, m)
    return float(arrival_time(target.range_m, np.sin(target.angle_rad), m, config.spacing))


def arrival_times(config: ArrayConfig, target: Target) -> np.ndarray:
    """Arrival times of every element, indexed by m."""
    sin_theta = np.sin(target.angle_rad)
    return np.array([
        arrival_time(target.range_m, sin_theta, m, config.spacing)
        for m in range(config.m_antennas)
    ])


def active_mask(config: ArrayConfig, target: Target, t: float) -> np.ndarray:
    """Boolean vector marking elements whose pulse overlaps the target at t."""
    if config.continuous_wave:
        return np.ones(config.m_antennas, dtype=bool)
    arrivals = arrival_times(config, target)
    return (t >= arrivals) & (t <= arrivals + config.pulse_s)


def support_window(config: ArrayConfig, target: Target) -> Tuple[float, float]:
    """Interval during which at least one element illuminates the target."""
    if config.continuous_wave:
        return (-math.inf, math.inf)
    arrivals = arrival_times(config, target)
    return (float(arrivals.min()), float(arrivals.max() + config.pulse_s))


def steady_state_window(config: ArrayConfig, target: Target) -> Tuple[float, float]:
    """
    Interval during which all M elements illuminate the target.

    The window is empty (start > end) when the path-difference spread exceeds
    the pulse length.
    """
    if config.continuous_wave:
        return (-math.inf, math.inf)
    arrivals = arrival_times(config, target)
    return (float(arrivals.max()), float(arrivals.min() + config.pulse_s))


def classify_state(config: ArrayConfig, target: Target, t: float) -> BeamState:
    """
    Classify the beampattern state at instant t by counting active elements.

    The same overlap-count rule applies for either sign of theta; for theta < 0
    element 0 simply arrives first.
    """
    active = int(np.count_nonzero(active_mask(config, target, t)))
    first, last = support_window(config, target)

    if active == config.m_antennas:
        kind = BeamStateKind.STEADY
    elif t < first:
        kind = BeamStateKind.NOT_ILLUMINATED
    elif t > last:
        kind = BeamStateKind.EXPIRED
    else:
        # a pulse shorter than the arrival spacing can leave dark gaps inside the window
        latest_arrival = float(arrival_times(config, target).max())
        kind = BeamStateKind.TRANSIENT_1 if t < latest_arrival else BeamStateKind.TRANSIENT_2

    return BeamState(kind=kind, active_antennas=active)


def _check_index(config: ArrayConfig, m: int) -> None:
    if not 0 <= m < config.m_antennas:
        raise ElementIndexError(f"element index {m} outside [0, {config.m_antennas})")
