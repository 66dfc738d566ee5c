"""
Brute-force numerical oracles for the closed forms.

Each oracle measures on sampled data what a closed form predicts analytically:
the time average of |AF|^2 by quadrature, the peak-to-null distance on a
sampled pattern, and the plateau width of an average pattern.
"""

import logging
from typing import Optional, Tuple

import numpy as np
from scipy.integrate import simpson
from scipy.signal import find_peaks

from ..common.config import get_settings
from ..common.models import ArrayConfig, Target
from ..core.array_factor import require_compact
from ..core.timing import propagation_delay
from .average_power import AveragePattern

logger = logging.getLogger(__name__)

# Columns of the time x angle product evaluated per block.
_ANGLE_CHUNK = 16


class PlateauNotFoundError(ValueError):
    """Raised when a pattern has no resolvable plateau above the threshold."""
    pass


def time_averaged_power(
    config: ArrayConfig,
    target: Target,
    angles: np.ndarray,
    samples_per_cycle: Optional[int] = None,
) -> np.ndarray:
    """
    (1/T) * integral of |AF_compact|^2 over [t_o, t_o + T], by composite Simpson.

    The sample count scales with max(|f_o T| M, 1) so the fastest beat
    frequency M f_o is resolved by `samples_per_cycle` points.

    Args:
        config: Array geometry, waveform and weights (d = lambda/2)
        target: Target supplying t_o
        angles: Angles in radians
        samples_per_cycle: Override for the settings' quadrature density

    Returns:
        Time-averaged power per angle
    """
    require_compact(config)
    per_cycle = samples_per_cycle or get_settings().quadrature_samples_per_cycle
    cycles = max(abs(config.fot) * config.m_antennas, 1.0)
    count = int(np.ceil(cycles * per_cycle))
    if count % 2 == 0:
        count += 1

    t_o = propagation_delay(target)
    u = np.linspace(0.0, config.pulse_s, count)
    m = np.arange(config.m_antennas)
    temporal = np.exp(-2j * np.pi * np.outer(u, m) * config.offset_hz)

    angles = np.atleast_1d(np.asarray(angles, dtype=float))
    spatial = config.weight_vector[:, None] * np.exp(-1j * np.pi * np.outer(m, np.sin(angles)))

    logger.debug("Quadrature oracle: %d time samples x %d angles (t_o = %.6g s)", count, angles.size, t_o)
    averaged = np.empty(angles.size)
    for start in range(0, angles.size, _ANGLE_CHUNK):
        block = temporal @ spatial[:, start:start + _ANGLE_CHUNK]
        averaged[start:start + _ANGLE_CHUNK] = simpson(np.abs(block) ** 2, x=u, axis=0) / config.pulse_s
    return averaged


def peak_and_first_null(angles: np.ndarray, power: np.ndarray) -> Tuple[int, int]:
    """Index of the pattern maximum and of the first local minimum to its right."""
    peak = int(np.argmax(power))
    minima, _ = find_peaks(-np.asarray(power))
    right = minima[minima > peak]
    if right.size == 0:
        raise ValueError("pattern has no local minimum to the right of its peak")
    return peak, int(right[0])


def measure_beamwidth(angles: np.ndarray, power: np.ndarray) -> float:
    """Angular distance from the sampled peak to the first null on its right."""
    peak, null = peak_and_first_null(angles, power)
    return float(angles[null] - angles[peak])


def plateau_edges(angles: np.ndarray, power: np.ndarray, threshold_db: float = 3.0) -> Tuple[float, float]:
    """
    Edges of the contiguous region around the maximum where power stays within
    threshold_db of it, linearly interpolated between samples.

    Raises:
        PlateauNotFoundError: If the pattern is zero or the region spans < 3 samples
    """
    angles = np.asarray(angles, dtype=float)
    power = np.asarray(power, dtype=float)
    peak = int(np.argmax(power))
    if power[peak] <= 0.0:
        raise PlateauNotFoundError("pattern is identically zero")
    level = power[peak] * 10.0 ** (-threshold_db / 10.0)

    lo = peak
    while lo > 0 and power[lo - 1] >= level:
        lo -= 1
    hi = peak
    while hi < power.size - 1 and power[hi + 1] >= level:
        hi += 1
    if hi - lo + 1 < 3:
        raise PlateauNotFoundError(
            f"only {hi - lo + 1} samples above the {threshold_db} dB level; grid too coarse"
        )

    left = angles[lo] if lo == 0 else _crossing(angles, power, lo - 1, lo, level)
    right = angles[hi] if hi == power.size - 1 else _crossing(angles, power, hi, hi + 1, level)
    return float(left), float(right)


def measure_se_empirical(pattern: AveragePattern, threshold_db: float = 3.0) -> float:
    """Width of the average-pattern plateau within threshold_db of its peak."""
    left, right = plateau_edges(pattern.angles_rad, pattern.power, threshold_db)
    return abs(right - left)


def _crossing(angles: np.ndarray, power: np.ndarray, i: int, j: int, level: float) -> float:
    fraction = (level - power[i]) / (power[j] - power[i])
    return float(angles[i] + fraction * (angles[j] - angles[i]))
