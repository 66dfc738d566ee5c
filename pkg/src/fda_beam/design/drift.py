"""
Time drift of designed patterns: predicted shift, measured shift, dwell time.

For t > t_o the compact pattern is the t_o pattern shifted in f_theta by
-f_o (t - t_o), wrapping around the [-0.5, 0.5) period.
"""

import logging
from typing import Optional

import numpy as np

from ..common.models import ArrayConfig, Model, Target
from ..core.grid import Axis, sweep
from ..core.timing import propagation_delay
from .synthesis import SynthesizedWeights

logger = logging.getLogger(__name__)


class DwellError(ValueError):
    """Raised when the dwell point is never illuminated during the pulse."""
    pass


def predict_shift(config: ArrayConfig, t: float, t_o: float) -> float:
    """Delta f_theta = -f_o (t - t_o)."""
    return -config.offset_hz * (t - t_o)


def wrap_f_theta(f_theta: np.ndarray) -> np.ndarray:
    """Wrap spatial frequencies onto [-0.5, 0.5)."""
    return (np.asarray(f_theta, dtype=float) + 0.5) % 1.0 - 0.5


def shifted_angle(angle_rad: float, shift: float) -> float:
    """Angle that a pattern feature at angle_rad moves to after a shift in f_theta."""
    f_theta = wrap_f_theta(np.sin(angle_rad) / 2.0 + shift)
    return float(np.arcsin(2.0 * f_theta))


def measure_shift(pattern_t: np.ndarray, pattern_0: np.ndarray) -> float:
    """
    Lag in f_theta that best aligns pattern_0 onto pattern_t.

    Both patterns must be sampled on the same uniform K-bin f_theta grid; the
    lag is the peak of their circular cross-correlation, mapped to [-K/2, K/2).
    """
    p_t = np.asarray(pattern_t, dtype=float)
    p_0 = np.asarray(pattern_0, dtype=float)
    if p_t.shape != p_0.shape or p_t.ndim != 1:
        raise ValueError(f"patterns must be 1-D with equal length, got {p_t.shape} and {p_0.shape}")
    bins = p_t.size
    correlation = np.fft.ifft(np.fft.fft(p_t) * np.conj(np.fft.fft(p_0))).real
    lag = int(np.argmax(correlation))
    if lag >= bins / 2:
        lag -= bins
    return lag / bins


def dwell_time(
    weights: Optional[SynthesizedWeights],
    config: ArrayConfig,
    target: Target,
    theta_point: float,
    threshold_db: float = 3.0,
    samples: int = 2001,
) -> float:
    """
    Time during one pulse that the compact pattern at theta_point stays within
    threshold_db of its maximum over the pulse.

    Args:
        weights: Synthesized weights to install, or None to keep the config's weights
        config: Array geometry and waveform
        target: Target supplying R_o
        theta_point: Angle in radians at which the pattern is watched
        threshold_db: Allowed drop below the maximum
        samples: Number of instants across [t_o, t_o + T]

    Returns:
        Dwell time in seconds, at most T

    Raises:
        DwellError: If the pattern at theta_point is zero for the whole pulse
    """
    if weights is not None:
        config = config.with_weights(weights.weights)
    t_o = propagation_delay(target)
    times = np.linspace(t_o, t_o + config.pulse_s, samples)
    grid = sweep(config, [Axis("time", times)], {"range": target.range_m, "angle": theta_point}, Model.COMPACT)
    power = grid.power

    peak = float(np.max(power))
    if peak <= 0.0:
        raise DwellError(f"angle {np.degrees(theta_point):.3f} deg is never illuminated")
    level = peak * 10.0 ** (-threshold_db / 10.0)

    dwell = 0.0
    for i in range(samples - 1):
        a, b = power[i] - level, power[i + 1] - level
        step = times[i + 1] - times[i]
        if a >= 0 and b >= 0:
            dwell += step
        elif a >= 0 or b >= 0:
            dwell += step * max(a, b) / abs(a - b)
    logger.debug("Dwell at %.3f deg: %.6g s of %.6g s", np.degrees(theta_point), dwell, config.pulse_s)
    return float(min(dwell, config.pulse_s))
