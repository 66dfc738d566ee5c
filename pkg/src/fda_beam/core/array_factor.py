"""
Instantaneous array factor and beampattern of an FDA transmitter.

Two expressions are provided. The exact model keeps the quadratic
m^2 f_o d sin(theta)/c phase term and gates each element by its own pulse
window. The compact model drops that term, assumes d = lambda/2 and gates all
elements by the common window [t_o, t_o + T].

Every public evaluator goes through `evaluate_array_factor`, which sums the
element contributions in ascending m over whole numpy arrays, so a single
point and a grid cell are computed by the same arithmetic.
"""

import logging
import math
from typing import Optional

import numpy as np

from ..common.config import SPEED_OF_LIGHT
from ..common.models import ArrayConfig, BeamSample, Model, Target
from .timing import arrival_time, steady_state_window

logger = logging.getLogger(__name__)


class CompactModelError(ValueError):
    """Raised when the compact model is requested for spacing other than lambda/2."""
    pass


class SteadyStateWindowError(ValueError):
    """Raised when a steady-state evaluation is requested outside the steady window."""
    pass


def require_compact(config: ArrayConfig) -> None:
    if not config.is_half_wavelength():
        raise CompactModelError(
            f"compact model needs d = lambda/2 = {config.wavelength / 2:.6g} m, got {config.spacing:.6g} m"
        )


def evaluate_array_factor(
    config: ArrayConfig,
    t: np.ndarray,
    range_m: np.ndarray,
    angle_rad: np.ndarray,
    model: Model = Model.EXACT,
    frozen_active: Optional[np.ndarray] = None,
) -> np.ndarray:
    """
    Vectorised array factor over broadcastable coordinate arrays.

    Args:
        config: Array geometry, waveform and weights
        t: Observation instants in seconds
        range_m: Target ranges in metres
        angle_rad: Target angles in radians
        model: EXACT or COMPACT expression
        frozen_active: Optional length-M boolean vector; when given it replaces
            the time-dependent pulse windows with a fixed active element set

    Returns:
        Complex array with the broadcast shape of the coordinates
    """
    if model is Model.COMPACT:
        require_compact(config)

    t, range_m, angle_rad = np.broadcast_arrays(
        np.asarray(t, dtype=float), np.asarray(range_m, dtype=float), np.asarray(angle_rad, dtype=float)
    )
    sin_theta = np.sin(angle_rad)
    t_rel = t - range_m / SPEED_OF_LIGHT
    weights = config.weight_vector
    f_o = config.offset_hz
    gated = frozen_active is None and not config.continuous_wave

    common_window: Optional[np.ndarray] = None
    if model is Model.COMPACT and gated:
        common_window = (t_rel >= 0.0) & (t_rel <= config.pulse_s)

    af = np.zeros(t.shape, dtype=complex)
    for m in range(config.m_antennas):
        if frozen_active is not None and not frozen_active[m]:
            continue

        if model is Model.EXACT:
            kd = config.spacing * sin_theta / SPEED_OF_LIGHT
            phase = m * (f_o * t_rel + config.carrier_hz * kd + m * f_o * kd)
        else:
            phase = m * (f_o * t_rel + sin_theta / 2.0)
        term = weights[m] * np.exp(-2j * np.pi * phase)

        if gated:
            if common_window is None:
                arrival = arrival_time(range_m, sin_theta, m, config.spacing)
                window = (t >= arrival) & (t <= arrival + config.pulse_s)
            else:
                window = common_window
            term = np.where(window, term, 0.0)

        af += term

    return af


def array_factor(config: ArrayConfig, target: Target, t: float) -> complex:
    """Exact-model array factor at a single (t, R_o, theta) point."""
    return complex(evaluate_array_factor(config, t, target.range_m, target.angle_rad, Model.EXACT)[()])


def array_factor_compact(config: ArrayConfig, target: Target, t: float) -> complex:
    """
    Compact-model array factor sum_m w_m exp(-j 2 pi m [f_o (t - t_o) + sin(theta)/2]).

    Raises:
        CompactModelError: If the spacing is not half a carrier wavelength
    """
    return complex(evaluate_array_factor(config, t, target.range_m, target.angle_rad, Model.COMPACT)[()])


def beampattern(config: ArrayConfig, target: Target, t: float, model: Model = Model.EXACT) -> float:
    """|AF|^2 at a single point."""
    af = evaluate_array_factor(config, t, target.range_m, target.angle_rad, model)
    return float(np.abs(af[()]) ** 2)


def steady_state_beampattern(config: ArrayConfig, target: Target, t: float) -> float:
    """
    Beampattern restricted to the steady-state window, where all M elements contribute.

    Raises:
        SteadyStateWindowError: If t lies outside the steady-state window
    """
    start, end = steady_state_window(config, target)
    if not start <= t <= end:
        raise SteadyStateWindowError(
            f"t = {t!r} s is outside the steady-state window [{start!r}, {end!r}]"
        )
    return beampattern(config, target, t, Model.EXACT)


def beam_sample(config: ArrayConfig, target: Target, t: float, model: Model = Model.EXACT) -> BeamSample:
    af = complex(evaluate_array_factor(config, t, target.range_m, target.angle_rad, model)[()])
    return BeamSample(time_s=t, target=target, af=af, power=abs(af) ** 2)


def steering_weights(config: ArrayConfig, angle_rad: float) -> np.ndarray:
    """
    Unit-magnitude weights that phase align the exact-model carrier terms towards angle_rad.

    The quadratic frequency-offset term is left uncompensated, so alignment is
    exact only at t = t_o up to that term.
    """
    m = np.arange(config.m_antennas)
    return np.exp(2j * np.pi * m * config.carrier_hz * config.spacing * math.sin(angle_rad) / SPEED_OF_LIGHT)
