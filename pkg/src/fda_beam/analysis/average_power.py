"""
Average beampattern over one pulse, spatial exploration, and the f_oT bound.

P(theta) is the quadratic form a(theta)^H R a(theta) with the tau-ignored
correlation matrix. For progressive-phase weights it also has a closed form as
a single sum over element lags,

    P = M + 2 sum_{n=1}^{M-1} (M - n) sinc(n f_o T) cos(n kappa),

with kappa = 2 pi f_theta + pi f_o T + phi_o and f_theta = sin(theta) / 2.
The plateau of P spans the angles swept by the main beam during the pulse.
"""

import logging
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..common.config import FdaSettings, SPEED_OF_LIGHT, get_settings
from ..common.models import ArrayConfig, FotVerdict, Target
from .beamwidth import checked_arcsin
from .correlation import correlation_matrix

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class AverageDecomposition:
    """Sub-terms of the closed form: P = M + (M / gamma) P1 - (1 / gamma) P2."""
    p1: np.ndarray
    p2: np.ndarray
    p1_1: np.ndarray
    p1_2: np.ndarray
    p2_1: np.ndarray
    p2_2: np.ndarray


@dataclass(frozen=True)
class SpatialExploration:
    """Plateau edges predicted in both the angle and the sin(theta) domain."""
    theta1_rad: float
    theta2_rad: float
    sin_theta1: float
    sin_theta2: float
    se_exact_rad: float
    se_approx_rad: float
    se_sin: float


@dataclass(frozen=True, eq=False)
class AveragePattern:
    angles_rad: np.ndarray
    power: np.ndarray
    theta1_rad: float
    theta2_rad: float
    se_exact_rad: float
    se_approx_rad: float
    decomposition: Optional[AverageDecomposition] = None


def steering_vector(config: ArrayConfig, angle_rad: np.ndarray, exact: bool = False) -> np.ndarray:
    """
    Steering vectors a(theta) stacked as rows, shape (len(angle_rad), M).

    The compact form is exp(j m pi sin(theta)); the exact form uses the real
    carrier phase exp(j 2 pi m f_c d sin(theta) / c).
    """
    sin_theta = np.sin(np.atleast_1d(np.asarray(angle_rad, dtype=float)))
    m = np.arange(config.m_antennas)
    if exact:
        phase = 2 * np.pi * config.carrier_hz * config.spacing / SPEED_OF_LIGHT * sin_theta
    else:
        phase = np.pi * sin_theta
    return np.exp(1j * np.outer(phase, m))


def quadratic_form_power(entries: np.ndarray, steering: np.ndarray) -> np.ndarray:
    """Real part of a^H R a for each steering row."""
    return np.einsum("km,mn,kn->k", steering.conj(), entries, steering).real


def average_power_quadratic(config: ArrayConfig, target: Target, theta_grid: np.ndarray) -> np.ndarray:
    """P(theta) from the tau-ignored correlation matrix, valid for any weights."""
    correlation = correlation_matrix(config, target, ignore_tau=True)
    return quadratic_form_power(correlation.entries, steering_vector(config, theta_grid))


def average_power_closed_form(config: ArrayConfig, theta_grid: np.ndarray) -> np.ndarray:
    """
    Single-sum closed form of P(theta) for progressive-phase weights.

    Raises:
        ValueError: If the config carries custom weights
    """
    if not config.has_progressive_weights():
        raise ValueError("closed-form average power requires progressive-phase weights")
    theta = np.atleast_1d(np.asarray(theta_grid, dtype=float))
    fot = config.fot
    kappa = np.pi * np.sin(theta) + np.pi * fot + config.initial_phase_rad
    power = np.full(theta.shape, float(config.m_antennas))
    for n in range(1, config.m_antennas):
        power += 2.0 * (config.m_antennas - n) * np.sinc(n * fot) * np.cos(n * kappa)
    return power


def average_decomposition(config: ArrayConfig, theta_grid: np.ndarray) -> Optional[AverageDecomposition]:
    """P1 / P2 sub-terms; None when gamma = 0 or the weights are custom."""
    if config.offset_hz == 0.0 or not config.has_progressive_weights():
        return None
    theta = np.atleast_1d(np.asarray(theta_grid, dtype=float))
    gamma = np.pi * config.fot
    kappa = np.pi * np.sin(theta) + gamma + config.initial_phase_rad

    p1_1 = np.zeros(theta.shape)
    p1_2 = np.zeros(theta.shape)
    p2_1 = np.zeros(theta.shape)
    p2_2 = np.zeros(theta.shape)
    for n in range(1, config.m_antennas):
        p1_1 += np.sin(n * (gamma + kappa)) / n
        p1_2 += np.sin(n * (gamma - kappa)) / n
        p2_1 += np.sin(n * (gamma + kappa))
        p2_2 += np.sin(n * (gamma - kappa))

    return AverageDecomposition(
        p1=p1_1 + p1_2,
        p2=p2_1 + p2_2,
        p1_1=p1_1,
        p1_2=p1_2,
        p2_1=p2_1,
        p2_2=p2_2,
    )


def approximate_exploration(config: ArrayConfig) -> float:
    """Series form |2 f_o T + (2 phi_o / pi)(f_o T)^2|, defined even when the bound fails."""
    fot = config.fot
    return abs(2.0 * fot + 2.0 * (config.initial_phase_rad / math.pi) * fot ** 2)


def spatial_exploration(config: ArrayConfig) -> SpatialExploration:
    """
    Edges of the average-pattern plateau and its width.

    theta_1 = asin(-(2 f_o T + phi_o / pi)) and theta_2 = asin(-phi_o / pi).
    Widths are reported as magnitudes so negative offsets give positive SE.

    Raises:
        ArcsineDomainError: If 2 f_o T + phi_o / pi leaves [-1, 1]
    """
    fot = config.fot
    phi_ratio = config.initial_phase_rad / math.pi
    sin1 = -(2.0 * fot + phi_ratio)
    sin2 = -phi_ratio
    theta1 = checked_arcsin(sin1, "plateau edge theta_1")
    theta2 = checked_arcsin(sin2, "plateau edge theta_2")
    return SpatialExploration(
        theta1_rad=theta1,
        theta2_rad=theta2,
        sin_theta1=sin1,
        sin_theta2=sin2,
        se_exact_rad=abs(theta2 - theta1),
        se_approx_rad=approximate_exploration(config),
        se_sin=abs(sin2 - sin1),
    )


def average_power(config: ArrayConfig, target: Target, theta_grid: np.ndarray) -> AveragePattern:
    """
    Average beampattern over the pulse together with its plateau prediction.

    Args:
        config: Array geometry, waveform and weights
        target: Target supplying t_o (the average itself is range independent)
        theta_grid: Angles in radians

    Returns:
        AveragePattern with P(theta), the plateau edges and SE

    Raises:
        ArcsineDomainError: If the f_oT bound fails so that theta_1 is undefined
    """
    angles = np.atleast_1d(np.asarray(theta_grid, dtype=float))
    exploration = spatial_exploration(config)
    power = average_power_quadratic(config, target, angles)
    return AveragePattern(
        angles_rad=angles,
        power=power,
        theta1_rad=exploration.theta1_rad,
        theta2_rad=exploration.theta2_rad,
        se_exact_rad=exploration.se_exact_rad,
        se_approx_rad=exploration.se_approx_rad,
        decomposition=average_decomposition(config, angles),
    )


def check_fot_bound(config: ArrayConfig, settings: Optional[FdaSettings] = None) -> FotVerdict:
    """
    Classify |f_o T| against the spatial-exploration bound.

    VALID up to the marginal threshold, MARGINAL up to and including the bound,
    VIOLATED beyond it. MARGINAL still satisfies the bound.
    """
    settings = settings or get_settings()
    fot = abs(config.fot)
    if fot <= settings.marginal_fot:
        return FotVerdict.VALID
    if fot <= settings.max_fot:
        logger.warning("f_oT = %.4g is close to the %.2g bound", fot, settings.max_fot)
        return FotVerdict.MARGINAL
    logger.warning("f_oT = %.4g violates the %.2g bound; plateau edges are undefined", fot, settings.max_fot)
    return FotVerdict.VIOLATED

