"""
Closed-form first null, peak and Rayleigh beamwidth of the steady-state pattern.
"""

import math

from pydantic import BaseModel, ConfigDict

from ..common.models import ArrayConfig


class ArcsineDomainError(ValueError):
    """Raised when a closed-form arcsine argument leaves [-1, 1]."""
    pass


def checked_arcsin(value: float, what: str) -> float:
    if not -1.0 <= value <= 1.0:
        raise ArcsineDomainError(f"{what}: arcsine argument {value:.6g} is outside [-1, 1]")
    return math.asin(value)


class BeamwidthReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    theta_first_null_rad: float
    theta_peak_rad: float
    bw_exact_rad: float
    bw_approx_rad: float


def rayleigh_beamwidth(config: ArrayConfig) -> BeamwidthReport:
    """
    Peak-to-first-null distance of the compact steady-state pattern at t = t_o.

    Args:
        config: Array whose size M and initial phase phi_o set the main lobe

    Returns:
        BeamwidthReport with the exact arcsine width and its series approximation
        2/M + phi_o^2 / (M pi^2)

    Raises:
        ArcsineDomainError: If 2/M - phi_o/pi or -phi_o/pi leaves [-1, 1]
    """
    m = config.m_antennas
    phi = config.initial_phase_rad
    first_null = checked_arcsin(2.0 / m - phi / math.pi, "first null")
    peak = checked_arcsin(-phi / math.pi, "peak")
    return BeamwidthReport(
        theta_first_null_rad=first_null,
        theta_peak_rad=peak,
        bw_exact_rad=first_null - peak,
        bw_approx_rad=2.0 / m + phi ** 2 / (m * math.pi ** 2),
    )
