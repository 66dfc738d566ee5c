"""
Closed-form weight synthesis by inverse DFT of a desired pattern.

At t = t_o the compact array factor is AF(f) = sum_m w_m exp(-j 2 pi m f), a
DFT of the weights in f_theta, so the weights follow from an inverse DFT of
the desired |AF| samples. With K > M design bins only M taps exist; by
default the taps are taken around the array phase centre (M - 1) / 2, which
keeps the main part of the inverse transform and leaves the magnitude
pattern unchanged.
"""

import logging
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np
from scipy.signal import get_window

from ..common.models import ArrayConfig, Model, Target
from ..core.grid import Axis, BeamGrid, sweep
from .masks import DesignError, DesiredPattern

logger = logging.getLogger(__name__)

# Floor for the dB-normalised residual.
_DB_FLOOR = -60.0


@dataclass(frozen=True, eq=False)
class SynthesizedWeights:
    weights: np.ndarray
    residual: float
    residual_db: float
    truncation_energy: float
    discarded_energy: float
    scale: float
    grid_size: int
    centered: bool
    window: Optional[str] = None

    @property
    def m_antennas(self) -> int:
        return int(self.weights.size)

    @property
    def normalized(self) -> np.ndarray:
        """Weights scaled so the largest magnitude is 1."""
        return self.weights * self.scale


def forward_array_factor(weights: Sequence[complex], f_theta: np.ndarray) -> np.ndarray:
    """Compact array factor at t = t_o as a function of f_theta."""
    w = np.asarray(weights, dtype=complex)
    m = np.arange(w.size)
    return np.exp(-2j * np.pi * np.outer(np.asarray(f_theta, dtype=float), m)) @ w


def _to_db(values: np.ndarray) -> np.ndarray:
    peak = float(np.max(values))
    if peak <= 0.0:
        return np.full(values.shape, _DB_FLOOR)
    with np.errstate(divide="ignore"):
        return np.maximum(20.0 * np.log10(values / peak), _DB_FLOOR)


def synthesize_weights(
    desired: DesiredPattern,
    m_antennas: int,
    centered: bool = True,
    window: Optional[str] = None,
) -> SynthesizedWeights:
    """
    Inverse-DFT weights for a desired |AF| mask.

    Args:
        desired: Mask on the K-bin f_theta grid
        m_antennas: Number of taps M (K >= M)
        centered: Reference the taps to the array phase centre instead of element 0
        window: Optional scipy.signal window name applied as a taper to the taps

    Returns:
        SynthesizedWeights, unnormalised, with the RMS |AF| residual on the design
        bins and the energy of the inverse-transform taps that were discarded

    Raises:
        DesignError: If K < M or M < 1
    """
    grid_size = desired.grid_size
    if m_antennas < 1:
        raise DesignError(f"need at least one element, got {m_antennas}")
    if grid_size < m_antennas:
        raise DesignError(f"design grid K = {grid_size} is smaller than M = {m_antennas}")

    f_theta = desired.f_theta
    center = (m_antennas - 1) / 2.0 if centered else 0.0
    start = (grid_size - m_antennas) // 2 if centered else 0
    target_af = desired.mask * np.exp(-2j * np.pi * f_theta * center)

    # Tap n sits at position n - start; exp(j 2 pi f_k n) = (-1)^n exp(j 2 pi k n / K).
    positions = np.arange(grid_size) - start
    signs = np.where(positions % 2 == 0, 1.0, -1.0)
    taps = signs * np.fft.ifft(target_af)[positions % grid_size]

    weights = taps[start:start + m_antennas].copy()
    discarded = float(np.sum(np.abs(taps) ** 2) - np.sum(np.abs(weights) ** 2))
    truncation = float(np.mean(np.abs(forward_array_factor(weights, f_theta) - target_af) ** 2))

    if window is not None:
        weights = weights * get_window(window, m_antennas, fftbins=False)

    achieved = np.abs(forward_array_factor(weights, f_theta))
    residual = float(np.sqrt(np.mean((achieved - desired.mask) ** 2)))
    residual_db = float(np.sqrt(np.mean((_to_db(achieved) - _to_db(desired.mask)) ** 2)))
    peak = float(np.max(np.abs(weights)))

    if grid_size > m_antennas:
        logger.debug("Truncated %d inverse-DFT taps to %d (discarded energy %.3g)",
                     grid_size, m_antennas, discarded)
    logger.debug("Synthesis residual %.4g (%.2f dB rms)", residual, residual_db)

    return SynthesizedWeights(
        weights=weights,
        residual=residual,
        residual_db=residual_db,
        truncation_energy=truncation,
        discarded_energy=max(discarded, 0.0),
        scale=1.0 / peak if peak > 0.0 else 1.0,
        grid_size=grid_size,
        centered=centered,
        window=window,
    )


def designed_pattern(
    weights: SynthesizedWeights,
    config: ArrayConfig,
    target: Target,
    t: float,
    theta_grid: np.ndarray,
) -> BeamGrid:
    """Compact beampattern over theta_grid at instant t with the synthesized weights installed."""
    designed = config.with_weights(weights.weights)
    return sweep(
        designed,
        [Axis("angle", theta_grid)],
        {"time": t, "range": target.range_m},
        Model.COMPACT,
    )
