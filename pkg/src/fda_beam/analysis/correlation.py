"""
Waveform correlation matrix of the FDA transmit signals.

Entry (m, n) is the normalised correlation (1/T) int s_m(t) s_n(t)^* dt of the
weighted element waveforms over the averaging window, with the steering phase
excluded (it is applied by the steering vector in the quadratic form).
"""

import math
from dataclasses import dataclass

import numpy as np

from ..common.config import SPEED_OF_LIGHT
from ..common.models import ArrayConfig, Target
from ..core.timing import propagation_delay


@dataclass(frozen=True, eq=False)
class CorrelationMatrix:
    entries: np.ndarray
    eta: np.ndarray
    ignore_tau: bool

    @property
    def size(self) -> int:
        return int(self.entries.shape[0])

    def is_hermitian(self, atol: float = 1e-12) -> bool:
        return bool(np.allclose(self.entries, self.entries.conj().T, rtol=0.0, atol=atol))

    def eigenvalues(self) -> np.ndarray:
        return np.linalg.eigvalsh(self.entries)


def offset_differences(config: ArrayConfig) -> np.ndarray:
    """eta(m, n) = f_o (n - m), the beat frequency between elements m and n."""
    idx = np.arange(config.m_antennas)
    return config.offset_hz * (idx[None, :] - idx[:, None])


def coupling_phase(config: ArrayConfig, target: Target) -> np.ndarray:
    """
    k(m, n) = exp(j 2 pi [-f_o t_o + phi_o / (2 pi)] (n - m)).

    Only the phase references of the progressive-weight derivation; the matrix
    itself carries the weights directly.
    """
    idx = np.arange(config.m_antennas)
    diff = idx[None, :] - idx[:, None]
    t_o = propagation_delay(target)
    return np.exp(2j * np.pi * (-config.offset_hz * t_o + config.initial_phase_rad / (2 * np.pi)) * diff)


def correlation_matrix(config: ArrayConfig, target: Target, ignore_tau: bool = True) -> CorrelationMatrix:
    """
    Build the M x M correlation matrix R(m, n).

    With ignore_tau the path-difference delays are dropped, every element is
    integrated over [t_o, t_o + T] and

        R(m, n) = w_m w_n^* exp(-j pi (m - n) f_o T) sinc((m - n) f_o T).

    Otherwise each pair is integrated over the overlap of its two pulses, which
    start at t_o - m tau and t_o - n tau, and the carrier phase of the exact
    model (including its m^2 term) is retained.

    Args:
        config: Array geometry, waveform and weights
        target: Target whose angle sets tau = d sin(theta) / c
        ignore_tau: Drop path differences in limits and phases

    Returns:
        CorrelationMatrix with entries, eta and the approximation flag
    """
    idx = np.arange(config.m_antennas)
    m = idx[:, None]
    n = idx[None, :]
    diff = m - n
    weights = config.weight_vector
    ww = weights[:, None] * np.conj(weights)[None, :]
    fot = config.fot

    if ignore_tau:
        entries = ww * np.exp(-1j * np.pi * diff * fot) * np.sinc(diff * fot)
    else:
        tau = config.spacing * math.sin(target.angle_rad) / SPEED_OF_LIGHT
        start_m = -m * tau
        start_n = -n * tau
        lo = np.maximum(start_m, start_n)
        hi = np.minimum(start_m, start_n) + config.pulse_s
        overlap = np.clip(hi - lo, 0.0, None)
        beat = diff * config.offset_hz
        quadratic = np.exp(-2j * np.pi * config.offset_hz * (m ** 2 - n ** 2) * tau)
        entries = (
            ww * quadratic * (overlap / config.pulse_s)
            * np.exp(-1j * np.pi * beat * (lo + hi)) * np.sinc(beat * overlap)
        )

    return CorrelationMatrix(entries=entries, eta=offset_differences(config), ignore_tau=ignore_tau)
