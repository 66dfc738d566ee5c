"""
DFT weight synthesis for desired beampatterns and the drift of designed
patterns over the pulse.
"""

from .masks import DesignError, DesiredPattern, angles_from_f_theta, f_theta_grid, impulse_mask, region_mask
from .synthesis import SynthesizedWeights, designed_pattern, forward_array_factor, synthesize_weights
from .drift import DwellError, dwell_time, measure_shift, predict_shift, shifted_angle, wrap_f_theta

__all__ = [
    'DesignError',
    'DesiredPattern',
    'angles_from_f_theta',
    'f_theta_grid',
    'impulse_mask',
    'region_mask',
    'SynthesizedWeights',
    'designed_pattern',
    'forward_array_factor',
    'synthesize_weights',
    'DwellError',
    'dwell_time',
    'measure_shift',
    'predict_shift',
    'shifted_angle',
    'wrap_f_theta',
]
