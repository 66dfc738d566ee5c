"""
Signal model of a pulsed frequency-diverse array: pulse timing with path
differences, instantaneous array factor and beampattern, and grid sweeps.
"""

from .timing import (
    ElementIndexError,
    active_mask,
    arrival_times,
    classify_state,
    element_delay,
    path_difference_delay,
    propagation_delay,
    steady_state_window,
    support_window,
)
from .array_factor import (
    CompactModelError,
    SteadyStateWindowError,
    array_factor,
    array_factor_compact,
    beam_sample,
    beampattern,
    evaluate_array_factor,
    steady_state_beampattern,
    steering_weights,
)
from .grid import Axis, BeamGrid, GridAxisError, sweep, transient_pattern, transient_sweep

__all__ = [
    'ElementIndexError',
    'active_mask',
    'arrival_times',
    'classify_state',
    'element_delay',
    'path_difference_delay',
    'propagation_delay',
    'steady_state_window',
    'support_window',
    'CompactModelError',
    'SteadyStateWindowError',
    'array_factor',
    'array_factor_compact',
    'beam_sample',
    'beampattern',
    'evaluate_array_factor',
    'steady_state_beampattern',
    'steering_weights',
    'Axis',
    'BeamGrid',
    'GridAxisError',
    'sweep',
    'transient_pattern',
    'transient_sweep',
]
