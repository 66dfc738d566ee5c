"""
Closed-form predictors, correlation matrix and average power, the f_oT bound,
and the numerical oracles that check them.
"""

from .beamwidth import ArcsineDomainError, BeamwidthReport, rayleigh_beamwidth
from .correlation import CorrelationMatrix, correlation_matrix, coupling_phase, offset_differences
from .average_power import (
    AverageDecomposition,
    AveragePattern,
    approximate_exploration,
    SpatialExploration,
    average_decomposition,
    average_power,
    average_power_closed_form,
    average_power_quadratic,
    check_fot_bound,
    spatial_exploration,
    steering_vector,
)
from .oracles import (
    PlateauNotFoundError,
    measure_beamwidth,
    measure_se_empirical,
    plateau_edges,
    time_averaged_power,
)
from .grid_metrics import beam_pointing, peak_location, range_tilt

__all__ = [
    'ArcsineDomainError',
    'BeamwidthReport',
    'rayleigh_beamwidth',
    'CorrelationMatrix',
    'correlation_matrix',
    'coupling_phase',
    'offset_differences',
    'AverageDecomposition',
    'AveragePattern',
    'SpatialExploration',
    'approximate_exploration',
    'average_decomposition',
    'average_power',
    'average_power_closed_form',
    'average_power_quadratic',
    'check_fot_bound',
    'spatial_exploration',
    'steering_vector',
    'PlateauNotFoundError',
    'measure_beamwidth',
    'measure_se_empirical',
    'plateau_edges',
    'time_averaged_power',
    'beam_pointing',
    'peak_location',
    'range_tilt',
]
