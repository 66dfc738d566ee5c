"""
Output formats: CSV grids, weights files and plot scripts.
"""

from .csv_writer import AXIS_COLUMNS, grid_columns, power_to_db, write_columns_csv, write_grid_csv
from .weights_file import WeightsFileError, read_weights, write_weights
from .plot_script import write_plot_script

__all__ = [
    'AXIS_COLUMNS',
    'grid_columns',
    'power_to_db',
    'write_columns_csv',
    'write_grid_csv',
    'WeightsFileError',
    'read_weights',
    'write_weights',
    'write_plot_script',
]
