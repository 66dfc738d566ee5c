"""
Frequency-diverse-array beampattern toolkit.
"""

__version__ = "1.0.0"
