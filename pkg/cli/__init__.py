"""
FDA Beampattern CLI

A rich command-line interface for simulating pulsed frequency-diverse-array
beampatterns and synthesizing DFT weights from YAML scenario files.
"""

__version__ = "1.0.0"
__author__ = "FDA Beampattern Toolkit"
