import json
import logging
import sys
import os
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from fda_beam.orchestrator import quick_average


logging.basicConfig(level=logging.WARNING)


def main():
    """
    Simple script demonstrating the average-pattern study using the orchestrator.

    This provides a basic example of how to use the orchestration layer.
    For scenario files and CSV output, use the CLI interface.
    """
    print("Computing the average beampattern of a 20-element FDA (f_o = 200 Hz, T = 1 ms)...")

    summary = quick_average(m_antennas=20, offset_hz=200.0, pulse_s=1e-3)

    print("\nSummary:")
    print(json.dumps(summary, indent=2))

    print(f"\nf_oT = {summary['fot']:.3f} ({summary['verdict']})")
    if summary["se_exact_rad"] is not None:
        print(f"Plateau edges: {summary['theta1_rad']:.4f} rad to {summary['theta2_rad']:.4f} rad")
        print(f"Spatial exploration: {summary['se_exact_rad']:.4f} rad predicted, "
              f"{summary['se_approx_rad']:.4f} rad first-order")
    if summary["se_empirical_rad"] is not None:
        print(f"Measured 3 dB plateau width: {summary['se_empirical_rad']:.4f} rad")

    print("\nUse the CLI interface for scenario files, weight design and CSV output.")


if __name__ == "__main__":
    main()
