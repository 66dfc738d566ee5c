"""
Tests for grid sweeps and transient patterns.
"""

import math
import unittest

import numpy as np

from src.fda_beam.common.models import ArrayConfig, Model, Target
from src.fda_beam.core import (
    Axis,
    GridAxisError,
    arrival_times,
    beampattern,
    sweep,
    transient_pattern,
    transient_sweep,
)


class TestAxis(unittest.TestCase):

    def test_rejects_invalid_axes(self):
        """Test axis validation."""
        cases = {
            "empty": ("angle", []),
            "non-monotone": ("angle", [0.0, 0.2, 0.1]),
            "repeated": ("range", [1.0, 1.0]),
            "non-finite": ("time", [0.0, float("nan")]),
            "unknown": ("elevation", [0.0, 1.0]),
        }
        for label, (name, values) in cases.items():
            with self.subTest(label), self.assertRaises(GridAxisError):
                Axis(name, np.asarray(values))

    def test_descending_axis_is_allowed(self):
        """Test a descending axis."""
        self.assertEqual(len(Axis("range", np.array([3.0, 2.0, 1.0]))), 3)

    def test_linspace_needs_a_sample(self):
        """Test that a linspace axis needs at least one sample."""
        with self.assertRaises(GridAxisError):
            Axis.linspace("angle", 0.0, 1.0, 0)


class TestSweep(unittest.TestCase):
    """Dense beampattern sweeps."""

    def setUp(self):
        self.config = ArrayConfig.half_wavelength(20, 5e9, 100.0, 1e-3)
        self.target = Target.from_degrees(300e3, 0.0)
        self.t_o = 1e-3
        self.angles = Axis.linspace("angle", -math.pi / 2, math.pi / 2, 721)

    def test_angle_sweep_peaks_at_closed_form(self):
        """Test the peak of an angle sweep."""
        phi = 0.3
        config = self.config.with_updates(initial_phase_rad=phi)
        # a few ns after t_o every element has arrived for either sign of theta
        grid = sweep(config, [self.angles], {"time": self.t_o + 1e-8, "range": 300e3})
        peak = self.angles.values[int(np.argmax(grid.power))]
        step = self.angles.values[1] - self.angles.values[0]
        self.assertLessEqual(abs(peak - math.asin(-phi / math.pi)), step)

    def test_single_point_matches_beampattern(self):
        """Test a one-point sweep against the scalar pattern."""
        axes = [Axis("time", np.array([self.t_o + 2e-4])), Axis("angle", np.array([0.3]))]
        grid = sweep(self.config, axes, {"range": 300e3})
        self.assertEqual(grid.shape, (1, 1))
        expected = beampattern(self.config, Target(range_m=300e3, angle_rad=0.3), self.t_o + 2e-4)
        np.testing.assert_allclose(grid.power[0, 0], expected, rtol=1e-12)

    def test_row_major_shape(self):
        """Test the row-major grid shape."""
        ranges = Axis.linspace("range", 100e3, 500e3, 5)
        grid = sweep(self.config, [ranges, self.angles], {"time": self.t_o})
        self.assertEqual(grid.power.shape, (5, 721))
        self.assertEqual(grid.power.size, 5 * 721)
        self.assertEqual(grid.axis_names, ("range", "angle"))
        self.assertEqual(grid.fixed, {"time": self.t_o})
        np.testing.assert_allclose(grid.power, np.abs(grid.af) ** 2)

    def test_nothing_beyond_illuminated_range(self):
        """Test zero power beyond the illuminated range."""
        ranges = Axis.linspace("range", 0.0, 600e3, 601)
        grid = sweep(self.config, [ranges], {"time": 1e-3, "angle": 0.0})
        beyond = ranges.values > 300e3 * (1 + 1e-9)
        self.assertTrue(np.all(grid.power[beyond] == 0.0))
        at_target = int(np.argmin(np.abs(ranges.values - 300e3)))
        self.assertAlmostEqual(grid.power[at_target], 400.0, places=6)

    def test_axis_errors(self):
        """Test the GridAxisError cases."""
        with self.assertRaises(GridAxisError):
            sweep(self.config, [self.angles, self.angles], {"time": 1e-3, "range": 300e3})
        with self.assertRaises(GridAxisError):
            sweep(self.config, [self.angles], {"time": 1e-3})
        with self.assertRaises(GridAxisError):
            sweep(self.config, [], {"time": 1e-3, "range": 300e3, "angle": 0.0})

    def test_phased_array_is_range_invariant(self):
        """Test the phased array over range."""
        config = self.config.with_updates(offset_hz=0.0, continuous_wave=True)
        ranges = Axis.linspace("range", 0.0, 600e3, 61)
        grid = sweep(config, [ranges, self.angles], {"time": 2e-3})
        variation = (grid.power.max(axis=0) - grid.power.min(axis=0)) / grid.power.max()
        self.assertLessEqual(float(variation.max()), 1e-9)

    def test_phased_array_is_time_invariant_in_steady_state(self):
        """Test the phased array over time in steady state."""
        config = self.config.with_updates(offset_hz=0.0)
        times = Axis.linspace("time", self.t_o + 1e-8, self.t_o + 9e-4, 11)
        grid = sweep(config, [times, self.angles], {"range": 300e3})
        np.testing.assert_allclose(grid.power, np.broadcast_to(grid.power[0], grid.power.shape),
                                   rtol=0, atol=1e-9 * 400)

    def test_continuous_wave_range_period(self):
        """Test the c / f_o range period of a continuous-wave FDA."""
        config = self.config.with_updates(offset_hz=1000.0, continuous_wave=True)
        period = 3e8 / 1000.0
        near = sweep(config, [self.angles], {"time": 2e-3, "range": 150e3})
        far = sweep(config, [self.angles], {"time": 2e-3, "range": 150e3 + period})
        np.testing.assert_allclose(far.power, near.power, rtol=0, atol=1e-6 * near.power.max())


class TestTransientPattern(unittest.TestCase):
    """Frozen active sets across the rising transient."""

    def setUp(self):
        self.config = ArrayConfig.half_wavelength(20, 5e9, 100.0, 1e-3)
        self.target = Target.from_degrees(300e3, 30.0)
        self.angles = np.linspace(-math.pi / 2, math.pi / 2, 721)

    def test_plateau_peaks_equal_count_squared(self):
        """Test that frozen-set peaks equal the active count squared."""
        arrivals = np.sort(arrival_times(self.config, self.target))
        midpoints = np.append((arrivals[:-1] + arrivals[1:]) / 2, arrivals[-1])
        grid = transient_sweep(self.config, self.target, midpoints, self.angles)

        np.testing.assert_array_equal(grid.active_counts, np.arange(1, 21))
        peaks = grid.power.max(axis=1)
        np.testing.assert_allclose(peaks, grid.active_counts.astype(float) ** 2, rtol=1e-6)

    def test_single_instant(self):
        """Test a transient pattern at one instant."""
        grid = transient_pattern(self.config, self.target, 1e-3, self.angles, Model.EXACT)
        self.assertEqual(grid.axis_names, ("angle",))
        self.assertEqual(int(grid.active_counts[0]), 20)
        self.assertEqual(grid.fixed["range"], 300e3)

    def test_no_elements_before_arrival(self):
        """Test a transient pattern before any arrival."""
        grid = transient_pattern(self.config, self.target, 0.5e-3, self.angles)
        self.assertTrue(np.all(grid.power == 0.0))
        self.assertEqual(int(grid.active_counts[0]), 0)


if __name__ == '__main__':
    unittest.main()
