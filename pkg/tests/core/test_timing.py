"""
Tests for per-element pulse timing and beampattern state classification.

The reference geometry is M = 20 elements at half a wavelength of a 5 GHz
carrier (d = 3 cm), f_o = 100 Hz, T = 1 ms and a target at 300 km, so that
t_o = 1 ms exactly.
"""

import math
import unittest

import numpy as np

from src.fda_beam.common.models import ArrayConfig, BeamStateKind, Target
from src.fda_beam.core import (
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


class TimingFixture(unittest.TestCase):

    def setUp(self):
        self.config = ArrayConfig.half_wavelength(20, 5e9, 100.0, 1e-3)
        self.target = Target.from_degrees(300e3, 30.0)
        self.t_o = propagation_delay(self.target)
        self.tau = path_difference_delay(self.config, self.target, 1)


class TestElementDelay(TimingFixture):

    def test_reference_element_arrives_at_t_o(self):
        """Test that element 0 arrives at t_o."""
        self.assertEqual(element_delay(self.config, self.target, 0), 1e-3)

    def test_broadside_delays_are_equal(self):
        """Test equal delays at broadside."""
        broadside = Target.from_degrees(300e3, 0.0)
        for m in range(self.config.m_antennas):
            self.assertEqual(element_delay(self.config, broadside, m), 1e-3)

    def test_last_element_arrives_early(self):
        """Test the path-difference lead of the last element."""
        delay = element_delay(self.config, self.target, 19)
        self.assertAlmostEqual(delay, 1e-3 - 9.5e-10, delta=1e-17)

    def test_monotone_in_element_index(self):
        """Test arrival order for both signs of theta."""
        positive = arrival_times(self.config, self.target)
        self.assertTrue(np.all(np.diff(positive) < 0))

        negative = arrival_times(self.config, Target.from_degrees(300e3, -30.0))
        self.assertTrue(np.all(np.diff(negative) > 0))

    def test_index_out_of_range(self):
        """Test the element index check."""
        for m in (-1, 20):
            with self.subTest(m=m), self.assertRaises(ElementIndexError):
                element_delay(self.config, self.target, m)


class TestClassifyState(TimingFixture):
    """Overlap counting across the five beampattern states."""

    def test_steady_at_t_o(self):
        """Test the steady state at t_o."""
        state = classify_state(self.config, self.target, self.t_o)
        self.assertEqual(state.kind, BeamStateKind.STEADY)
        self.assertEqual(state.active_antennas, 20)

    def test_not_illuminated_before_first_arrival(self):
        """Test the state before the first arrival."""
        first = element_delay(self.config, self.target, 19)
        state = classify_state(self.config, self.target, first - 1e-12)
        self.assertEqual(state.kind, BeamStateKind.NOT_ILLUMINATED)
        self.assertEqual(state.active_antennas, 0)

    def test_steady_mid_pulse(self):
        """Test the steady state mid pulse."""
        first = element_delay(self.config, self.target, 19)
        state = classify_state(self.config, self.target, first + self.config.pulse_s / 2)
        self.assertEqual(state.kind, BeamStateKind.STEADY)
        self.assertEqual(state.active_antennas, 20)

    def test_transient_one(self):
        """Test the rising transient."""
        # elements 10..19 have arrived
        state = classify_state(self.config, self.target, self.t_o - 9.5 * self.tau)
        self.assertEqual(state.kind, BeamStateKind.TRANSIENT_1)
        self.assertEqual(state.active_antennas, 10)

    def test_transient_two(self):
        """Test the falling transient."""
        # elements 0..9 are still transmitting
        state = classify_state(self.config, self.target, self.t_o + self.config.pulse_s - 9.5 * self.tau)
        self.assertEqual(state.kind, BeamStateKind.TRANSIENT_2)
        self.assertEqual(state.active_antennas, 10)

    def test_expired_after_last_pulse(self):
        """Test the state after the last pulse ends."""
        state = classify_state(self.config, self.target, self.t_o + self.config.pulse_s + 1e-12)
        self.assertEqual(state.kind, BeamStateKind.EXPIRED)
        self.assertEqual(state.active_antennas, 0)

    def test_dark_gap_inside_support_window(self):
        """Test that a pulse shorter than the arrival spacing leaves a transient, not an expired, gap."""
        config = ArrayConfig.half_wavelength(20, 5e9, 100.0, 50e-12)
        target = Target.from_degrees(300e3, 80.0)
        arrivals = arrival_times(config, target)
        self.assertGreater(arrivals[18] - arrivals[19], 75e-12)

        t = float(arrivals.min()) + 75e-12
        state = classify_state(config, target, t)
        self.assertEqual(state.active_antennas, 0)
        self.assertEqual(state.kind, BeamStateKind.TRANSIENT_1)
        self.assertLess(t, propagation_delay(target) + config.pulse_s)

        late_gap = float(arrivals.max()) - 30e-12
        self.assertEqual(classify_state(config, target, late_gap).kind, BeamStateKind.TRANSIENT_1)
        after_last = float(arrivals.max()) + config.pulse_s + 1e-12
        self.assertEqual(classify_state(config, target, after_last).kind, BeamStateKind.EXPIRED)

    def test_negative_angle_reverses_arrival_order(self):
        """Test that element 0 leads for negative angles."""
        target = Target.from_degrees(300e3, -30.0)
        state = classify_state(self.config, target, self.t_o)
        self.assertEqual(state.kind, BeamStateKind.TRANSIENT_1)
        self.assertEqual(state.active_antennas, 1)
        self.assertTrue(active_mask(self.config, target, self.t_o)[0])

    def test_staircase_rises_by_one(self):
        """Test that the active count rises one element at a time."""
        arrivals = arrival_times(self.config, self.target)
        times = np.linspace(arrivals.min(), arrivals.max(), 4001)
        counts = [classify_state(self.config, self.target, t).active_antennas for t in times]

        steps = np.diff(counts)
        self.assertTrue(np.all((steps == 0) | (steps == 1)))
        self.assertEqual(sorted(set(counts)), list(range(1, 21)))

    def test_staircase_falls_by_one(self):
        """Test that the active count falls one element at a time."""
        arrivals = arrival_times(self.config, self.target)
        pulse = self.config.pulse_s
        times = np.linspace(arrivals.min() + pulse, arrivals.max() + pulse, 4001)
        counts = [classify_state(self.config, self.target, t).active_antennas for t in times]

        steps = np.diff(counts)
        self.assertTrue(np.all((steps == 0) | (steps == -1)))
        self.assertEqual(sorted(set(counts)), list(range(1, 21)))


class TestWindows(TimingFixture):

    def test_steady_state_window(self):
        """Test the steady-state window."""
        start, end = steady_state_window(self.config, self.target)
        self.assertEqual(start, self.t_o)
        self.assertAlmostEqual(end, self.t_o - 19 * self.tau + self.config.pulse_s, delta=1e-18)

    def test_support_window(self):
        """Test the support window."""
        start, end = support_window(self.config, self.target)
        self.assertAlmostEqual(start, self.t_o - 19 * self.tau, delta=1e-18)
        self.assertEqual(end, self.t_o + self.config.pulse_s)

    def test_continuous_wave_is_always_active(self):
        """Test that continuous wave keeps every element active."""
        config = self.config.with_updates(continuous_wave=True)
        self.assertTrue(np.all(active_mask(config, self.target, 0.0)))
        self.assertEqual(support_window(config, self.target), (-math.inf, math.inf))
        self.assertEqual(classify_state(config, self.target, 1e6).kind, BeamStateKind.STEADY)


if __name__ == '__main__':
    unittest.main()
