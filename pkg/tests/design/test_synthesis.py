"""
Tests for inverse-DFT weight synthesis and the designed pattern.
"""

import math
import unittest

import numpy as np
from scipy.signal import get_window

from src.fda_beam.common.models import ArrayConfig, Target
from src.fda_beam.design import (
    DesignError,
    DesiredPattern,
    designed_pattern,
    f_theta_grid,
    forward_array_factor,
    impulse_mask,
    region_mask,
    synthesize_weights,
)


def _energy_fraction(weights: np.ndarray, intervals_deg) -> float:
    """Share of |AF|^2 energy, uniform in sin(theta), inside the given intervals."""
    f_theta = f_theta_grid(4096)
    power = np.abs(forward_array_factor(weights, f_theta)) ** 2
    inside = np.zeros(f_theta.size, dtype=bool)
    for lo, hi in intervals_deg:
        inside |= (f_theta >= math.sin(math.radians(lo)) / 2) & (f_theta <= math.sin(math.radians(hi)) / 2)
    return float(power[inside].sum() / power.sum())


class TestSynthesizeWeights(unittest.TestCase):

    def test_broadside_impulse_is_uniform(self):
        """Test that a broadside impulse gives uniform weights."""
        for centered in (True, False):
            result = synthesize_weights(impulse_mask(0.0, 20), 20, centered=centered)
            with self.subTest(centered=centered):
                np.testing.assert_allclose(result.weights, np.full(20, 1 / 20), rtol=0, atol=1e-15)
                self.assertAlmostEqual(result.residual, 0.0, places=12)

    def test_steered_impulse(self):
        """Test a steered impulse against the closed-form weights."""
        m_antennas = 16
        k0 = 11
        f_k0 = f_theta_grid(m_antennas)[k0]
        mask = np.zeros(m_antennas)
        mask[k0] = 1.0
        result = synthesize_weights(DesiredPattern.from_values(mask), m_antennas, centered=False)
        expected = np.exp(2j * np.pi * f_k0 * np.arange(m_antennas)) / m_antennas
        np.testing.assert_allclose(result.weights, expected, rtol=0, atol=1e-15)

    def test_exact_when_grid_equals_array(self):
        """Test exact reconstruction when K = M."""
        rng = np.random.default_rng(7)
        for centered in (True, False):
            mask = rng.random(24)
            result = synthesize_weights(DesiredPattern.from_values(mask), 24, centered=centered)
            achieved = np.abs(forward_array_factor(result.weights, f_theta_grid(24)))
            with self.subTest(centered=centered):
                np.testing.assert_allclose(achieved, mask, rtol=0, atol=1e-12)
                self.assertAlmostEqual(np.sum(np.abs(result.weights) ** 2), np.sum(mask ** 2) / 24, places=12)
                self.assertEqual(result.discarded_energy, 0.0)

    def test_truncation_energy_equals_discarded_taps(self):
        """Test that truncation energy equals the discarded tap energy."""
        desired = region_mask([[-20.0, 20.0]], 256)
        for centered in (True, False):
            result = synthesize_weights(desired, 20, centered=centered)
            with self.subTest(centered=centered):
                self.assertGreater(result.discarded_energy, 0.0)
                self.assertAlmostEqual(result.truncation_energy, result.discarded_energy,
                                       delta=1e-9 * result.discarded_energy)

    def test_centering_keeps_more_energy(self):
        """Test that centred taps discard less energy."""
        desired = region_mask([[-20.0, 20.0]], 256)
        centered = synthesize_weights(desired, 20)
        uncentered = synthesize_weights(desired, 20, centered=False)
        self.assertLess(centered.discarded_energy, uncentered.discarded_energy)
        self.assertLess(centered.residual, uncentered.residual)

    def test_single_region_energy(self):
        """Test the energy kept inside a single region."""
        result = synthesize_weights(region_mask([[-20.0, 20.0]], 256), 20)
        self.assertGreaterEqual(_energy_fraction(result.weights, [(-22.0, 22.0)]), 0.85)

    def test_dual_region_energy(self):
        """Test the energy kept inside two regions."""
        result = synthesize_weights(region_mask([[-40.0, -20.0], [20.0, 40.0]], 256), 20)
        fraction = _energy_fraction(result.weights, [(-42.0, -18.0), (18.0, 42.0)])
        self.assertGreaterEqual(fraction, 0.80)

    def test_impulse_matches_steered_array(self):
        """Test an impulse design against a steered array."""
        m_antennas = 20
        k0 = 13
        f_k0 = f_theta_grid(m_antennas)[k0]
        mask = np.zeros(m_antennas)
        mask[k0] = 1.0
        result = synthesize_weights(DesiredPattern.from_values(mask), m_antennas)
        steered = ArrayConfig.half_wavelength(m_antennas, 5e9, 0.0, 1e-3, initial_phase_rad=-2 * np.pi * f_k0)

        f_theta = np.linspace(-0.5, 0.5, 1001)
        designed = np.abs(forward_array_factor(result.weights, f_theta))
        conventional = np.abs(forward_array_factor(steered.weight_vector, f_theta))
        np.testing.assert_allclose(designed / designed.max(), conventional / conventional.max(),
                                   rtol=0, atol=1e-12)

    def test_symmetric_mask_gives_real_symmetric_weights(self):
        """Test real symmetric weights from a symmetric mask."""
        mask = np.zeros(64)
        mask[24:41] = 1.0
        result = synthesize_weights(DesiredPattern.from_values(mask), 20)
        np.testing.assert_allclose(result.weights.imag, 0.0, atol=1e-14)
        np.testing.assert_allclose(result.weights, result.weights[::-1], rtol=0, atol=1e-14)

    def test_grid_smaller_than_array(self):
        """Test that K < M is rejected."""
        with self.assertRaises(DesignError):
            synthesize_weights(region_mask([[-20.0, 20.0]], 16), 20)
        with self.assertRaises(DesignError):
            synthesize_weights(region_mask([[-20.0, 20.0]], 16), 0)

    def test_window_taper(self):
        """Test the optional window taper."""
        desired = region_mask([[-20.0, 20.0]], 256)
        plain = synthesize_weights(desired, 20)
        tapered = synthesize_weights(desired, 20, window="hamming")
        np.testing.assert_allclose(tapered.weights, plain.weights * get_window("hamming", 20, fftbins=False))
        self.assertEqual(tapered.window, "hamming")
        self.assertEqual(tapered.truncation_energy, plain.truncation_energy)

    def test_normalized(self):
        """Test the peak-normalized weights."""
        result = synthesize_weights(region_mask([[-20.0, 20.0]], 256), 20)
        self.assertAlmostEqual(float(np.max(np.abs(result.normalized))), 1.0, places=12)
        self.assertEqual(result.m_antennas, 20)
        self.assertEqual(result.grid_size, 256)
        self.assertTrue(result.centered)


class TestDesignedPattern(unittest.TestCase):

    def setUp(self):
        self.weights = synthesize_weights(region_mask([[-20.0, 20.0]], 256), 20)
        self.target = Target.from_degrees(300e3, 0.0)
        self.angles = np.linspace(-math.pi / 2, math.pi / 2, 361)

    def test_matches_forward_transform_at_arrival(self):
        """Test the designed pattern at t_o against the forward transform."""
        config = ArrayConfig.half_wavelength(20, 5e9, 100.0, 1e-3)
        grid = designed_pattern(self.weights, config, self.target, 1e-3, self.angles)
        expected = np.abs(forward_array_factor(self.weights.weights, np.sin(self.angles) / 2)) ** 2
        np.testing.assert_allclose(grid.power, expected, rtol=1e-9, atol=1e-12)

    def test_phased_array_pattern_does_not_move(self):
        """Test that the designed pattern holds still with f_o = 0."""
        config = ArrayConfig.half_wavelength(20, 5e9, 0.0, 2e-3)
        patterns = [designed_pattern(self.weights, config, self.target, t, self.angles).power
                    for t in (1e-3, 1.5e-3, 2e-3)]
        for pattern in patterns[1:]:
            np.testing.assert_allclose(pattern, patterns[0], rtol=1e-12, atol=0)


if __name__ == '__main__':
    unittest.main()
