"""
Orchestration layer for scenario workflows.

This module provides one entry point per command (pattern, design, average,
compare) without mixing CLI concerns into the numerical code. Each workflow
turns a validated Scenario into grids, column tables and a summary that any
front end can render or write out.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence

import numpy as np

from .analysis import (
    ArcsineDomainError,
    AveragePattern,
    PlateauNotFoundError,
    approximate_exploration,
    average_decomposition,
    average_power_quadratic,
    check_fot_bound,
    measure_beamwidth,
    measure_se_empirical,
    peak_location,
    range_tilt,
    rayleigh_beamwidth,
    spatial_exploration,
)
from .common.config import FdaSettings, SPEED_OF_LIGHT, get_settings
from .common.models import ArrayConfig, AxisSection, FotVerdict, Model, Scenario, SweepSection, Target
from .core import Axis, BeamGrid, classify_state, propagation_delay, sweep, transient_sweep
from .design import (
    DesignError,
    DwellError,
    SynthesizedWeights,
    angles_from_f_theta,
    designed_pattern,
    dwell_time,
    f_theta_grid,
    measure_shift,
    predict_shift,
    region_mask,
    synthesize_weights,
    wrap_f_theta,
)
from .formatters import power_to_db

logger = logging.getLogger(__name__)

# Bins of the f_theta grid on which design drift is measured.
SHIFT_GRID_SIZE = 4096
DEFAULT_RANGE_POINTS = 241


@dataclass
class RunResult:
    """Everything a command produced, ready to be written and summarised."""
    verdict: FotVerdict
    grids: Dict[str, BeamGrid] = field(default_factory=dict)
    tables: Dict[str, Dict[str, np.ndarray]] = field(default_factory=dict)
    summary: Dict[str, Any] = field(default_factory=dict)
    weights: Optional[SynthesizedWeights] = None


class ScenarioRunner:
    """
    Runs scenario workflows.

    The runner holds only settings; every method is a pure function of the
    scenario and overrides it is given, so one runner can serve many scenarios.
    """

    def __init__(self, settings: Optional[FdaSettings] = None):
        self.settings = settings or get_settings()

    # -- shared setup ---------------------------------------------------------

    def build_config(
        self,
        scenario: Scenario,
        continuous_wave: bool = False,
        weights: Optional[Sequence[complex]] = None,
    ) -> ArrayConfig:
        """
        ArrayConfig for a scenario with command-line overrides applied.

        Args:
            scenario: Validated scenario
            continuous_wave: Force the continuous-wave model switch on
            weights: Weights to install instead of the progressive-phase default
        """
        config = scenario.build_config(weights)
        if continuous_wave and not config.continuous_wave:
            config = config.with_updates(continuous_wave=True)
        return config

    def default_angle_axis(self) -> Axis:
        return Axis.linspace("angle", -math.pi / 2, math.pi / 2, self.settings.angle_points)

    def to_axis(self, section: AxisSection, target: Target) -> Axis:
        start, stop = section.start, section.stop
        if section.name == "angle":
            start, stop = math.radians(start), math.radians(stop)
        elif section.relative_to_delay:
            t_o = propagation_delay(target)
            start, stop = t_o + start, t_o + stop
        return Axis.linspace(section.name, start, stop, section.count)

    def fixed_coordinates(self, sweep_section: Optional[SweepSection], target: Target,
                          default_time: Optional[float] = None) -> Dict[str, float]:
        t_o = propagation_delay(target)
        fixed = {
            "time": default_time if default_time is not None else t_o,
            "range": target.range_m,
            "angle": target.angle_rad,
        }
        if sweep_section is not None:
            if sweep_section.fixed.time_s is not None:
                fixed["time"] = sweep_section.fixed.time_s
            if sweep_section.fixed.range_m is not None:
                fixed["range"] = sweep_section.fixed.range_m
            if sweep_section.fixed.angle_deg is not None:
                fixed["angle"] = math.radians(sweep_section.fixed.angle_deg)
        return fixed

    def angle_axis(self, scenario: Scenario) -> Axis:
        """The scenario's angle axis if it sweeps one, else the default grid."""
        if scenario.sweep is not None:
            for section in scenario.sweep.axes:
                if section.name == "angle":
                    return self.to_axis(section, scenario.build_target())
        return self.default_angle_axis()

    # -- workflows ------------------------------------------------------------

    def run_pattern(
        self,
        scenario: Scenario,
        model: Optional[Model] = None,
        continuous_wave: bool = False,
        weights: Optional[Sequence[complex]] = None,
    ) -> RunResult:
        """
        Instantaneous beampattern sweep with peak, beamwidth and state summary.

        Args:
            scenario: Validated scenario; its sweep block defaults to an angle sweep at t_o
            model: Override of the scenario's model selector
            continuous_wave: Force the continuous-wave model switch on
            weights: Weights to install (e.g. re-ingested from a design run)

        Returns:
            RunResult with a single "pattern" grid
        """
        config = self.build_config(scenario, continuous_wave, weights)
        target = scenario.build_target()
        verdict = check_fot_bound(config, self.settings)
        section = scenario.sweep
        model = model or (section.model if section is not None else Model.EXACT)

        axes = [self.to_axis(s, target) for s in section.axes] if section else [self.default_angle_axis()]
        fixed = self.fixed_coordinates(section, target)

        if section is not None and section.freeze_to_target:
            grid = transient_sweep(config, target, axes[0].values, axes[1].values, model)
        else:
            grid = sweep(config, axes, fixed, model)

        summary: Dict[str, Any] = {"peak": peak_location(grid), "model": model.value}
        if grid.axis_names == ("angle",):
            summary["beamwidth_measured_rad"] = self._measured_beamwidth(grid)
            try:
                summary["beamwidth_predicted_rad"] = rayleigh_beamwidth(config).bw_exact_rad
            except ArcsineDomainError as exc:
                logger.warning("No closed-form beamwidth: %s", exc)
                summary["beamwidth_predicted_rad"] = None

        report_times = list(section.report_times_s) if section and section.report_times_s else []
        if not report_times and "time" not in grid.axis_names:
            report_times = [fixed["time"]]
        summary["states"] = [
            {"time_s": t, **classify_state(config, target, t).model_dump(mode="json")}
            for t in report_times
        ]

        if grid.active_counts is not None and grid.axis_names == ("time", "angle"):
            summary["staircase"] = [
                {"time_s": float(t), "active_antennas": int(count), "peak_power": float(row.max())}
                for t, count, row in zip(grid.values("time"), grid.active_counts, grid.power)
            ]

        return RunResult(verdict=verdict, grids={"pattern": grid}, summary=summary)

    def synthesize(self, scenario: Scenario) -> SynthesizedWeights:
        """
        Synthesize weights from the scenario's design block.

        Raises:
            DesignError: If there is no design block or no desired region
        """
        design = scenario.design
        if design is None:
            raise DesignError("scenario has no design block")
        if not design.regions_deg:
            raise DesignError("design block has no desired regions")
        grid_size = design.grid_size or self.settings.design_grid_size
        desired = region_mask(design.regions_deg, grid_size)
        return synthesize_weights(desired, scenario.array.m_antennas, design.centered, design.window)

    def run_design(self, scenario: Scenario, continuous_wave: bool = False) -> RunResult:
        """
        Synthesize weights and evaluate the designed pattern at the requested instants.

        Instants default to t_o, 1.5 t_o and 2 t_o. For each instant the predicted
        and measured f_theta drift are reported; dwell at the target angle is
        compared against the conventional progressive-phase array.
        """
        config = self.build_config(scenario, continuous_wave)
        target = scenario.build_target()
        verdict = check_fot_bound(config, self.settings)
        weights = self.synthesize(scenario)

        t_o = propagation_delay(target)
        assert scenario.design is not None
        times = scenario.design.times_s or [t_o, 1.5 * t_o, 2.0 * t_o]
        angles = self.angle_axis(scenario).values

        shift_angles = angles_from_f_theta(f_theta_grid(SHIFT_GRID_SIZE))
        reference = designed_pattern(weights, config, target, t_o, shift_angles).power

        grids: Dict[str, BeamGrid] = {}
        drift: List[Dict[str, float]] = []
        for index, t in enumerate(times):
            grids[f"t{index}"] = designed_pattern(weights, config, target, t, angles)
            shifted = designed_pattern(weights, config, target, t, shift_angles).power
            drift.append({
                "time_s": t,
                "predicted_shift": float(wrap_f_theta(predict_shift(config, t, t_o))),
                "measured_shift": measure_shift(shifted, reference),
            })

        summary: Dict[str, Any] = {
            "residual": weights.residual,
            "residual_db": weights.residual_db,
            "truncation_energy": weights.truncation_energy,
            "scale": weights.scale,
            "grid_size": weights.grid_size,
            "drift": drift,
            "dwell_designed_s": self._dwell(weights, config, target),
            "dwell_conventional_s": self._dwell(None, config, target),
        }
        return RunResult(verdict=verdict, grids=grids, summary=summary, weights=weights)

    def run_average(
        self,
        scenario: Scenario,
        continuous_wave: bool = False,
        weights: Optional[Sequence[complex]] = None,
        instantaneous: bool = False,
    ) -> RunResult:
        """
        Average beampattern over the pulse with predicted and measured spatial exploration.

        A violated f_oT bound leaves the plateau edges undefined; the pattern is
        still computed and the edges are reported as None. With instantaneous set,
        the table also carries the instantaneous pattern at t_o and t_o + T.
        """
        config = self.build_config(scenario, continuous_wave, weights)
        target = scenario.build_target()
        verdict = check_fot_bound(config, self.settings)
        angles = self.angle_axis(scenario).values
        power = average_power_quadratic(config, target, angles)

        try:
            exploration = spatial_exploration(config)
            edges: Dict[str, Optional[float]] = {
                "theta1_rad": exploration.theta1_rad,
                "theta2_rad": exploration.theta2_rad,
                "se_exact_rad": exploration.se_exact_rad,
            }
        except ArcsineDomainError as exc:
            logger.warning("Plateau edges undefined: %s", exc)
            edges = {"theta1_rad": None, "theta2_rad": None, "se_exact_rad": None}

        pattern = AveragePattern(
            angles_rad=angles,
            power=power,
            theta1_rad=edges["theta1_rad"] if edges["theta1_rad"] is not None else math.nan,
            theta2_rad=edges["theta2_rad"] if edges["theta2_rad"] is not None else math.nan,
            se_exact_rad=edges["se_exact_rad"] if edges["se_exact_rad"] is not None else math.nan,
            se_approx_rad=approximate_exploration(config),
            decomposition=average_decomposition(config, angles),
        )
        try:
            se_empirical: Optional[float] = measure_se_empirical(pattern)
        except PlateauNotFoundError as exc:
            logger.warning("Empirical SE unavailable: %s", exc)
            se_empirical = None

        columns: Dict[str, np.ndarray] = {
            "angle_deg": np.degrees(angles),
            "power_lin": power,
            "power_db": power_to_db(power, float(config.m_antennas ** 2)),
        }
        if pattern.decomposition is not None:
            columns["p1"] = pattern.decomposition.p1
            columns["p2"] = pattern.decomposition.p2
        if instantaneous:
            model = Model.COMPACT if config.is_half_wavelength() else Model.EXACT
            t_o = propagation_delay(target)
            # last representable instant still inside the closed window [t_o, t_o + T]
            t_end = float(np.nextafter(t_o + config.pulse_s, -np.inf))
            for label, t in (("start", t_o), ("end", t_end)):
                snapshot = sweep(config, [Axis("angle", angles)], {"time": t, "range": target.range_m}, model)
                columns[f"inst_{label}_lin"] = snapshot.power

        summary: Dict[str, Any] = {
            **edges,
            "se_approx_rad": pattern.se_approx_rad,
            "se_empirical_rad": se_empirical,
            "fot": config.fot,
        }
        return RunResult(verdict=verdict, tables={"average": columns}, summary=summary)

    def run_compare(
        self,
        scenario: Scenario,
        model: Optional[Model] = None,
        continuous_wave: bool = False,
        weights: Optional[Sequence[complex]] = None,
    ) -> RunResult:
        """
        PAR, conventional FDA and DFT-designed range x angle grids on identical axes.

        The designed grid uses `weights` when given, else weights synthesized
        from the design block. The instant defaults to 2 t_o.
        """
        config = self.build_config(scenario, continuous_wave)
        target = scenario.build_target()
        verdict = check_fot_bound(config, self.settings)
        section = scenario.sweep
        model = model or (section.model if section is not None else Model.EXACT)

        if section is not None and {s.name for s in section.axes} == {"range", "angle"}:
            axes = [self.to_axis(s, target) for s in section.axes]
        else:
            axes = [Axis.linspace("range", 0.0, 2.0 * target.range_m, DEFAULT_RANGE_POINTS), self.default_angle_axis()]
        t_o = propagation_delay(target)
        fixed = self.fixed_coordinates(section, target, default_time=2.0 * t_o)

        designed_weights = weights if weights is not None else self.synthesize(scenario).weights
        configs = {
            "par": config.with_updates(offset_hz=0.0),
            "fda": config,
            "designed": config.with_weights(designed_weights),
        }
        grids = {label: sweep(cfg, axes, fixed, model) for label, cfg in configs.items()}
        summary: Dict[str, Any] = {
            "time_s": fixed["time"],
            "model": model.value,
            # f_theta per km of range
            "tilt_per_km": {label: range_tilt(grid) * 1e3 for label, grid in grids.items()},
            "expected_tilt_per_km": config.offset_hz / SPEED_OF_LIGHT * 1e3,
        }
        return RunResult(verdict=verdict, grids=grids, summary=summary)

    # -- helpers --------------------------------------------------------------

    def _measured_beamwidth(self, grid: BeamGrid) -> Optional[float]:
        try:
            return measure_beamwidth(grid.values("angle"), grid.power)
        except ValueError:
            return None

    def _dwell(self, weights: Optional[SynthesizedWeights], config: ArrayConfig, target: Target) -> Optional[float]:
        try:
            return dwell_time(weights, config, target, target.angle_rad)
        except DwellError as exc:
            logger.warning("Dwell unavailable: %s", exc)
            return None


def reference_scenario(
    m_antennas: int = 20,
    offset_hz: float = 200.0,
    pulse_s: float = 1e-3,
    carrier_hz: float = 5e9,
    range_m: float = 300e3,
) -> Scenario:
    """Half-wavelength array with a broadside target, as a validated Scenario."""
    return Scenario.model_validate({
        "schema_version": "fda-beam/1",
        "array": {
            "m_antennas": m_antennas,
            "carrier_hz": carrier_hz,
            "offset_hz": offset_hz,
            "pulse_s": pulse_s,
        },
        "target": {"range_m": range_m, "angle_deg": 0.0},
    })


def quick_average(
    m_antennas: int = 20,
    offset_hz: float = 200.0,
    pulse_s: float = 1e-3,
) -> Dict[str, Any]:
    """
    Quick average-pattern study for simple use cases.

    This is a convenience function that runs the most common workflow, the
    spatial exploration of one pulse, in a single call.

    Args:
        m_antennas: Number of elements
        offset_hz: Frequency increment f_o
        pulse_s: Pulse duration T

    Returns:
        The average-pattern summary plus the f_oT verdict
    """
    result = ScenarioRunner().run_average(reference_scenario(m_antennas, offset_hz, pulse_s))
    return {"verdict": result.verdict.value, **result.summary}
