import math
from enum import Enum
from numbers import Integral
from pathlib import Path
from typing import Any, List, Literal, Optional, Sequence, Tuple, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from .config import SPEED_OF_LIGHT


class Model(str, Enum):
    """Which array-factor expression to evaluate."""
    EXACT = "exact"      # full phase incl. m^2 f_o d sin(theta)/c, per-element pulse windows
    COMPACT = "compact"  # quadratic term dropped, d = lambda/2, common window [t_o, t_o + T]


class BeamStateKind(str, Enum):
    NOT_ILLUMINATED = "not_illuminated"
    TRANSIENT_1 = "transient_1"
    STEADY = "steady"
    TRANSIENT_2 = "transient_2"
    EXPIRED = "expired"


class FotVerdict(str, Enum):
    VALID = "valid"
    MARGINAL = "marginal"
    VIOLATED = "violated"

    @property
    def satisfies_bound(self) -> bool:
        return self is not FotVerdict.VIOLATED


def progressive_weights(m_antennas: int, initial_phase_rad: float) -> Tuple[complex, ...]:
    """Conventional FDA weights w_m = exp(-j m phi_o)."""
    m = np.arange(m_antennas)
    return tuple(complex(w) for w in np.exp(-1j * m * initial_phase_rad))


class ArrayConfig(BaseModel):
    """
    Geometry and waveform of a uniform linear FDA transmitter.

    Element m radiates at carrier_hz + m * offset_hz for pulse_s seconds with
    complex weight weights[m]. When weights are omitted the progressive-phase
    weights exp(-j m initial_phase_rad) are installed.
    """
    model_config = ConfigDict(frozen=True, extra="forbid")

    m_antennas: int = Field(ge=1)
    spacing: float = Field(gt=0)
    carrier_hz: float = Field(gt=0)
    offset_hz: float = 0.0
    pulse_s: float = Field(gt=0)
    initial_phase_rad: float = 0.0
    weights: Tuple[complex, ...] = ()
    continuous_wave: bool = False

    @model_validator(mode="before")
    @classmethod
    def _default_weights(cls, data: Any) -> Any:
        if isinstance(data, dict) and (data.get("weights") is None or len(data["weights"]) == 0):
            data = dict(data)
            m_antennas = data.get("m_antennas")
            if isinstance(m_antennas, Integral) and int(m_antennas) >= 1:
                data["weights"] = progressive_weights(int(m_antennas), float(data.get("initial_phase_rad", 0.0)))
        return data

    @field_validator("weights")
    @classmethod
    def _finite_weights(cls, weights: Tuple[complex, ...]) -> Tuple[complex, ...]:
        for w in weights:
            if not (math.isfinite(w.real) and math.isfinite(w.imag)):
                raise ValueError("weights must be finite complex numbers")
        return weights

    @model_validator(mode="after")
    def _check_weight_count(self) -> "ArrayConfig":
        if len(self.weights) != self.m_antennas:
            raise ValueError(
                f"weights has {len(self.weights)} entries, expected m_antennas={self.m_antennas}"
            )
        return self

    @classmethod
    def half_wavelength(
        cls,
        m_antennas: int,
        carrier_hz: float,
        offset_hz: float,
        pulse_s: float,
        initial_phase_rad: float = 0.0,
        weights: Optional[Sequence[complex]] = None,
        continuous_wave: bool = False,
    ) -> "ArrayConfig":
        """Build a config whose spacing is exactly c / (2 f_c)."""
        return cls(
            m_antennas=m_antennas,
            spacing=SPEED_OF_LIGHT / (2.0 * carrier_hz),
            carrier_hz=carrier_hz,
            offset_hz=offset_hz,
            pulse_s=pulse_s,
            initial_phase_rad=initial_phase_rad,
            weights=tuple(complex(w) for w in weights) if weights is not None else (),
            continuous_wave=continuous_wave,
        )

    @property
    def weight_vector(self) -> np.ndarray:
        return np.asarray(self.weights, dtype=complex)

    @property
    def wavelength(self) -> float:
        return SPEED_OF_LIGHT / self.carrier_hz

    @property
    def fot(self) -> float:
        """Product f_o * T that governs the spatial exploration."""
        return self.offset_hz * self.pulse_s

    def is_half_wavelength(self, rtol: float = 1e-9) -> bool:
        return abs(self.spacing - self.wavelength / 2.0) <= rtol * (self.wavelength / 2.0)

    def has_progressive_weights(self, atol: float = 1e-12) -> bool:
        expected = np.asarray(progressive_weights(self.m_antennas, self.initial_phase_rad))
        return bool(np.allclose(self.weight_vector, expected, rtol=0.0, atol=atol))

    def with_weights(self, weights: Sequence[complex]) -> "ArrayConfig":
        data = self.model_dump()
        data["weights"] = tuple(complex(w) for w in weights)
        return ArrayConfig(**data)

    def with_updates(self, **changes: Any) -> "ArrayConfig":
        """Copy with validated field changes (weights are re-derived when the phase or size changes)."""
        data = self.model_dump()
        if ("initial_phase_rad" in changes or "m_antennas" in changes) and "weights" not in changes:
            if self.has_progressive_weights():
                data["weights"] = ()
        data.update(changes)
        return ArrayConfig(**data)


class Target(BaseModel):
    """Far-field point at range_m from the reference element, angle_rad off broadside."""
    model_config = ConfigDict(frozen=True, extra="forbid")

    range_m: float = Field(gt=0)
    angle_rad: float = Field(gt=-math.pi / 2, lt=math.pi / 2)

    @classmethod
    def from_degrees(cls, range_m: float, angle_deg: float) -> "Target":
        return cls(range_m=range_m, angle_rad=math.radians(angle_deg))


class BeamState(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: BeamStateKind
    active_antennas: int = Field(ge=0)


class BeamSample(BaseModel):
    model_config = ConfigDict(frozen=True)

    time_s: float
    target: Target
    af: complex
    power: float = Field(ge=0)


# Scenario files ---------------------------------------------------------------

SCHEMA_VERSION = "fda-beam/1"

AxisName = Literal["time", "range", "angle"]


class ArraySection(BaseModel):
    model_config = ConfigDict(extra="forbid")

    m_antennas: int = Field(ge=1)
    spacing_m: Union[float, Literal["half_wavelength"]] = "half_wavelength"
    carrier_hz: float = Field(gt=0)
    offset_hz: float = 0.0
    pulse_s: float = Field(gt=0)
    initial_phase_deg: float = 0.0
    continuous_wave: bool = False

    @field_validator("spacing_m")
    @classmethod
    def _positive_spacing(cls, value: Union[float, str]) -> Union[float, str]:
        if isinstance(value, float) and value <= 0:
            raise ValueError("spacing_m must be positive")
        return value


class TargetSection(BaseModel):
    model_config = ConfigDict(extra="forbid")

    range_m: float = Field(gt=0)
    angle_deg: float = Field(default=0.0, gt=-90.0, lt=90.0)


class DesignSection(BaseModel):
    """Desired regions for synthesis, or a weights file written by an earlier design run."""
    model_config = ConfigDict(extra="forbid")

    regions_deg: List[Tuple[float, float]] = Field(default_factory=list)
    grid_size: Optional[int] = Field(default=None, ge=2)
    centered: bool = True
    window: Optional[str] = None
    times_s: Optional[List[float]] = None
    weights_file: Optional[Path] = None


class AxisSection(BaseModel):
    """Swept axis; angles in degrees, ranges in metres, times in seconds."""
    model_config = ConfigDict(extra="forbid")

    name: AxisName
    start: float
    stop: float
    count: int = Field(ge=1)
    relative_to_delay: bool = False

    @model_validator(mode="after")
    def _relative_time_only(self) -> "AxisSection":
        if self.relative_to_delay and self.name != "time":
            raise ValueError("relative_to_delay applies to the time axis only")
        return self


class FixedSection(BaseModel):
    model_config = ConfigDict(extra="forbid")

    time_s: Optional[float] = None
    range_m: Optional[float] = None
    angle_deg: Optional[float] = None


class SweepSection(BaseModel):
    model_config = ConfigDict(extra="forbid")

    axes: List[AxisSection] = Field(min_length=1, max_length=2)
    model: Model = Model.EXACT
    fixed: FixedSection = Field(default_factory=FixedSection)
    report_times_s: List[float] = Field(default_factory=list)
    freeze_to_target: bool = False

    @model_validator(mode="after")
    def _check_axes(self) -> "SweepSection":
        names = [axis.name for axis in self.axes]
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate sweep axes: {names}")
        if self.freeze_to_target and names != ["time", "angle"]:
            raise ValueError("freeze_to_target needs axes [time, angle]")
        return self


class OutputSection(BaseModel):
    model_config = ConfigDict(extra="forbid")

    stem: str = "fda_beam"
    formats: List[Literal["csv"]] = Field(default_factory=lambda: ["csv"])
    plot_script: bool = False


class Scenario(BaseModel):
    """A complete, validated scenario file."""
    model_config = ConfigDict(extra="forbid")

    schema_version: Literal["fda-beam/1"]
    array: ArraySection
    target: TargetSection
    design: Optional[DesignSection] = None
    sweep: Optional[SweepSection] = None
    output: OutputSection = Field(default_factory=OutputSection)

    @model_validator(mode="after")
    def _build_domain_types(self) -> "Scenario":
        # Surface core invariant violations while the file is being validated.
        self.build_config()
        self.build_target()
        return self

    def build_config(self, weights: Optional[Sequence[complex]] = None) -> ArrayConfig:
        section = self.array
        spacing = (
            SPEED_OF_LIGHT / (2.0 * section.carrier_hz)
            if section.spacing_m == "half_wavelength"
            else float(section.spacing_m)
        )
        return ArrayConfig(
            m_antennas=section.m_antennas,
            spacing=spacing,
            carrier_hz=section.carrier_hz,
            offset_hz=section.offset_hz,
            pulse_s=section.pulse_s,
            initial_phase_rad=math.radians(section.initial_phase_deg),
            weights=tuple(complex(w) for w in weights) if weights is not None else (),
            continuous_wave=section.continuous_wave,
        )

    def build_target(self) -> Target:
        return Target.from_degrees(self.target.range_m, self.target.angle_deg)
