"""
Scenario file loading for the CLI.

Scenario files are YAML documents carrying a `schema_version: fda-beam/1`
string. Parsing and schema validation failures are reported as
ScenarioError; a missing or unreadable file surfaces as OSError so the CLI can
tell the two apart.
"""

from pathlib import Path
from typing import Any, Dict, List, Optional

import numpy as np
import yaml
from pydantic import ValidationError

from fda_beam.common.models import SCHEMA_VERSION, Scenario
from fda_beam.formatters import read_weights


class ScenarioError(Exception):
    """Raised when a scenario file cannot be parsed or fails validation."""
    pass


def _format_validation_error(error: ValidationError) -> List[str]:
    lines = []
    for item in error.errors():
        location = ".".join(str(part) for part in item["loc"]) or "<root>"
        lines.append(f"{location}: {item['msg']}")
    return lines


def load_scenario(file_path: Path) -> Scenario:
    """
    Load and validate a scenario file.

    Relative paths inside the scenario (the design weights file) are resolved
    against the scenario's own directory.

    Args:
        file_path: Path to the YAML scenario

    Returns:
        Validated Scenario

    Raises:
        ScenarioError: If the YAML is malformed or the content fails validation
        OSError: If the file cannot be read
    """
    file_path = Path(file_path)
    text = file_path.read_text(encoding="utf-8")

    try:
        data: Any = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        raise ScenarioError(f"{file_path}: not valid YAML: {exc}") from exc

    if not isinstance(data, dict):
        raise ScenarioError(f"{file_path}: expected a mapping at the top level")
    version = data.get("schema_version")
    if version != SCHEMA_VERSION:
        raise ScenarioError(f"{file_path}: schema_version must be '{SCHEMA_VERSION}', got {version!r}")

    try:
        scenario = Scenario.model_validate(data)
    except ValidationError as exc:
        details = "\n  ".join(_format_validation_error(exc))
        raise ScenarioError(f"{file_path}: invalid scenario\n  {details}") from exc

    design = scenario.design
    if design is not None and design.weights_file is not None and not design.weights_file.is_absolute():
        resolved = design.model_copy(update={"weights_file": file_path.parent / design.weights_file})
        scenario = scenario.model_copy(update={"design": resolved})
    return scenario


def load_weights_override(scenario: Scenario, weights_path: Optional[Path]) -> Optional[np.ndarray]:
    """
    Weights to install for this run: the --weights file if given, else the
    scenario's design.weights_file, else None.

    Raises:
        WeightsFileError: If the file is malformed
        OSError: If the file cannot be read
    """
    if weights_path is None and scenario.design is not None:
        weights_path = scenario.design.weights_file
    if weights_path is None:
        return None
    weights = read_weights(weights_path)
    if weights.size != scenario.array.m_antennas:
        raise ScenarioError(
            f"{weights_path}: {weights.size} weights for an array of {scenario.array.m_antennas} elements"
        )
    return weights


def scenario_overview(scenario: Scenario) -> Dict[str, str]:
    """Human-readable key facts for the run header."""
    array = scenario.array
    return {
        "Elements": str(array.m_antennas),
        "Carrier": f"{array.carrier_hz / 1e9:g} GHz",
        "Offset": f"{array.offset_hz:g} Hz",
        "Pulse": f"{array.pulse_s * 1e3:g} ms",
        "Initial phase": f"{array.initial_phase_deg:g} deg",
        "Target": f"{scenario.target.range_m / 1e3:g} km @ {scenario.target.angle_deg:g} deg",
        "Mode": "continuous wave" if array.continuous_wave else "pulsed",
    }
