#!/usr/bin/env python3
"""
FDA Beampattern CLI

A rich command-line interface for reproducing frequency-diverse-array
beampattern studies from YAML scenario files: instantaneous patterns,
DFT weight design, average patterns and scheme comparisons, written out as
CSV grids with optional plot scripts.
"""

import sys
from pathlib import Path
from typing import Any, Callable, List, Optional

import click
import numpy as np

# Add the src directory to Python path so we can import the core modules
sys.path.insert(0, str(Path(__file__).parent.parent / "src"))
# Add the CLI directory to Python path so we can import CLI modules
sys.path.insert(0, str(Path(__file__).parent))

from scenario_support import ScenarioError, load_scenario, load_weights_override, scenario_overview
from rich_formatters import (
    console, print_header, print_success, print_warning, print_error, print_info,
    configure_logging, format_progress_context, format_overview, format_verdict,
    format_pattern_summary, format_staircase, format_design_summary, format_drift_table,
    format_average_summary, format_compare_summary, show_written_files
)

# Import core functionality
from fda_beam.orchestrator import RunResult, ScenarioRunner
from fda_beam.common.config import get_settings
from fda_beam.common.models import FotVerdict, Model, Scenario
from fda_beam.formatters import (
    AXIS_COLUMNS, WeightsFileError, write_columns_csv, write_grid_csv, write_plot_script, write_weights
)

EXIT_VALIDATION = 2
EXIT_IO = 3
EXIT_BOUND = 4


@click.group()
@click.version_option(version="1.0.0", prog_name="fda-beam")
@click.option(
    '--log-level',
    type=click.Choice(['DEBUG', 'INFO', 'WARNING', 'ERROR'], case_sensitive=False),
    default=None,
    help='Library log level (defaults to FDA_LOG_LEVEL or WARNING)'
)
def cli(log_level: Optional[str]):
    """
    FDA Beampattern Toolkit

    Simulate pulsed frequency-diverse-array transmit beampatterns and
    synthesize DFT weights for desired angular regions.
    """
    configure_logging(log_level or get_settings().log_level)


def scenario_options(func: Callable[..., Any]) -> Callable[..., Any]:
    """Options shared by every scenario command."""
    options = [
        click.option('--scenario', 'scenario_path', required=True, type=click.Path(path_type=Path),
                     help='YAML scenario file (schema fda-beam/1)'),
        click.option('--out', 'out_stem', default=None,
                     help='Output path stem (overrides output.stem in the scenario)'),
        click.option('--format', 'output_format', default='csv', type=click.Choice(['csv']),
                     help='Output format'),
        click.option('--model', type=click.Choice(['exact', 'compact']), default=None,
                     help='Array-factor model (overrides sweep.model)'),
        click.option('--continuous-wave', is_flag=True,
                     help='Remove the pulse support window (model switch, not physical pulsing)'),
        click.option('--strict', is_flag=True,
                     help='Exit with code 4 when the f_oT bound is violated'),
        click.option('--plot-script', is_flag=True,
                     help='Also write a matplotlib script next to each CSV'),
        click.option('--weights', 'weights_path', type=click.Path(path_type=Path), default=None,
                     help='Weights file (index re im) to install instead of the default weights'),
    ]
    for option in reversed(options):
        func = option(func)
    return func


@cli.command()
@scenario_options
def pattern(**options: Any):
    """
    Sweep the instantaneous beampattern over one or two axes.

    Reports the peak, the measured and closed-form beamwidth for angle
    sweeps, and the beam state at each requested instant.
    """
    _execute('pattern', **options)


@cli.command()
@scenario_options
def design(**options: Any):
    """
    Synthesize DFT weights for the scenario's desired regions.

    Writes the weights file and the designed pattern at t_o, 1.5 t_o and
    2 t_o (or design.times_s), with predicted versus measured drift. The
    designed pattern is always the compact model, so --model and --weights
    are rejected.
    """
    _execute('design', **options)


@cli.command()
@scenario_options
@click.option('--instantaneous', is_flag=True,
              help='Add the instantaneous pattern at t_o and t_o + T next to the average')
def average(**options: Any):
    """
    Average beampattern over one pulse with its spatial-exploration report.
    """
    _execute('average', **options)


@cli.command()
@scenario_options
def compare(**options: Any):
    """
    PAR, conventional FDA and DFT-designed range-angle grids on identical axes.
    """
    _execute('compare', **options)


def _execute(
    command: str,
    scenario_path: Path,
    out_stem: Optional[str],
    output_format: str,
    model: Optional[str],
    continuous_wave: bool,
    strict: bool,
    plot_script: bool,
    weights_path: Optional[Path],
    instantaneous: bool = False,
) -> None:
    try:
        if command == 'design' and (model or weights_path):
            raise ScenarioError("design always uses the compact model and synthesizes its own weights; "
                                "drop --model and --weights")
        scenario = load_scenario(scenario_path)
        weights = load_weights_override(scenario, weights_path) if command != 'design' else None
    except (ScenarioError, WeightsFileError) as e:
        print_error(str(e))
        sys.exit(EXIT_VALIDATION)
    except OSError as e:
        print_error(f"Cannot read input: {e}")
        sys.exit(EXIT_IO)

    print_header(f"fda-beam {command}", str(scenario_path))
    console.print(format_overview(scenario_overview(scenario)))
    if weights is not None:
        print_info(f"Installed {weights.size} weights from file")

    runner = ScenarioRunner()
    selected_model = Model(model) if model else None
    try:
        with format_progress_context() as progress:
            progress.add_task(f"Running {command}...", total=None)
            result = _run(runner, command, scenario, selected_model, continuous_wave, weights, instantaneous)
    except ValueError as e:
        print_error(f"Invalid configuration: {e}")
        sys.exit(EXIT_VALIDATION)

    config = runner.build_config(scenario, continuous_wave)
    console.print(format_verdict(result.verdict.value, config.fot))
    _show_summary(command, result)

    try:
        written = _write_outputs(command, result, scenario, out_stem, plot_script)
    except OSError as e:
        print_error(f"Cannot write output: {e}")
        sys.exit(EXIT_IO)

    print_success(f"Wrote {len(written)} file(s)")
    show_written_files(written)

    if result.verdict is FotVerdict.VIOLATED:
        if strict:
            print_error("f_oT bound violated (--strict)")
            sys.exit(EXIT_BOUND)
        print_warning("f_oT bound violated; plateau edges are undefined")


def _run(
    runner: ScenarioRunner,
    command: str,
    scenario: Scenario,
    model: Optional[Model],
    continuous_wave: bool,
    weights: Optional[np.ndarray],
    instantaneous: bool = False,
) -> RunResult:
    if command == 'pattern':
        return runner.run_pattern(scenario, model, continuous_wave, weights)
    if command == 'design':
        return runner.run_design(scenario, continuous_wave)
    if command == 'average':
        return runner.run_average(scenario, continuous_wave, weights, instantaneous)
    return runner.run_compare(scenario, model, continuous_wave, weights)


def _show_summary(command: str, result: RunResult) -> None:
    summary = result.summary
    if command == 'pattern':
        console.print(format_pattern_summary(summary))
        if 'staircase' in summary:
            console.print(format_staircase(summary['staircase']))
    elif command == 'design':
        console.print(format_design_summary(summary))
        console.print(format_drift_table(summary['drift']))
    elif command == 'average':
        console.print(format_average_summary(summary))
    else:
        console.print(format_compare_summary(summary))


def _resolve_stem(scenario: Scenario, out_stem: Optional[str]) -> Path:
    stem = Path(out_stem or scenario.output.stem)
    if not stem.is_absolute():
        stem = get_settings().output_dir / stem
    return stem


def _write_outputs(
    command: str,
    result: RunResult,
    scenario: Scenario,
    out_stem: Optional[str],
    plot_script: bool,
) -> List[str]:
    """Write every grid and table of a run; returns the paths written, in order."""
    stem = _resolve_stem(scenario, out_stem)
    want_plots = plot_script or scenario.output.plot_script
    outputs = len(result.grids) + len(result.tables)
    written: List[str] = []

    def csv_path(label: str) -> Path:
        if outputs == 1:
            return stem.with_name(stem.name + ".csv")
        return stem.with_name(f"{stem.name}_{label}.csv")

    if result.weights is not None:
        weights_path = stem.with_name(stem.name + "_weights.txt")
        write_weights(weights_path, result.weights.weights, [
            f"fda-beam {command}: {result.weights.m_antennas} weights, K = {result.weights.grid_size}",
            f"residual = {result.weights.residual!r}",
        ])
        written.append(str(weights_path))

    for label, grid in result.grids.items():
        path = write_grid_csv(grid, csv_path(label), [f"fda-beam {command} {label}"])
        written.append(str(path))
        if want_plots:
            columns = [AXIS_COLUMNS[name] for name in grid.axis_names]
            written.append(str(write_plot_script(path, columns, f"{command} {label}")))

    for label, columns in result.tables.items():
        path = write_columns_csv(csv_path(label), columns, [f"fda-beam {command} {label}"])
        written.append(str(path))
        if want_plots:
            written.append(str(write_plot_script(path, ["angle_deg"], f"{command} {label}")))

    return written


if __name__ == '__main__':
    cli()
