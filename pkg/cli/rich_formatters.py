"""
Rich terminal formatting utilities for the CLI.

This module provides terminal output for scenario runs using the Rich library:
status messages, the run header, f_oT verdict panels and per-command summary
tables.
"""

import logging
import math
from typing import Any, Dict, List, Optional

from rich.console import Console
from rich.logging import RichHandler
from rich.panel import Panel
from rich.progress import Progress, SpinnerColumn, TextColumn
from rich.table import Table
from rich.text import Text

# Global console instance
console = Console()


class StatusIndicators:
    """Status indicator emojis and symbols."""
    SUCCESS = "✅"
    WARNING = "⚠️ "
    ERROR = "❌"
    INFO = "ℹ️ "
    RESULTS = "📊"
    ARROW = "→"


VERDICT_STYLES = {
    "valid": "green",
    "marginal": "yellow",
    "violated": "red",
}


def configure_logging(level: str) -> None:
    """Route library logging through Rich at the given level."""
    logging.basicConfig(
        level=level.upper(),
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(console=console, show_path=False)],
        force=True,
    )


def print_header(title: str, subtitle: Optional[str] = None):
    """
    Print a formatted header.

    Args:
        title: Main title text
        subtitle: Optional subtitle text
    """
    text = Text(title, style="bold blue")
    if subtitle:
        text.append(f"\n{subtitle}", style="dim")

    panel = Panel(text, border_style="blue")
    console.print(panel)


def print_success(message: str):
    """Print a success message."""
    console.print(f"{StatusIndicators.SUCCESS} {message}", style="green")


def print_warning(message: str):
    """Print a warning message."""
    console.print(f"{StatusIndicators.WARNING} {message}", style="yellow")


def print_error(message: str):
    """Print an error message."""
    console.print(f"{StatusIndicators.ERROR} {message}", style="red")


def print_info(message: str):
    """Print an info message."""
    console.print(f"{StatusIndicators.INFO} {message}", style="blue")


def format_progress_context():
    """
    Create a progress context for long-running operations.

    Returns:
        Rich Progress context manager
    """
    return Progress(
        SpinnerColumn(),
        TextColumn("[progress.description]{task.description}"),
        console=console,
        transient=True,
    )


def _fmt(value: Any, unit: str = "") -> str:
    if value is None:
        return "n/a"
    if isinstance(value, float):
        if math.isnan(value):
            return "n/a"
        text = f"{value:.6g}"
    else:
        text = str(value)
    return f"{text} {unit}".strip()


def _deg(radians: Optional[float]) -> str:
    if radians is None:
        return "n/a"
    return f"{radians:.6g} rad ({math.degrees(radians):.3f} deg)"


def format_overview(overview: Dict[str, str]) -> Table:
    """Two-column table of scenario facts."""
    table = Table(show_header=False, box=None)
    table.add_column("Key", style="cyan", no_wrap=True)
    table.add_column("Value")
    for key, value in overview.items():
        table.add_row(key, value)
    return table


def format_verdict(verdict: str, fot: float) -> Panel:
    """Panel reporting the f_oT bound check."""
    style = VERDICT_STYLES.get(verdict, "white")
    text = Text()
    text.append("f_oT = ", style="bold")
    text.append(f"{fot:.6g}  ")
    text.append(verdict.upper(), style=f"bold {style}")
    return Panel(text, border_style=style, title="Spatial-exploration bound")


def format_pattern_summary(summary: Dict[str, Any]) -> Table:
    table = Table(title=f"{StatusIndicators.RESULTS} Pattern summary ({summary.get('model')} model)")
    table.add_column("Quantity", style="cyan")
    table.add_column("Value", style="green")

    peak = summary.get("peak", {})
    for name, value in peak.items():
        if name == "angle":
            table.add_row("Peak angle", _deg(value))
        elif name == "power":
            table.add_row("Peak power", _fmt(value))
        else:
            table.add_row(f"Peak {name}", _fmt(value, "s" if name == "time" else "m"))

    if "beamwidth_measured_rad" in summary:
        table.add_row("Beamwidth (measured)", _deg(summary["beamwidth_measured_rad"]))
        table.add_row("Beamwidth (closed form)", _deg(summary.get("beamwidth_predicted_rad")))

    for state in summary.get("states", []):
        table.add_row(
            f"State at t = {state['time_s']:.9g} s",
            f"{state['kind']} ({state['active_antennas']} active)",
        )
    return table


def format_staircase(staircase: List[Dict[str, Any]]) -> Table:
    """Active element count and peak power for each distinct plateau of a frozen sweep."""
    table = Table(title="Transient staircase")
    table.add_column("First t (s)", style="cyan")
    table.add_column("Active", justify="right")
    table.add_column("Peak power", justify="right", style="green")

    last = None
    for row in staircase:
        if row["active_antennas"] == last:
            continue
        last = row["active_antennas"]
        table.add_row(f"{row['time_s']:.12g}", str(row["active_antennas"]), f"{row['peak_power']:.6g}")
    return table


def format_design_summary(summary: Dict[str, Any]) -> Table:
    table = Table(title=f"{StatusIndicators.RESULTS} Weight synthesis")
    table.add_column("Quantity", style="cyan")
    table.add_column("Value", style="green")
    table.add_row("Design bins K", str(summary["grid_size"]))
    table.add_row("Residual |AF| (rms)", _fmt(summary["residual"]))
    table.add_row("Residual (dB rms)", _fmt(summary["residual_db"], "dB"))
    table.add_row("Truncation energy", _fmt(summary["truncation_energy"]))
    table.add_row("Peak-normalising scale", _fmt(summary["scale"]))
    table.add_row("Dwell at target (designed)", _fmt(summary.get("dwell_designed_s"), "s"))
    table.add_row("Dwell at target (conventional)", _fmt(summary.get("dwell_conventional_s"), "s"))
    return table


def format_drift_table(drift: List[Dict[str, float]]) -> Table:
    table = Table(title="Pattern drift in f_theta")
    table.add_column("t (s)", style="cyan")
    table.add_column("Predicted", justify="right")
    table.add_column("Measured", justify="right", style="green")
    for row in drift:
        table.add_row(f"{row['time_s']:.6g}", f"{row['predicted_shift']:+.5f}", f"{row['measured_shift']:+.5f}")
    return table


def format_average_summary(summary: Dict[str, Any]) -> Table:
    table = Table(title=f"{StatusIndicators.RESULTS} Average pattern")
    table.add_column("Quantity", style="cyan")
    table.add_column("Value", style="green")
    table.add_row("theta_1", _deg(summary.get("theta1_rad")))
    table.add_row("theta_2", _deg(summary.get("theta2_rad")))
    table.add_row("SE (exact)", _fmt(summary.get("se_exact_rad"), "rad"))
    table.add_row("SE (approx)", _fmt(summary.get("se_approx_rad"), "rad"))
    table.add_row("SE (measured, 3 dB)", _fmt(summary.get("se_empirical_rad"), "rad"))
    return table


def format_compare_summary(summary: Dict[str, Any]) -> Table:
    table = Table(title=f"{StatusIndicators.RESULTS} Range tilt at t = {summary['time_s']:.6g} s")
    table.add_column("Scheme", style="cyan")
    table.add_column("Tilt (f_theta / km)", justify="right", style="green")
    for label, tilt in summary["tilt_per_km"].items():
        table.add_row(label, f"{tilt:+.6g}")
    table.add_row("expected (f_o / c)", f"{summary['expected_tilt_per_km']:+.6g}", style="dim")
    return table


def show_written_files(paths: List[str]) -> None:
    for path in paths:
        console.print(f"  {StatusIndicators.ARROW} {path}")
