"""
Plain-text weights files: one `index re im` line per element, `#` comments.

Values are written with 17 significant digits so a write/read cycle returns
the same float64 weights.
"""

from pathlib import Path
from typing import List, Optional, Sequence

import numpy as np


class WeightsFileError(ValueError):
    """Raised when a weights file cannot be parsed."""
    pass


def write_weights(path: Path, weights: Sequence[complex], comments: Optional[List[str]] = None) -> Path:
    w = np.asarray(weights, dtype=complex)
    lines = [f"# {line}" for line in (comments or [])]
    lines.append("# index re im")
    lines.extend(f"{m} {value.real:.17g} {value.imag:.17g}" for m, value in enumerate(w))

    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path


def read_weights(path: Path) -> np.ndarray:
    """
    Read a weights file.

    Args:
        path: File written by `write_weights` or by hand in the same layout

    Returns:
        Complex weight vector ordered by index

    Raises:
        WeightsFileError: If a line is malformed or indices are not 0..M-1 in order
        OSError: If the file cannot be read
    """
    text = Path(path).read_text(encoding="utf-8")
    weights = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) != 3:
            raise WeightsFileError(f"{path}:{lineno}: expected 'index re im', got {raw!r}")
        try:
            index = int(fields[0])
            value = complex(float(fields[1]), float(fields[2]))
        except ValueError as exc:
            raise WeightsFileError(f"{path}:{lineno}: {exc}") from exc
        if index != len(weights):
            raise WeightsFileError(f"{path}:{lineno}: index {index} out of order, expected {len(weights)}")
        weights.append(value)

    if not weights:
        raise WeightsFileError(f"{path}: no weights found")
    return np.asarray(weights, dtype=complex)
