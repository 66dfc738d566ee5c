"""
Emit a standalone matplotlib script that renders a grid CSV.
"""

from pathlib import Path
from typing import Sequence

_LINE_TEMPLATE = '''"""Plot {csv_name} (generated by fda-beam)."""
import numpy as np
import matplotlib.pyplot as plt

with open("{csv_name}") as fh:
    skip = sum(1 for line in fh if line.startswith("#"))
data = np.genfromtxt("{csv_name}", delimiter=",", names=True, skip_header=skip)
plt.plot(data["{x}"], data["power_db"])
plt.xlabel("{x}")
plt.ylabel("power_db (re M^2)")
plt.title("{title}")
plt.ylim(max(data["power_db"].max() - 60, -300), data["power_db"].max() + 3)
plt.grid(True)
plt.show()
'''

_MESH_TEMPLATE = '''"""Plot {csv_name} (generated by fda-beam)."""
import numpy as np
import matplotlib.pyplot as plt

with open("{csv_name}") as fh:
    skip = sum(1 for line in fh if line.startswith("#"))
data = np.genfromtxt("{csv_name}", delimiter=",", names=True, skip_header=skip)
rows = np.unique(data["{y}"]).size
x = data["{x}"].reshape(rows, -1)
y = data["{y}"].reshape(rows, -1)
z = data["power_db"].reshape(rows, -1)
mesh = plt.pcolormesh(x, y, z, shading="auto", vmin=max(z.max() - 60, -300))
plt.colorbar(mesh, label="power_db (re M^2)")
plt.xlabel("{x}")
plt.ylabel("{y}")
plt.title("{title}")
plt.show()
'''


def write_plot_script(csv_path: Path, columns: Sequence[str], title: str = "") -> Path:
    """
    Write `<csv stem>.plot.py` next to the CSV.

    Args:
        csv_path: CSV written by the grid writer
        columns: Axis column names in row-major order (one or two)
        title: Figure title

    Returns:
        Path of the script
    """
    csv_path = Path(csv_path)
    if len(columns) == 1:
        script = _LINE_TEMPLATE.format(csv_name=csv_path.name, x=columns[0], title=title or csv_path.stem)
    else:
        script = _MESH_TEMPLATE.format(csv_name=csv_path.name, y=columns[0], x=columns[1],
                                       title=title or csv_path.stem)
    script_path = csv_path.with_suffix(".plot.py")
    script_path.write_text(script, encoding="utf-8")
    return script_path
