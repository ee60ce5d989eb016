#!/usr/bin/env python3
"""Time the desk-scale workloads: the supersampled disc render and the big Dini mesh."""

import math
import sys
import tempfile
import time
from pathlib import Path

from hyperphase.colorings import ColorSpec, Coloring
from hyperphase.cplx import Mobius
from hyperphase.mesh import Dini, colorize, tessellate, write_ply
from hyperphase.motions import get_preset
from hyperphase.raster import DiscDomain, render


def main() -> int:
    t0 = time.perf_counter()
    render(ColorSpec(Coloring.DISC_ASYMPTOTIC, Mobius.identity()), DiscDomain(512), 2)
    print(f"512x512 disc render, supersample 2: {time.perf_counter() - t0:.2f} s (budget 5 s)")

    preset = get_preset("fig16-dini-rotation")
    t0 = time.perf_counter()
    grid = tessellate(Dini(0.15), (0.0, 7 * math.pi), (0.0, 3.0), 1024, 256)
    colored = colorize(grid, ColorSpec(Coloring.PSEUDO, preset.expected), Dini(0.15))
    with tempfile.TemporaryDirectory() as d:
        path = Path(d) / "fig16.ply"
        write_ply(colored, path)
        size = path.stat().st_size / 1e6
    print(f"fig16 mesh 1024x256 + PLY: {time.perf_counter() - t0:.2f} s, {size:.1f} MB (budgets 10 s, 50 MB)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
