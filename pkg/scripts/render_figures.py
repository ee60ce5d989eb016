#!/usr/bin/env python3
"""Render the whole figure catalog into an output directory.

Example:
    python scripts/render_figures.py --outdir out --res 512
"""

import argparse
import sys
import time
from pathlib import Path

from hyperphase.figures import FIGURES
from hyperphase.mesh import write_ply
from hyperphase.raster import write_ppm


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--outdir", default="out")
    ap.add_argument("--res", type=int, default=None, help="image resolution / mesh nu override")
    ap.add_argument("--supersample", type=int, default=None)
    ap.add_argument("--only", nargs="*", default=None, help="subset of figure names")
    args = ap.parse_args()

    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    names = args.only or sorted(FIGURES, key=lambda n: (len(n), n))
    for name in names:
        scene = FIGURES[name]
        start = time.perf_counter()
        obj = scene(args.res, args.supersample)
        if scene.kind == "image":
            path = outdir / f"{name}.ppm"
            write_ppm(obj, path)
        else:
            path = outdir / f"{name}.ply"
            write_ply(obj, path)
        print(f"{name:<16} {time.perf_counter() - start:6.2f} s  {path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
