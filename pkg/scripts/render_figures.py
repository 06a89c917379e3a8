#!/usr/bin/env python3
"""Render example figures: the equilateral reference triangle and a scalene
one with B < C, both with their internal bisectors."""

import argparse
from pathlib import Path

from hyptri import (
    TriangleAngles,
    TriangleSides,
    bisector_lengths,
    render_svg,
    solve_from_angles,
    solve_from_sss,
)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--outdir", default="figures")
    args = parser.parse_args()
    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)

    equilateral = solve_from_sss(TriangleSides(1.0, 1.0, 1.0))
    render_svg(equilateral, bisector_lengths(equilateral), outdir / "equilateral.svg")

    scalene = solve_from_angles(TriangleAngles(0.6, 0.5, 0.9))
    render_svg(scalene, bisector_lengths(scalene), outdir / "scalene.svg")

    for name in ("equilateral.svg", "scalene.svg"):
        print(outdir / name)


if __name__ == "__main__":
    main()
