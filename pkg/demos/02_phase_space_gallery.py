#!/usr/bin/env python3
"""Emit the phase-space data behind the cat-formation story as CSV files.

Writes quadrature densities P(x) and Husimi grids Q(a) for a gallery of
evolution times into demos/output/.  The files are plain CSV ("x,density"
and "re,im,q" with a JSON sidecar), ready for any plotting tool, e.g.

    import pandas as pd
    df = pd.read_csv("demos/output/q_k2_1_3.csv")
    df.pivot(index="re", columns="im", values="q")
"""

import os

from kerrcat import (
    HamiltonianSpec,
    QuadratureSpec,
    RationalPhaseTime,
    choose_truncation,
    evolve,
    make_coherent,
    p_x_curve,
    q_function,
)

ALPHA = 3.0
OUT_DIR = os.path.join(os.path.dirname(__file__), "output")

GALLERY = [
    (2, (0, 1)), (2, (1, 6)), (2, (1, 4)), (2, (1, 3)),
    (2, (1, 2)), (2, (2, 3)), (2, (1, 1)),
    (4, (1, 4)), (4, (1, 2)), (4, (3, 4)),
]


def main():
    os.makedirs(OUT_DIR, exist_ok=True)
    policy = choose_truncation(ALPHA)
    base = make_coherent(ALPHA, policy)

    for k, (p, q) in GALLERY:
        state = evolve(base, HamiltonianSpec(k=k), RationalPhaseTime(p, q))
        tag = f"k{k}_{p}_{q}"

        curve = p_x_curve(state, QuadratureSpec(), (-13.0, 13.0), 1301)
        with open(os.path.join(OUT_DIR, f"px_{tag}.csv"), "w") as handle:
            handle.write(curve.to_csv())

        grid = q_function(state, (-8.0, 8.0), (-8.0, 8.0), 161)
        with open(os.path.join(OUT_DIR, f"q_{tag}.csv"), "w") as handle:
            handle.write(grid.to_csv())
        with open(os.path.join(OUT_DIR, f"q_{tag}.csv.json"), "w") as handle:
            handle.write(grid.sidecar_json() + "\n")

        print(
            f"k={k} t={p}/{q}: P(x) integral {curve.integral:.10f}, "
            f"Q cell-sum {grid.integral():.8f}, max Q {grid.values.max():.6f}"
        )

    print(f"\nwrote {3 * len(GALLERY)} files to {OUT_DIR}")


if __name__ == "__main__":
    main()
