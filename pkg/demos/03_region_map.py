"""ASCII map of the equilibrium regions over the (h, lambda) plane.

Rows sweep the sophisticated share lambda, columns sweep precision h.  The
pooled-price regions R1..R4 tile the plane in order along every h-scan; at
v_B above the existence threshold a hole opens up where no pure pooling
survives (shown as '!', or 'x' where the naive-market mixed equilibrium
patches it).
"""

import argparse

import numpy as np

from splab import ModelParams, classify_equilibrium

GLYPH = {"R1": "1", "R2": "2", "R3": "3", "R4": "4", "mixed": "x", "none": "!"}


def render(v_B: float, n: int) -> None:
    hs = np.linspace(0.5, 1.0, n)
    lams = np.linspace(0.0, 1.0, n)
    print(f"v_B = {v_B}   (columns: h = 0.5 .. 1.0, rows: lambda = 1.0 .. 0.0)")
    for lam in reversed(lams):
        cells = []
        for h in hs:
            label, _ = classify_equilibrium(ModelParams(h=float(h), lam=float(lam), v_B=v_B))
            cells.append(GLYPH.get(label, "?"))
        print(f"  lam={lam:4.2f} |{''.join(cells)}|")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--vb", type=float, default=0.1)
    ap.add_argument("--n", type=int, default=41)
    args = ap.parse_args()
    render(args.vb, args.n)
    print()
    print("try --vb 0.22 to see the mixed band (x) appear along the lambda=0 edge")
