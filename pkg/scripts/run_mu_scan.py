#!/usr/bin/env python3
"""Generate the mu-scan artifact for the hyperbolic family.

Writes ``artifacts/mu_scan.csv``: closed-form levels E_n over a scan of the
well-shape parameter mu at the default configuration (omega=2, alpha=0.5,
a=1, beta1=0.5, epsilon=2).

How to read the table
---------------------
Each row is one (mu, n) pair with the closed-form level ``E_closed``, an
``admissible`` flag, and ``margin`` = wB - n*mu, the distance of level n
from its disappearance threshold.  Two qualitative features to look for:

* Level blow-up: for a fixed n, as ``margin`` approaches 0 from above the
  value E_closed diverges to -infinity (the 1/(wB - n mu)^2 term dominates);
  a level leaves the spectrum downwards, not through the continuum.  The
  closed-form expression is traced past the bound-state edge so that the
  divergence is visible; rows outside the bound window have admissible = 0.
* Level count growth: as mu decreases the ladder steps wB -> wB - mu
  shrink, so more steps fit before admissibility fails; the number of rows
  with ``admissible`` = 1 per mu value grows as mu decreases.

Usage: python3 scripts/run_mu_scan.py [output.csv]
"""

import pathlib
import sys

from swanson.cli import main

OUT = pathlib.Path(sys.argv[1]) if len(sys.argv) > 1 else (
    pathlib.Path(__file__).resolve().parent.parent / "artifacts" / "mu_scan.csv")


def run() -> int:
    OUT.parent.mkdir(parents=True, exist_ok=True)
    rc = main([
        "scan", "--param", "mu", "--start", "1.2", "--stop", "0.2",
        "--num", "21", "--nmax", "6", "--out", str(OUT),
    ])
    if rc == 0:
        print(f"wrote {OUT}")
    return rc


if __name__ == "__main__":
    raise SystemExit(run())
