#!/usr/bin/env python3
"""Run the full identity-verification suite on the documented configurations.

Covers the default hyperbolic (Rosen-Morse) configuration and three screened
configurations: the default (valid but bound-state-free), alpha = -12 (one
bound level), and alpha = -100 (two bound levels).  Prints one line per
check and exits non-zero if any gating check fails.
"""

import sys

from swanson.model import SwansonParams
from swanson.potentials import RosenMorseConfig, ScreenedConfig
from swanson.verify import verify_rosen_morse, verify_screened


def show(rep) -> bool:
    print(f"== {rep.model}  config={rep.config}")
    for c in rep.checks:
        flag = "PASS" if c.passed else ("fail" if not c.gating else "FAIL")
        order = f"  order={c.order:.3f}" if c.order is not None else ""
        print(f"  [{flag}] {c.name}: residual={c.residual:.3e} "
              f"tol={c.tolerance:.1e}{order}  {c.detail}")
    print(f"  => overall: {'PASS' if rep.passed else 'FAIL'}")
    return rep.passed


def run() -> int:
    ok = True
    ok &= show(verify_rosen_morse(RosenMorseConfig(), SwansonParams(2.0, 0.5)))
    for alpha in (0.5, -12.0, -100.0):
        ok &= show(verify_screened(ScreenedConfig(), SwansonParams(2.0, alpha)))
    return 0 if ok else 1


if __name__ == "__main__":
    raise SystemExit(run())
