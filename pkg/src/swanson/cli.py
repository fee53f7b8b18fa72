"""Command-line front end.

Subcommands: spectrum | wavefunction | verify | scan.  Output is CSV
(comment-prefixed metadata, header row, LF endings) or JSON (single object,
snake_case keys).  Exit codes: 0 success, 1 verification failure, 2 invalid
configuration (the violated constraint is printed to stderr).

Precedence: command-line flags > config file (flat key=value lines) >
built-in defaults.  The effective configuration is echoed into every
output file for reproducibility.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import numerics, potentials, susy, verify
from .errors import InvalidConfigError, NoBoundStateError, SwansonError
from .model import SwansonParams
from .numerics import Grid

__all__ = ["main", "build_parser", "DEFAULTS"]

DEFAULTS = {
    "model": "rosen-morse",
    "omega": 2.0,
    "alpha": 0.5,
    "a": 1.0,
    "mu": 0.8,
    "beta1": 0.5,
    "epsilon": 2.0,
    "b": 1.0,
    "delta": 1.0,
    "tau": 0.0,
    "nmax": 3,
    "grid_points": 4001,
    "xmin": None,
    "xmax": None,
    "format": "csv",
    "out": None,
    "samples": 501,
}

_FLOAT_KEYS = {"omega", "alpha", "a", "mu", "beta1", "epsilon", "b", "delta",
               "tau", "xmin", "xmax", "start", "stop"}
_INT_KEYS = {"nmax", "grid_points", "samples", "num"}


def _fmt(v) -> str:
    if isinstance(v, (bool, np.bool_)):
        return "1" if v else "0"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        return format(float(v), ".17g")
    return str(v)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--model", choices=["rosen-morse", "screened"])
    for key in ("omega", "alpha", "a", "mu", "beta1", "epsilon", "b",
                "delta", "tau"):
        common.add_argument(f"--{key}", type=float)
    common.add_argument("--nmax", type=int)
    common.add_argument("--grid-points", dest="grid_points", type=int)
    common.add_argument("--xmin", type=float)
    common.add_argument("--xmax", type=float)
    common.add_argument("--format", choices=["csv", "json"])
    common.add_argument("--out", type=str)
    common.add_argument("--config", type=str, help="flat key=value config file")

    p = argparse.ArgumentParser(
        prog="swanson",
        description="Pseudo-Hermitian quadratic model: closed-form spectra, "
                    "wavefunctions, verification, and parameter scans.",
    )
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("spectrum", parents=[common],
                   help="closed-form / recursion / numeric level table")
    wf = sub.add_parser("wavefunction", parents=[common],
                        help="sampled eigenfunction columns")
    wf.add_argument("-n", "--level", type=int, default=0)
    wf.add_argument("--samples", type=int)
    ver = sub.add_parser("verify", parents=[common],
                         help="run the identity suite, write a JSON report")
    ver.add_argument("--negative-control", action="store_true",
                     help=argparse.SUPPRESS)
    sc = sub.add_parser("scan", parents=[common],
                        help="scan one family parameter, emit level table")
    sc.add_argument("--param", required=True,
                    choices=["mu", "epsilon", "alpha", "beta1", "a", "b",
                             "delta", "tau", "omega"])
    sc.add_argument("--start", type=float, required=True)
    sc.add_argument("--stop", type=float, required=True)
    sc.add_argument("--num", type=int, default=21)
    return p


def _load_config_file(path: str) -> dict:
    out = {}
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise InvalidConfigError(f"bad config line: {line!r}")
            key, _, val = line.partition("=")
            key = key.strip().replace("-", "_")
            val = val.strip()
            if key in _FLOAT_KEYS:
                out[key] = float(val)
            elif key in _INT_KEYS:
                out[key] = int(val)
            else:
                out[key] = val
    return out


def effective_config(args: argparse.Namespace) -> dict:
    """flags > config file > defaults."""
    cfg = dict(DEFAULTS)
    if getattr(args, "config", None):
        cfg.update(_load_config_file(args.config))
    for key in cfg:
        val = getattr(args, key, None)
        if val is not None:
            cfg[key] = val
    return cfg


def _params(cfg: dict) -> SwansonParams:
    return SwansonParams(cfg["omega"], cfg["alpha"], epsilon_hint=cfg["epsilon"])


def _family(cfg: dict):
    if cfg["model"] == "rosen-morse":
        return potentials.RosenMorseConfig(cfg["a"], cfg["mu"], cfg["beta1"],
                                           cfg["epsilon"])
    return potentials.ScreenedConfig(cfg["a"], cfg["b"], cfg["delta"], cfg["tau"])


def _window(cfg: dict, fam) -> tuple:
    if cfg["xmin"] is not None and cfg["xmax"] is not None:
        return (cfg["xmin"], cfg["xmax"])
    if isinstance(fam, potentials.RosenMorseConfig):
        return potentials.rm_standard_window(fam)
    return potentials.screened_standard_window(fam)


def _meta(cfg: dict) -> dict:
    keys = ["model", "omega", "alpha", "a", "nmax", "grid_points", "format"]
    keys += (["mu", "beta1", "epsilon"] if cfg["model"] == "rosen-morse"
             else ["b", "delta", "tau"])
    return {k: cfg[k] for k in keys}


def _emit(rows, columns, meta, cfg, extra_meta=None):
    meta = dict(meta)
    if extra_meta:
        meta.update(extra_meta)
    if cfg["format"] == "csv":
        lines = [f"# {k}={_fmt(v)}" for k, v in meta.items()]
        lines.append(",".join(columns))
        for row in rows:
            lines.append(",".join(_fmt(row[c]) for c in columns))
        text = "\n".join(lines) + "\n"
    else:
        obj = {"config": {k: (None if v is None else v) for k, v in meta.items()},
               "columns": columns,
               "rows": [[row[c] for c in columns] for row in rows]}
        text = json.dumps(obj, indent=2, sort_keys=False) + "\n"
    if cfg["out"]:
        with open(cfg["out"], "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _levels(fam, params, window, n_points, nmax):
    """Shared level computation: (sp, base, si, fd_levels, reason)."""
    if isinstance(fam, potentials.RosenMorseConfig):
        sp, _ = potentials.rm_match_parameters(fam, params)
        base = potentials.rm_spectrum(fam, params, 0)
        closed = lambda n: potentials.rm_spectrum(fam, params, n)
    else:
        sp, (e0, _) = potentials.screened_match_parameters(fam, params)
        base = e0
        closed = lambda n: potentials.screened_spectrum(fam, params, n)
    grid = np.linspace(window[0], window[1], 2001)
    si = susy.spectrum_from_shape_invariance(sp, nmax, grid)
    reason = ""
    if not si:
        reason = "no bound state: ground state not normalisable at this configuration"
    elif len(si) < nmax + 1:
        reason = (f"spectrum ends at n={len(si) - 1}: "
                  "stepped parameters violate the bound-state conditions")
    fd = np.array([])
    if si:
        g = Grid(window[0], window[1], n_points)
        T = numerics.discretize_schrodinger(
            lambda x: susy.partner_potentials(sp, x)[0], g)
        fd = numerics.solve_sym_tridiag_eigs(T, len(si))
    return sp, base, si, fd, closed, reason


def cmd_spectrum(cfg: dict) -> int:
    params = _params(cfg)
    fam = _family(cfg)
    _validate(fam, params)
    window = _window(cfg, fam)
    sp, base, si, fd, closed, reason = _levels(
        fam, params, window, cfg["grid_points"], cfg["nmax"])
    rows = []
    for n in range(len(si)):
        e_closed = closed(n)
        e_si = base + si[n]
        e_num = base + fd[n]
        rows.append({
            "n": n, "E_closed": e_closed, "E_shape_invariance": e_si,
            "E_numeric": e_num, "abs_diff": abs(e_closed - e_num),
            "admissible": True,
        })
    extra = {"truncated_reason": reason} if reason else None
    _emit(rows, ["n", "E_closed", "E_shape_invariance", "E_numeric",
                 "abs_diff", "admissible"], _meta(cfg), cfg, extra)
    return 0


def cmd_wavefunction(cfg: dict, n: int) -> int:
    params = _params(cfg)
    fam = _family(cfg)
    _validate(fam, params)
    window = _window(cfg, fam)
    x = np.linspace(window[0], window[1], cfg["samples"])
    g = Grid(window[0], window[1], cfg["samples"])
    if isinstance(fam, potentials.RosenMorseConfig):
        profile = potentials.rm_profile(fam)
        sp, _ = potentials.rm_match_parameters(fam, params)
        phi_closed = potentials.rm_wavefunction(fam, params, n, x)
    else:
        profile = potentials.screened_profile(fam)
        sp, _ = potentials.screened_match_parameters(fam, params)
        if not sp.admissible():
            raise NoBoundStateError("no bound state at this configuration")
        gam = potentials.screened_gamma_candidate(fam, params)
        phi_closed = potentials.screened_wavefunction(fam, params, n, x, gam)
    phi_ladder = susy.ladder_wavefunction(sp, n, x)
    from .model import rho_map
    rho = rho_map(profile, params, x)
    norm_c = np.sqrt(numerics.eta_norm(phi_closed, profile, params, g))
    norm_l = np.sqrt(numerics.eta_norm(phi_ladder, profile, params, g))
    phi_closed = phi_closed / norm_c
    phi_ladder = phi_ladder / norm_l
    ratio = np.where(np.abs(phi_closed) > 0, phi_ladder / phi_closed, np.nan)
    density = rho * rho * phi_closed * phi_closed
    rows = [
        {"x": xv, "phi_closed": pc, "phi_ladder": pl, "ratio": r,
         "rho": rv, "eta_weighted_density": dv}
        for xv, pc, pl, r, rv, dv in zip(x, phi_closed, phi_ladder, ratio,
                                         rho, density)
    ]
    _emit(rows, ["x", "phi_closed", "phi_ladder", "ratio", "rho",
                 "eta_weighted_density"], _meta(cfg), cfg, {"n": n})
    return 0


def cmd_verify(cfg: dict, negative_control: bool = False) -> int:
    params = _params(cfg)
    fam = _family(cfg)
    _validate(fam, params)
    if isinstance(fam, potentials.RosenMorseConfig):
        rep = verify.verify_rosen_morse(fam, params, flip_rho=negative_control)
    else:
        rep = verify.verify_screened(fam, params, flip_rho=negative_control)
    text = json.dumps(rep.to_dict(), indent=2) + "\n"
    if cfg["out"]:
        with open(cfg["out"], "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if rep.passed else 1


def _validate(fam, params):
    if isinstance(fam, potentials.RosenMorseConfig):
        potentials.validate_rosen_morse(fam, params)
    else:
        potentials.validate_screened(params)


def cmd_scan(cfg: dict, param: str, start: float, stop: float, num: int) -> int:
    rows = []
    any_admissible = False
    for val in np.linspace(start, stop, num):
        sub = dict(cfg)
        sub[param] = float(val)
        params = _params(sub)
        fam = _family(sub)
        try:
            _validate(fam, params)
            if isinstance(fam, potentials.RosenMorseConfig):
                sp, _ = potentials.rm_match_parameters(fam, params)
            else:
                sp, _ = potentials.screened_match_parameters(fam, params)
            seq = susy.build_parameter_sequence(sp, sub["nmax"])
        except (InvalidConfigError, NoBoundStateError, SwansonError):
            rows.append({"param_value": float(val), "n": 0, "E_closed": np.nan,
                         "admissible": False, "margin": np.nan})
            continue
        for n in range(sub["nmax"] + 1):
            if isinstance(fam, potentials.RosenMorseConfig):
                margin = sp.wB - n * fam.mu
            else:
                margin = (seq.params[n].wA if n < len(seq.params) else np.nan)
            ok = n < len(seq.params) and seq.params[n].admissible()
            try:
                if isinstance(fam, potentials.RosenMorseConfig):
                    # ungated value: traces a level into its divergence at
                    # wB - n mu -> 0+ while the admissible flag records the
                    # bound-state window
                    e = potentials.rm_spectrum_value(fam, params, n)
                else:
                    e = potentials.screened_spectrum(fam, params, n)
            except SwansonError:
                e = np.nan
                ok = False
            if ok:
                any_admissible = True
            rows.append({"param_value": float(val), "n": n, "E_closed": e,
                         "admissible": ok, "margin": margin})
    extra = {"scan_param": param}
    if not any_admissible:
        extra["warning"] = "empty admissible region over the scanned range"
    _emit(rows, ["param_value", "n", "E_closed", "admissible", "margin"],
          _meta(cfg), cfg, extra)
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = effective_config(args)
        if args.command == "spectrum":
            return cmd_spectrum(cfg)
        if args.command == "wavefunction":
            return cmd_wavefunction(cfg, args.level)
        if args.command == "verify":
            return cmd_verify(cfg, negative_control=args.negative_control)
        if args.command == "scan":
            return cmd_scan(cfg, args.param, args.start, args.stop, args.num)
        parser.error(f"unknown command {args.command}")
    except InvalidConfigError as exc:
        print(f"invalid configuration: {exc}", file=sys.stderr)
        return 2
    except NoBoundStateError as exc:
        print(f"no such level: {exc}", file=sys.stderr)
        return 2
    except SwansonError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
