"""Shape-invariance machinery.

A superpotential W(x) defines partner potentials V_-/V_+ = W^2 -/+ W'.
When the partners satisfy V_+(x; a0) = V_-(x; a1) + R(a1) with an
x-independent remainder R, the spectrum of V_- is the cumulative sum of
remainders and the n-th eigenfunction follows from the operator ladder
Prod_k (-d/dx + W(x; a_k)) applied to the ground state of the n-times
stepped potential.  Two families are supported:

* ``rosen_morse``:  W = wA + wB tanh(mu x)
* ``screened``:     W = wA + wB E/(aE - q)  with  E = exp(-delta x + tau)

The ladder wavefunctions are built with exact polynomial algebra (in
t = tanh(mu x), respectively in E) and serve as the independent oracle for
the closed-form eigenfunctions of the potentials module.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np
from numpy.polynomial import Polynomial
from scipy.optimize import brentq

from .errors import (
    NoBoundStateError,
    NotShapeInvariantError,
    SingularityError,
)

__all__ = [
    "SuperpotentialParams",
    "ParameterSequence",
    "superpotential_eval",
    "partner_potentials",
    "parameter_step",
    "shape_invariance_remainder",
    "spectrum_from_shape_invariance",
    "build_parameter_sequence",
    "ladder_wavefunction",
    "default_grid",
]

TOL_REMAINDER = 1e-9

ROSEN_MORSE = "rosen_morse"
SCREENED = "screened"


@dataclass(frozen=True)
class SuperpotentialParams:
    """Superpotential constants wA, wB plus family shape constants.

    Rosen-Morse needs ``mu``; screened needs ``a``, ``delta``, ``tau``, ``q``.
    Construction is permissive (stepped parameter sets may describe partners
    without bound states); :meth:`admissible` tells whether the ground state
    of V_- is normalisable.
    """

    family: str
    wA: float
    wB: float
    mu: Optional[float] = None
    a: Optional[float] = None
    delta: Optional[float] = None
    tau: Optional[float] = None
    q: Optional[float] = None

    def __post_init__(self):
        if self.family == ROSEN_MORSE:
            if self.mu is None or not self.mu > 0:
                raise ValueError("rosen_morse requires mu > 0")
        elif self.family == SCREENED:
            if None in (self.a, self.delta, self.tau, self.q):
                raise ValueError("screened requires a, delta, tau, q")
            if not self.delta > 0:
                raise ValueError("screened requires delta > 0")
        else:
            raise ValueError(f"unknown family {self.family!r}")

    def admissible(self) -> bool:
        """Normalisability of exp(-int W): decay at both ends of the domain."""
        if self.family == ROSEN_MORSE:
            return self.wB > 0 and abs(self.wA) < self.wB
        # screened, domain (x*, +inf):  exp(-wA x) at +inf needs wA > 0;
        # the inner-endpoint power (q - aE)^{wB/(delta a)} needs wA + wB/a > 0.
        return self.wA > 0 and self.wA + self.wB / self.a > 0

    def pole(self) -> Optional[float]:
        """Location x* where aE - q = 0 (screened), else None."""
        if self.family == SCREENED and self.q / self.a > 0:
            return (self.tau - np.log(self.q / self.a)) / self.delta
        return None


@dataclass(frozen=True)
class ParameterSequence:
    """Stepped parameter sets a_0..a_n and remainders R(a_1)..R(a_n)."""

    params: tuple
    remainders: tuple = field(default_factory=tuple)


def default_grid(sp: SuperpotentialParams, n_points: int = 2001) -> np.ndarray:
    """Standard evaluation grid for a family (used by searches and tests)."""
    if sp.family == ROSEN_MORSE:
        half = 20.0 / sp.mu
        return np.linspace(-half, half, n_points)
    xstar = sp.pole()
    lo = (xstar if xstar is not None else 0.0) + 0.05 / sp.delta
    return np.linspace(lo, lo + 30.0 / sp.delta, n_points)


def _screened_u(sp: SuperpotentialParams, x):
    E = np.exp(-sp.delta * np.asarray(x, dtype=float) + sp.tau)
    den = sp.a * E - sp.q
    if np.any(den == 0.0):
        raise SingularityError(
            "superpotential pole a*exp(-delta x + tau) = q inside range",
            location=sp.pole(),
        )
    return E / den


def superpotential_eval(sp: SuperpotentialParams, x):
    """Return (W(x), W'(x)) with analytic derivative; vectorised over x."""
    if sp.family == ROSEN_MORSE:
        t = np.tanh(sp.mu * np.asarray(x, dtype=float))
        return sp.wA + sp.wB * t, sp.wB * sp.mu * (1.0 - t * t)
    u = _screened_u(sp, x)
    # u' = delta (a u^2 - u)
    return sp.wA + sp.wB * u, sp.wB * sp.delta * (sp.a * u * u - u)


def partner_potentials(sp: SuperpotentialParams, x):
    """Return (V_minus, V_plus) from the family closed forms.

    These are the expanded forms (sech^2/tanh for Rosen-Morse, a quadratic
    in u for screened); the factorisation identity V_-/+ = W^2 -/+ W' is a
    *test* of them, not their definition.
    """
    if sp.family == ROSEN_MORSE:
        t = np.tanh(sp.mu * np.asarray(x, dtype=float))
        sech2 = 1.0 - t * t
        const = sp.wA * sp.wA + sp.wB * sp.wB
        cross = 2.0 * sp.wA * sp.wB * t
        vm = const + cross - sp.wB * (sp.wB + sp.mu) * sech2
        vp = const + cross - sp.wB * (sp.wB - sp.mu) * sech2
        return vm, vp
    u = _screened_u(sp, x)
    wA, wB, a, d = sp.wA, sp.wB, sp.a, sp.delta
    vm = wA * wA + (2.0 * wA * wB + wB * d) * u + (wB * wB - a * wB * d) * u * u
    vp = wA * wA + (2.0 * wA * wB - wB * d) * u + (wB * wB + a * wB * d) * u * u
    return vm, vp


def _screened_step_search(sp: SuperpotentialParams, grid: np.ndarray):
    """Find the stepped screened parameters by remainder-constancy search.

    Candidates are (wA - c*delta, wB + a*delta) with c scanned; the signed
    non-constancy of V_+(a0) - V_-(a1(c)) between two grid points is linear
    in c and is driven to zero by bracketing.
    """
    wB1 = sp.wB + sp.a * sp.delta
    xa, xb = grid[len(grid) // 4], grid[3 * len(grid) // 4]

    def signed_dev(c):
        sp1 = SuperpotentialParams(
            SCREENED, sp.wA - c * sp.delta, wB1,
            a=sp.a, delta=sp.delta, tau=sp.tau, q=sp.q,
        )
        _, vpa = partner_potentials(sp, xa)
        _, vpb = partner_potentials(sp, xb)
        vma, _ = partner_potentials(sp1, xa)
        vmb, _ = partner_potentials(sp1, xb)
        return (vpa - vma) - (vpb - vmb)

    scale = 1.0 + abs(sp.wA) / sp.delta + abs(sp.wB) / sp.delta
    lo, hi = -50.0 * scale, 50.0 * scale
    if signed_dev(lo) * signed_dev(hi) > 0:
        raise NotShapeInvariantError(abs(signed_dev(0.0)), TOL_REMAINDER)
    c = brentq(signed_dev, lo, hi, xtol=1e-14, rtol=1e-15)
    return SuperpotentialParams(
        SCREENED, sp.wA - c * sp.delta, wB1,
        a=sp.a, delta=sp.delta, tau=sp.tau, q=sp.q,
    )


def parameter_step(sp: SuperpotentialParams, grid: Optional[np.ndarray] = None):
    """Stepped parameter set a_{k+1} making V_+(a_k) = V_-(a_{k+1}) + const.

    Rosen-Morse: (wA, wB) -> (wA wB / (wB - mu), wB - mu), preserving the
    product wA*wB.  Screened: found by the remainder-constancy search and
    certified by :func:`shape_invariance_remainder`.
    """
    if grid is None:
        grid = default_grid(sp)
    if sp.family == ROSEN_MORSE:
        wB1 = sp.wB - sp.mu
        if wB1 == 0.0:
            raise NoBoundStateError("stepped wB hits zero")
        sp1 = SuperpotentialParams(ROSEN_MORSE, sp.wA * sp.wB / wB1, wB1, mu=sp.mu)
    else:
        sp1 = _screened_step_search(sp, grid)
    shape_invariance_remainder(sp, sp1, grid)  # certify, raises if wrong
    return sp1


def shape_invariance_remainder(sp0, sp1, grid, tol: float = TOL_REMAINDER) -> float:
    """Mean of V_+(x; a0) - V_-(x; a1); raises if not constant within tol."""
    _, vp = partner_potentials(sp0, grid)
    vm, _ = partner_potentials(sp1, grid)
    d = vp - vm
    mean = float(np.mean(d))
    dev = float(np.max(np.abs(d - mean)))
    if dev >= tol:
        raise NotShapeInvariantError(dev, tol)
    return mean


def build_parameter_sequence(sp0, nmax: int, grid=None) -> ParameterSequence:
    """Step as far as bound states persist, up to a_nmax."""
    if grid is None:
        grid = default_grid(sp0)
    params = [sp0]
    remainders = []
    sp = sp0
    for _ in range(nmax):
        try:
            sp_next = parameter_step(sp, grid)
        except (NoBoundStateError, NotShapeInvariantError):
            break
        if not sp_next.admissible():
            break
        remainders.append(shape_invariance_remainder(sp, sp_next, grid))
        params.append(sp_next)
        sp = sp_next
    return ParameterSequence(tuple(params), tuple(remainders))


def spectrum_from_shape_invariance(sp0, nmax: int, grid=None):
    """[E_0, ..] with E_0 = 0 and E_n = sum of the first n remainders.

    The list is truncated at the end of the bound spectrum and is empty when
    even the ground state is not admissible.
    """
    if not sp0.admissible():
        return []
    seq = build_parameter_sequence(sp0, nmax, grid)
    return [0.0] + list(np.cumsum(seq.remainders))


def _rm_ladder(seq: ParameterSequence, n: int, x):
    sp_n = seq.params[n]
    mu = sp_n.mu
    sigma = 0.5 * (sp_n.wB + sp_n.wA) / mu
    rho = 0.5 * (sp_n.wB - sp_n.wA) / mu
    Q = Polynomial([1.0])
    for k in range(n - 1, -1, -1):
        sp_k = seq.params[k]
        lin = Polynomial(
            [sp_k.wA + mu * (sigma - rho), sp_k.wB + mu * (sigma + rho)]
        )
        Q = lin * Q - mu * Polynomial([1.0, 0.0, -1.0]) * Q.deriv()
    t = np.tanh(mu * np.asarray(x, dtype=float))
    return (1.0 - t) ** sigma * (1.0 + t) ** rho * Q(t)


def _screened_ladder(seq: ParameterSequence, n: int, x):
    sp_n = seq.params[n]
    d, a, q = sp_n.delta, sp_n.a, sp_n.q
    p = sp_n.wA / d
    m = sp_n.wB / (d * a)
    R = Polynomial([1.0])
    G = Polynomial([q, -a])  # q - a E, positive on the domain
    Epoly = Polynomial([0.0, 1.0])
    for k in range(n - 1, -1, -1):
        sp_k = seq.params[k]
        R = (
            (d * p + sp_k.wA) * G * R
            - (sp_k.wB + d * m * a) * Epoly * R
            + d * Epoly * G * R.deriv()
        )
        m -= 1.0
    E = np.exp(-d * np.asarray(x, dtype=float) + sp_n.tau)
    base = q - a * E
    if np.any(base <= 0.0):
        raise SingularityError("evaluation point on the wrong side of the pole")
    return E ** p * base ** m * R(E)


def ladder_wavefunction(seq, n: int, x):
    """Unnormalised n-th eigenfunction of V_-(x; a_0) by the operator ladder.

    ``seq`` may be a ParameterSequence (must reach a_n) or a single
    SuperpotentialParams, in which case the sequence is built on the fly.
    """
    if isinstance(seq, SuperpotentialParams):
        seq = build_parameter_sequence(seq, n)
    if n >= len(seq.params):
        raise NoBoundStateError(
            f"level n={n} beyond the bound spectrum (have {len(seq.params)} sets)"
        )
    if seq.params[0].family == ROSEN_MORSE:
        return _rm_ladder(seq, n, x)
    return _screened_ladder(seq, n, x)
