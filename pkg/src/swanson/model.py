"""Model core: the non-Hermitian quadratic Hamiltonian and its reductions.

The model is H = omega (b† b + 1/2) + alpha (b^2 - (b†)^2) with
b = A(x) d/dx + B(x) for real profile functions A, B.  Expanding the
operator products gives a variable-coefficient second-order operator
(:func:`hamiltonian_coeffs`).  The similarity map

    rho(x) = exp( -(2 alpha / omega) \\int B/A dx )

conjugates H to a Hermitian operator h = rho H rho^{-1}
(:func:`rho_map`, :func:`u_eff`).  Two further changes of variable bring h
to Schroedinger form and are used as mutually independent reduction routes:

* the weighted route, Phi = A xi, giving
  -Phi'' + u_bar_eff(x) Phi = (eps / (omega A^2)) Phi; and
* the chi route, chi = xi sqrt(A), followed by y = \\int dx/A, giving a
  constant-weight problem with potential chi_potential(x)/omega in the
  y coordinate.

All coefficient formulas below are derived mechanically from the operator
expansion (verified against a symbolic-differentiation oracle); see the
verification module for the deviation reports on commonly quoted variant
transcriptions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np
from scipy.integrate import quad

from .errors import DomainError, SingularityError

__all__ = [
    "SwansonParams",
    "OperatorProfile",
    "CoefficientTriple",
    "hamiltonian_coeffs",
    "rho_map",
    "log_rho_map",
    "u_eff",
    "u_bar_eff",
    "chi_potential",
    "y_of_x",
]

_QUAD_TOL = 1e-12


@dataclass(frozen=True)
class SwansonParams:
    """Model constants: energy scale omega > 0 and non-Hermiticity strength alpha."""

    omega: float
    alpha: float
    epsilon_hint: Optional[float] = None

    def __post_init__(self):
        if not self.omega > 0:
            raise DomainError(f"omega must be positive, got {self.omega}")


@dataclass(frozen=True)
class OperatorProfile:
    """Profile functions realising b = A(x) d/dx + B(x).

    A1, A2, B1 are analytic derivatives supplied by the family constructor
    (numerical differentiation would pollute convergence-order tests).
    ``b_over_a_const`` may be set when B = c*A identically; rho and related
    integrals then use the exact closed form instead of quadrature.
    """

    A: Callable
    A1: Callable
    A2: Callable
    B: Callable
    B1: Callable
    domain: tuple = (-np.inf, np.inf)
    name: str = ""
    b_over_a_const: Optional[float] = None

    def check_in_domain(self, x):
        lo, hi = self.domain
        x = np.asarray(x, dtype=float)
        if np.any(x <= lo) or np.any(x >= hi):
            raise DomainError(
                f"x outside open domain ({lo}, {hi}) of profile {self.name!r}"
            )


@dataclass(frozen=True)
class CoefficientTriple:
    """Coefficients of the operator c2 d^2/dx^2 + c1 d/dx + c0."""

    c2: float
    c1: float
    c0: float


def hamiltonian_coeffs(profile: OperatorProfile, params: SwansonParams, x):
    """Operator coefficients of H at x (scalar -> CoefficientTriple, array -> arrays)."""
    profile.check_in_domain(x)
    w, al = params.omega, params.alpha
    A, A1, A2 = profile.A(x), profile.A1(x), profile.A2(x)
    B, B1 = profile.B(x), profile.B1(x)
    c2 = -w * A * A
    c1 = 4.0 * al * A * B - 2.0 * w * A * A1
    c0 = (
        -(w - 2.0 * al) * (A * B1 + A1 * B)
        + w * B * B
        - al * (A * A2 + A1 * A1)
        + w / 2.0
    )
    if np.isscalar(x) or np.asarray(x).ndim == 0:
        return CoefficientTriple(float(c2), float(c1), float(c0))
    return c2, c1, c0


def log_rho_map(profile: OperatorProfile, params: SwansonParams, x, x0: float = 0.0):
    """log rho(x) = -(2 alpha / omega) \\int_{x0}^{x} B/A; vectorised over x."""
    pref = -2.0 * params.alpha / params.omega
    if profile.b_over_a_const is not None:
        return pref * profile.b_over_a_const * (np.asarray(x, dtype=float) - x0)
    if params.alpha == 0.0:
        return np.zeros_like(np.asarray(x, dtype=float))

    def integrand(t):
        a = profile.A(t)
        if a == 0.0:
            raise SingularityError("A vanishes inside the rho integral", location=t)
        return profile.B(t) / a

    def one(xv):
        val, _ = quad(integrand, x0, xv, epsabs=_QUAD_TOL, limit=200)
        return pref * val

    xs = np.asarray(x, dtype=float)
    if xs.ndim == 0:
        return one(float(xs))
    return np.array([one(v) for v in xs])


def rho_map(profile: OperatorProfile, params: SwansonParams, x, x0: float = 0.0):
    """The positive similarity map rho(x) with rho(x0) = 1."""
    profile.check_in_domain(x)
    return np.exp(log_rho_map(profile, params, x, x0))


def u_eff(profile: OperatorProfile, params: SwansonParams, x):
    """Potential-like term of the Hermitian equivalent h = rho H rho^{-1}."""
    profile.check_in_domain(x)
    w, al = params.omega, params.alpha
    A, A1, A2 = profile.A(x), profile.A1(x), profile.A2(x)
    B, B1 = profile.B(x), profile.B1(x)
    return (
        w / 2.0
        - w * (A1 * B + A * B1)
        - al * (A1 * A1 + A * A2)
        + (w + 4.0 * al * al / w) * B * B
    )


def u_bar_eff(profile: OperatorProfile, params: SwansonParams, x):
    """Potential of the weighted Schroedinger form (Phi = A xi route).

    -Phi'' + u_bar_eff Phi = (eps / (omega A^2)) Phi, with
    u_bar_eff = A''/A + u_eff / (omega A^2).
    """
    profile.check_in_domain(x)
    A = profile.A(x)
    if np.any(np.asarray(A) == 0.0):
        raise SingularityError("A vanishes; u_bar_eff undefined")
    return profile.A2(x) / A + u_eff(profile, params, x) / (params.omega * A * A)


def chi_potential(profile: OperatorProfile, params: SwansonParams, x):
    """Bracket potential of the chi route (chi = xi sqrt(A)).

    In the stretched coordinate y = \\int dx/A the eigenproblem reads
    -chi_yy + (chi_potential/omega) chi = (eps/omega) chi with unit weight.
    """
    profile.check_in_domain(x)
    w, al = params.omega, params.alpha
    A, A1, A2 = profile.A(x), profile.A1(x), profile.A2(x)
    B, B1 = profile.B(x), profile.B1(x)
    return (
        w / 2.0
        - w * (A1 * B + A * B1)
        + (w + 4.0 * al * al / w) * B * B
        + (w / 4.0 - al) * A1 * A1
        + (w / 2.0 - al) * A * A2
    )


def y_of_x(profile: OperatorProfile, x, x0: float = 0.0):
    """Stretched coordinate y(x) = \\int_{x0}^{x} dt/A(t), strictly monotone."""
    profile.check_in_domain(x)

    def integrand(t):
        a = profile.A(t)
        if a == 0.0:
            raise SingularityError("A changes sign inside the y integral", location=t)
        return 1.0 / a

    def one(xv):
        val, _ = quad(integrand, x0, xv, epsabs=_QUAD_TOL, limit=200)
        return val

    xs = np.asarray(x, dtype=float)
    if xs.ndim == 0:
        return one(float(xs))
    return np.array([one(v) for v in xs])
