"""The two exactly solvable families.

Rosen-Morse (hyperbolic): profile A = a cosh(mu x), B = -beta1 A.  The
weighted reduction produces a sech^2/tanh well whose sech^2 strength
contains the spectral parameter eps; matching it to a shape-invariant
superpotential W = wA + wB tanh(mu x) closes the problem algebraically.

Screened (exponential): profile A = a e^{-delta x + tau} - q, B = -b A,
under the parameter locks omega = eps/2 and q = a delta/(2 b).  The
superpotential is W = wA + wB E/(aE - q) with E = e^{-delta x + tau}; the
natural domain is the pole-free side x > x* of A's zero.

The closed-form spectra and wavefunctions implemented here are the
transcriptions commonly quoted for these families; every one of them is
cross-checked against the shape-invariance recursion and the
finite-difference oracle, and the verification module reports where a
transcription disagrees with the oracle.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from .errors import (
    ComplexExponentError,
    ComplexSpectrumError,
    DomainError,
    NoBoundStateError,
    SingularLevelError,
)
from .jacobi import jacobi_second_derivative, jacobi_eval, jacobi_value
from .model import OperatorProfile, SwansonParams
from .susy import (
    ROSEN_MORSE,
    SCREENED,
    SuperpotentialParams,
    build_parameter_sequence,
)

__all__ = [
    "RosenMorseConfig",
    "ScreenedConfig",
    "JacobiExponents",
    "rm_profile",
    "rm_reduced_potential",
    "rm_constant_term",
    "rm_reality_radicand",
    "validate_rosen_morse",
    "rm_match_parameters",
    "rm_exponents",
    "rm_spectrum",
    "rm_spectrum_value",
    "rm_wavefunction",
    "rm_wavefunction_with_derivatives",
    "rm_epsilon_level",
    "rm_standard_window",
    "screened_profile",
    "screened_reduced_potential",
    "validate_screened",
    "screened_match_parameters",
    "screened_spectrum",
    "screened_wavefunction",
    "screened_gamma_candidate",
    "screened_standard_window",
]

RM_INEQUALITY = "8*eps - 4*omega + a^2 mu^2 (9*omega - 4*alpha) > 0"
SCREENED_INEQUALITY = "9*omega - 4*alpha > 0"


@dataclass(frozen=True)
class RosenMorseConfig:
    """Hyperbolic family constants: A = a cosh(mu x), B = -beta1 A."""

    a: float = 1.0
    mu: float = 0.8
    beta1: float = 0.5
    epsilon: float = 2.0

    def __post_init__(self):
        if not self.a > 0:
            raise DomainError(f"a must be positive, got {self.a}")
        if not self.mu > 0:
            raise DomainError(f"mu must be positive, got {self.mu}")


@dataclass(frozen=True)
class ScreenedConfig:
    """Exponential family constants: A = a e^{-delta x + tau} - q, B = -b A."""

    a: float = 1.0
    b: float = 1.0
    delta: float = 1.0
    tau: float = 0.0

    def __post_init__(self):
        if self.b == 0.0:
            raise DomainError("b must be nonzero")
        if not self.delta > 0:
            raise DomainError(f"delta must be positive, got {self.delta}")

    @property
    def q(self) -> float:
        """Lock q = a delta / (2 b)."""
        return self.a * self.delta / (2.0 * self.b)

    @property
    def x_star(self) -> float:
        """Zero of A(x) (pole of the reduced potential)."""
        return (self.tau - np.log(self.q / self.a)) / self.delta

    def epsilon_lock(self, params: SwansonParams) -> float:
        """The family fixes the spectral parameter: eps = 2 omega."""
        return 2.0 * params.omega


@dataclass(frozen=True)
class JacobiExponents:
    """Edge exponents (r, s) and index nu of a closed-form level."""

    r: float
    s: float
    nu: float

    @property
    def admissible(self) -> bool:
        return self.r > 0 and self.s > 0


# ---------------------------------------------------------------- Rosen-Morse

def rm_profile(cfg: RosenMorseConfig) -> OperatorProfile:
    a, mu, b1 = cfg.a, cfg.mu, cfg.beta1
    return OperatorProfile(
        A=lambda x: a * np.cosh(mu * x),
        A1=lambda x: a * mu * np.sinh(mu * x),
        A2=lambda x: a * mu * mu * np.cosh(mu * x),
        B=lambda x: -b1 * a * np.cosh(mu * x),
        B1=lambda x: -b1 * a * mu * np.sinh(mu * x),
        name="rosen_morse",
        b_over_a_const=-b1,
    )


def rm_standard_window(cfg: RosenMorseConfig) -> tuple:
    """Truncation window for numerics: tails below 1e-12 of the well scale."""
    half = 20.0 / cfg.mu
    return (-half, half)


def rm_reality_radicand(cfg: RosenMorseConfig, params: SwansonParams) -> float:
    w, al = params.omega, params.alpha
    return 8.0 * cfg.epsilon - 4.0 * w + cfg.a ** 2 * cfg.mu ** 2 * (9.0 * w - 4.0 * al)


def validate_rosen_morse(cfg: RosenMorseConfig, params: SwansonParams):
    if rm_reality_radicand(cfg, params) <= 0:
        raise ComplexSpectrumError(RM_INEQUALITY)


def rm_reduced_potential(cfg: RosenMorseConfig, params: SwansonParams, x):
    """The sech^2/tanh well of the weighted reduction (family form)."""
    w, al = params.omega, params.alpha
    a, mu, b1, eps = cfg.a, cfg.mu, cfg.beta1, cfg.epsilon
    t = np.tanh(mu * np.asarray(x, dtype=float))
    cs = (w - 2.0 * eps) / (a * a * w) - (2.0 * w - al) * mu * mu / w
    return cs * (1.0 - t * t) + 2.0 * b1 * mu * t + rm_constant_term(cfg, params)


def rm_constant_term(cfg: RosenMorseConfig, params: SwansonParams) -> float:
    w, al = params.omega, params.alpha
    return (2.0 * w * (w - al) * cfg.mu ** 2 + 4.0 * al ** 2 * cfg.beta1 ** 2) / w ** 2


def rm_match_parameters(cfg: RosenMorseConfig, params: SwansonParams):
    """Match the family well to W = wA + wB tanh(mu x).

    Returns (SuperpotentialParams, E0) with E0 = -(wA^2 + wB^2).  wB solves
    the quadratic fixing the sech^2 strength; wA follows from the tanh
    strength via wA wB = beta1 mu.
    """
    validate_rosen_morse(cfg, params)
    w, al = params.omega, params.alpha
    a, mu, b1, eps = cfg.a, cfg.mu, cfg.beta1, cfg.epsilon
    cs = (w - 2.0 * eps) / (a * a * w) - (2.0 * w - al) * mu * mu / w
    rad = mu * mu / 4.0 - cs  # = (8 eps - 4 w + a^2 mu^2 (9w - 4 al)) / (4 a^2 w)
    wB = -mu / 2.0 + np.sqrt(rad)
    if wB <= 0:
        raise NoBoundStateError("matched wB <= 0: no bound state")
    wA = b1 * mu / wB
    if abs(wA) >= wB:
        raise NoBoundStateError("matched |wA| >= wB: no bound state")
    sp = SuperpotentialParams(ROSEN_MORSE, wA, wB, mu=mu)
    return sp, -(wA * wA + wB * wB)


def rm_exponents(cfg: RosenMorseConfig, params: SwansonParams, n: int) -> JacobiExponents:
    """Edge exponents of the n-th closed-form wavefunction.

    nu_n = wB/mu - n is the stepped index; the decay conditions r > 0 and
    s > 0 reproduce the shape-invariance bound |wA_n| < wB_n.
    """
    sp, _ = rm_match_parameters(cfg, params)
    nu_n = sp.wB / cfg.mu - n
    if nu_n == 0.0:
        raise SingularLevelError(f"level n={n} hits the index pole nu_n = 0")
    ratio = (cfg.beta1 / cfg.mu) / nu_n
    return JacobiExponents(r=0.5 * (nu_n - ratio), s=0.5 * (nu_n + ratio), nu=nu_n)


def rm_spectrum_value(cfg: RosenMorseConfig, params: SwansonParams, n: int) -> float:
    """Closed-form level expression without the admissibility gate.

    E_n = -(beta1 mu/(wB - n mu))^2 - (wB - n mu)^2 - 2 alpha mu^2/omega.
    Used by scans to trace a level towards its wB - n mu -> 0+ divergence;
    the admissibility of the level is reported separately.
    """
    sp, _ = rm_match_parameters(cfg, params)
    bn = sp.wB - n * cfg.mu
    if bn == 0.0:
        raise SingularLevelError(f"level n={n} hits wB - n mu = 0")
    b1mu = cfg.beta1 * cfg.mu
    return -(b1mu / bn) ** 2 - bn * bn - 2.0 * params.alpha * cfg.mu ** 2 / params.omega


def rm_spectrum(cfg: RosenMorseConfig, params: SwansonParams, n: int) -> float:
    """Closed-form level E_n; raises when level n is not a bound state."""
    if not rm_exponents(cfg, params, n).admissible:
        raise NoBoundStateError(f"level n={n} not admissible (edge exponent <= 0)")
    return rm_spectrum_value(cfg, params, n)


def rm_wavefunction(cfg: RosenMorseConfig, params: SwansonParams, n: int, x):
    """Unnormalised closed-form wavefunction of the matched well.

    Phi_n = (1 - t)^s (1 + t)^r P_n^{(2s, 2r)}(t), t = tanh(mu x), with the
    stepped exponents of :func:`rm_exponents`.  Decays at both infinities
    iff r > 0 and s > 0.
    """
    e = rm_exponents(cfg, params, n)
    if not e.admissible:
        raise NoBoundStateError(f"level n={n} not admissible")
    t = np.tanh(cfg.mu * np.asarray(x, dtype=float))
    return (1.0 - t) ** e.s * (1.0 + t) ** e.r * jacobi_value(n, 2.0 * e.s, 2.0 * e.r, t)


def rm_wavefunction_with_derivatives(cfg, params, n: int, x):
    """(Phi, Phi', Phi'') with analytic derivatives, for ODE residual tests."""
    e = rm_exponents(cfg, params, n)
    if not e.admissible:
        raise NoBoundStateError(f"level n={n} not admissible")
    mu, r, s = cfg.mu, e.r, e.s
    t = np.tanh(mu * np.asarray(x, dtype=float))
    P, dP = jacobi_eval(n, 2.0 * s, 2.0 * r, t)
    d2P = jacobi_second_derivative(n, 2.0 * s, 2.0 * r, t)
    pre = (1.0 - t) ** s * (1.0 + t) ** r
    L = -s / (1.0 - t) + r / (1.0 + t)  # (log pre)'
    L2 = s * (s - 1.0) / (1.0 - t) ** 2 - 2.0 * r * s / ((1.0 - t) * (1.0 + t)) \
        + r * (r - 1.0) / (1.0 + t) ** 2
    f = pre * P
    ft = pre * (L * P + dP)
    ftt = pre * (L2 * P + 2.0 * L * dP + d2P)
    tp = mu * (1.0 - t * t)
    tpp = -2.0 * mu * mu * t * (1.0 - t * t)
    return f, ft * tp, ftt * tp * tp + ft * tpp


def rm_epsilon_level(cfg: RosenMorseConfig, params: SwansonParams, n: int) -> float:
    """Self-consistent spectral parameter eps_n of the full reduced problem.

    The reduced equation -Phi'' + (well) Phi = 0 has its n-th
    shape-invariance eigenvalue at -(wA_n^2 + wB_n^2) + C(cfg); eps enters
    through the matched wB(eps).  The unique root with an admissible level
    is found by bracketing on wB and mapped back to eps.  The returned
    eps_n equals the n-th generalized eigenvalue of the weighted
    finite-difference problem (oracle cross-check in the verification
    suite).
    """
    w, al = params.omega, params.alpha
    a, mu, b1 = cfg.a, cfg.mu, cfg.beta1
    C = rm_constant_term(cfg, params)
    b1mu = b1 * mu

    def g_of_bn(bn):  # decreasing on bn > sqrt(|beta1| mu)
        return C - bn * bn - (b1mu / bn) ** 2 if b1mu != 0 else C - bn * bn

    lo = np.sqrt(abs(b1mu)) if b1mu != 0 else 1e-12
    lo = lo * (1.0 + 1e-12) + 1e-300
    if g_of_bn(lo) <= 0:
        raise NoBoundStateError(f"no admissible level n={n} in the reality window")
    hi = lo + 1.0
    while g_of_bn(hi) > 0:
        hi *= 2.0
    bn = brentq(g_of_bn, lo, hi, xtol=1e-14, rtol=8.9e-16)
    wB = bn + n * mu
    # invert the sech^2 matching:  wB (wB + mu) = -cs(eps)
    eps = 0.5 * (a * a * w * (wB * wB + mu * wB) - a * a * mu * mu * (2.0 * w - al) + w)
    cfg_n = RosenMorseConfig(a=a, mu=mu, beta1=b1, epsilon=eps)
    if not rm_exponents(cfg_n, params, n).admissible:
        raise NoBoundStateError(f"level n={n} root exists but is not admissible")
    return eps


# ------------------------------------------------------------------ screened

def screened_profile(cfg: ScreenedConfig) -> OperatorProfile:
    a, b, d, tau, q = cfg.a, cfg.b, cfg.delta, cfg.tau, cfg.q

    def E(x):
        return a * np.exp(-d * np.asarray(x, dtype=float) + tau)

    return OperatorProfile(
        A=lambda x: E(x) - q,
        A1=lambda x: -d * E(x),
        A2=lambda x: d * d * E(x),
        B=lambda x: -b * (E(x) - q),
        B1=lambda x: b * d * E(x),
        domain=(cfg.x_star, np.inf),
        name="screened",
        b_over_a_const=-b,
    )


def screened_standard_window(cfg: ScreenedConfig) -> tuple:
    """Pole-free window [x* + margin, x* + margin + 30/delta]."""
    lo = cfg.x_star + 0.05 / cfg.delta
    return (lo, lo + 30.0 / cfg.delta)


def validate_screened(params: SwansonParams):
    if 9.0 * params.omega - 4.0 * params.alpha <= 0:
        raise ComplexSpectrumError(SCREENED_INEQUALITY)


def screened_reduced_potential(cfg: ScreenedConfig, params: SwansonParams, x):
    """The exponential well of the weighted reduction (family form)."""
    validate_screened(params)
    w, al = params.omega, params.alpha
    a, b, d, tau, q = cfg.a, cfg.b, cfg.delta, cfg.tau, cfg.q
    E = a * np.exp(-d * np.asarray(x, dtype=float) + tau)
    den = E - q
    if np.any(den == 0.0):
        raise SingularLevelError(f"reduced potential pole at x* = {cfg.x_star}")
    u = (E / a) / den
    return (
        -2.0 * b * d
        + b * b * (w * w + 4.0 * al * al) / (w * w)
        - (a * al * d * d / w) * u
        + (2.0 * a * a * d * d - a * a * al * d * d / w) * u * u
    )


def screened_match_parameters(cfg: ScreenedConfig, params: SwansonParams):
    """Match the family well to W = wA + wB E/(aE - q).

    Returns (SuperpotentialParams, (E0, E_shift)) where E0 = -wA^2 is the
    ground-energy bookkeeping constant and E_shift = 2 b delta - b^2
    (omega^2 + 4 alpha^2)/omega^2 the additive offset of the reduced well.
    """
    validate_screened(params)
    w, al = params.omega, params.alpha
    a, b, d = cfg.a, cfg.b, cfg.delta
    root = np.sqrt(9.0 - 4.0 * al / w)
    wB = (a * d / 2.0) * (1.0 + root)
    wA = -d / 2.0 - al * d / (w * (1.0 + root))
    if wA + wB / a <= 0:
        raise NoBoundStateError("wA + wB/a <= 0: inner boundary condition fails")
    sp = SuperpotentialParams(
        SCREENED, wA, wB, a=a, delta=d, tau=cfg.tau, q=cfg.q
    )
    e_shift = 2.0 * b * d - b * b * (w * w + 4.0 * al * al) / (w * w)
    return sp, (-wA * wA, e_shift)


def screened_spectrum(cfg: ScreenedConfig, params: SwansonParams, n: int) -> float:
    """Commonly quoted closed-form level for the screened family.

    Note: the verification suite shows that the increments of this formula
    do *not* match the shape-invariance remainders; the recursion (and the
    finite-difference oracle that confirms it) is the trusted spectrum.
    The formula is kept as stated for comparison output.
    """
    validate_screened(params)
    d = cfg.delta
    w, al = params.omega, params.alpha
    root = np.sqrt(9.0 - 4.0 * al / w)
    half = n + 0.5 + 0.5 * root
    return -((d * root + (al * d / w) / half - d * half) ** 2)


def screened_gamma_candidate(cfg: ScreenedConfig, params: SwansonParams) -> float:
    """The gamma for which the closed-form inner-edge exponent reproduces
    the ladder ground state: sqrt(q^2 - 4 gamma) = 2 wB/delta - q."""
    sp, _ = screened_match_parameters(cfg, params)
    return (cfg.q ** 2 - (2.0 * sp.wB / cfg.delta - cfg.q) ** 2) / 4.0


def screened_wavefunction(cfg, params, n: int, x, gamma: float, power=None):
    """Closed-form screened wavefunction with caller-supplied gamma.

    Phi_n = s^power (q - a s)^m P_n^{(2m - 1, 2 power)}((2 a s - q)/q),
    with s = e^{-delta x + tau} and m = (q + sqrt(q^2 - 4 gamma))/(2a).

    ``power`` defaults to wA_n/delta and the Jacobi parameters/argument are
    as validated pointwise against the operator-ladder oracle for all bound
    levels (the commonly quoted transcription swaps the two Jacobi
    parameters and leaves the argument unscaled; the forms coincide only
    for n = 0 or a = q = 1 -- see the verification variant reports).
    """
    rad = cfg.q ** 2 - 4.0 * gamma
    if rad < 0:
        raise ComplexExponentError(f"q^2 - 4*gamma = {rad} < 0")
    if power is None:
        sp, _ = screened_match_parameters(cfg, params)
        seq = build_parameter_sequence(sp, n)
        if n >= len(seq.params):
            raise NoBoundStateError(f"level n={n} beyond the bound spectrum")
        power = seq.params[n].wA / cfg.delta
    s = np.exp(-cfg.delta * np.asarray(x, dtype=float) + cfg.tau)
    base = cfg.q - cfg.a * s
    if np.any(base <= 0.0):
        raise DomainError("evaluation point on the wrong side of the pole x*")
    m = (cfg.q + np.sqrt(rad)) / (2.0 * cfg.a)
    z = (2.0 * cfg.a * s - cfg.q) / cfg.q
    return s ** power * base ** m * jacobi_value(n, 2.0 * m - 1.0, 2.0 * power, z)
