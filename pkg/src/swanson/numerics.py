"""Finite-difference oracle.

Uniform grids with Dirichlet truncation, symmetric tridiagonal assembly of
Schroedinger operators, a flux-form assembly of the full non-Hermitian
operator, eigensolvers (including a pencil-inertia bisection for the
weighted problem), similarity-conjugation residuals, weighted quadrature,
and convergence-order estimation.  Everything here is independent of the
closed forms it is used to check.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .errors import DomainError, SingularityError
from .model import OperatorProfile, SwansonParams, hamiltonian_coeffs, log_rho_map

__all__ = [
    "Grid",
    "TridiagonalSymmetric",
    "BandedOperator",
    "discretize_schrodinger",
    "solve_sym_tridiag_eigs",
    "generalized_eigenvalues",
    "build_H_matrix",
    "pseudo_hermiticity_residual",
    "eta_norm",
    "convergence_order",
    "richardson",
]


@dataclass(frozen=True)
class Grid:
    """Uniform grid with Dirichlet endpoints; eigenvectors live on the interior."""

    xmin: float
    xmax: float
    n_points: int

    def __post_init__(self):
        if not self.xmin < self.xmax:
            raise DomainError("xmin must be < xmax")
        if self.n_points < 3:
            raise DomainError("n_points must be >= 3")

    @property
    def dx(self) -> float:
        return (self.xmax - self.xmin) / (self.n_points - 1)

    def nodes(self) -> np.ndarray:
        return np.linspace(self.xmin, self.xmax, self.n_points)

    def interior(self) -> np.ndarray:
        return self.nodes()[1:-1]

    def refined(self) -> "Grid":
        """Same window, halved spacing."""
        return Grid(self.xmin, self.xmax, 2 * self.n_points - 1)


@dataclass(frozen=True)
class TridiagonalSymmetric:
    diag: np.ndarray
    off: np.ndarray

    def __post_init__(self):
        if len(self.off) != len(self.diag) - 1:
            raise ValueError("off-diagonal length must be len(diag) - 1")


@dataclass(frozen=True)
class BandedOperator:
    """Bandwidth-3 operator rows (sub, main, sup); generally non-symmetric."""

    sub: np.ndarray
    main: np.ndarray
    sup: np.ndarray

    def asymmetry(self) -> float:
        """max |M - M^T| over entries."""
        return float(np.max(np.abs(self.sup[:-1] - self.sub[1:])))

    def to_dense(self) -> np.ndarray:
        n = len(self.main)
        M = np.diag(self.main)
        M += np.diag(self.sup[:-1], 1)
        M += np.diag(self.sub[1:], -1)
        return M


def discretize_schrodinger(V, grid: Grid) -> TridiagonalSymmetric:
    """Central-difference -d^2/dx^2 + V(x) with Dirichlet truncation."""
    xi = grid.interior()
    v = V(xi) if callable(V) else np.asarray(V, dtype=float)
    if len(v) != len(xi):
        raise ValueError("potential samples must match interior size")
    bad = np.flatnonzero(~np.isfinite(v))
    if bad.size:
        raise SingularityError(
            f"non-finite potential at node {bad[0] + 1} (x = {xi[bad[0]]})",
            location=float(xi[bad[0]]),
        )
    h2 = grid.dx ** 2
    return TridiagonalSymmetric(
        diag=2.0 / h2 + v, off=np.full(len(xi) - 1, -1.0 / h2)
    )


def solve_sym_tridiag_eigs(T: TridiagonalSymmetric, k: int) -> np.ndarray:
    """k lowest eigenvalues (LAPACK bisection on the Sturm sequence)."""
    n = len(T.diag)
    if not 1 <= k <= n:
        raise ValueError(f"k must be in [1, {n}]")
    vals = eigh_tridiagonal(
        T.diag, T.off, select="i", select_range=(0, k - 1), eigvals_only=True
    )
    return np.asarray(vals)


def _count_below(T: TridiagonalSymmetric, w: np.ndarray, sigma: float) -> int:
    """Inertia count of K - sigma*diag(w) via the LDL^T sign recurrence."""
    d = T.diag - sigma * w
    e = T.off
    cnt = 0
    t = d[0]
    if t < 0:
        cnt += 1
    for i in range(1, len(d)):
        if t == 0.0:
            t = 1e-300
        t = d[i] - e[i - 1] * e[i - 1] / t
        if t < 0:
            cnt += 1
    return cnt


def generalized_eigenvalues(T: TridiagonalSymmetric, w, k: int) -> np.ndarray:
    """k lowest eigenvalues of K Phi = lam diag(w) Phi for positive weight w.

    Solved by bisection on the pencil inertia: the number of negative
    eigenvalues of K - sigma diag(w) counts pencil eigenvalues below sigma
    exactly (the weight is positive definite).  This avoids the
    symmetric-definite reduction D^{-1/2} K D^{-1/2}, which is numerically
    catastrophic when the weight decays exponentially across the window.
    """
    w = np.asarray(w, dtype=float)
    if np.any(w <= 0):
        raise DomainError("weight must be strictly positive")
    if len(w) != len(T.diag):
        raise ValueError("weight length must match diagonal length")
    out = []
    for n in range(k):
        lo, hi = -1.0, 1.0
        while _count_below(T, w, hi) <= n:
            hi *= 2.0
            if hi > 1e18:
                raise SingularityError("pencil bisection failed to bracket above")
        while _count_below(T, w, lo) > n:
            lo *= 2.0
            if lo < -1e18:
                raise SingularityError("pencil bisection failed to bracket below")
        for _ in range(200):
            mid = 0.5 * (lo + hi)
            if _count_below(T, w, mid) <= n:
                lo = mid
            else:
                hi = mid
            if hi - lo <= 1e-13 * max(1.0, abs(hi)):
                break
        out.append(0.5 * (lo + hi))
    return np.array(out)


def build_H_matrix(
    profile: OperatorProfile, params: SwansonParams, grid: Grid
) -> BandedOperator:
    """Flux-form central-difference realisation of the full operator.

    c2 xi'' + c1 xi' + c0 xi is assembled as (c2 xi')' + (c1 - c2') xi' + c0 xi
    with c2 evaluated at cell midpoints and c2' = -2 omega A A' analytic.
    The flux part is exactly symmetric, so the alpha = 0 special case yields
    a symmetric matrix to machine precision (c1 = c2' identically there).
    """
    x = grid.nodes()
    xi = x[1:-1]
    h = grid.dx
    c2, c1, c0 = hamiltonian_coeffs(profile, params, xi)
    c2p = -2.0 * params.omega * profile.A(xi) * profile.A1(xi)
    xm = 0.5 * (x[:-1] + x[1:])
    c2m = -params.omega * profile.A(xm) ** 2
    drift = (c1 - c2p) / (2.0 * h)
    main = -(c2m[:-1] + c2m[1:]) / (h * h) + c0
    sub = np.empty_like(main)
    sup = np.empty_like(main)
    sub[:] = c2m[:-1] / (h * h) - drift
    sup[:] = c2m[1:] / (h * h) + drift
    return BandedOperator(sub=sub, main=main, sup=sup)


def pseudo_hermiticity_residual(
    profile: OperatorProfile,
    params: SwansonParams,
    grid: Grid,
    flip_rho: bool = False,
):
    """Similarity-conjugation residuals (res_eta, res_rho).

    res_eta measures the asymmetry of eta H (eta = rho^2 diagonal), res_rho
    the asymmetry of rho H rho^{-1}; both are normalised max-norms and only
    involve adjacent node pairs for a tridiagonal H.  ``flip_rho`` negates
    the exponent of rho (negative control: the residual then converges at
    first order only, instead of superconverging).
    """
    H = build_H_matrix(profile, params, grid)
    xi = grid.interior()
    logrho = log_rho_map(profile, params, xi)
    if flip_rho:
        logrho = -logrho
    # eta H asymmetry on pairs (i, i+1); the shared exp(2 logrho) factor is
    # scaled per-pair through its log so steep maps cannot under/overflow
    pair_log = 2.0 * np.minimum(logrho[:-1], logrho[1:])
    eu = np.exp(2.0 * logrho[:-1] - pair_log)
    el = np.exp(2.0 * logrho[1:] - pair_log)
    upper = eu * H.sup[:-1]
    lower = el * H.sub[1:]
    scale = max(
        np.max(np.abs(H.main)), np.max(np.abs(upper)), np.max(np.abs(lower))
    )
    res_eta = float(np.max(np.abs(upper - lower)) / scale)
    # rho H rho^{-1} asymmetry; adjacent log difference is O(h), always finite
    g = np.exp(logrho[:-1] - logrho[1:])
    cu = H.sup[:-1] * g
    cl = H.sub[1:] / g
    scale = max(np.max(np.abs(H.main)), np.max(np.abs(cu)), np.max(np.abs(cl)))
    res_rho = float(np.max(np.abs(cu - cl)) / scale)
    return res_eta, res_rho


def eta_norm(phi, profile: OperatorProfile, params: SwansonParams, grid: Grid):
    """Trapezoid quadrature of rho^2 |Phi|^2 over the grid nodes."""
    phi = np.asarray(phi, dtype=float)
    x = grid.nodes()
    if len(phi) != len(x):
        raise ValueError("phi must be sampled on the full node set")
    weight = np.exp(2.0 * log_rho_map(profile, params, x))
    val = np.trapezoid(weight * phi * phi, x)
    if not np.isfinite(val):
        raise SingularityError("eta-norm overflowed; reduce the window")
    return float(val)


def convergence_order(values) -> float:
    """log2 of the successive-difference ratio for values at (h, h/2, h/4).

    Returns inf when the finer difference vanishes (treated as converged).
    """
    v0, v1, v2 = (float(v) for v in values)
    d01, d12 = abs(v0 - v1), abs(v1 - v2)
    if d12 == 0.0:
        return float("inf")
    return float(np.log2(d01 / d12))


def richardson(coarse, fine):
    """Second-order Richardson extrapolation from values at h and h/2."""
    return fine + (np.asarray(fine) - np.asarray(coarse)) / 3.0
