"""Jacobi polynomials for arbitrary real parameters.

Pointwise values and derivatives of P_n^{(a,b)}(z) by the three-term
recurrence in degree.  The recurrence is a polynomial identity, valid for
any real (a, b) including negative and non-integer values; no orthogonality
is assumed.  Degenerate intermediate denominators are surfaced as errors
rather than silently regularised.
"""

from __future__ import annotations

import numpy as np

from .errors import DegenerateParameterError

__all__ = ["jacobi_eval", "jacobi_value", "jacobi_second_derivative"]


def jacobi_value(n: int, a: float, b: float, z):
    """P_n^{(a,b)}(z); z may be a scalar or ndarray."""
    if n < 0:
        raise ValueError("degree must be non-negative")
    z = np.asarray(z, dtype=float)
    p_prev = np.ones_like(z)
    if n == 0:
        return p_prev
    p = (a - b) / 2.0 + (1.0 + (a + b) / 2.0) * z
    for k in range(2, n + 1):
        c = 2.0 * k + a + b
        den = 2.0 * k * (k + a + b) * (c - 2.0)
        if den == 0.0:
            raise DegenerateParameterError(k)
        q1 = (c - 1.0) * (c * (c - 2.0) * z + a * a - b * b)
        q2 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * c
        p, p_prev = (q1 * p - q2 * p_prev) / den, p
    return p


def jacobi_eval(n: int, a: float, b: float, z):
    """Return (P_n^{(a,b)}(z), d/dz P_n^{(a,b)}(z)).

    The derivative uses the parameter-shift identity
    d/dz P_n^{(a,b)} = ((n + a + b + 1)/2) * P_{n-1}^{(a+1,b+1)}.
    """
    v = jacobi_value(n, a, b, z)
    if n == 0:
        return v, np.zeros_like(np.asarray(z, dtype=float))
    d = 0.5 * (n + a + b + 1.0) * jacobi_value(n - 1, a + 1.0, b + 1.0, z)
    return v, d


def jacobi_second_derivative(n: int, a: float, b: float, z):
    """d^2/dz^2 P_n^{(a,b)}(z) by applying the shift identity twice."""
    if n < 2:
        return np.zeros_like(np.asarray(z, dtype=float))
    c = 0.25 * (n + a + b + 1.0) * (n + a + b + 2.0)
    return c * jacobi_value(n - 2, a + 2.0, b + 2.0, z)
