"""O(N^2) reference evaluations used to validate the fast transforms.

These deliberately share no code with the fast path: every routine runs its
own three-term recurrence, in O(N) memory.
"""
from __future__ import annotations

import numpy as np

from .coefficients import Basis, as_coefficients
from .errors import DimensionError, DomainError, InsufficientSamplingError
from .quadrature import LegendreGrid

__all__ = [
    "eval_legendre_direct",
    "eval_chebyshev_direct",
    "idlt_direct",
    "cheb_coeffs_of_legendre",
]


def _points(x) -> np.ndarray:
    x = np.atleast_1d(np.asarray(x, dtype=float))
    if np.any(~(np.abs(x) <= 1.0)):
        raise DomainError("evaluation points must satisfy |x| <= 1")
    return x


def eval_legendre_direct(c, x) -> np.ndarray:
    """Evaluate ``sum_n c_n P_n(x_j)`` alongside the Legendre recurrence."""
    c = as_coefficients(c, Basis.LEGENDRE)
    x = _points(x)
    out = np.zeros_like(x)
    if c.size == 0:
        return out
    p_prev, p = np.zeros_like(x), np.ones_like(x)
    for n, cn in enumerate(c):
        out += cn * p
        p_prev, p = p, ((2 * n + 1) * x * p - n * p_prev) / (n + 1)
    return out


def eval_chebyshev_direct(c, x) -> np.ndarray:
    """Evaluate ``sum_n c_n T_n(x_j)`` alongside the Chebyshev recurrence."""
    c = as_coefficients(c, Basis.CHEBYSHEV)
    x = _points(x)
    out = np.zeros_like(x)
    if c.size == 0:
        return out
    t_prev, t = x, np.ones_like(x)  # T_{-1} = T_1 makes the first step give T_1 = x
    for cn in c:
        out += cn * t
        t_prev, t = t, 2 * x * t - t_prev
    return out


def idlt_direct(f, grid: LegendreGrid) -> np.ndarray:
    """Legendre coefficients from values at the Gauss-Legendre nodes.

    ``c_n = (n + 1/2) sum_k w_k f_k P_n(x_k)``, with the recurrence advanced
    over all nodes at once.
    """
    f = np.asarray(f, dtype=float)
    if f.ndim != 1 or f.size != grid.size:
        raise DimensionError(f"expected {grid.size} values, got shape {f.shape}")
    x = np.asarray(grid.x)
    wf = np.asarray(grid.weights) * f
    c = np.empty(grid.size)
    p_prev, p = np.zeros_like(x), np.ones_like(x)
    for n in range(grid.size):
        c[n] = (n + 0.5) * np.dot(wf, p)
        p_prev, p = p, ((2 * n + 1) * x * p - n * p_prev) / (n + 1)
    return c


def cheb_coeffs_of_legendre(n: int, m: int) -> np.ndarray:
    """Chebyshev coefficients of ``P_n`` recovered by interpolation.

    ``P_n`` is sampled at the ``m``-point Chebyshev grid of the first kind and
    the coefficients are recovered from the discrete orthogonality of
    ``cos(j theta)`` on that grid, summed directly. Returns the first ``n+1``.
    """
    if m <= n:
        raise InsufficientSamplingError(f"need more than {n} sample points to resolve P_{n}, got {m}")
    theta = (np.arange(m) + 0.5) * np.pi / m
    x = np.cos(theta)
    p_prev, p = np.zeros(m), np.ones(m)
    for j in range(n):
        p_prev, p = p, ((2 * j + 1) * x * p - j * p_prev) / (j + 1)
    out = np.empty(n + 1)
    for j in range(n + 1):
        out[j] = 2.0 / m * np.sum(p * np.cos(j * theta))
    out[0] *= 0.5
    return out
