"""Gauss-Legendre grids and the equally-spaced reference grids in theta.

All node quantities are carried in the angular variable ``theta = arccos(x)``,
which can be computed more accurately than ``x`` near the endpoints.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError, InvalidSizeError

__all__ = [
    "GridKind",
    "LegendreGrid",
    "ReferenceGrid",
    "as_kind",
    "legendre_nodes_weights",
    "reference_grid",
]

NEWTON_TOL = 1e-15
NEWTON_MAXITER = 12


class GridKind(str, enum.Enum):
    """Equally-spaced theta grid used as the Taylor expansion centre.

    ``CHEB1`` is ``(k + 1/2) pi / N`` (Chebyshev points of the first kind) and
    ``CHEBSTAR`` is ``(k + 3/4) pi / (N + 1/2)``, the zeros of the leading
    asymptotic term of ``P_N(cos theta)``.
    """

    CHEB1 = "cheb1"
    CHEBSTAR = "chebstar"


def as_kind(kind) -> GridKind:
    """Coerce a string or ``GridKind`` to ``GridKind``."""
    if isinstance(kind, GridKind):
        return kind
    try:
        return GridKind(str(kind).lower())
    except ValueError:
        raise ValueError(f"unknown grid kind {kind!r}; expected 'cheb1' or 'chebstar'") from None


def _readonly(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class LegendreGrid:
    """N-point Gauss-Legendre rule.

    Attributes
    ----------
    size : int
    theta : ndarray
        Strictly increasing angles in ``(0, pi)``.
    x : ndarray
        ``cos(theta)``, strictly decreasing in ``(-1, 1)``.
    weights : ndarray
        Positive quadrature weights summing to 2.
    """

    size: int
    theta: np.ndarray
    x: np.ndarray
    weights: np.ndarray


@dataclass(frozen=True, eq=False)
class ReferenceGrid:
    """Equally-spaced grid ``theta_star`` with perturbations to the Legendre nodes."""

    size: int
    kind: GridKind
    theta_star: np.ndarray
    delta_theta: np.ndarray


def _recurrence_coefficients(n: int):
    j = np.arange(1, n, dtype=float)
    return (j / (j + 1)).tolist(), ((2 * j + 1) / (j + 1)).tolist()


def _legendre_pair(n: int, x: np.ndarray):
    """Return ``P_n(x)`` and ``P_{n-1}(x)`` by the three-term recurrence."""
    p_prev = np.ones_like(x)
    p = x.copy()
    tmp = np.empty_like(x)
    for a, b in zip(*_recurrence_coefficients(n)):
        # P_{j+1} = b_j x P_j - a_j P_{j-1}, computed in place over P_{j-1}
        np.multiply(x, p, out=tmp)
        tmp *= b
        p_prev *= a
        np.subtract(tmp, p_prev, out=p_prev)
        p, p_prev = p_prev, p
    return p, p_prev


def _p_and_dtheta(n: int, theta: np.ndarray):
    """``P_n(cos theta)`` and its derivative with respect to ``theta``.

    Runs the recurrence on the increments ``D_j = P_j - P_{j-1}`` with
    ``u = 1 - cos(theta) = 2 sin^2(theta/2)``. Forming ``x = cos(theta)``
    explicitly would cost an absolute ulp in ``x``, i.e. ``eps / sin(theta)`` in
    ``theta``, close to the endpoints.
    """
    u = 2.0 * np.sin(0.5 * theta) ** 2
    d = -u
    p = 1.0 - u
    tmp = np.empty_like(u)
    for a, b in zip(*_recurrence_coefficients(n)):
        # D_{j+1} = a_j D_j - b_j u P_j
        np.multiply(u, p, out=tmp)
        tmp *= b
        d *= a
        d -= tmp
        p += d
    # dP/dtheta = n (x P_n - P_{n-1}) / sin(theta), and x P_n - P_{n-1} = D_n - u P_n
    dp = n * (d - u * p) / np.sin(theta)
    return p, dp


def _polish_x(n: int, x: np.ndarray) -> np.ndarray:
    # one Newton step in x recovers the last ulp lost in cos(theta)
    p, p_prev = _legendre_pair(n, x)
    return x - p * (1.0 - x * x) / (n * (p_prev - x * p))


def legendre_nodes_weights(n: int) -> LegendreGrid:
    """Compute the ``n``-point Gauss-Legendre nodes and weights.

    Newton's method is run in ``theta`` on ``P_n(cos theta)`` starting from the
    cheb* grid, for the first ``floor(n/2)`` nodes only; the remainder follow by
    reflection ``theta -> pi - theta`` and the middle node of an odd rule is
    exactly ``pi/2``. Weights are ``2 / (dP_n/dtheta)^2``.

    Parameters
    ----------
    n : int
        Number of nodes, ``n >= 1``.

    Returns
    -------
    LegendreGrid

    Raises
    ------
    InvalidSizeError
        If ``n < 1``.
    ConvergenceError
        If the Newton step does not drop below ``1e-15`` within 12 iterations.
    """
    if isinstance(n, bool) or int(n) != n or n < 1:
        raise InvalidSizeError(f"grid size must be a positive integer, got {n!r}")
    n = int(n)
    half = n // 2  # nodes strictly left of pi/2
    k = np.arange(half, dtype=float)
    theta = (k + 0.75) * np.pi / (n + 0.5)

    if half:
        for _ in range(NEWTON_MAXITER):
            p, dp = _p_and_dtheta(n, theta)
            step = p / dp
            if np.max(np.abs(step)) <= NEWTON_TOL:
                # carry dP/dtheta across the final step with the Legendre ODE
                # P'' = -cot(theta) P' - n (n+1) P instead of another pass
                dp = dp + step * (dp / np.tan(theta) + n * (n + 1.0) * p)
                theta = theta - step
                break
            theta = theta - step
        else:
            raise ConvergenceError(
                f"Newton iteration for N={n} stalled at |step|={np.max(np.abs(step)):.3e}"
            )
        w = 2.0 / dp**2
        x = _polish_x(n, np.cos(theta))
    else:
        w = x = np.empty(0)

    full_theta = np.empty(n)
    full_x = np.empty(n)
    full_w = np.empty(n)
    full_theta[:half] = theta
    full_theta[n - half:] = (np.pi - theta)[::-1]
    full_x[:half] = x
    full_x[n - half:] = -x[::-1]
    full_w[:half] = w
    full_w[n - half:] = w[::-1]
    if n % 2:
        mid = half
        full_theta[mid] = np.pi / 2
        full_x[mid] = 0.0
        # P_n'(0) = n P_{n-1}(0) for odd n
        _, p_prev = _legendre_pair(n, np.zeros(1))
        full_w[mid] = 2.0 / (n * p_prev[0]) ** 2

    return LegendreGrid(n, _readonly(full_theta), _readonly(full_x), _readonly(full_w))


def reference_theta(n: int, kind) -> np.ndarray:
    """Equally-spaced theta grid of the given kind."""
    kind = as_kind(kind)
    k = np.arange(n, dtype=float)
    if kind is GridKind.CHEB1:
        return (k + 0.5) * np.pi / n
    return (k + 0.75) * np.pi / (n + 0.5)


def reference_grid(grid: LegendreGrid, kind) -> ReferenceGrid:
    """Pair a Legendre grid with the reference grid of ``kind``.

    ``delta_theta = grid.theta - theta_star``; its maximum modulus is bounded
    by ``1/(6 pi N)`` for cheb* and ``0.83845/N`` for cheb1.
    """
    kind = as_kind(kind)
    theta_star = reference_theta(grid.size, kind)
    delta = grid.theta - theta_star
    return ReferenceGrid(grid.size, kind, _readonly(theta_star), _readonly(delta))
