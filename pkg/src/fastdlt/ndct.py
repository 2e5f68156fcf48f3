"""Non-uniform discrete cosine transform at the Legendre nodes.

Evaluates ``f_k = sum_n c_n cos(n theta_k)`` with ``theta_k`` the Legendre
angles, by Taylor expanding each ``cos(n (theta*_k + dtheta_k))`` about an
equally-spaced grid ``theta*``:

    f = sum_{l < L} s_l / l! * diag(dtheta)^l * T_l(n^l * c)

where ``T_l`` is the type-III DCT (``l`` even) or DST (``l`` odd) on the
reference grid and ``s_l = (-1)^floor((l+1)/2)``. The truncation error is at
most ``C(L) ||c||_1``, with ``C(L) = 0.83845^L / L!`` on cheb1 and
``1 / ((6 pi)^L L!)`` on cheb*, so ``L`` is fixed by the tolerance alone.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DimensionError, InvalidInputError, OverflowGuardError, ToleranceError
from .quadrature import (
    GridKind,
    LegendreGrid,
    ReferenceGrid,
    as_kind,
    legendre_nodes_weights,
    reference_grid,
)
from .trig import dct_iii, dct_iii_transpose, dst_iii, dst_iii_transpose

__all__ = [
    "MAX_TERMS",
    "TaylorPlan",
    "truncation_constant",
    "terms_for_tolerance",
    "plan_ndct",
    "ndct_apply",
    "ndct_apply_transpose",
    "ndct_error_bound",
]

MAX_TERMS = 30
CHEB1_RADIUS = 0.83845
CHEBSTAR_RADIUS = 1.0 / (6.0 * math.pi)


def truncation_constant(num_terms: int, kind) -> float:
    """``C(L)``: the N-independent factor multiplying ``||c||_1`` in the error bound."""
    radius = CHEB1_RADIUS if as_kind(kind) is GridKind.CHEB1 else CHEBSTAR_RADIUS
    return radius**num_terms / math.factorial(num_terms)


def terms_for_tolerance(tolerance: float, kind) -> int:
    """Smallest ``L`` with ``C(L) <= tolerance``."""
    if not 0.0 < tolerance < 1.0:
        raise ToleranceError(f"tolerance must lie in (0, 1), got {tolerance!r}")
    for num_terms in range(1, MAX_TERMS + 1):
        if truncation_constant(num_terms, kind) <= tolerance:
            return num_terms
    raise ToleranceError(
        f"tolerance {tolerance:.3e} needs more than {MAX_TERMS} Taylor terms on the {as_kind(kind).value} grid"
    )


@dataclass(frozen=True, eq=False)
class TaylorPlan:
    """Precomputed data for NDCTs of one size, grid kind and tolerance."""

    size: int
    kind: GridKind
    tolerance: float
    num_terms: int
    reference: ReferenceGrid

    @property
    def constant(self) -> float:
        return truncation_constant(self.num_terms, self.kind)


def plan_ndct(n: int, kind=GridKind.CHEBSTAR, tolerance: float = 2.0**-52,
              grid: LegendreGrid | None = None) -> TaylorPlan:
    """Build a :class:`TaylorPlan` for size ``n``.

    Parameters
    ----------
    n : int
        Transform size.
    kind : GridKind or str, default 'chebstar'
        Expansion grid. cheb* needs roughly half as many terms as cheb1 but
        each term is a transform of length ``2n + 1``.
    tolerance : float, default 2**-52
        Target for ``C(L)``.
    grid : LegendreGrid, optional
        Precomputed Legendre grid of size ``n``.
    """
    kind = as_kind(kind)
    num_terms = terms_for_tolerance(tolerance, kind)
    # the largest scaled coefficient vector holds (n-1)^(L-1) c_n
    if (num_terms - 1) * math.log10(max(n - 1, 1)) > 300:
        raise OverflowGuardError(f"(N-1)^(L-1) overflows for N={n}, L={num_terms}")
    if grid is None:
        grid = legendre_nodes_weights(n)
    elif grid.size != n:
        raise DimensionError(f"grid has {grid.size} nodes, plan size is {n}")
    return TaylorPlan(n, kind, float(tolerance), num_terms, reference_grid(grid, kind))


def _check(plan: TaylorPlan, v) -> np.ndarray:
    v = np.asarray(v, dtype=float)
    if v.ndim != 1 or v.size != plan.size:
        raise DimensionError(f"expected a vector of length {plan.size}, got shape {v.shape}")
    if not np.all(np.isfinite(v)):
        raise InvalidInputError("input contains non-finite entries")
    return v


def _sign(term: int) -> float:
    return -1.0 if ((term + 1) // 2) % 2 else 1.0


def ndct_apply(plan: TaylorPlan, c) -> np.ndarray:
    """Evaluate the Chebyshev series ``c`` at the plan's Legendre nodes."""
    c = _check(plan, np.asarray(c, dtype=float))
    kind = plan.kind
    dtheta = plan.reference.delta_theta
    n = np.arange(plan.size, dtype=float)

    f = dct_iii(c, kind)
    scaled = c.copy()
    weight = np.ones(plan.size)
    for term in range(1, plan.num_terms):
        scaled *= n
        weight *= dtheta / term
        transform = dst_iii if term % 2 else dct_iii
        f += _sign(term) * weight * transform(scaled, kind)
    return f


def ndct_apply_transpose(plan: TaylorPlan, g) -> np.ndarray:
    """Apply the exact transpose of :func:`ndct_apply` to values ``g``."""
    g = _check(plan, g)
    kind = plan.kind
    dtheta = plan.reference.delta_theta
    n = np.arange(plan.size, dtype=float)

    out = dct_iii_transpose(g, kind)
    weighted = g.copy()
    npow = np.ones(plan.size)
    for term in range(1, plan.num_terms):
        weighted *= dtheta / term
        npow *= n
        transform = dst_iii_transpose if term % 2 else dct_iii_transpose
        out += _sign(term) * npow * transform(weighted, kind)
    return out


def ndct_error_bound(plan: TaylorPlan, c) -> float:
    """Certified bound on ``max_k |f_k - f_k^(L)|`` for coefficients ``c``.

    The smaller of the grid-specific ``C(L) ||c||_1`` and the measured
    ``(N max|dtheta|)^L / L! ||c||_1``.
    """
    norm1 = float(np.sum(np.abs(np.asarray(c, dtype=float))))
    if norm1 == 0.0:
        return 0.0
    num_terms = plan.num_terms
    spread = plan.size * float(np.max(np.abs(plan.reference.delta_theta)))
    measured = spread**num_terms / math.factorial(num_terms)
    return min(measured, plan.constant) * norm1
