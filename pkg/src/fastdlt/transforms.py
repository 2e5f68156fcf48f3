"""Discrete Legendre transform and its inverse.

The forward transform evaluates ``f_k = sum_n c_n P_n(x_k)`` at the N
Gauss-Legendre nodes as ``f = NDCT(M c)``. The inverse uses the exactness of
Gauss-Legendre quadrature, ``P = T M``, to write

    c = diag(n + 1/2) M^T T^T diag(w) f

so it is a single direct pass with the transposed stages.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .coefficients import Basis, as_coefficients
from .conversion import LambdaCache, lambda_cache, leg2cheb_apply, leg2cheb_apply_transpose
from .errors import DimensionError, InvalidInputError
from .ndct import TaylorPlan, ndct_apply, ndct_apply_transpose, plan_ndct
from .quadrature import GridKind, LegendreGrid, as_kind, legendre_nodes_weights

__all__ = ["DEFAULT_TOLERANCE", "TransformConfig", "transform_config", "dlt", "idlt"]

DEFAULT_TOLERANCE = 2.0**-52


@dataclass(frozen=True, eq=False)
class TransformConfig:
    """Everything the DLT and IDLT of one size reuse across calls.

    Attributes
    ----------
    size : int
    tolerance : float
        Working tolerance of the NDCT stage.
    kind : GridKind
    grid : LegendreGrid
    plan : TaylorPlan
    lambdas : LambdaCache
    scaling : ndarray
        ``n + 1/2``, the inverse squared norms of ``P_n``.
    """

    size: int
    tolerance: float
    kind: GridKind
    grid: LegendreGrid
    plan: TaylorPlan
    lambdas: LambdaCache
    scaling: np.ndarray


@lru_cache(maxsize=16)
def _build(n: int, tolerance: float, kind: GridKind) -> TransformConfig:
    grid = legendre_nodes_weights(n)
    plan = plan_ndct(n, kind, tolerance, grid=grid)
    scaling = np.arange(n) + 0.5
    scaling.setflags(write=False)
    return TransformConfig(n, tolerance, kind, grid, plan, lambda_cache(n), scaling)


def transform_config(n: int, tolerance: float = DEFAULT_TOLERANCE,
                     kind=GridKind.CHEBSTAR) -> TransformConfig:
    """Return the (cached) configuration for size ``n``."""
    return _build(int(n), float(tolerance), as_kind(kind))


def _resolve(config, n: int) -> TransformConfig:
    if config is None:
        return transform_config(n)
    if config.size != n:
        raise DimensionError(f"config is for size {config.size}, got a vector of length {n}")
    return config


def dlt(c, config: TransformConfig | None = None) -> np.ndarray:
    """Evaluate a Legendre series at the Gauss-Legendre nodes.

    Parameters
    ----------
    c : array_like or CoefficientVector
        Legendre coefficients ``c_0 .. c_{N-1}``.
    config : TransformConfig, optional
        Defaults to ``transform_config(len(c))``.

    Returns
    -------
    ndarray
        ``f_k = sum_n c_n P_n(x_k)`` in node order (``x`` decreasing).
    """
    c = as_coefficients(c, Basis.LEGENDRE)
    if c.ndim != 1:
        raise DimensionError(f"expected a 1-D coefficient vector, got shape {c.shape}")
    if not np.all(np.isfinite(c)):
        raise InvalidInputError("coefficients contain non-finite entries")
    config = _resolve(config, c.size)
    return ndct_apply(config.plan, leg2cheb_apply(c, config.lambdas))


def idlt(f, config: TransformConfig | None = None) -> np.ndarray:
    """Recover Legendre coefficients from values at the Gauss-Legendre nodes."""
    f = np.asarray(f, dtype=float)
    if f.ndim != 1:
        raise DimensionError(f"expected a 1-D value vector, got shape {f.shape}")
    config = _resolve(config, f.size)
    g = ndct_apply_transpose(config.plan, config.grid.weights * f)
    return config.scaling * leg2cheb_apply_transpose(g, config.lambdas)
