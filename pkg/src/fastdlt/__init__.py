"""Fast discrete Legendre transforms built from a Taylor-expanded non-uniform DCT."""
from .coefficients import Basis, CoefficientVector
from .conversion import (
    LambdaCache,
    lambda_cache,
    lambda_ratio,
    leg2cheb_apply,
    leg2cheb_apply_transpose,
    leg2cheb_entry,
)
from .errors import DLTError
from .ndct import TaylorPlan, ndct_apply, ndct_apply_transpose, ndct_error_bound, plan_ndct
from .oracle import cheb_coeffs_of_legendre, eval_chebyshev_direct, eval_legendre_direct, idlt_direct
from .quadrature import GridKind, LegendreGrid, ReferenceGrid, legendre_nodes_weights, reference_grid
from .transforms import TransformConfig, dlt, idlt, transform_config
from .trig import dct_iii, dct_iii_transpose, dst_iii, dst_iii_transpose

__version__ = "0.1.0"

__all__ = [
    "Basis",
    "CoefficientVector",
    "DLTError",
    "GridKind",
    "LambdaCache",
    "LegendreGrid",
    "ReferenceGrid",
    "TaylorPlan",
    "TransformConfig",
    "cheb_coeffs_of_legendre",
    "dct_iii",
    "dct_iii_transpose",
    "dlt",
    "dst_iii",
    "dst_iii_transpose",
    "eval_chebyshev_direct",
    "eval_legendre_direct",
    "idlt",
    "idlt_direct",
    "lambda_cache",
    "lambda_ratio",
    "leg2cheb_apply",
    "leg2cheb_apply_transpose",
    "leg2cheb_entry",
    "legendre_nodes_weights",
    "ndct_apply",
    "ndct_apply_transpose",
    "ndct_error_bound",
    "plan_ndct",
    "reference_grid",
    "transform_config",
]
