"""Legendre-to-Chebyshev coefficient conversion.

The conversion matrix ``M`` is upper triangular with a checkerboard zero
pattern. For ``k + n`` even,

    M[0, n] = Lambda(n/2)**2 / pi
    M[k, n] = 2/pi * Lambda((n-k)/2) * Lambda((n+k)/2),   0 < k <= n

with ``Lambda(z) = Gamma(z + 1/2) / Gamma(z + 1)``. Both ``(n-k)/2`` and
``(n+k)/2`` are integers on the nonzero pattern, so an integer table of
``Lambda`` suffices. The entries are formed from ``Lambda(z) / sqrt(pi)``,
which is exactly 1 at ``z = 0`` and keeps ``M[0, 0] = M[1, 1] = 1`` exact. ``M`` and ``M.T`` are applied directly in O(N^2) by
sweeping over the nonzero superdiagonals ``n - k = 2d``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .coefficients import Basis, CoefficientVector, as_coefficients
from .errors import DomainError

__all__ = [
    "LambdaCache",
    "lambda_cache",
    "lambda_ratio",
    "leg2cheb_entry",
    "leg2cheb_matrix",
    "leg2cheb_apply",
    "leg2cheb_apply_transpose",
]

SQRT_PI = math.sqrt(math.pi)
# arguments at or above this use the Stirling form; below it, the recurrence
STIRLING_MIN = 10

# Bernoulli terms B_2k / (2k (2k - 1)) of the log-gamma remainder
_STIRLING = (1 / 12, -1 / 360, 1 / 1260, -1 / 1680, 1 / 1188, -691 / 360360, 1 / 156)


def _log_gamma_remainder(x):
    r = 1.0 / x
    r2 = r * r
    acc = _STIRLING[-1]
    for coef in _STIRLING[-2::-1]:
        acc = acc * r2 + coef
    return acc * r


def _lambda_stirling(z):
    """``Gamma(z+1/2)/Gamma(z+1)`` for ``z >= 10`` from Stirling remainders.

    Taking the difference of the two log-gamma series analytically keeps the
    exponent O(1/z), so the relative error stays at a few ulps for any z.
    """
    z = np.asarray(z, dtype=float)
    b = z + 1.0
    expo = (
        z * np.log1p(-0.5 / b)
        + 0.5
        + (_log_gamma_remainder(z + 0.5) - _log_gamma_remainder(b))
    )
    return np.exp(expo) / np.sqrt(b)


@dataclass(frozen=True, eq=False)
class LambdaCache:
    """``Lambda(z)`` tabulated at ``z = 0, 1, ..., zmax``.

    ``scaled`` holds ``Lambda(z) / sqrt(pi)``, built by the same scheme from 1.
    """

    table: np.ndarray
    scaled: np.ndarray

    @property
    def zmax(self) -> int:
        return self.table.size - 1

    def __getitem__(self, z):
        return self.table[z]


@lru_cache(maxsize=32)
def lambda_cache(zmax: int) -> LambdaCache:
    """Build the ``Lambda`` table for integer arguments ``0 .. zmax``."""
    zmax = max(int(zmax), 0)
    tables = []
    for start in (SQRT_PI, 1.0):
        table = np.empty(zmax + 1)
        table[0] = start
        for z in range(min(zmax, STIRLING_MIN - 1)):
            table[z + 1] = table[z] * (z + 0.5) / (z + 1)
        if zmax >= STIRLING_MIN:
            table[STIRLING_MIN:] = _lambda_stirling(np.arange(STIRLING_MIN, zmax + 1)) / (SQRT_PI / start)
        table.setflags(write=False)
        tables.append(table)
    return LambdaCache(*tables)


def lambda_ratio(z, cache: LambdaCache | None = None) -> float:
    """Evaluate ``Lambda(z) = Gamma(z + 1/2) / Gamma(z + 1)`` for real ``z >= 0``.

    Integer arguments inside ``cache`` are looked up. Otherwise small integers
    use the recurrence ``Lambda(z+1) = Lambda(z) (z + 1/2) / (z + 1)`` from
    ``Lambda(0) = sqrt(pi)``, ``z >= 10`` uses a Stirling expansion of the log
    ratio, and small non-integers run the recurrence downwards from the
    Stirling range.
    """
    z = float(z)
    if not z >= 0.0:
        raise DomainError(f"Lambda(z) requires z >= 0, got {z}")
    is_int = z.is_integer()
    if is_int and cache is not None and z <= cache.zmax:
        return float(cache.table[int(z)])
    if z >= STIRLING_MIN:
        return float(_lambda_stirling(z))
    if is_int:
        value = SQRT_PI
        for j in range(int(z)):
            value = value * (j + 0.5) / (j + 1)
        return value
    # shift up into the Stirling range and undo the shift with the recurrence
    shift = math.ceil(STIRLING_MIN - z)
    num = den = 1.0
    for j in range(shift):
        num *= z + j + 1.0
        den *= z + j + 0.5
    return float(_lambda_stirling(z + shift)) * num / den


def leg2cheb_entry(k: int, n: int, cache: LambdaCache | None = None) -> float:
    """Entry ``M[k, n]`` of the Legendre-to-Chebyshev matrix."""
    if k < 0 or n < 0 or k > n or (k + n) % 2:
        return 0.0
    if cache is None or cache.zmax < n:
        cache = lambda_cache(n)
    mu = cache.scaled
    if k == 0:
        return float(mu[n // 2] ** 2)
    return float(2.0 * mu[(n - k) // 2] * mu[(n + k) // 2])


def leg2cheb_matrix(n: int) -> np.ndarray:
    """Dense ``n x n`` conversion matrix, for testing and small problems."""
    cache = lambda_cache(n)
    return np.array([[leg2cheb_entry(k, j, cache) for j in range(n)] for k in range(n)])


def _diagonal_sweep(v: np.ndarray, cache: LambdaCache | None, transpose: bool) -> np.ndarray:
    n = v.size
    mu = (cache if cache is not None and cache.zmax >= n else lambda_cache(n)).scaled
    out = np.zeros(n)
    if transpose:
        v = 2.0 * v
        v[:1] *= 0.5
    # superdiagonal d couples k with n = k + 2d, weight mu(d) mu(k + d)
    for d in range((n + 1) // 2):
        m = n - 2 * d
        coef = mu[d] * mu[d : d + m]
        if transpose:
            out[2 * d :] += coef * v[:m]
        else:
            out[:m] += coef * v[2 * d :]
    if not transpose:
        out *= 2.0
        out[:1] *= 0.5
    return out


def leg2cheb_apply(c, cache: LambdaCache | None = None):
    """Convert Legendre coefficients to Chebyshev coefficients, ``c_hat = M c``.

    Parameters
    ----------
    c : array_like or CoefficientVector
        Legendre coefficients. A tagged vector must have the Legendre basis.
    cache : LambdaCache, optional
        Table covering at least ``len(c)`` arguments.

    Returns
    -------
    ndarray, or a Chebyshev ``CoefficientVector`` if ``c`` was tagged.

    Raises
    ------
    BasisError
        If ``c`` is tagged with the Chebyshev basis.
    """
    values = as_coefficients(c, Basis.LEGENDRE)
    out = _diagonal_sweep(np.atleast_1d(values), cache, transpose=False)
    if isinstance(c, CoefficientVector):
        return CoefficientVector.chebyshev(out)
    return out


def leg2cheb_apply_transpose(v, cache: LambdaCache | None = None) -> np.ndarray:
    """Apply ``M.T`` to ``v``."""
    v = np.atleast_1d(np.asarray(v, dtype=float))
    return _diagonal_sweep(v, cache, transpose=True)
