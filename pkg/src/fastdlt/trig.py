"""Type-III cosine and sine transforms on the cheb1 and cheb* grids, with transposes.

With ``theta_k`` the reference grid of the chosen kind, the forward kernels are

    dct_iii:  out_k = sum_n c_n cos(n theta_k)
    dst_iii:  out_k = sum_n c_n sin(n theta_k)

For cheb1, ``theta_k = (k + 1/2) pi / N`` and these are plain DCT-III/DST-III
sums computed with ``scipy.fft``; the transposes are the type-II transforms.

For cheb*, ``theta_k = (2k + 1 + 1/2) pi / (2N + 1)``, the odd-indexed half of
a length ``2N + 1`` type-III transform. ``2N + 1`` often has a large prime
factor, so instead both the cosine and sine sums are read off the N-point
chirp-z transform ``y_k = sum_n a_n W^(nk)``, ``W = exp(2 pi i / (2N + 1))``,
which Bluestein's identity turns into a circular convolution of smooth length.
"""
from __future__ import annotations

from functools import lru_cache

import numpy as np
from scipy import fft as _fft

from .errors import InvalidSizeError
from .quadrature import GridKind, as_kind

__all__ = ["dct_iii", "dst_iii", "dct_iii_transpose", "dst_iii_transpose"]


def _vector(c) -> np.ndarray:
    c = np.asarray(c, dtype=float)
    if c.ndim != 1:
        raise InvalidSizeError(f"expected a 1-D vector, got shape {c.shape}")
    if c.size == 0:
        raise InvalidSizeError("transform length must be at least 1")
    return c


def _unit_phase(numer: np.ndarray, denom: int) -> np.ndarray:
    """``exp(i pi numer / denom)`` for integer ``numer``, reduced exactly first."""
    return np.exp(1j * np.pi * ((numer % (2 * denom)) / denom))


class _ChirpZ:
    """Bluestein evaluation of ``y_k = sum_{n<N} a_n W^(nk)`` for ``k < N``.

    Immutable after construction; ``__call__`` allocates its own scratch.
    """

    def __init__(self, n: int):
        m = 2 * n + 1
        j = np.arange(n, dtype=np.int64)
        self.n = n
        self.length = _fft.next_fast_len(2 * n - 1)
        # W^(nk) = w(n) w(k) conj(w(k - n)) with w(j) = exp(i pi j^2 / m)
        self.chirp = _unit_phase(j * j, m)
        kernel = np.zeros(self.length, dtype=complex)
        kernel[:n] = self.chirp.conj()
        kernel[self.length - n + 1:] = self.chirp[1:][::-1].conj()
        self.kernel_hat = _fft.fft(kernel)
        # exp(i pi 3 n / (2m)) turns W^(nk) into the cheb* kernel exp(i n theta_k)
        self.shift = _unit_phase(3 * j, 2 * m)
        for a in (self.chirp, self.kernel_hat, self.shift):
            a.setflags(write=False)

    def __call__(self, a: np.ndarray) -> np.ndarray:
        b = np.zeros(self.length, dtype=complex)
        b[: self.n] = a * self.chirp
        conv = _fft.ifft(_fft.fft(b) * self.kernel_hat)
        return conv[: self.n] * self.chirp


@lru_cache(maxsize=64)
def _chirp(n: int) -> _ChirpZ:
    return _ChirpZ(n)


def _chebstar_forward(c: np.ndarray) -> np.ndarray:
    """``sum_n c_n exp(i n theta_k)`` on the cheb* grid."""
    plan = _chirp(c.size)
    # the n = 0 term is added exactly so that c = e_0 maps to all ones
    a = c * plan.shift
    a[0] = 0.0
    out = plan(a)
    out.real += c[0]
    return out


def _chebstar_transpose(g: np.ndarray) -> np.ndarray:
    """``sum_k g_k exp(i n theta_k)`` on the cheb* grid."""
    plan = _chirp(g.size)
    out = plan(g.astype(complex)) * plan.shift
    out[0] = np.sum(g)
    return out


def dct_iii(c, kind=GridKind.CHEBSTAR) -> np.ndarray:
    """Evaluate ``sum_n c_n cos(n theta_k)`` on the reference grid of ``kind``.

    Parameters
    ----------
    c : array_like, shape (N,)
        Cosine coefficients.
    kind : GridKind or str
        ``'cheb1'`` or ``'chebstar'``.

    Returns
    -------
    ndarray, shape (N,)
    """
    c = _vector(c)
    if as_kind(kind) is GridKind.CHEBSTAR:
        return _chebstar_forward(c).real
    # scipy's unnormalised type 3 doubles every term but the first
    x = c.copy()
    x[1:] *= 0.5
    return _fft.dct(x, type=3)


def dst_iii(c, kind=GridKind.CHEBSTAR) -> np.ndarray:
    """Evaluate ``sum_n c_n sin(n theta_k)`` on the reference grid of ``kind``.

    ``c[0]`` never contributes since ``sin(0) = 0``.
    """
    c = _vector(c)
    if as_kind(kind) is GridKind.CHEBSTAR:
        return _chebstar_forward(c).imag
    # scipy's type 3 DST indexes frequencies from 1
    x = np.zeros(c.size)
    x[:-1] = 0.5 * c[1:]
    return _fft.dst(x, type=3)


def dct_iii_transpose(g, kind=GridKind.CHEBSTAR) -> np.ndarray:
    """Transpose of :func:`dct_iii`: ``out_n = sum_k g_k cos(n theta_k)``."""
    g = _vector(g)
    if as_kind(kind) is GridKind.CHEBSTAR:
        return _chebstar_transpose(g).real
    return 0.5 * _fft.dct(g, type=2)


def dst_iii_transpose(g, kind=GridKind.CHEBSTAR) -> np.ndarray:
    """Transpose of :func:`dst_iii`: ``out_n = sum_k g_k sin(n theta_k)``."""
    g = _vector(g)
    if as_kind(kind) is GridKind.CHEBSTAR:
        return _chebstar_transpose(g).imag
    out = np.empty(g.size)
    out[0] = 0.0
    out[1:] = 0.5 * _fft.dst(g, type=2)[:-1]
    return out
