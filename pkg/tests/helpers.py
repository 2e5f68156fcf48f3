"""Shared oracles and generators for the test suite."""
import numpy as np

EPS = np.finfo(float).eps


def decaying(rng, n, p=1.0):
    """Standard-normal coefficients scaled by ``(n + 1)^-p``."""
    return rng.standard_normal(n) * np.arange(1.0, n + 1) ** -p


def exact_phases(n, kind):
    """Integer numerators and denominator with ``n theta_k = pi * num / den``."""
    j = np.arange(n)
    if kind == "cheb1":
        return np.outer(2 * j + 1, j), 2 * n
    return np.outer(4 * j + 3, j), 2 * (2 * n + 1)


def trig_matrices(n, kind):
    """Dense ``cos(n theta_k)`` and ``sin(n theta_k)`` with exact angle reduction."""
    num, den = exact_phases(n, kind)
    angle = np.pi * ((num % (2 * den)) / den)
    return np.cos(angle), np.sin(angle)


def legendre_bisection_roots(n, iterations=200):
    """Roots of ``P_n`` by bisection on sign changes over a fine theta mesh."""
    def p(x):
        prev, cur = np.zeros_like(x), np.ones_like(x)
        for j in range(n):
            prev, cur = cur, ((2 * j + 1) * x * cur - j * prev) / (j + 1)
        return cur

    mesh = np.cos(np.linspace(0.0, np.pi, 40 * n + 1))
    vals = p(mesh)
    idx = np.nonzero(np.sign(vals[:-1]) != np.sign(vals[1:]))[0]
    hi, lo = mesh[idx], mesh[idx + 1]
    f_hi = p(hi)
    for _ in range(iterations):
        mid = 0.5 * (lo + hi)
        f_mid = p(mid)
        same = np.sign(f_mid) == np.sign(f_hi)
        hi = np.where(same, mid, hi)
        f_hi = np.where(same, f_mid, f_hi)
        lo = np.where(same, lo, mid)
    return 0.5 * (lo + hi)
