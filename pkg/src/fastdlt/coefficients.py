"""Basis-tagged coefficient vectors."""
from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import BasisError, InvalidInputError

__all__ = ["Basis", "CoefficientVector", "as_coefficients"]


class Basis(str, enum.Enum):
    LEGENDRE = "legendre"
    CHEBYSHEV = "chebyshev"


@dataclass(frozen=True, eq=False)
class CoefficientVector:
    """Real coefficients ``c_0 .. c_{N-1}`` of a series in ``basis``."""

    basis: Basis
    values: np.ndarray

    def __post_init__(self):
        values = np.array(self.values, dtype=float)
        if values.ndim != 1:
            raise InvalidInputError(f"coefficients must be 1-D, got shape {values.shape}")
        if not np.all(np.isfinite(values)):
            raise InvalidInputError("coefficients contain non-finite entries")
        values.setflags(write=False)
        object.__setattr__(self, "basis", Basis(self.basis))
        object.__setattr__(self, "values", values)

    def __len__(self):
        return self.values.size

    def __array__(self, dtype=None, copy=None):
        return self.values if dtype is None else self.values.astype(dtype)

    @classmethod
    def legendre(cls, values) -> "CoefficientVector":
        return cls(Basis.LEGENDRE, values)

    @classmethod
    def chebyshev(cls, values) -> "CoefficientVector":
        return cls(Basis.CHEBYSHEV, values)


def as_coefficients(c, basis: Basis) -> np.ndarray:
    """Return ``c`` as a float array, rejecting vectors tagged with another basis.

    Untagged array-likes are accepted as-is.
    """
    if isinstance(c, CoefficientVector):
        if c.basis is not basis:
            raise BasisError(f"expected {basis.value} coefficients, got {c.basis.value}")
        return c.values
    return np.asarray(c, dtype=float)
