"""Complex vector arithmetic underlying the spin triple factor.

Defines the immutable ``SpinVector`` together with the inner product,
coordinate conjugation, the determinant ``det a = <a|conj(a)> = sum a_i^2``
and the Euclidean norm.
"""
from __future__ import annotations

from typing import Iterable

import numpy as np

from . import config

__all__ = [
    "DimensionMismatch",
    "DomainError",
    "StructuralError",
    "SpinVector",
    "inner",
    "conjugate",
    "det",
    "euclid_norm",
]


class DimensionMismatch(ValueError):
    """Operands live in spin factors of different dimension."""


class DomainError(ValueError):
    """Input outside the mathematical domain of an operation."""


class StructuralError(RuntimeError):
    """Numerically inconsistent classification; signals tolerance breakdown."""


class SpinVector:
    """Immutable element of the n-dimensional complex spin factor, n >= 2."""

    __slots__ = ("_coords",)

    def __init__(self, coords: Iterable[complex] | np.ndarray) -> None:
        arr = np.array(coords, dtype=np.complex128)
        if arr.ndim != 1:
            raise ValueError("coordinates must form a one-dimensional sequence")
        if arr.size < 2:
            raise ValueError("spin factor dimension must be at least 2")
        if arr.size > config.max_dim():
            raise ValueError(
                f"dimension {arr.size} exceeds the configured cap {config.max_dim()}"
            )
        if not np.all(np.isfinite(arr)):
            raise ValueError("coordinates must be finite")
        arr.setflags(write=False)
        self._coords = arr

    @classmethod
    def zero(cls, dim: int) -> "SpinVector":
        return cls(np.zeros(dim, dtype=np.complex128))

    @classmethod
    def basis(cls, dim: int, index: int) -> "SpinVector":
        """The natural basis vector e_index (0-based) of the given dimension."""
        e = np.zeros(dim, dtype=np.complex128)
        e[index] = 1.0
        return cls(e)

    @classmethod
    def from_json(cls, payload: dict) -> "SpinVector":
        try:
            re = np.asarray(payload["re"], dtype=np.float64)
            im = np.asarray(payload["im"], dtype=np.float64)
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed vector payload: {exc}") from exc
        if re.shape != im.shape or re.ndim != 1:
            raise ValueError("'re' and 'im' must be equal-length flat arrays")
        return cls(re + 1j * im)

    def to_json(self) -> dict:
        return {
            "re": [float(x) for x in self._coords.real],
            "im": [float(x) for x in self._coords.imag],
        }

    @property
    def coords(self) -> np.ndarray:
        return self._coords

    @property
    def dim(self) -> int:
        return self._coords.size

    def conjugate(self) -> "SpinVector":
        return SpinVector(np.conjugate(self._coords))

    def norm(self) -> float:
        return float(np.linalg.norm(self._coords))

    def __add__(self, other: "SpinVector") -> "SpinVector":
        _check_dims(self, other)
        return SpinVector(self._coords + other._coords)

    def __sub__(self, other: "SpinVector") -> "SpinVector":
        _check_dims(self, other)
        return SpinVector(self._coords - other._coords)

    def __neg__(self) -> "SpinVector":
        return SpinVector(-self._coords)

    def __mul__(self, scalar: complex) -> "SpinVector":
        return SpinVector(self._coords * complex(scalar))

    __rmul__ = __mul__

    def __truediv__(self, scalar: complex) -> "SpinVector":
        return SpinVector(self._coords / complex(scalar))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SpinVector):
            return NotImplemented
        return self.dim == other.dim and bool(np.array_equal(self._coords, other._coords))

    def isclose(self, other: "SpinVector", tol: float = config.DEFAULT_TOL) -> bool:
        _check_dims(self, other)
        return float(np.linalg.norm(self._coords - other._coords)) <= tol

    def __repr__(self) -> str:
        return f"SpinVector({np.array2string(self._coords, separator=', ')})"


def _check_dims(a: SpinVector, b: SpinVector) -> None:
    if a.dim != b.dim:
        raise DimensionMismatch(f"dimension mismatch: {a.dim} vs {b.dim}")


def inner(a: SpinVector, b: SpinVector) -> complex:
    """Inner product <a|b> = sum_i a_i conj(b_i); conjugate-linear in b."""
    _check_dims(a, b)
    return complex(np.vdot(b.coords, a.coords))


def conjugate(a: SpinVector) -> SpinVector:
    """Coordinate-wise complex conjugate."""
    return a.conjugate()


def det(a: SpinVector) -> complex:
    """Determinant det a = <a|conj(a)> = sum_i a_i^2."""
    return complex(np.dot(a.coords, a.coords))


def euclid_norm(a: SpinVector) -> float:
    """Euclidean norm |a| = sqrt(<a|a>)."""
    return a.norm()
