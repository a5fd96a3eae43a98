"""Tripotent classification, singular decomposition and Peirce calculus.

The spin factor has rank at most two: every nonzero element is
``s1 v1 + s2 v2`` with algebraically orthogonal minimal tripotents ``v1, v2``
and singular numbers ``s1 >= s2 >= 0``.  Everything in this module exploits
that closed form.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import config
from .core import DomainError, SpinVector, StructuralError, _check_dims, det, euclid_norm
from .triple import LinearOperator, d_operator, triple_product

__all__ = [
    "TripotentClass",
    "SingularDecomposition",
    "PeirceProjections",
    "classify",
    "singular_values",
    "singular_decomposition",
    "apply_odd_function",
    "operator_norm",
    "is_algebraically_orthogonal",
    "peirce_projections",
    "decompose_minimal",
    "maximal_phase",
    "random_minimal",
    "random_maximal",
]


class TripotentClass(enum.Enum):
    NOT_TRIPOTENT = "NotTripotent"
    MINIMAL = "Minimal"
    MAXIMAL = "Maximal"


@dataclass(frozen=True)
class SingularDecomposition:
    """a = s1*v1 + s2*v2 with v1, v2 algebraically orthogonal minimal tripotents."""

    s1: float
    s2: float
    v1: SpinVector
    v2: SpinVector
    unique: bool

    def to_json(self) -> dict:
        return {
            "s1": self.s1,
            "s2": self.s2,
            "v1": self.v1.to_json(),
            "v2": self.v2.to_json(),
            "unique": self.unique,
        }


@dataclass(frozen=True)
class PeirceProjections:
    """Projections onto the 1, 1/2 and 0 eigenspaces of D(v,v), v minimal."""

    p1: LinearOperator
    p_half: LinearOperator
    p0: LinearOperator


def classify(u: SpinVector, tol: float = config.DEFAULT_TOL) -> TripotentClass:
    """Classify u as NotTripotent, Minimal (det ~ 0) or Maximal (|det| ~ 1).

    A tripotent whose |det| lands between the two bands signals tolerance
    breakdown and raises ``StructuralError``.
    """
    if euclid_norm(u) <= tol:  # tripotents are nonzero by definition
        return TripotentClass.NOT_TRIPOTENT
    residual = (triple_product(u, u, u) - u).norm()
    if residual > tol:
        return TripotentClass.NOT_TRIPOTENT
    band = math.sqrt(tol)
    absdet = abs(det(u))
    if absdet <= band:
        return TripotentClass.MINIMAL
    if abs(absdet - 1.0) <= band:
        return TripotentClass.MAXIMAL
    raise StructuralError(
        f"tripotent with |det| = {absdet}: matches neither class within {band}"
    )


def singular_values(a: SpinVector) -> tuple[float, float]:
    """(s1, s2) from s1 +/- s2 = sqrt(2|a|^2 +/- 2|det a|)."""
    sq = euclid_norm(a) ** 2
    absdet = abs(det(a))
    plus = math.sqrt(max(2.0 * sq + 2.0 * absdet, 0.0))
    minus = math.sqrt(max(2.0 * sq - 2.0 * absdet, 0.0))
    return (plus + minus) / 2.0, (plus - minus) / 2.0


def operator_norm(a: SpinVector) -> float:
    """Largest singular number s1; the spin-factor operator norm."""
    return singular_values(a)[0]


# Relative floor below which the imaginary part of the phase-aligned vector is
# treated as zero and a deterministic orthogonal direction is substituted.
_Y_FLOOR = 1e-13


def singular_decomposition(a: SpinVector, tol: float = config.DEFAULT_TOL) -> SingularDecomposition:
    """Construct the singular decomposition of a nonzero element.

    Removes the determinant phase, splits the result into orthogonal real and
    imaginary parts x + iy with |x| >= |y|, and builds the minimal-tripotent
    frame from the normalized directions.  When y vanishes (multiples of
    maximal tripotents) the second direction is the first natural basis vector
    orthogonalized against x, and the result is flagged non-unique.
    """
    nrm = euclid_norm(a)
    if nrm == 0.0:
        raise DomainError("zero vector has no singular decomposition")
    deta = det(a)
    theta = 0.0 if abs(deta) <= tol else 0.5 * float(np.angle(deta))
    b = np.exp(-1j * theta) * a.coords
    x = b.real.copy()
    y = b.imag.copy()
    nx = float(np.linalg.norm(x))
    ny = float(np.linalg.norm(y))
    if ny > nx:
        # fold a quarter turn into the phase so that |x| >= |y|
        theta += 0.5 * math.pi
        x, y = y, -x
        nx, ny = ny, nx
    xhat = x / nx
    if ny <= _Y_FLOOR * nx:
        yhat = _orthogonal_direction(xhat)
        ny = 0.0
    else:
        yhat = y / ny
    phase = np.exp(1j * theta)
    v1 = SpinVector(phase * 0.5 * (xhat + 1j * yhat))
    v2 = SpinVector(phase * 0.5 * (xhat - 1j * yhat))
    s1, s2 = nx + ny, nx - ny
    unique = (s1 - s2 > tol) and (s2 > tol)
    return SingularDecomposition(s1=s1, s2=max(s2, 0.0), v1=v1, v2=v2, unique=unique)


def _orthogonal_direction(xhat: np.ndarray) -> np.ndarray:
    # lowest-index natural basis vector, Gram-Schmidt against xhat
    for j in range(xhat.size):
        e = np.zeros_like(xhat)
        e[j] = 1.0
        r = e - np.dot(e, xhat) * xhat
        nr = np.linalg.norm(r)
        if nr > 0.5:  # always reachable: xhat is a unit vector
            return r / nr
    raise StructuralError("no direction orthogonal to a unit vector found")


def apply_odd_function(a: SpinVector, f: Callable[[float], float],
                       tol: float = config.DEFAULT_TOL) -> SpinVector:
    """f(a) = f(s1) v1 + f(s2) v2 through the singular decomposition.

    Intended for odd analytic f on [0, inf); for even f the value depends on
    the non-unique frame when s1 = s2 or s2 = 0.
    """
    if euclid_norm(a) == 0.0:
        if f(0.0) != 0.0:
            raise DomainError("zero vector requires f(0) = 0")
        return SpinVector.zero(a.dim)
    dec = singular_decomposition(a, tol)
    return float(f(dec.s1)) * dec.v1 + float(f(dec.s2)) * dec.v2


def is_algebraically_orthogonal(u: SpinVector, v: SpinVector,
                                tol: float = config.DEFAULT_TOL) -> bool:
    """True iff D(u,u)v = 0; cross-checked against D(u,v) = 0.

    Disagreement of the two equivalent criteria raises ``StructuralError``.
    """
    _check_dims(u, v)
    if classify(u, tol) is TripotentClass.NOT_TRIPOTENT:
        raise DomainError("first argument is not a tripotent")
    if classify(v, tol) is TripotentClass.NOT_TRIPOTENT:
        raise DomainError("second argument is not a tripotent")
    by_action = (d_operator(u, u)(v)).norm() <= tol
    by_operator = float(np.linalg.norm(d_operator(u, v).matrix)) <= tol
    if by_action != by_operator:
        raise StructuralError("D(u,u)v = 0 and D(u,v) = 0 criteria disagree")
    return by_action


def peirce_projections(v: SpinVector, tol: float = config.DEFAULT_TOL) -> PeirceProjections:
    """P1 = P_v, P_1/2 = I - P_v - P_vbar, P0 = P_vbar for minimal v."""
    if classify(v, tol) is not TripotentClass.MINIMAL:
        raise DomainError("Peirce projections require a minimal tripotent")
    vc = v.coords
    nsq = float(np.vdot(vc, vc).real)
    p_v = np.outer(vc, np.conjugate(vc)) / nsq
    p_vbar = np.outer(np.conjugate(vc), vc) / nsq
    eye = np.eye(v.dim, dtype=np.complex128)
    return PeirceProjections(
        p1=LinearOperator(p_v),
        p_half=LinearOperator(eye - p_v - p_vbar),
        p0=LinearOperator(p_vbar),
    )


def decompose_minimal(v: SpinVector, tol: float = config.DEFAULT_TOL) -> tuple[SpinVector, SpinVector]:
    """Split a minimal tripotent as v = x + iy with real x, y, |x| = |y| = 1/2."""
    if classify(v, tol) is not TripotentClass.MINIMAL:
        raise DomainError("input is not a minimal tripotent")
    x = SpinVector(v.coords.real.astype(np.complex128))
    y = SpinVector(v.coords.imag.astype(np.complex128))
    return x, y


def maximal_phase(u: SpinVector, tol: float = config.DEFAULT_TOL) -> tuple[float, SpinVector]:
    """Write a maximal tripotent as u = exp(i theta) r with real unit r.

    theta is taken in (-pi/2, pi/2]; r absorbs the remaining sign.
    """
    if classify(u, tol) is not TripotentClass.MAXIMAL:
        raise DomainError("input is not a maximal tripotent")
    theta = 0.5 * float(np.angle(det(u)))
    r = np.exp(-1j * theta) * u.coords
    if float(np.max(np.abs(r.imag))) > math.sqrt(tol):
        raise StructuralError("phase removal left a non-real direction")
    return theta, SpinVector(r.real.astype(np.complex128))


def random_minimal(dim: int, rng: np.random.Generator) -> SpinVector:
    """Random minimal tripotent (x + iy)/2 from a random orthonormal real pair."""
    g = rng.standard_normal((dim, 2))
    q, r = np.linalg.qr(g)
    q = q * np.sign(np.diag(r))
    phase = np.exp(1j * rng.uniform(0.0, 2.0 * math.pi))
    return SpinVector(phase * 0.5 * (q[:, 0] + 1j * q[:, 1]))


def random_maximal(dim: int, rng: np.random.Generator) -> SpinVector:
    """Random maximal tripotent exp(i theta) r with random real unit r."""
    r = rng.standard_normal(dim)
    r /= np.linalg.norm(r)
    phase = np.exp(1j * rng.uniform(0.0, 2.0 * math.pi))
    return SpinVector(phase * r)
