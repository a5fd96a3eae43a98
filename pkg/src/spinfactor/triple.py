"""The geometric tri-product and its operator forms.

Provides the triple product {a,b,c}, the D and wedge operators, the
conjugate-linear Q operator, the Bergman operator, rotations generated by
D(u_l,u_k) and the unimodular-times-orthogonal triple automorphisms.
"""
from __future__ import annotations

import numpy as np
import scipy.linalg

from . import config
from ._backend import triple_product_raw
from .core import DimensionMismatch, DomainError, SpinVector, _check_dims, inner

__all__ = [
    "LinearOperator",
    "ConjugateLinearOperator",
    "triple_product",
    "d_operator",
    "wedge",
    "q_operator",
    "bergman",
    "make_automorphism",
    "is_triple_automorphism",
    "rotate_in_plane",
    "expm",
]


def _validate_matrix(matrix) -> np.ndarray:
    m = np.array(matrix, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError("operator matrix must be square")
    if not np.all(np.isfinite(m)):
        raise ValueError("operator entries must be finite")
    m.setflags(write=False)
    return m


class LinearOperator:
    """n x n complex matrix acting linearly on spin vectors, z -> M z."""

    __slots__ = ("_matrix",)

    def __init__(self, matrix) -> None:
        self._matrix = _validate_matrix(matrix)

    @classmethod
    def identity(cls, dim: int) -> "LinearOperator":
        return cls(np.eye(dim, dtype=np.complex128))

    @classmethod
    def from_json(cls, payload: dict) -> "LinearOperator":
        re = np.asarray(payload["re"], dtype=np.float64)
        im = np.asarray(payload["im"], dtype=np.float64)
        if re.shape != im.shape or re.ndim != 2:
            raise ValueError("'re' and 'im' must be equal-shape square arrays")
        return cls(re + 1j * im)

    def to_json(self) -> dict:
        return {
            "re": [[float(x) for x in row] for row in self._matrix.real],
            "im": [[float(x) for x in row] for row in self._matrix.imag],
        }

    @property
    def matrix(self) -> np.ndarray:
        return self._matrix

    @property
    def dim(self) -> int:
        return self._matrix.shape[0]

    def __call__(self, v: SpinVector) -> SpinVector:
        if v.dim != self.dim:
            raise DimensionMismatch(f"operator dim {self.dim} vs vector dim {v.dim}")
        return SpinVector(self._matrix @ v.coords)

    def __matmul__(self, other):
        if isinstance(other, LinearOperator):
            return LinearOperator(self._matrix @ other._matrix)
        if isinstance(other, ConjugateLinearOperator):
            return ConjugateLinearOperator(self._matrix @ other.matrix)
        return NotImplemented

    def __add__(self, other: "LinearOperator") -> "LinearOperator":
        return LinearOperator(self._matrix + other._matrix)

    def __sub__(self, other: "LinearOperator") -> "LinearOperator":
        return LinearOperator(self._matrix - other._matrix)

    def __mul__(self, scalar: complex) -> "LinearOperator":
        return LinearOperator(self._matrix * complex(scalar))

    __rmul__ = __mul__

    def __neg__(self) -> "LinearOperator":
        return LinearOperator(-self._matrix)

    def __repr__(self) -> str:
        return f"LinearOperator(dim={self.dim})"


class ConjugateLinearOperator:
    """n x n matrix applied after coordinate conjugation, z -> M conj(z)."""

    __slots__ = ("_matrix",)

    def __init__(self, matrix) -> None:
        self._matrix = _validate_matrix(matrix)

    @classmethod
    def from_json(cls, payload: dict) -> "ConjugateLinearOperator":
        re = np.asarray(payload["re"], dtype=np.float64)
        im = np.asarray(payload["im"], dtype=np.float64)
        if re.shape != im.shape or re.ndim != 2:
            raise ValueError("'re' and 'im' must be equal-shape square arrays")
        return cls(re + 1j * im)

    def to_json(self) -> dict:
        return {
            "re": [[float(x) for x in row] for row in self._matrix.real],
            "im": [[float(x) for x in row] for row in self._matrix.imag],
        }

    @property
    def matrix(self) -> np.ndarray:
        return self._matrix

    @property
    def dim(self) -> int:
        return self._matrix.shape[0]

    def __call__(self, v: SpinVector) -> SpinVector:
        if v.dim != self.dim:
            raise DimensionMismatch(f"operator dim {self.dim} vs vector dim {v.dim}")
        return SpinVector(self._matrix @ np.conjugate(v.coords))

    def __matmul__(self, other):
        # conj-linear after conj-linear is linear: z -> M1 conj(M2 conj z)
        if isinstance(other, ConjugateLinearOperator):
            return LinearOperator(self._matrix @ np.conjugate(other._matrix))
        if isinstance(other, LinearOperator):
            return ConjugateLinearOperator(self._matrix @ np.conjugate(other.matrix))
        return NotImplemented

    def __add__(self, other: "ConjugateLinearOperator") -> "ConjugateLinearOperator":
        return ConjugateLinearOperator(self._matrix + other._matrix)

    def __sub__(self, other: "ConjugateLinearOperator") -> "ConjugateLinearOperator":
        return ConjugateLinearOperator(self._matrix - other._matrix)

    def __mul__(self, scalar: complex) -> "ConjugateLinearOperator":
        return ConjugateLinearOperator(self._matrix * complex(scalar))

    __rmul__ = __mul__

    def __neg__(self) -> "ConjugateLinearOperator":
        return ConjugateLinearOperator(-self._matrix)

    def __repr__(self) -> str:
        return f"ConjugateLinearOperator(dim={self.dim})"


def triple_product(a: SpinVector, b: SpinVector, c: SpinVector) -> SpinVector:
    """{a,b,c} = <a|b>c + <c|b>a - <a|conj(c)>conj(b)."""
    _check_dims(a, b)
    _check_dims(a, c)
    return SpinVector(triple_product_raw(a.coords, b.coords, c.coords))


def d_operator(a: SpinVector, b: SpinVector) -> LinearOperator:
    """Matrix of z -> {a,b,z}; equals <a|b> I + wedge(a,b)."""
    _check_dims(a, b)
    ac, bc = a.coords, b.coords
    m = inner(a, b) * np.eye(a.dim, dtype=np.complex128)
    m += np.outer(ac, np.conjugate(bc))
    m -= np.outer(np.conjugate(bc), ac)
    return LinearOperator(m)


def wedge(a: SpinVector, b: SpinVector) -> LinearOperator:
    """Bivector part of the D operator: (a^b)z = <z|b>a - <a|conj(z)>conj(b)."""
    _check_dims(a, b)
    ac, bc = a.coords, b.coords
    m = np.outer(ac, np.conjugate(bc)) - np.outer(np.conjugate(bc), ac)
    return LinearOperator(m)


def q_operator(a: SpinVector) -> ConjugateLinearOperator:
    """Conjugate-linear operator z -> {a,z,a} = 2<a|z>a - (det a) conj(z)."""
    ac = a.coords
    deta = complex(np.dot(ac, ac))
    m = 2.0 * np.outer(ac, ac) - deta * np.eye(a.dim, dtype=np.complex128)
    return ConjugateLinearOperator(m)


def bergman(a: SpinVector, b: SpinVector) -> LinearOperator:
    """Bergman operator B(a,b) = I - 2 D(a,b) + Q(a)Q(b)."""
    _check_dims(a, b)
    eye = LinearOperator.identity(a.dim)
    return eye - 2.0 * d_operator(a, b) + q_operator(a) @ q_operator(b)


def expm(op: LinearOperator) -> LinearOperator:
    """Matrix exponential (scaling-and-squaring Pade)."""
    return LinearOperator(scipy.linalg.expm(op.matrix))


def make_automorphism(lam: complex, orthogonal: np.ndarray,
                      tol: float = config.DEFAULT_TOL) -> LinearOperator:
    """Triple automorphism lam*U from a unimodular lam and real orthogonal U."""
    lam = complex(lam)
    if abs(abs(lam) - 1.0) > tol:
        raise DomainError(f"|lambda| = {abs(lam)} is not 1")
    u = np.asarray(orthogonal, dtype=np.float64)
    if u.ndim != 2 or u.shape[0] != u.shape[1]:
        raise DomainError("U must be a square real matrix")
    if np.max(np.abs(u.T @ u - np.eye(u.shape[0]))) > tol:
        raise DomainError("U is not orthogonal within tolerance")
    return LinearOperator(lam * u)


def is_triple_automorphism(op: LinearOperator, trials: int = 50, seed: int = 0,
                           tol: float = config.DEFAULT_TOL) -> bool:
    """Seeded probabilistic check of T{a,b,c} = {Ta,Tb,Tc} on random triples."""
    m = op.matrix
    if np.linalg.cond(m) > 1.0 / max(tol, np.finfo(float).tiny):
        raise DomainError("operator is singular within tolerance")
    rng = np.random.default_rng(seed)
    n = op.dim
    for _ in range(trials):
        vecs = []
        for _ in range(3):
            z = rng.standard_normal(n) + 1j * rng.standard_normal(n)
            vecs.append(z / np.linalg.norm(z))
        a, b, c = vecs
        lhs = m @ triple_product_raw(a, b, c)
        rhs = triple_product_raw(m @ a, m @ b, m @ c)
        if np.linalg.norm(lhs - rhs) > tol:
            return False
    return True


def _is_tcar_pair(u_l: SpinVector, u_k: SpinVector, tol: float) -> bool:
    # pairwise canonical anticommutation relations, including tripotency
    checks = (
        (triple_product(u_l, u_k, u_l), -u_k),
        (triple_product(u_k, u_l, u_k), -u_l),
        (triple_product(u_l, u_k, u_k), u_l),
        (triple_product(u_k, u_l, u_l), u_k),
        (triple_product(u_l, u_l, u_l), u_l),
        (triple_product(u_k, u_k, u_k), u_k),
    )
    return all((lhs - rhs).norm() <= tol for lhs, rhs in checks)


def rotate_in_plane(u_l: SpinVector, u_k: SpinVector, theta: float,
                    tol: float = config.DEFAULT_TOL) -> LinearOperator:
    """exp(theta D(u_l,u_k)): rotation by -theta in the real plane span{u_l,u_k}.

    The pair must satisfy the canonical anticommutation relations (any two
    distinct members of a TCAR basis do).
    """
    _check_dims(u_l, u_k)
    if not _is_tcar_pair(u_l, u_k, tol):
        raise DomainError("vectors do not form a canonical anticommuting pair")
    return expm(float(theta) * d_operator(u_l, u_k))
