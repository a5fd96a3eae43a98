"""Lorentz Lie-algebra representations on the 4-dimensional spin factor.

Three representations share the rotation/boost generator names J1..K3:

* ``spin1``   -- rotations D_jk over the natural TCAR basis, boosts i*D_0k;
* ``plus``    -- the self-dual halves (D_0k + D_lm)/2, boosts i times that;
* ``minus``   -- the anti-self-dual halves.

Also provides the space-time/momentum/phase-space embeddings, the
electromagnetic field tensor, the Hodge split separating plus from minus,
the conjugation lift to the 6-dimensional factor and the restrictions onto
the invariant spinor planes.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

import numpy as np

from . import config
from .core import DomainError, SpinVector
from .triple import LinearOperator, expm

__all__ = [
    "REPS",
    "GENERATORS",
    "SUBSPACES",
    "FourVector",
    "generator",
    "exp_generator",
    "spacetime_embed",
    "momentum_embed",
    "induced_spacetime_transform",
    "phase_space_embed",
    "em_tensor",
    "faraday_rep",
    "hodge_star",
    "dual_split",
    "SELF_DUAL_SIGN",
    "lift",
    "lift_basis_matrix",
    "jk_tcar_matrices",
    "bispinor_basis",
    "restrict",
]

REPS = ("spin1", "plus", "minus")
GENERATORS = ("J1", "J2", "J3", "K1", "K2", "K3")
SUBSPACES = ("upsilon1", "upsilon2", "upsilon1t", "upsilon2t")


def _d(j: int, k: int) -> np.ndarray:
    m = np.zeros((4, 4), dtype=np.complex128)
    m[j, k] = 1.0
    m[k, j] = -1.0
    return m


def _build_generators() -> dict[tuple[str, str], np.ndarray]:
    d01, d02, d03 = _d(0, 1), _d(0, 2), _d(0, 3)
    d23, d31, d12 = _d(2, 3), _d(3, 1), _d(1, 2)
    gens: dict[tuple[str, str], np.ndarray] = {}
    spin1_j = (d23, d31, d12)
    plus_j = (0.5 * (d01 + d23), 0.5 * (d02 + d31), 0.5 * (d03 + d12))
    minus_j = (0.5 * (d23 - d01), 0.5 * (d31 - d02), 0.5 * (d12 - d03))
    for k, (s, p, m) in enumerate(zip(spin1_j, plus_j, minus_j), start=1):
        gens[("spin1", f"J{k}")] = s
        gens[("spin1", f"K{k}")] = 1j * _d(0, k)
        gens[("plus", f"J{k}")] = p
        gens[("plus", f"K{k}")] = 1j * p
        gens[("minus", f"J{k}")] = m
        gens[("minus", f"K{k}")] = 1j * m
    for g in gens.values():
        g.setflags(write=False)
    return gens


_GENERATORS = _build_generators()


def generator(rep: str, kind: str) -> LinearOperator:
    """Generator matrix of the given representation, as a 4x4 operator."""
    try:
        return LinearOperator(_GENERATORS[(rep, kind)])
    except KeyError:
        raise DomainError(f"unknown representation/generator ({rep!r}, {kind!r})") from None


def exp_generator(rep: str, kind: str, phi: float) -> LinearOperator:
    """Matrix exponential exp(phi * generator(rep, kind))."""
    return expm(float(phi) * generator(rep, kind))


# ---------------------------------------------------------------------------
# space-time and momentum embeddings


@dataclass(frozen=True)
class FourVector:
    """Real four-vector with a role tag and the light-speed constant."""

    components: tuple[float, float, float, float]
    kind: str = "spacetime"  # or "momentum"
    c: float = 1.0

    def __post_init__(self) -> None:
        if self.kind not in ("spacetime", "momentum"):
            raise DomainError(f"unknown four-vector kind {self.kind!r}")
        if len(self.components) != 4 or not all(np.isfinite(self.components)):
            raise DomainError("four-vector needs four finite components")

    @classmethod
    def from_json(cls, payload: dict, c: float = 1.0) -> "FourVector":
        if set(payload) == {"t", "x", "y", "z"}:
            comps = (payload["t"], payload["x"], payload["y"], payload["z"])
            return cls(tuple(float(v) for v in comps), kind="spacetime", c=c)
        if set(payload) == {"p0", "p1", "p2", "p3"}:
            comps = (payload["p0"], payload["p1"], payload["p2"], payload["p3"])
            return cls(tuple(float(v) for v in comps), kind="momentum", c=c)
        raise ValueError("four-vector payload needs keys t,x,y,z or p0..p3")

    def to_json(self) -> dict:
        keys = ("t", "x", "y", "z") if self.kind == "spacetime" else ("p0", "p1", "p2", "p3")
        return dict(zip(keys, (float(v) for v in self.components)))


def spacetime_embed(fv: FourVector) -> SpinVector:
    """ct*u0 - ix*u1 - iy*u2 - iz*u3; determinant is the interval (ct)^2 - |r|^2."""
    if fv.kind != "spacetime":
        raise DomainError("expected a spacetime four-vector")
    t, x, y, z = fv.components
    return SpinVector([fv.c * t, -1j * x, -1j * y, -1j * z])


def momentum_embed(fv: FourVector) -> SpinVector:
    """i*p0*u0 + p1*u1 + p2*u2 + p3*u3; determinant is -(m0 c)^2."""
    if fv.kind != "momentum":
        raise DomainError("expected a momentum four-vector")
    p0, p1, p2, p3 = fv.components
    return SpinVector([1j * p0, p1, p2, p3])


def induced_spacetime_transform(op: LinearOperator, c: float = 1.0,
                                tol: float = config.DEFAULT_TOL) -> np.ndarray:
    """Real 4x4 matrix of Psi^-1 T Psi for an operator preserving the
    space-time slice (first coordinate real, the rest imaginary)."""
    if op.dim != 4:
        raise DomainError("expected a 4x4 operator")
    psi = np.diag([c, -1j, -1j, -1j]).astype(np.complex128)
    lam = np.diag([1.0 / c, 1j, 1j, 1j]) @ op.matrix @ psi
    if float(np.max(np.abs(lam.imag))) > tol:
        raise DomainError("operator does not preserve the space-time slice")
    return lam.real.copy()


def phase_space_embed(model: str, spacetime: tuple[float, float, float, float],
                      kinematics: tuple[float, float, float, float],
                      constant: float, c: float = 1.0) -> SpinVector:
    """Phase-space point on the 4-dimensional factor.

    ``space_momentum``: kinematics = (E/c, p1, p2, p3), constant converts
    momentum to length.  ``space_velocity``: kinematics = (gamma,
    gamma*v1/c, gamma*v2/c, gamma*v3/c), constant converts velocity to length.
    """
    if constant <= 0.0 or not np.isfinite(constant):
        raise DomainError("the unit-matching constant must be positive")
    t, x, y, z = (float(v) for v in spacetime)
    k0, k1, k2, k3 = (float(v) for v in kinematics)
    if model not in ("space_momentum", "space_velocity"):
        raise DomainError(f"unknown phase-space model {model!r}")
    return SpinVector([
        c * t + 1j * constant * k0,
        constant * k1 - 1j * x,
        constant * k2 - 1j * y,
        constant * k3 - 1j * z,
    ])


def em_tensor(e_field: tuple[float, float, float],
              b_field: tuple[float, float, float], c: float = 1.0) -> LinearOperator:
    """Antisymmetric field tensor: E in the time row/column, cB in the
    rotation slots."""
    e1, e2, e3 = (float(v) for v in e_field)
    b1, b2, b3 = (float(v) for v in b_field)
    cb1, cb2, cb3 = c * b1, c * b2, c * b3
    return LinearOperator(np.array([
        [0.0, e1, e2, e3],
        [-e1, 0.0, cb3, -cb2],
        [-e2, -cb3, 0.0, cb1],
        [-e3, cb2, -cb1, 0.0],
    ], dtype=np.complex128))


def faraday_rep(e_field: tuple[float, float, float],
                b_field: tuple[float, float, float], c: float = 1.0) -> LinearOperator:
    """i * sum_k F_k plus-generator(J_k) with the Faraday vector F = E + icB."""
    f = np.asarray(e_field, dtype=np.complex128) + 1j * c * np.asarray(b_field, dtype=np.complex128)
    m = sum(1j * f[k] * _GENERATORS[("plus", f"J{k + 1}")] for k in range(3))
    return LinearOperator(m)


# ---------------------------------------------------------------------------
# Hodge split


def _levi_civita() -> np.ndarray:
    eps = np.zeros((4, 4, 4, 4))
    for p in permutations(range(4)):
        sign = 1
        q = list(p)
        for i in range(4):
            for j in range(i + 1, 4):
                if q[i] > q[j]:
                    sign = -sign
        eps[p] = sign
    return eps


_EPS = _levi_civita()


def hodge_star(op: LinearOperator, tol: float = config.DEFAULT_TOL) -> LinearOperator:
    """(*A)_ij = (1/2) eps_ijkl A_kl on antisymmetric 4x4 operators."""
    m = op.matrix
    if m.shape != (4, 4):
        raise DomainError("Hodge star requires a 4x4 operator")
    if float(np.max(np.abs(m + m.T))) > tol:
        raise DomainError("Hodge star requires an antisymmetric operator")
    return LinearOperator(0.5 * np.einsum("ijkl,kl->ij", _EPS, m))


def _self_dual_sign() -> int:
    g = _GENERATORS[("plus", "J1")]
    starred = 0.5 * np.einsum("ijkl,kl->ij", _EPS, g)
    if np.allclose(starred, g):
        return 1
    if np.allclose(starred, -g):
        return -1
    raise RuntimeError("plus generator is not an eigenvector of the Hodge star")


# Orientation of the split, fixed once numerically from *plus(J1).
SELF_DUAL_SIGN = _self_dual_sign()


def dual_split(op: LinearOperator, tol: float = config.DEFAULT_TOL
               ) -> tuple[LinearOperator, LinearOperator]:
    """Split an antisymmetric operator into its self-dual and anti-self-dual
    parts (T +/- sigma *T)/2 with the module-level orientation sign."""
    star = hodge_star(op, tol)
    plus_part = 0.5 * (op + SELF_DUAL_SIGN * star)
    minus_part = 0.5 * (op - SELF_DUAL_SIGN * star)
    return plus_part, minus_part


# ---------------------------------------------------------------------------
# lift to the 6-dimensional factor


def lift(lam: LinearOperator, op: LinearOperator) -> LinearOperator:
    """Conjugation lift: T -> Lam T Lam^-1."""
    m = lam.matrix
    if np.linalg.cond(m) > 1e12:
        raise DomainError("lift requires an invertible operator")
    return LinearOperator(m @ op.matrix @ np.linalg.inv(m))


def jk_tcar_matrices() -> list[np.ndarray]:
    """TCAR basis {2 plus(J_k)} + {2 minus(K_k)} of the antisymmetric matrices."""
    out = [2.0 * _GENERATORS[("plus", f"J{k}")] for k in (1, 2, 3)]
    out += [2.0 * _GENERATORS[("minus", f"K{k}")] for k in (1, 2, 3)]
    return [m.copy() for m in out]


def lift_basis_matrix(lam: LinearOperator) -> np.ndarray:
    """6x6 matrix of T -> Lam T Lam^-1 over the jk TCAR basis."""
    basis = jk_tcar_matrices()
    m = lam.matrix
    minv = np.linalg.inv(m)
    cols = []
    for b in basis:
        image = m @ b @ minv
        cols.append([np.trace(image @ e.conj().T) / 4.0 for e in basis])
    return np.array(cols).T


# ---------------------------------------------------------------------------
# spinor planes


def bispinor_basis() -> tuple[SpinVector, SpinVector, SpinVector, SpinVector]:
    """(v1, v2, v-1, v-2): minimal tripotents forming an odd quadrangle."""
    v_p1 = SpinVector([0.5, 0.0, 0.0, 0.5j])
    v_p2 = SpinVector([0.0, 0.5j, 0.5, 0.0])
    return v_p1, v_p2, v_p1.conjugate(), v_p2.conjugate()


def _subspace_pairs() -> dict[str, tuple[SpinVector, SpinVector]]:
    v1, v2, vm1, vm2 = bispinor_basis()
    return {
        "upsilon1": (v1, v2),
        "upsilon2": (vm1, vm2),
        "upsilon1t": (vm2, v1),
        "upsilon2t": (vm1, v2),
    }


_SUBSPACE_PAIRS = _subspace_pairs()


def restrict(op: LinearOperator, subspace: str,
             tol: float = config.DEFAULT_TOL) -> np.ndarray:
    """2x2 matrix of an operator on one of the invariant spinor planes.

    Raises ``DomainError`` when the plane is not invariant within tolerance.
    """
    try:
        b1, b2 = _SUBSPACE_PAIRS[subspace]
    except KeyError:
        raise DomainError(f"unknown subspace {subspace!r}; choose from {SUBSPACES}") from None
    if op.dim != 4:
        raise DomainError("expected a 4x4 operator")
    cols = []
    for b in (b1, b2):
        image = op.matrix @ b.coords
        alpha = 2.0 * np.vdot(b1.coords, image)  # basis vectors have norm 1/sqrt(2)
        beta = 2.0 * np.vdot(b2.coords, image)
        residual = image - alpha * b1.coords - beta * b2.coords
        if float(np.linalg.norm(residual)) > tol:
            raise DomainError(f"operator does not leave {subspace} invariant")
        cols.append([alpha, beta])
    return np.array(cols, dtype=np.complex128).T
