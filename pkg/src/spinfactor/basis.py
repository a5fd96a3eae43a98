"""TCAR bases, spin grids, the 2x2-matrix model of the 4-dimensional factor
and the 6-dimensional grid of antisymmetric 4x4 matrices.

Verification runs through a small model abstraction so the same relation
checks apply to coordinate vectors (spin triple product) and to matrices
under the product {a,b,c} = (a b* c + c b* a)/2.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from . import config
from .core import DomainError, SpinVector
from ._backend import triple_product_raw

__all__ = [
    "Report",
    "TcarBasis",
    "SpinGrid4",
    "verify_tcar",
    "verify_tcar_matrices",
    "random_tcar",
    "verify_spin_grid",
    "verify_spin_grid_matrices",
    "canonical_grid",
    "matrix_rep",
    "matrix_triple",
    "matrix_inner",
    "pauli_table",
    "s6_grid",
    "s6_quadrangles",
    "S6_TRIPOTENT_SCALE",
    "SIGMA1",
    "SIGMA2",
    "SIGMA3",
]

SIGMA1 = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=np.complex128)
SIGMA2 = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=np.complex128)
SIGMA3 = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=np.complex128)

# Scale c for which c*D(u_k,u_l) is a tripotent of the matrix triple product;
# the elementary antisymmetric generators are tripotents as they stand.
S6_TRIPOTENT_SCALE = 1.0


@dataclass(frozen=True)
class Report:
    passed: bool
    violations: tuple[str, ...]

    def to_json(self) -> dict:
        return {"pass": self.passed, "violations": list(self.violations)}


@dataclass(frozen=True)
class TcarBasis:
    vectors: tuple[SpinVector, ...]

    @property
    def dim(self) -> int:
        return len(self.vectors)


@dataclass(frozen=True)
class SpinGrid4:
    """Four minimal tripotents (v, v_bar; w, w_bar) forming an odd quadrangle."""

    v: SpinVector
    v_bar: SpinVector
    w: SpinVector
    w_bar: SpinVector

    def __post_init__(self) -> None:
        if any(e.dim != 4 for e in self.elements()):
            raise DomainError("spin grid elements must have dimension 4")

    def elements(self) -> tuple[SpinVector, SpinVector, SpinVector, SpinVector]:
        return (self.v, self.v_bar, self.w, self.w_bar)


# ---------------------------------------------------------------------------
# model abstraction


class _TripleModel:
    """A concrete triple system: elements, product, flattening, ambient basis."""

    def __init__(self, triple: Callable, flatten: Callable,
                 ambient: Sequence) -> None:
        self.triple = triple
        self._flatten = flatten
        self.ambient = list(ambient)
        b = np.array([flatten(x) for x in self.ambient]).T  # columns orthonormal
        self._basis_h = b.conj().T

    def norm(self, x) -> float:
        return float(np.linalg.norm(self._flatten(x)))

    def coords(self, x) -> np.ndarray:
        return self._basis_h @ self._flatten(x)

    def d_rep(self, s, t) -> np.ndarray:
        """Matrix of z -> {s,t,z} over the ambient orthonormal basis."""
        cols = [self.coords(self.triple(s, t, e)) for e in self.ambient]
        return np.array(cols).T


def _vector_model(dim: int) -> _TripleModel:
    return _TripleModel(
        triple=triple_product_raw,
        flatten=lambda x: x,
        ambient=[_unit(dim, j) for j in range(dim)],
    )


def _unit(dim: int, j: int) -> np.ndarray:
    e = np.zeros(dim, dtype=np.complex128)
    e[j] = 1.0
    return e


def matrix_triple(a: np.ndarray, b: np.ndarray, c: np.ndarray) -> np.ndarray:
    """{a,b,c} = (a b* c + c b* a)/2 for complex matrices."""
    bh = b.conj().T
    return 0.5 * (a @ bh @ c + c @ bh @ a)


def matrix_inner(a: np.ndarray, b: np.ndarray) -> complex:
    """Inner product tr(a b*)/n normalizing TCAR matrix bases to unit norm."""
    return complex(np.trace(a @ b.conj().T) / a.shape[0])


def _antisym_model() -> _TripleModel:
    return _TripleModel(
        triple=matrix_triple,
        flatten=lambda m: m.reshape(-1) / 2.0,  # tr(ab*)/4 becomes the std inner
        ambient=[_elementary_antisym(k, l) * np.sqrt(2.0) for k, l in
                 ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))],
    )


def _elementary_antisym(k: int, l: int) -> np.ndarray:
    m = np.zeros((4, 4), dtype=np.complex128)
    m[k, l] = 1.0
    m[l, k] = -1.0
    return m


# ---------------------------------------------------------------------------
# TCAR verification


def _tcar_violation(model: _TripleModel, elems: Sequence, tol: float) -> str | None:
    n = len(elems)
    for l in range(n):
        for k in range(n):
            if l != k:
                if model.norm(model.triple(elems[l], elems[k], elems[l]) + elems[k]) > tol:
                    return f"tbasis1 at (l={l}, k={k}): {{u_l,u_k,u_l}} != -u_k"
            if model.norm(model.triple(elems[l], elems[k], elems[k]) - elems[l]) > tol:
                return f"tbasis2 at (l={l}, k={k}): {{u_l,u_k,u_k}} != u_l"
            if model.norm(model.triple(elems[k], elems[k], elems[l]) - elems[l]) > tol:
                return f"tbasis2 at (l={l}, k={k}): {{u_k,u_k,u_l}} != u_l"
    for l in range(n):
        for k in range(n):
            for m in range(n):
                if len({l, k, m}) == 3:
                    if model.norm(model.triple(elems[l], elems[k], elems[m])) > tol:
                        return f"tbasis3 at (l={l}, k={k}, m={m}): mixed triple != 0"
    return None


def verify_tcar(vectors: Sequence[SpinVector],
                tol: float = config.DEFAULT_TOL) -> Report:
    """Check the triple canonical anticommutation relations on a full basis."""
    vectors = list(vectors)
    if not vectors:
        raise DomainError("empty basis")
    dim = vectors[0].dim
    if any(v.dim != dim for v in vectors):
        raise DomainError("basis vectors have mixed dimensions")
    if len(vectors) != dim:
        raise DomainError(f"need {dim} vectors for a basis of dimension {dim}")
    violation = _tcar_violation(_vector_model(dim), [v.coords for v in vectors], tol)
    return Report(passed=violation is None,
                  violations=() if violation is None else (violation,))


def verify_tcar_matrices(mats: Sequence[np.ndarray],
                         tol: float = config.DEFAULT_TOL) -> Report:
    """TCAR check for six antisymmetric 4x4 matrices under the matrix product."""
    mats = [np.asarray(m, dtype=np.complex128) for m in mats]
    if len(mats) != 6 or any(m.shape != (4, 4) for m in mats):
        raise DomainError("expected six 4x4 matrices")
    for i, m in enumerate(mats):
        if np.max(np.abs(m + m.T)) > tol:
            raise DomainError(f"matrix {i} is not antisymmetric")
    violation = _tcar_violation(_antisym_model(), mats, tol)
    return Report(passed=violation is None,
                  violations=() if violation is None else (violation,))


def random_tcar(dim: int, seed: int) -> TcarBasis:
    """Image of the natural basis under a seeded automorphism lambda*U."""
    if dim < 2 or dim > config.max_dim():
        raise DomainError(f"dimension must lie in [2, {config.max_dim()}]")
    rng = np.random.default_rng(seed)
    g = rng.standard_normal((dim, dim))
    q, r = np.linalg.qr(g)
    q = q * np.sign(np.diag(r))  # deterministic orientation
    lam = np.exp(2j * np.pi * rng.uniform())
    return TcarBasis(tuple(SpinVector(lam * q[:, j]) for j in range(dim)))


# ---------------------------------------------------------------------------
# spin grid verification


def _peirce_from_rep(d: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    # spectral polynomials for spectrum {1, 1/2, 0}
    eye = np.eye(d.shape[0], dtype=np.complex128)
    p1 = 2.0 * d @ (d - 0.5 * eye)
    p0 = 2.0 * (d - eye) @ (d - 0.5 * eye)
    return p1, eye - p1 - p0, p0


def _grid_violations(model: _TripleModel, elems: Sequence, names: Sequence[str],
                     tol: float) -> list[str]:
    out: list[str] = []
    d_reps = []
    for name, t in zip(names, elems):
        if model.norm(model.triple(t, t, t) - t) > tol:
            out.append(f"{name} is not a tripotent")
            d_reps.append(None)
            continue
        rep = model.d_rep(t, t)
        d_reps.append(rep)
        ev = np.linalg.eigvals(rep)
        band = np.sqrt(tol)
        on_spectrum = np.min(np.abs(ev[:, None] - np.array([0.0, 0.5, 1.0])), axis=1)
        # minimal: spectrum inside {0, 1/2, 1} with both 0 and 1 present
        if (np.max(on_spectrum) > band or np.min(np.abs(ev)) > band
                or np.min(np.abs(ev - 1.0)) > band):
            out.append(f"{name} is not a minimal tripotent (D spectrum)")
    if any(r is None for r in d_reps):
        return out

    projections = []
    for name, rep in zip(names, d_reps):
        p1, ph, p0 = _peirce_from_rep(rep)
        projections.extend([(name, p) for p in (p1, ph, p0)])
    worst = 0.0
    for i in range(len(projections)):
        for j in range(i + 1, len(projections)):
            p, q = projections[i][1], projections[j][1]
            worst = max(worst, float(np.max(np.abs(p @ q - q @ p))))
    if worst > tol:
        out.append(f"Peirce projections do not commute (worst {worst:.3e})")

    v, vb, w, wb = elems
    for (a, b), label in (((v, vb), "(v, v_bar)"), ((w, wb), "(w, w_bar)")):
        if model.norm(model.triple(a, a, b)) > tol or model.norm(model.triple(b, b, a)) > tol:
            out.append(f"pair {label} is not algebraically orthogonal")
    for (a, b), label in (((v, w), "(v, w)"), ((v, wb), "(v, w_bar)"),
                          ((w, vb), "(w, v_bar)"), ((wb, vb), "(w_bar, v_bar)")):
        bad = (model.norm(model.triple(a, a, b) - 0.5 * b) > tol
               or model.norm(model.triple(b, b, a) - 0.5 * a) > tol)
        if bad:
            out.append(f"pair {label} is not co-orthogonal")
    if model.norm(model.triple(w, v, wb) + 0.5 * vb) > tol:
        out.append("odd condition {w,v,w_bar} = -v_bar/2 fails")
    if model.norm(model.triple(v, w, vb) + 0.5 * wb) > tol:
        out.append("odd condition {v,w,v_bar} = -w_bar/2 fails")
    return out


_GRID_NAMES = ("v", "v_bar", "w", "w_bar")


def verify_spin_grid(grid: SpinGrid4, tol: float = config.DEFAULT_TOL) -> Report:
    """Check all four spin-grid conditions; the report lists every failure."""
    elems = grid.elements()
    dim = elems[0].dim
    if any(e.dim != dim for e in elems):
        raise DomainError("grid elements have mixed dimensions")
    violations = _grid_violations(_vector_model(dim),
                                  [e.coords for e in elems], _GRID_NAMES, tol)
    return Report(passed=not violations, violations=tuple(violations))


def verify_spin_grid_matrices(v: np.ndarray, v_bar: np.ndarray, w: np.ndarray,
                              w_bar: np.ndarray,
                              tol: float = config.DEFAULT_TOL) -> Report:
    """Spin-grid check for antisymmetric 4x4 matrices under the matrix product."""
    elems = [np.asarray(m, dtype=np.complex128) for m in (v, v_bar, w, w_bar)]
    for i, m in enumerate(elems):
        if m.shape != (4, 4) or np.max(np.abs(m + m.T)) > tol:
            raise DomainError(f"grid element {i} is not an antisymmetric 4x4 matrix")
    violations = _grid_violations(_antisym_model(), elems, _GRID_NAMES, tol)
    return Report(passed=not violations, violations=tuple(violations))


def canonical_grid() -> SpinGrid4:
    """The standard grid (1,i,0,0)/2, (1,-i,0,0)/2, (0,0,1,i)/2, (0,0,1,-i)/2."""
    v = SpinVector([0.5, 0.5j, 0.0, 0.0])
    w = SpinVector([0.0, 0.0, 0.5, 0.5j])
    return SpinGrid4(v=v, v_bar=v.conjugate(), w=w, w_bar=w.conjugate())


# ---------------------------------------------------------------------------
# 2x2 matrix model of the 4-dimensional factor


def matrix_rep(a: SpinVector) -> np.ndarray:
    """2x2 matrix [[a0-i a1, a2-i a3], [-a2-i a3, a0+i a1]] of a 4-vector."""
    if a.dim != 4:
        raise DomainError("matrix representation requires dimension 4")
    a0, a1, a2, a3 = a.coords
    return np.array(
        [[a0 - 1j * a1, a2 - 1j * a3], [-a2 - 1j * a3, a0 + 1j * a1]],
        dtype=np.complex128,
    )


def pauli_table() -> dict[int, np.ndarray]:
    """Images of the natural TCAR basis: I and -i times the Pauli matrices.

    The sign convention follows the matrix representation itself, so
    ``pauli_table()[j] == matrix_rep(e_j)`` holds exactly.
    """
    eye = np.eye(2, dtype=np.complex128)
    return {
        0: eye,
        1: -1j * SIGMA3,
        2: 1j * SIGMA2,
        3: -1j * SIGMA1,
    }


# ---------------------------------------------------------------------------
# the 6-dimensional grid of antisymmetric 4x4 matrices


def s6_grid() -> dict[str, np.ndarray]:
    """Six antisymmetric generators, in three algebraically orthogonal pairs.

    e31 = -e13 keeps all three glued quadrangles odd.
    """
    return {
        "e01": _elementary_antisym(0, 1),
        "e23": _elementary_antisym(2, 3),
        "e02": _elementary_antisym(0, 2),
        "e31": _elementary_antisym(3, 1),
        "e03": _elementary_antisym(0, 3),
        "e12": _elementary_antisym(1, 2),
    }


def s6_quadrangles() -> tuple[tuple[np.ndarray, ...], ...]:
    """The three odd quadrangles of the grid, glued pairwise by a diagonal."""
    g = s6_grid()
    return (
        (g["e01"], g["e23"], g["e02"], g["e31"]),
        (g["e02"], g["e31"], g["e03"], g["e12"]),
        (g["e01"], g["e23"], g["e03"], g["e12"]),
    )
