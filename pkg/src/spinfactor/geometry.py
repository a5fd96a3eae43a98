"""Unit-ball geometry: translation flow, transvections, invariant metric,
curvature at the origin and the three-dimensional section samplers.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import config
from ._backend import rk4_flow_raw
from .core import DomainError, SpinVector, _check_dims
from .triple import LinearOperator, bergman, d_operator, triple_product
from .tripotent import singular_decomposition, singular_values

__all__ = [
    "FlowConfig",
    "in_unit_ball",
    "translation_field",
    "flow",
    "flow_from_origin_closed_form",
    "transvection_to",
    "invariant_metric",
    "curvature_zero",
    "sample_section_d1",
    "sample_section_dual",
]


@dataclass(frozen=True)
class FlowConfig:
    step: float = 1e-3
    max_steps: int = 10_000_000
    tolerance: float = config.DEFAULT_TOL

    def __post_init__(self) -> None:
        if self.step <= 0.0:
            raise DomainError("step must be positive")
        if self.max_steps < 1:
            raise DomainError("max_steps must be positive")


def _operator_norms(coords2d: np.ndarray) -> np.ndarray:
    """Largest singular numbers of the rows of a (k, n) complex array."""
    sq = np.sum(np.abs(coords2d) ** 2, axis=1)
    absdet = np.abs(np.sum(coords2d * coords2d, axis=1))
    plus = np.sqrt(np.maximum(sq + absdet, 0.0))
    minus = np.sqrt(np.maximum(sq - absdet, 0.0))
    return (plus + minus) / math.sqrt(2.0)


def in_unit_ball(a: SpinVector, tol: float = config.DEFAULT_TOL) -> bool:
    return singular_values(a)[0] <= 1.0 + tol


def translation_field(a: SpinVector, w: SpinVector) -> SpinVector:
    """Generator of translation by a, evaluated at w: a - {w,a,w}."""
    _check_dims(a, w)
    return a - triple_product(w, a, w)


def flow(a: SpinVector, z: SpinVector, tau: float,
         cfg: FlowConfig | None = None) -> SpinVector:
    """Integrate dw/dtau = a - {w,a,w} from w(0) = z over [0, tau]."""
    cfg = cfg or FlowConfig()
    _check_dims(a, z)
    if not in_unit_ball(z, 10.0 * cfg.tolerance):
        raise DomainError("flow must start inside the closed unit ball")
    nsteps = max(1, int(math.ceil(abs(tau) / cfg.step)))
    if nsteps > cfg.max_steps:
        raise DomainError(f"requested horizon needs {nsteps} steps > max_steps")
    endpoint = rk4_flow_raw(a.coords, z.coords, float(tau), cfg.step)
    if not np.all(np.isfinite(endpoint)):
        raise DomainError("flow integration diverged")
    result = SpinVector(endpoint)
    if not in_unit_ball(result, 10.0 * cfg.tolerance):
        raise DomainError("flow left the closed unit ball: step failure")
    return result


def flow_from_origin_closed_form(a: SpinVector, tau: float,
                                 tol: float = config.DEFAULT_TOL) -> SpinVector:
    """tanh(tau*s1)v1 + tanh(tau*s2)v2: the exact origin flow along the frame."""
    if a.norm() == 0.0:
        return SpinVector.zero(a.dim)
    dec = singular_decomposition(a, tol)
    return math.tanh(tau * dec.s1) * dec.v1 + math.tanh(tau * dec.s2) * dec.v2


def transvection_to(b: SpinVector, tol: float = config.DEFAULT_TOL) -> SpinVector:
    """Field coefficient a with exp(xi_a)(0) = b: artanh of the singular data."""
    s1, _ = singular_values(b)
    if s1 >= 1.0:
        raise DomainError("transvection target must lie strictly inside the ball")
    if b.norm() == 0.0:
        return SpinVector.zero(b.dim)
    dec = singular_decomposition(b, tol)
    return math.atanh(dec.s1) * dec.v1 + math.atanh(dec.s2) * dec.v2


def invariant_metric(a: SpinVector, x: SpinVector, y: SpinVector,
                     tol: float = config.DEFAULT_TOL) -> complex:
    """h_a(x, y) = <B(a,a)^-1 x | y> via a linear solve."""
    _check_dims(a, x)
    _check_dims(a, y)
    b = bergman(a, a).matrix
    if np.linalg.cond(b) > 1.0 / max(tol, np.finfo(float).tiny):
        raise DomainError("Bergman operator is numerically singular (|a| >= 1?)")
    solved = np.linalg.solve(b, x.coords)
    return complex(np.vdot(y.coords, solved))


def curvature_zero(x: SpinVector, y: SpinVector) -> LinearOperator:
    """Curvature tensor of the invariant metric at the origin: D(y,x) - D(x,y)."""
    _check_dims(x, y)
    return d_operator(y, x) - d_operator(x, y)


def _section_grid(resolution: int) -> np.ndarray:
    if resolution < 2:
        raise DomainError("resolution must be at least 2")
    axis = np.linspace(-1.2, 1.2, resolution)
    xs, ys, zs = np.meshgrid(axis, axis, axis, indexing="ij")
    return np.column_stack([xs.ravel(), ys.ravel(), zs.ravel()])


def sample_section_d1(resolution: int) -> np.ndarray:
    """Grid over [-1.2, 1.2]^3 with the operator norm of (x, y, iz) attached."""
    pts = _section_grid(resolution)
    coords = np.column_stack([pts[:, 0], pts[:, 1], 1j * pts[:, 2]])
    return np.column_stack([pts, _operator_norms(coords)])


def sample_section_dual(resolution: int) -> np.ndarray:
    """Grid over [-1.2, 1.2]^3 with the trace norm of the functional whose
    representative is (x, y, iz)/2 attached."""
    pts = _section_grid(resolution)
    coords = 0.5 * np.column_stack([pts[:, 0], pts[:, 1], 1j * pts[:, 2]])
    sq = np.sum(np.abs(coords) ** 2, axis=1)
    absdet = np.abs(np.sum(coords * coords, axis=1))
    trace = np.sqrt(np.maximum(2.0 * sq + 2.0 * absdet, 0.0))
    return np.column_stack([pts, trace])
