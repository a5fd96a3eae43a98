"""Predual embedding, trace norm and state decomposition.

A functional is stored by its check-representative ``rep``; evaluation carries
the factor 2, ``f(w) = <w|2*rep>``, so the dual of a minimal tripotent has
trace norm one.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from . import config
from .core import DomainError, SpinVector, det, euclid_norm, inner
from .tripotent import singular_decomposition

__all__ = ["Functional", "hat", "check", "trace_norm", "state_decomposition"]


@dataclass(frozen=True)
class Functional:
    rep: SpinVector

    def __call__(self, w: SpinVector) -> complex:
        return 2.0 * inner(w, self.rep)

    def to_json(self) -> dict:
        return {"functional": self.rep.to_json()}


def hat(a: SpinVector) -> Functional:
    """The functional w -> <w|2a>."""
    return Functional(a)


def check(f: Functional) -> SpinVector:
    """Representative of f: the unique vector with f(w) = <w|2*check(f)>."""
    return f.rep


def trace_norm(f: Functional) -> float:
    """Dual norm s1 + s2 of the representative."""
    rep = f.rep
    return math.sqrt(max(2.0 * euclid_norm(rep) ** 2 + 2.0 * abs(det(rep)), 0.0))


def state_decomposition(f: Functional, tol: float = config.DEFAULT_TOL
                        ) -> tuple[float, Functional, float, Functional]:
    """Write a norm-one functional as s1*hat(v1) + s2*hat(v2), s1 + s2 = 1."""
    if abs(trace_norm(f) - 1.0) > tol:
        raise DomainError("state decomposition requires trace norm 1")
    dec = singular_decomposition(f.rep, tol)
    return dec.s1, hat(dec.v1), dec.s2, hat(dec.v2)
