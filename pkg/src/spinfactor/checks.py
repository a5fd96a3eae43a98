"""Seeded property suites behind the ``check`` CLI command.

Every suite draws all randomness from one ``numpy`` generator seeded by the
caller, counts failing trials against an absolute tolerance and reports the
worst residual it saw.  Suite names double as the CLI vocabulary.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import basis, config, dual, geometry, lorentz, tripotent
from .core import SpinVector, det, euclid_norm, inner
from .triple import (
    LinearOperator,
    bergman,
    d_operator,
    expm,
    q_operator,
    rotate_in_plane,
    triple_product,
)

__all__ = ["CheckResult", "SUITES", "run_suite", "run_all"]


@dataclass(frozen=True)
class CheckResult:
    name: str
    trials: int
    failures: int
    worst: float

    @property
    def passed(self) -> bool:
        return self.failures == 0


class _Tally:
    def __init__(self) -> None:
        self.trials = 0
        self.failures = 0
        self.worst = 0.0

    def add(self, residual: float, tol: float) -> None:
        self.trials += 1
        self.worst = max(self.worst, residual)
        if not (residual <= tol):
            self.failures += 1

    def result(self, name: str) -> CheckResult:
        return CheckResult(name, self.trials, self.failures, self.worst)


def _rand_vec(rng: np.random.Generator, dim: int, unit: bool = True) -> SpinVector:
    z = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    if unit:
        z /= np.linalg.norm(z)
    return SpinVector(z)


def _dims(rng: np.random.Generator) -> int:
    return int(rng.integers(2, 9))


# ---------------------------------------------------------------------------
# core


def _suite_inner_linearity(seed, trials, tol):
    trials = trials or 1000
    rng = np.random.default_rng(seed)
    t = _Tally()
    for _ in range(trials):
        n = _dims(rng)
        a, b, c = (_rand_vec(rng, n) for _ in range(3))
        al = complex(rng.standard_normal() + 1j * rng.standard_normal())
        be = complex(rng.standard_normal() + 1j * rng.standard_normal())
        r1 = abs(inner(al * a + be * b, c) - (al * inner(a, c) + be * inner(b, c)))
        r2 = abs(inner(c, al * a + be * b)
                 - (np.conjugate(al) * inner(c, a) + np.conjugate(be) * inner(c, b)))
        r3 = abs(inner(a, b) - np.conjugate(inner(b, a)))
        t.add(max(r1, r2, r3), 1e-12)
    return t.result("inner-linearity")


def _suite_det_scaling(seed, trials, tol):
    trials = trials or 1000
    rng = np.random.default_rng(seed)
    t = _Tally()
    for _ in range(trials):
        a = _rand_vec(rng, _dims(rng))
        lam = complex(rng.standard_normal() + 1j * rng.standard_normal())
        t.add(abs(det(lam * a) - lam * lam * det(a)), tol)
    return t.result("det-scaling")


def _suite_det_bound(seed, trials, tol):
    trials = trials or 1000
    rng = np.random.default_rng(seed)
    t = _Tally()
    for _ in range(trials):
        a = _rand_vec(rng, _dims(rng), unit=False)
        t.add(max(0.0, abs(det(a)) - euclid_norm(a) ** 2), tol)
    return t.result("det-bound")


# ---------------------------------------------------------------------------
# triple


def _suite_outer_symmetry(seed, trials, tol):
    trials = trials or 1000
    rng = np.random.default_rng(seed)
    t = _Tally()
    for _ in range(trials):
        n = _dims(rng)
        a, b, c = (_rand_vec(rng, n) for _ in range(3))
        t.add((triple_product(a, b, c) - triple_product(c, b, a)).norm(), tol)
    return t.result("outer-symmetry")


def _suite_main_identity(seed, trials, tol):
    trials = trials or 1000
    rng = np.random.default_rng(seed)
    t = _Tally()
    for _ in range(trials):
        n = _dims(rng)
        d, a, b, c = (_rand_vec(rng, n) for _ in range(4))
        dd = d_operator(d, d)
        lhs = dd(triple_product(a, b, c))
        rhs = (triple_product(dd(a), b, c) - triple_product(a, dd(b), c)
               + triple_product(a, b, dd(c)))
        t.add((lhs - rhs).norm(), tol)
    return t.result("main-identity")


def _suite_phase_generator(seed, trials, tol):
    trials = trials or 50
    rng = np.random.default_rng(seed)
    t = _Tally()
    for i in range(trials):
        n = _dims(rng)
        vecs = basis.random_tcar(n, seed=int(rng.integers(2 ** 32))).vectors
        u = vecs[int(rng.integers(n))]
        gen = d_operator(u, 1j * u)
        r1 = float(np.max(np.abs(gen.matrix + 1j * np.eye(n))))
        theta = float(rng.uniform(0.0, 2.0 * math.pi))
        a = _rand_vec(rng, n)
        r2 = (expm(theta * gen)(a) - np.exp(-1j * theta) * a).norm()
        t.add(max(r1, r2), tol)
    return t.result("phase-generator")


def _suite_q_closed_form(seed, trials, tol):
    trials = trials or 500
    rng = np.random.default_rng(seed)
    t = _Tally()
    for _ in range(trials):
        n = _dims(rng)
        u, a = _rand_vec(rng, n), _rand_vec(rng, n)
        closed = 2.0 * inner(u, a) * u - det(u) * a.conjugate()
        t.add((q_operator(u)(a) - closed).norm(), tol)
        t.add((q_operator(u)(a) - triple_product(u, a, u)).norm(), tol)
    return t.result("q-closed-form")


def _suite_reflection_rotation(seed, trials, tol):
    trials = trials or 50
    rng = np.random.default_rng(seed)
    t = _Tally()
    for _ in range(trials):
        n = _dims(rng)
        j, k = rng.choice(n, size=2, replace=False)
        u_l, u_k = SpinVector.basis(n, int(j)), SpinVector.basis(n, int(k))
        a = SpinVector(rng.standard_normal(n).astype(np.complex128))
        # half turn as a double Q reflection
        half_turn = rotate_in_plane(u_l, u_k, math.pi)
        r1 = ((q_operator(u_l) @ q_operator(u_k))(a) - half_turn(a)).norm()
        # arbitrary angle as a double reflection
        theta = float(rng.uniform(0.0, 2.0 * math.pi))
        mirror = expm(0.5 * theta * d_operator(u_l, u_k))(u_k)
        lhs = (q_operator(mirror) @ q_operator(u_k))(a)
        r2 = (lhs - rotate_in_plane(u_l, u_k, theta)(a)).norm()
        t.add(max(r1, r2), tol)
    return t.result("reflection-rotation")


def _suite_d_spectrum(seed, trials, tol):
    trials = trials or 200
    rng = np.random.default_rng(seed)
    t = _Tally()
    for _ in range(trials):
        d = _rand_vec(rng, _dims(rng), unit=False)
        ev = np.linalg.eigvals(d_operator(d, d).matrix)
        t.add(max(float(np.max(-ev.real)), float(np.max(np.abs(ev.imag)))), tol)
    return t.result("d-spectrum")


# ---------------------------------------------------------------------------
# tripotent


def _suite_sd_reconstruction(seed, trials, tol):
    trials = trials or 1000
    rng = np.random.default_rng(seed)
    t = _Tally()
    for _ in range(trials):
        a = _rand_vec(rng, _dims(rng), unit=False)
        dec = tripotent.singular_decomposition(a)
        recon = (dec.s1 * dec.v1 + dec.s2 * dec.v2 - a).norm()
        detprod = abs(dec.s1 * dec.s2 - abs(det(a)))
        s1f, s2f = tripotent.singular_values(a)
        formula = max(abs(dec.s1 - s1f), abs(dec.s2 - s2f))
        minimal = (tripotent.classify(dec.v1) is tripotent.TripotentClass.MINIMAL
                   and tripotent.classify(dec.v2) is tripotent.TripotentClass.MINIMAL)
        orth = float(np.max(np.abs(d_operator(dec.v1, dec.v2).matrix)))
        t.add(max(recon, detprod, formula, 0.0 if minimal else 1.0, orth), tol)
    return t.result("sd-reconstruction")


def _suite_norm_bounds(seed, trials, tol):
    trials = trials or 500
    rng = np.random.default_rng(seed)
    t = _Tally()
    for _ in range(trials):
        a = _rand_vec(rng, _dims(rng), unit=False)
        opn = tripotent.operator_norm(a)
        eun = euclid_norm(a)
        r1 = max(0.0, eun - opn, opn - math.sqrt(2.0) * eun)
        cube = triple_product(a, a, a)
        r2 = abs(tripotent.operator_norm(cube) - opn ** 3) / max(opn ** 3, 1.0)
        sigma = float(np.linalg.svd(d_operator(a, a).matrix, compute_uv=False)[0])
        r3 = abs(opn ** 2 - sigma)
        t.add(max(r1, r2, r3), max(tol, 1e-8))
    return t.result("norm-bounds")


def _suite_odd_calculus(seed, trials, tol):
    trials = trials or 500
    rng = np.random.default_rng(seed)
    t = _Tally()
    for _ in range(trials):
        a = _rand_vec(rng, _dims(rng), unit=False)
        cube = tripotent.apply_odd_function(a, lambda s: s ** 3)
        t.add((cube - triple_product(a, a, a)).norm(), tol)
        ident = tripotent.apply_odd_function(a, lambda s: s)
        t.add((ident - a).norm(), tol)
    return t.result("odd-calculus")


def _suite_minimal_phase(seed, trials, tol):
    trials = trials or 200
    rng = np.random.default_rng(seed)
    t = _Tally()
    for _ in range(trials):
        v = tripotent.random_minimal(_dims(rng), rng)
        w = np.exp(1j * rng.uniform(0.0, 2.0 * math.pi)) * v
        ok = tripotent.classify(w) is tripotent.TripotentClass.MINIMAL
        t.add(0.0 if ok else 1.0, tol)
    return t.result("minimal-phase")


def _suite_peirce_calculus(seed, trials, tol):
    trials = trials or 50
    rng = np.random.default_rng(seed)
    t = _Tally()
    levels = {1.0: 0, 0.5: 1, 0.0: 2}
    for _ in range(trials):
        n = int(rng.choice([4, 6]))
        v = tripotent.random_minimal(n, rng)
        proj = tripotent.peirce_projections(v)
        ps = (proj.p1.matrix, proj.p_half.matrix, proj.p0.matrix)
        eye = np.eye(n)
        worst = float(np.max(np.abs(ps[0] + ps[1] + ps[2] - eye)))
        for i, p in enumerate(ps):
            worst = max(worst, float(np.max(np.abs(p @ p - p))))
            for j, q in enumerate(ps):
                if i != j:
                    worst = max(worst, float(np.max(np.abs(p @ q))))
        dvv = d_operator(v, v).matrix
        worst = max(worst, float(np.max(np.abs(dvv - ps[0] - 0.5 * ps[1]))))
        # Peirce calculus over all 27 index triples
        parts = [SpinVector(p @ _rand_vec(rng, n, unit=False).coords) for p in ps]
        for ji, j in enumerate((1.0, 0.5, 0.0)):
            for ki, k in enumerate((1.0, 0.5, 0.0)):
                for li, l in enumerate((1.0, 0.5, 0.0)):
                    prod = triple_product(parts[ji], parts[ki], parts[li])
                    target = j - k + l
                    if target in levels:
                        residual = prod.coords - ps[levels[target]] @ prod.coords
                        worst = max(worst, float(np.linalg.norm(residual)))
                    else:
                        worst = max(worst, prod.norm())
        t.add(worst, tol)
    return t.result("peirce-calculus")


# ---------------------------------------------------------------------------
# dual


def _suite_dual_pairing(seed, trials, tol):
    trials = trials or 2000
    rng = np.random.default_rng(seed)
    t = _Tally()
    f = dual.hat(_rand_vec(rng, 4, unit=False))
    bound = dual.trace_norm(f)
    worst_over = 0.0
    for _ in range(trials):
        w = _rand_vec(rng, 4, unit=False)
        w = w / tripotent.operator_norm(w)
        worst_over = max(worst_over, abs(f(w)) - bound)
    dec = tripotent.singular_decomposition(dual.check(f))
    attained = abs(f(dec.v1 + dec.v2))
    t.add(max(worst_over, 0.0), tol)
    t.add(max(0.0, bound - attained), 1e-3)
    return t.result("dual-pairing")


def _suite_dual_cylinder(seed, trials, tol):
    trials = trials or 0
    t = _Tally()
    axis = np.linspace(-1.2, 1.2, 13)
    for x in axis:
        for y in axis:
            for z in axis:
                f = dual.hat(SpinVector([0.5 * x, 0.5 * y, 0.5j * z]))
                formula = max(math.hypot(x, y), abs(z))
                t.add(abs(dual.trace_norm(f) - formula), tol)
    return t.result("dual-cylinder")


# ---------------------------------------------------------------------------
# basis


def _suite_tcar_natural(seed, trials, tol):
    t = _Tally()
    for n in range(2, 9):
        vecs = [SpinVector.basis(n, j) for j in range(n)]
        report = basis.verify_tcar(vecs, tol=1e-12)
        t.add(0.0 if report.passed else 1.0, 1e-12)
    return t.result("tcar-natural")


def _suite_tcar_random(seed, trials, tol):
    trials = trials or 100
    rng = np.random.default_rng(seed)
    t = _Tally()
    for _ in range(trials):
        n = _dims(rng)
        b = basis.random_tcar(n, seed=int(rng.integers(2 ** 32)))
        report = basis.verify_tcar(b.vectors, tol)
        gram = np.array([[inner(u, v) for v in b.vectors] for u in b.vectors])
        ortho = float(np.max(np.abs(gram - np.eye(n))))
        t.add(ortho if report.passed else 1.0, tol)
    return t.result("tcar-random")


def _suite_grid_canonical(seed, trials, tol):
    rng = np.random.default_rng(seed)
    t = _Tally()
    grid = basis.canonical_grid()
    t.add(0.0 if basis.verify_spin_grid(grid, tol).passed else 1.0, tol)
    flipped = basis.SpinGrid4(grid.v, grid.v_bar, grid.w, -1.0 * grid.w_bar)
    rep = basis.verify_spin_grid(flipped, tol)
    odd_failed = any("odd condition" in v for v in rep.violations)
    t.add(0.0 if (not rep.passed and odd_failed) else 1.0, tol)
    auto = basis.random_tcar(4, seed=int(rng.integers(2 ** 32)))
    m = np.column_stack([v.coords for v in auto.vectors])
    op = LinearOperator(m)
    mapped = basis.SpinGrid4(*(op(e) for e in grid.elements()))
    t.add(0.0 if basis.verify_spin_grid(mapped, tol).passed else 1.0, tol)
    return t.result("grid-canonical")


def _suite_matrix_iso(seed, trials, tol):
    trials = trials or 500
    rng = np.random.default_rng(seed)
    t = _Tally()
    table = basis.pauli_table()
    for j in range(4):
        t.add(float(np.max(np.abs(table[j] - basis.matrix_rep(SpinVector.basis(4, j))))), tol)
    for _ in range(trials):
        a, b, c = (_rand_vec(rng, 4) for _ in range(3))
        r1 = abs(np.linalg.det(basis.matrix_rep(a)) - det(a))
        lhs = basis.matrix_rep(triple_product(a, b, c))
        rhs = basis.matrix_triple(basis.matrix_rep(a), basis.matrix_rep(b), basis.matrix_rep(c))
        r2 = float(np.max(np.abs(lhs - rhs)))
        al = complex(rng.standard_normal() + 1j * rng.standard_normal())
        r3 = float(np.max(np.abs(basis.matrix_rep(al * a + b)
                                 - al * basis.matrix_rep(a) - basis.matrix_rep(b))))
        t.add(max(r1, r2, r3), max(tol, 1e-10))
    return t.result("matrix-iso")


def _suite_s6_grid(seed, trials, tol):
    t = _Tally()
    for name, mat in basis.s6_grid().items():
        scaled = basis.S6_TRIPOTENT_SCALE * mat
        residual = float(np.max(np.abs(basis.matrix_triple(scaled, scaled, scaled) - scaled)))
        t.add(residual, tol)
    for quad in basis.s6_quadrangles():
        rep = basis.verify_spin_grid_matrices(*quad, tol=tol)
        t.add(0.0 if rep.passed else 1.0, tol)
    return t.result("s6-grid")


# ---------------------------------------------------------------------------
# lorentz


def _suite_lorentz_det(seed, trials, tol):
    trials = trials or 500
    rng = np.random.default_rng(seed)
    t = _Tally()
    ops = [lorentz.exp_generator(rep, g, float(rng.uniform(-1.5, 1.5)))
           for rep in lorentz.REPS for g in lorentz.GENERATORS]
    for _ in range(trials):
        a = _rand_vec(rng, 4)
        op = ops[int(rng.integers(len(ops)))]
        t.add(abs(det(op(a)) - det(a)), tol)
    return t.result("lorentz-det")


def _structure_constants():
    gens = [lorentz.generator("spin1", g).matrix for g in lorentz.GENERATORS]
    flat = np.array([g.reshape(-1) for g in gens]).T
    coeffs = {}
    for i in range(6):
        for j in range(6):
            comm = gens[i] @ gens[j] - gens[j] @ gens[i]
            sol, res, *_ = np.linalg.lstsq(flat, comm.reshape(-1), rcond=None)
            coeffs[(i, j)] = sol
    return coeffs


def _suite_lorentz_structure(seed, trials, tol):
    t = _Tally()
    coeffs = _structure_constants()
    for rep in lorentz.REPS:
        gens = [lorentz.generator(rep, g).matrix for g in lorentz.GENERATORS]
        for (i, j), c in coeffs.items():
            comm = gens[i] @ gens[j] - gens[j] @ gens[i]
            combo = sum(c[k] * gens[k] for k in range(6))
            t.add(float(np.max(np.abs(comm - combo))), tol)
    return t.result("lorentz-structure")


def _suite_lorentz_commute(seed, trials, tol):
    t = _Tally()
    for gi in lorentz.GENERATORS:
        for gj in lorentz.GENERATORS:
            p = lorentz.generator("plus", gi).matrix
            m = lorentz.generator("minus", gj).matrix
            t.add(float(np.max(np.abs(p @ m - m @ p))), max(tol, 1e-12))
    return t.result("lorentz-commute")


def _suite_lorentz_table2(seed, trials, tol):
    t = _Tally()
    jp = [2.0 * lorentz.generator("plus", f"J{k}").matrix for k in (1, 2, 3)]
    eye = np.eye(4)
    expected = {
        (0, 0): -eye, (0, 1): -jp[2], (0, 2): jp[1],
        (1, 0): jp[2], (1, 1): -eye, (1, 2): -jp[0],
        (2, 0): -jp[1], (2, 1): jp[0], (2, 2): -eye,
    }
    for (i, j), m in expected.items():
        t.add(float(np.max(np.abs(jp[i] @ jp[j] - m))), 1e-12)
    return t.result("lorentz-table2")


def _suite_lorentz_quaternion(seed, trials, tol):
    t = _Tally()
    eye = np.eye(4, dtype=np.complex128)
    qi, qj, qk = (-2.0 * lorentz.generator("minus", f"J{k}").matrix for k in (1, 2, 3))
    rules = [
        (qi @ qi, -eye), (qj @ qj, -eye), (qk @ qk, -eye),
        (qi @ qj, qk), (qj @ qk, qi), (qk @ qi, qj),
        (qj @ qi, -qk), (qk @ qj, -qi), (qi @ qk, -qj),
    ]
    for got, want in rules:
        t.add(float(np.max(np.abs(got - want))), max(tol, 1e-12))
    return t.result("lorentz-quaternion")


def _suite_lorentz_tcar_lift(seed, trials, tol):
    t = _Tally()
    rep = basis.verify_tcar_matrices(lorentz.jk_tcar_matrices(), tol)
    t.add(0.0 if rep.passed else 1.0, tol)
    return t.result("lorentz-tcar-lift")


def _suite_lorentz_eigenvalues(seed, trials, tol):
    t = _Tally()
    for rep in ("plus", "minus"):
        for k in (1, 2, 3):
            ev = np.linalg.eigvals(lorentz.generator(rep, f"J{k}").matrix)
            distinct = np.unique(np.round(ev, 6))
            t.add(0.0 if len(distinct) == 2 else 1.0, tol)
            t.add(float(np.max(np.abs(ev ** 2 + 0.25))), max(tol, 1e-9))
    return t.result("lorentz-eigenvalues")


def _suite_lorentz_subspaces(seed, trials, tol):
    t = _Tally()
    from .core import DomainError

    for g in lorentz.GENERATORS:
        for rep, subs in (("plus", ("upsilon1", "upsilon2")),
                          ("minus", ("upsilon1t", "upsilon2t"))):
            for sub in subs:
                try:
                    lorentz.restrict(lorentz.generator(rep, g), sub, tol)
                    t.add(0.0, tol)
                except DomainError:
                    t.add(1.0, tol)
    return t.result("lorentz-subspaces")


# ---------------------------------------------------------------------------
# geometry


def _suite_flow_ball(seed, trials, tol):
    trials = trials or 200
    rng = np.random.default_rng(seed)
    t = _Tally()
    for _ in range(trials):
        n = _dims(rng)
        a = _rand_vec(rng, n, unit=False)
        z = _rand_vec(rng, n, unit=False)
        z = z / max(tripotent.operator_norm(z), 1.0)  # inside or on the boundary
        tau = float(rng.uniform(0.0, 3.0))
        end = geometry.flow(a, z, tau)
        t.add(max(0.0, tripotent.operator_norm(end) - 1.0), 10.0 * tol)
    return t.result("flow-ball")


def _suite_flow_closed_form(seed, trials, tol):
    trials = trials or 100
    rng = np.random.default_rng(seed)
    t = _Tally()
    for _ in range(trials):
        n = _dims(rng)
        a = _rand_vec(rng, n, unit=False)
        tau = float(rng.uniform(0.0, 2.0))
        numeric = geometry.flow(a, SpinVector.zero(n), tau)
        exact = geometry.flow_from_origin_closed_form(a, tau)
        t.add((numeric - exact).norm(), 1e-6)
    return t.result("flow-closed-form")


def _suite_transvection(seed, trials, tol):
    trials = trials or 50
    rng = np.random.default_rng(seed)
    t = _Tally()
    for _ in range(trials):
        n = _dims(rng)
        b = _rand_vec(rng, n, unit=False)
        b = (0.95 * float(rng.uniform(0.1, 1.0)) / tripotent.operator_norm(b)) * b
        a = geometry.transvection_to(b)
        end = geometry.flow(a, SpinVector.zero(n), 1.0)
        t.add((end - b).norm(), 1e-5)
    return t.result("transvection-roundtrip")


def _suite_metric_positive(seed, trials, tol):
    trials = trials or 100
    rng = np.random.default_rng(seed)
    t = _Tally()
    eye_gap = float(np.max(np.abs(bergman(SpinVector.zero(3), SpinVector.zero(3)).matrix - np.eye(3))))
    t.add(eye_gap, tol)
    for _ in range(trials):
        n = _dims(rng)
        a = _rand_vec(rng, n, unit=False)
        a = (0.9 * float(rng.uniform(0.05, 1.0)) / tripotent.operator_norm(a)) * a
        binv = np.linalg.inv(bergman(a, a).matrix)
        herm = 0.5 * (binv + binv.conj().T)
        lows = float(np.min(np.linalg.eigvalsh(herm)))
        t.add(max(0.0, 1e-6 - lows), tol)
        x, y = _rand_vec(rng, n), _rand_vec(rng, n)
        sym = abs(geometry.invariant_metric(a, x, y)
                  - np.conjugate(geometry.invariant_metric(a, y, x)))
        t.add(sym, max(tol, 1e-9))
    return t.result("metric-positive")


def _suite_section_d1(seed, trials, tol):
    t = _Tally()
    pts = geometry.sample_section_d1(25)
    for x, y, z, norm in pts:
        formula = math.hypot(x, y) + abs(z)
        t.add(abs(norm - formula), 1e-12)
    boundary = pts[np.abs(pts[:, 3] - 1.0) <= 1e-9]
    for x, y, z, _ in boundary:
        u = SpinVector([x, y, 1j * z])
        cls = tripotent.classify(u, tol=1e-9)
        if cls is tripotent.TripotentClass.MINIMAL:
            ok = abs(abs(z) - 0.5) <= 1e-6 and abs(math.hypot(x, y) - 0.5) <= 1e-6
        elif cls is tripotent.TripotentClass.MAXIMAL:
            ok = (abs(z) <= 1e-6 and abs(math.hypot(x, y) - 1.0) <= 1e-6) or (
                math.hypot(x, y) <= 1e-6 and abs(abs(z) - 1.0) <= 1e-6)
        else:
            ok = True
        t.add(0.0 if ok else 1.0, tol)
    return t.result("section-d1")


def _suite_section_dual(seed, trials, tol):
    t = _Tally()
    for x, y, z, norm in geometry.sample_section_dual(25):
        formula = max(math.hypot(x, y), abs(z))
        t.add(abs(norm - formula), 1e-12)
    return t.result("section-dual")


def _suite_sd_geometry(seed, trials, tol):
    trials = trials or 200
    rng = np.random.default_rng(seed)
    t = _Tally()
    for _ in range(trials):
        z = float(rng.uniform(0.05, 0.9))
        r = float(rng.uniform(z + 0.05, 2.0))
        theta = float(rng.uniform(0.0, 2.0 * math.pi))
        a = SpinVector([r * math.cos(theta), r * math.sin(theta), 1j * z])
        dec = tripotent.singular_decomposition(a)
        v1 = SpinVector([0.5 * math.cos(theta), 0.5 * math.sin(theta), 0.5j])
        v2 = v1.conjugate()
        residual = max((dec.v1 - v1).norm(), (dec.v2 - v2).norm(),
                       abs(dec.s1 - (r + z)), abs(dec.s2 - (r - z)))
        t.add(residual, max(tol, 1e-9))
    return t.result("sd-geometry")


SUITES: dict[str, Callable[[int, int | None, float], CheckResult]] = {
    "inner-linearity": _suite_inner_linearity,
    "det-scaling": _suite_det_scaling,
    "det-bound": _suite_det_bound,
    "outer-symmetry": _suite_outer_symmetry,
    "main-identity": _suite_main_identity,
    "phase-generator": _suite_phase_generator,
    "q-closed-form": _suite_q_closed_form,
    "reflection-rotation": _suite_reflection_rotation,
    "d-spectrum": _suite_d_spectrum,
    "sd-reconstruction": _suite_sd_reconstruction,
    "norm-bounds": _suite_norm_bounds,
    "odd-calculus": _suite_odd_calculus,
    "minimal-phase": _suite_minimal_phase,
    "peirce-calculus": _suite_peirce_calculus,
    "dual-pairing": _suite_dual_pairing,
    "dual-cylinder": _suite_dual_cylinder,
    "tcar-natural": _suite_tcar_natural,
    "tcar-random": _suite_tcar_random,
    "grid-canonical": _suite_grid_canonical,
    "matrix-iso": _suite_matrix_iso,
    "s6-grid": _suite_s6_grid,
    "lorentz-det": _suite_lorentz_det,
    "lorentz-structure": _suite_lorentz_structure,
    "lorentz-commute": _suite_lorentz_commute,
    "lorentz-table2": _suite_lorentz_table2,
    "lorentz-quaternion": _suite_lorentz_quaternion,
    "lorentz-tcar-lift": _suite_lorentz_tcar_lift,
    "lorentz-eigenvalues": _suite_lorentz_eigenvalues,
    "lorentz-subspaces": _suite_lorentz_subspaces,
    "flow-ball": _suite_flow_ball,
    "flow-closed-form": _suite_flow_closed_form,
    "transvection-roundtrip": _suite_transvection,
    "metric-positive": _suite_metric_positive,
    "section-d1": _suite_section_d1,
    "section-dual": _suite_section_dual,
    "sd-geometry": _suite_sd_geometry,
}


def run_suite(name: str, seed: int = 0, trials: int | None = None,
              tol: float = config.DEFAULT_TOL) -> CheckResult:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}")
    return SUITES[name](seed, trials, tol)


def run_all(seed: int = 0, trials: int | None = None,
            tol: float = config.DEFAULT_TOL) -> list[CheckResult]:
    return [run_suite(name, seed, trials, tol) for name in SUITES]
