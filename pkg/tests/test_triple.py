import numpy as np
import pytest

from spinfactor.core import DimensionMismatch, DomainError, SpinVector, det, inner
from spinfactor.triple import (
    ConjugateLinearOperator,
    LinearOperator,
    bergman,
    d_operator,
    expm,
    is_triple_automorphism,
    make_automorphism,
    q_operator,
    rotate_in_plane,
    triple_product,
    wedge,
)


def e(n, j):
    return SpinVector.basis(n, j)


def rand_vec(rng, n, unit=False):
    z = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    if unit:
        z /= np.linalg.norm(z)
    return SpinVector(z)


class TestTripleProduct:
    def test_basis_relations(self):
        assert triple_product(e(3, 0), e(3, 1), e(3, 0)) == -e(3, 1)
        assert triple_product(e(3, 0), e(3, 0), e(3, 0)) == e(3, 0)

    def test_frozen_example(self):
        got = triple_product(SpinVector([1, 1j, 0]), SpinVector([0, 1, 0]),
                             SpinVector([1, 0, 0]))
        assert got.isclose(SpinVector([1j, -1, 0]), tol=1e-14)

    def test_outer_symmetry(self):
        rng = np.random.default_rng(0)
        for _ in range(100):
            a, b, c = (rand_vec(rng, 5) for _ in range(3))
            assert triple_product(a, b, c).isclose(triple_product(c, b, a), tol=1e-12)

    def test_dim_mismatch(self):
        with pytest.raises(DimensionMismatch):
            triple_product(e(2, 0), e(3, 0), e(3, 0))


class TestDOperator:
    def test_maximal_identity(self):
        for u in (e(2, 0), SpinVector([np.cos(0.7), np.sin(0.7)])):
            assert np.allclose(d_operator(u, u).matrix, np.eye(2))

    def test_minimal_projection_form(self):
        v = SpinVector([0.5, 0.5j, 0, 0])
        p_v = 2.0 * np.outer(v.coords, v.coords.conj())
        p_vbar = 2.0 * np.outer(v.coords.conj(), v.coords)
        expected = 0.5 * (np.eye(4) + p_v - p_vbar)
        assert np.allclose(d_operator(v, v).matrix, expected, atol=1e-14)

    def test_column_oracle(self):
        # column j of D(a,b) must reproduce {a,b,e_j}
        rng = np.random.default_rng(1)
        for _ in range(25):
            n = int(rng.integers(2, 7))
            a, b = rand_vec(rng, n), rand_vec(rng, n)
            d = d_operator(a, b)
            for j in range(n):
                assert d(e(n, j)).isclose(triple_product(a, b, e(n, j)), tol=1e-12)

    def test_decomposition_into_wedge(self):
        rng = np.random.default_rng(2)
        for _ in range(100):
            n = int(rng.integers(2, 7))
            a, b = rand_vec(rng, n), rand_vec(rng, n)
            lhs = d_operator(a, b).matrix
            rhs = inner(a, b) * np.eye(n) + wedge(a, b).matrix
            assert np.allclose(lhs, rhs, atol=1e-12)


class TestWedge:
    def test_vanishes_on_equal_real(self):
        assert np.allclose(wedge(e(3, 0), e(3, 0)).matrix, 0.0)

    def test_rotation_generator_action(self):
        w = wedge(e(3, 0), e(3, 1))
        assert w(e(3, 1)) == e(3, 0)
        assert w(e(3, 0)) == -e(3, 1)


class TestQOperator:
    def test_fixes_tripotents(self):
        for u in (e(3, 0), SpinVector([0.5, 0.5j, 0])):
            assert q_operator(u)(u).isclose(u, tol=1e-14)

    def test_real_reflection(self):
        # for real unit u and real a: Q(u)a = 2<u|a>u - a
        rng = np.random.default_rng(3)
        u = e(3, 2)
        for _ in range(20):
            a = SpinVector(rng.standard_normal(3).astype(np.complex128))
            expected = 2.0 * inner(u, a) * u - a
            assert q_operator(u)(a).isclose(expected, tol=1e-12)

    def test_frozen_minimal_example(self):
        # 2<a|z>a - det(a) conj(z) with a = (1,i)/2, z = (0,1): det a = 0,
        # <a|z> = i/2, so the image is i*a = (i/2, -1/2)
        got = q_operator(SpinVector([0.5, 0.5j]))(SpinVector([0, 1]))
        assert got.isclose(SpinVector([0.5j, -0.5]), tol=1e-14)

    def test_general_closed_form(self):
        rng = np.random.default_rng(4)
        for _ in range(50):
            n = int(rng.integers(2, 7))
            u, a = rand_vec(rng, n), rand_vec(rng, n)
            closed = 2.0 * inner(u, a) * u - det(u) * a.conjugate()
            assert q_operator(u)(a).isclose(closed, tol=1e-11)
            assert q_operator(u)(a).isclose(triple_product(u, a, u), tol=1e-11)

    def test_composition_is_linear(self):
        q1 = q_operator(SpinVector([1, 2j]))
        q2 = q_operator(SpinVector([0.5j, 1]))
        assert isinstance(q1 @ q2, LinearOperator)
        z = SpinVector([0.3, -1j])
        via_ops = (q1 @ q2)(z)
        assert via_ops.isclose(q1(q2(z)), tol=1e-13)


class TestBergman:
    def test_at_origin(self):
        z = SpinVector.zero(4)
        assert np.allclose(bergman(z, z).matrix, np.eye(4))

    def test_invertible_inside_ball(self):
        from spinfactor.tripotent import operator_norm

        rng = np.random.default_rng(5)
        for _ in range(200):
            n = int(rng.integers(2, 7))
            a = rand_vec(rng, n)
            a = (0.99 * rng.uniform(0.0, 1.0) / operator_norm(a)) * a
            assert np.linalg.cond(bergman(a, a).matrix) < 1e9

    def test_frozen_eigenvalue(self):
        v = SpinVector([0.5, 0.5j, 0, 0])
        a = 0.5 * v
        b = bergman(a, a)
        assert b(v).isclose(0.5625 * v, tol=1e-13)


class TestAutomorphisms:
    def test_make_automorphism(self):
        rot = np.array([[0.0, -1.0], [1.0, 0.0]])
        op = make_automorphism(1j, rot)
        assert is_triple_automorphism(op, trials=100, seed=0)

    def test_make_automorphism_rejects(self):
        with pytest.raises(DomainError):
            make_automorphism(2.0, np.eye(2))
        with pytest.raises(DomainError):
            make_automorphism(1.0, np.array([[1.0, 1.0], [0.0, 1.0]]))

    def test_scalar_phase_is_automorphism(self):
        assert is_triple_automorphism(LinearOperator(1j * np.eye(3)), trials=50, seed=1)

    def test_rotation_is_automorphism(self):
        op = expm(0.8 * d_operator(e(4, 0), e(4, 1)))
        assert is_triple_automorphism(op, trials=50, seed=2)

    def test_mixed_phase_is_not(self):
        bad = LinearOperator(np.diag([1.0, 1j]))
        assert not is_triple_automorphism(bad, trials=200, seed=3)
        # explicit witness: the identity fails on the triple (e2, e1, e2)
        lhs = bad(triple_product(e(2, 1), e(2, 0), e(2, 1)))
        rhs = triple_product(bad(e(2, 1)), bad(e(2, 0)), bad(e(2, 1)))
        assert not lhs.isclose(rhs, tol=1e-6)

    def test_singular_rejected(self):
        with pytest.raises(DomainError):
            is_triple_automorphism(LinearOperator(np.zeros((2, 2))))


class TestRotateInPlane:
    def test_rotation_by_minus_theta(self):
        theta = 0.6
        rot = rotate_in_plane(e(4, 0), e(4, 1), theta)
        expected = np.cos(theta) * e(4, 0).coords - np.sin(theta) * e(4, 1).coords
        assert np.allclose(rot(e(4, 0)).coords, expected, atol=1e-12)
        assert rot(e(4, 3)) == e(4, 3)

    def test_full_turn(self):
        rot = rotate_in_plane(e(3, 0), e(3, 2), 2 * np.pi)
        assert np.allclose(rot.matrix, np.eye(3), atol=1e-12)

    def test_rejects_non_tcar_pair(self):
        with pytest.raises(DomainError):
            rotate_in_plane(e(3, 0), SpinVector([0, 1j, 0]), 0.5)


class TestReflections:
    def test_half_turn_as_double_q(self):
        rng = np.random.default_rng(6)
        u_l, u_k = e(4, 1), e(4, 3)
        half_turn = rotate_in_plane(u_l, u_k, np.pi)
        for _ in range(20):
            a = SpinVector(rng.standard_normal(4).astype(np.complex128))
            lhs = (q_operator(u_l) @ q_operator(u_k))(a)
            assert lhs.isclose(half_turn(a), tol=1e-12)

    def test_double_reflection(self):
        rng = np.random.default_rng(7)
        u_l, u_k = e(3, 0), e(3, 1)
        for theta in (0.3, 1.1, 2.7):
            mirror = expm(0.5 * theta * d_operator(u_l, u_k))(u_k)
            rot = rotate_in_plane(u_l, u_k, theta)
            for _ in range(10):
                a = SpinVector(rng.standard_normal(3).astype(np.complex128))
                lhs = (q_operator(mirror) @ q_operator(u_k))(a)
                assert lhs.isclose(rot(a), tol=1e-12)


class TestMainIdentity:
    def test_derivation_property(self):
        rng = np.random.default_rng(8)
        for _ in range(200):
            n = int(rng.integers(2, 7))
            d, a, b, c = (rand_vec(rng, n, unit=True) for _ in range(4))
            dd = d_operator(d, d)
            lhs = dd(triple_product(a, b, c))
            rhs = (triple_product(dd(a), b, c) - triple_product(a, dd(b), c)
                   + triple_product(a, b, dd(c)))
            assert lhs.isclose(rhs, tol=1e-12)


class TestOperatorPlumbing:
    def test_json_round_trip(self):
        op = LinearOperator([[1, 2j], [0, -1]])
        assert np.array_equal(LinearOperator.from_json(op.to_json()).matrix, op.matrix)

    def test_conjugate_linear_action(self):
        op = ConjugateLinearOperator(np.eye(2))
        assert op(SpinVector([1j, 2])) == SpinVector([-1j, 2])

    def test_validation(self):
        with pytest.raises(ValueError):
            LinearOperator(np.ones((2, 3)))
        with pytest.raises(ValueError):
            LinearOperator(np.array([[np.inf, 0], [0, 1]]))
