import numpy as np
import pytest

from spinfactor.basis import (
    SIGMA1,
    SIGMA2,
    SIGMA3,
    S6_TRIPOTENT_SCALE,
    SpinGrid4,
    canonical_grid,
    matrix_inner,
    matrix_rep,
    matrix_triple,
    pauli_table,
    random_tcar,
    s6_grid,
    s6_quadrangles,
    verify_spin_grid,
    verify_spin_grid_matrices,
    verify_tcar,
    verify_tcar_matrices,
)
from spinfactor.core import DomainError, SpinVector, det, inner
from spinfactor.triple import LinearOperator, triple_product


def e(n, j):
    return SpinVector.basis(n, j)


class TestVerifyTcar:
    @pytest.mark.parametrize("n", range(2, 9))
    def test_natural_basis(self, n):
        report = verify_tcar([e(n, j) for j in range(n)], tol=1e-12)
        assert report.passed
        assert report.violations == ()

    def test_phase_corrupted_basis_fails(self):
        report = verify_tcar([e(3, 0), 1j * e(3, 1), e(3, 2)])
        assert not report.passed
        assert "tbasis1" in report.violations[0]
        # the corrupted relation: {i e2, e1, i e2} = +e1, not -e1
        got = triple_product(1j * e(3, 1), e(3, 0), 1j * e(3, 1))
        assert got.isclose(e(3, 0), tol=1e-14)

    def test_automorphism_image_passes(self):
        for seed in range(10):
            b = random_tcar(int(np.random.default_rng(seed).integers(2, 9)), seed)
            assert verify_tcar(b.vectors).passed

    def test_input_validation(self):
        with pytest.raises(DomainError):
            verify_tcar([e(3, 0), e(3, 1)])
        with pytest.raises(DomainError):
            verify_tcar([e(3, 0), e(3, 1), e(4, 2)])
        with pytest.raises(DomainError):
            verify_tcar([])


class TestRandomTcar:
    def test_deterministic(self):
        b1 = random_tcar(5, seed=42)
        b2 = random_tcar(5, seed=42)
        assert all(u == v for u, v in zip(b1.vectors, b2.vectors))

    def test_orthonormal(self):
        b = random_tcar(6, seed=7)
        gram = np.array([[inner(u, v) for v in b.vectors] for u in b.vectors])
        assert np.allclose(gram, np.eye(6), atol=1e-12)

    def test_dim_bounds(self):
        with pytest.raises(DomainError):
            random_tcar(1, seed=0)


class TestSpinGrid:
    def test_canonical_grid_passes(self):
        assert verify_spin_grid(canonical_grid()).passed

    def test_sign_flip_breaks_odd_condition(self):
        g = canonical_grid()
        rep = verify_spin_grid(SpinGrid4(g.v, g.v_bar, g.w, -1.0 * g.w_bar))
        assert not rep.passed
        assert any("odd condition" in v for v in rep.violations)

    def test_automorphism_image_passes(self):
        g = canonical_grid()
        b = random_tcar(4, seed=11)
        op = LinearOperator(np.column_stack([v.coords for v in b.vectors]))
        mapped = SpinGrid4(*(op(x) for x in g.elements()))
        assert verify_spin_grid(mapped).passed

    def test_non_minimal_detected(self):
        g = canonical_grid()
        rep = verify_spin_grid(SpinGrid4(e(4, 0), g.v_bar, g.w, g.w_bar))
        assert not rep.passed
        assert any("minimal" in v for v in rep.violations)

    def test_wrong_dim_rejected(self):
        with pytest.raises(DomainError):
            SpinGrid4(e(3, 0), e(3, 1), e(3, 2), e(3, 0))

    def test_report_json(self):
        payload = verify_spin_grid(canonical_grid()).to_json()
        assert payload == {"pass": True, "violations": []}


class TestMatrixRep:
    def test_determinant_preserved(self):
        a = SpinVector([1, 2, 3, 4])
        assert np.linalg.det(matrix_rep(a)) == pytest.approx(det(a))
        rng = np.random.default_rng(0)
        for _ in range(500):
            z = SpinVector(rng.standard_normal(4) + 1j * rng.standard_normal(4))
            assert np.linalg.det(matrix_rep(z)) == pytest.approx(det(z), abs=1e-10)

    def test_identity_slot(self):
        assert np.array_equal(matrix_rep(e(4, 0)), np.eye(2))

    def test_triple_homomorphism(self):
        rng = np.random.default_rng(1)
        for _ in range(500):
            a, b, c = (SpinVector(rng.standard_normal(4) + 1j * rng.standard_normal(4))
                       for _ in range(3))
            lhs = matrix_rep(triple_product(a, b, c))
            rhs = matrix_triple(matrix_rep(a), matrix_rep(b), matrix_rep(c))
            assert np.allclose(lhs, rhs, atol=1e-10)

    def test_linearity(self):
        a, b = SpinVector([1, 2j, 0, 1]), SpinVector([0, 1, 1j, 2])
        lam = 0.3 - 1.2j
        assert np.allclose(matrix_rep(lam * a + b),
                           lam * matrix_rep(a) + matrix_rep(b), atol=1e-14)

    def test_wrong_dim(self):
        with pytest.raises(DomainError):
            matrix_rep(SpinVector([1, 0]))

    def test_inner_product_scale(self):
        a, b = SpinVector([1, 2j, 0, 1]), SpinVector([0, 1, 1j, 2])
        assert matrix_inner(matrix_rep(a), matrix_rep(b)) == pytest.approx(inner(a, b))


class TestPauliTable:
    def test_matches_matrix_rep_exactly(self):
        table = pauli_table()
        for j in range(4):
            assert np.array_equal(table[j], matrix_rep(e(4, j)))

    def test_explicit_constants(self):
        table = pauli_table()
        assert np.array_equal(table[0], np.eye(2))
        assert np.array_equal(table[1], -1j * SIGMA3)
        assert np.array_equal(table[2], np.array([[0, 1], [-1, 0]], dtype=complex))
        assert np.array_equal(table[3], -1j * SIGMA1)
        assert np.array_equal(table[2], 1j * SIGMA2)


class TestS6Grid:
    def test_generators_are_tripotent_at_recorded_scale(self):
        for mat in s6_grid().values():
            t = S6_TRIPOTENT_SCALE * mat
            assert np.allclose(matrix_triple(t, t, t), t, atol=1e-14)

    def test_quadrangles_pass(self):
        for quad in s6_quadrangles():
            assert verify_spin_grid_matrices(*quad).passed

    def test_uses_e31_not_e13(self):
        g = s6_grid()
        assert np.array_equal(g["e31"], -g["e31"].T)
        assert g["e31"][3, 1] == 1.0

    def test_flipped_partner_fails(self):
        a, abar, b, bbar = s6_quadrangles()[0]
        rep = verify_spin_grid_matrices(a, abar, b, -bbar)
        assert not rep.passed

    def test_matrix_tcar_rejects_bad_input(self):
        with pytest.raises(DomainError):
            verify_tcar_matrices([np.eye(4)] * 6)
        with pytest.raises(DomainError):
            verify_tcar_matrices([np.zeros((4, 4))] * 5)


class TestGridDegenerateElement:
    def test_zero_element_flagged_as_non_minimal(self):
        g = canonical_grid()
        rep = verify_spin_grid(SpinGrid4(SpinVector.zero(4), g.v_bar, g.w, g.w_bar))
        assert not rep.passed
        assert any("minimal" in v for v in rep.violations)
