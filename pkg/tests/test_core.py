import numpy as np
import pytest

from spinfactor import config
from spinfactor.core import (
    DimensionMismatch,
    SpinVector,
    conjugate,
    det,
    euclid_norm,
    inner,
)


def e(n, j):
    return SpinVector.basis(n, j)


class TestConstruction:
    def test_rejects_scalar_and_short(self):
        with pytest.raises(ValueError):
            SpinVector([1.0])
        with pytest.raises(ValueError):
            SpinVector(np.ones((2, 2)))

    def test_rejects_nonfinite(self):
        with pytest.raises(ValueError):
            SpinVector([1.0, np.inf])
        with pytest.raises(ValueError):
            SpinVector([np.nan, 0.0])
        with pytest.raises(ValueError):
            SpinVector([1.0, complex(0.0, np.nan)])

    def test_dimension_cap(self):
        SpinVector(np.zeros(config.max_dim()))
        with pytest.raises(ValueError):
            SpinVector(np.zeros(config.max_dim() + 1))

    def test_set_max_dim(self):
        old = config.max_dim()
        try:
            config.set_max_dim(8)
            with pytest.raises(ValueError):
                SpinVector(np.zeros(9))
            with pytest.raises(ValueError):
                config.set_max_dim(1)
        finally:
            config.set_max_dim(old)

    def test_coords_immutable(self):
        v = SpinVector([1.0, 2.0])
        with pytest.raises(ValueError):
            v.coords[0] = 5.0

    def test_source_array_detached(self):
        raw = np.array([1.0 + 0j, 2.0])
        v = SpinVector(raw)
        raw[0] = 9.0
        assert v.coords[0] == 1.0


class TestInner:
    def test_orthonormal_basis(self):
        assert inner(e(3, 0), e(3, 0)) == 1
        assert inner(e(3, 0), e(3, 1)) == 0

    def test_frozen_example(self):
        # direct evaluation: 1*conj(i) + i*conj(1) = 0
        assert inner(SpinVector([1, 1j]), SpinVector([1j, 1])) == 0

    def test_conjugate_symmetry(self):
        rng = np.random.default_rng(3)
        for _ in range(20):
            a = SpinVector(rng.standard_normal(5) + 1j * rng.standard_normal(5))
            b = SpinVector(rng.standard_normal(5) + 1j * rng.standard_normal(5))
            assert inner(a, b) == pytest.approx(np.conjugate(inner(b, a)))

    def test_dim_mismatch(self):
        with pytest.raises(DimensionMismatch):
            inner(SpinVector([1, 0]), SpinVector([1, 0, 0]))


class TestConjugate:
    def test_examples(self):
        assert conjugate(SpinVector([1, 1j, 0])) == SpinVector([1, -1j, 0])
        real = SpinVector([0.5, -2.0, 3.0])
        assert conjugate(real) == real
        v = SpinVector([0.5, 0.5j, 0, 0])
        assert conjugate(v) == SpinVector([0.5, -0.5j, 0, 0])

    def test_involution(self):
        v = SpinVector([1 + 2j, -3j, 0.25])
        assert conjugate(conjugate(v)) == v


class TestDet:
    def test_examples(self):
        assert det(e(3, 0)) == 1
        assert det(SpinVector([0.5, 0.5j, 0])) == pytest.approx(0)
        assert det(SpinVector([1, 2, 3, 4])) == pytest.approx(30)

    def test_quadratic_scaling(self):
        rng = np.random.default_rng(7)
        for _ in range(50):
            a = SpinVector(rng.standard_normal(4) + 1j * rng.standard_normal(4))
            lam = complex(rng.standard_normal(), rng.standard_normal())
            assert det(lam * a) == pytest.approx(lam * lam * det(a), abs=1e-12)


class TestNorm:
    def test_examples(self):
        assert euclid_norm(e(4, 2)) == 1.0
        assert euclid_norm(SpinVector([0.5, 0.5j, 0, 0])) == pytest.approx(1 / np.sqrt(2))
        assert euclid_norm(SpinVector([3, 4j])) == pytest.approx(5.0)

    def test_zero_iff_zero(self):
        assert euclid_norm(SpinVector.zero(3)) == 0.0
        assert euclid_norm(SpinVector([1e-150, 0])) > 0.0


class TestArithmeticAndJson:
    def test_vector_space_ops(self):
        a = SpinVector([1, 2j])
        b = SpinVector([0, 1])
        assert a + b == SpinVector([1, 1 + 2j])
        assert a - b == SpinVector([1, -1 + 2j])
        assert -a == SpinVector([-1, -2j])
        assert 2j * a == SpinVector([2j, -4])
        assert a / 2 == SpinVector([0.5, 1j])
        with pytest.raises(DimensionMismatch):
            a + SpinVector([1, 0, 0])

    def test_json_round_trip(self):
        v = SpinVector([1.25 - 3j, 0.5, -2j])
        assert SpinVector.from_json(v.to_json()) == v

    def test_json_malformed(self):
        with pytest.raises(ValueError):
            SpinVector.from_json({"re": [1, 2]})
        with pytest.raises(ValueError):
            SpinVector.from_json({"re": [1, 2], "im": [0]})
        with pytest.raises(ValueError):
            SpinVector.from_json({"re": "x", "im": "y"})
