import math

import numpy as np
import pytest

from bidiagbounds import inverse_gram_diagonal, make_bidiagonal, trace_type1, trace_type2
from bidiagbounds.oracle import (
    DenseSymmetric,
    SingularMatrixError,
    dense_inverse,
    eigen_symmetric,
    gram,
    inverse_diagonals,
    sigma_min_dense,
    trace_inverse_powers_dense,
)

from conftest import random_bidiag


def test_gram_2x2(two_by_two):
    assert gram(two_by_two, "right").entries.tolist() == [[1.0, 1.0], [1.0, 2.0]]
    assert gram(two_by_two, "left").entries.tolist() == [[2.0, 1.0], [1.0, 1.0]]


def test_gram_1x1():
    B = make_bidiagonal([math.sqrt(2.0)])
    for side in ("left", "right"):
        assert gram(B, side).entries[0, 0] == pytest.approx(2.0)
    with pytest.raises(ValueError):
        gram(B, "up")


def test_dense_inverse_closed_forms():
    inv = dense_inverse(DenseSymmetric(np.array([[1.0, 1.0], [1.0, 2.0]])))
    assert np.allclose(inv.entries, [[2.0, -1.0], [-1.0, 1.0]], atol=1e-14)
    assert dense_inverse(DenseSymmetric(np.array([[2.0]]))).entries[0, 0] == 0.5
    eye = np.eye(5)
    assert np.allclose(dense_inverse(DenseSymmetric(eye)).entries, eye)


def test_dense_inverse_residual(rng):
    for _ in range(5):
        n = int(rng.integers(2, 40))
        A = gram(random_bidiag(rng, n), "right")
        inv = dense_inverse(A)
        residual = np.max(np.abs(A.entries @ inv.entries - np.eye(n)))
        assert residual <= 1e-12 * np.max(np.abs(A.entries)) * n


def test_dense_inverse_singular():
    with pytest.raises(SingularMatrixError):
        dense_inverse(DenseSymmetric(np.zeros((3, 3))))


def test_eigen_2x2():
    eigs = eigen_symmetric(DenseSymmetric(np.array([[1.0, 1.0], [1.0, 2.0]])))
    assert eigs == pytest.approx([(3 - math.sqrt(5)) / 2, (3 + math.sqrt(5)) / 2], rel=1e-12)


def test_eigen_diagonal_and_1x1():
    eigs = eigen_symmetric(DenseSymmetric(np.diag([9.0, 1.0, 4.0])))
    assert eigs.tolist() == [1.0, 4.0, 9.0]
    assert eigen_symmetric(DenseSymmetric(np.array([[2.0]]))).tolist() == [2.0]


def test_sigma_min_cases(two_by_two):
    assert sigma_min_dense(two_by_two) == pytest.approx(
        math.sqrt((3 - math.sqrt(5)) / 2), rel=1e-12
    )
    assert sigma_min_dense(make_bidiagonal([math.sqrt(2.0)])) == pytest.approx(
        math.sqrt(2.0), rel=1e-14
    )
    B = make_bidiagonal([3.0, 3.0], [1e-12], permissive=True)
    assert sigma_min_dense(B) == pytest.approx(3.0, rel=1e-9)


def test_trace_powers_cases(two_by_two):
    assert trace_inverse_powers_dense(two_by_two, 2).values == pytest.approx((3.0, 7.0))
    J = trace_inverse_powers_dense(make_bidiagonal([math.sqrt(2.0)]), 3)
    assert J.values == pytest.approx((0.5, 0.25, 0.125), rel=1e-14)
    with pytest.raises(ValueError):
        trace_inverse_powers_dense(two_by_two, 0)


def test_inverse_diagonals_2x2(two_by_two):
    assert inverse_diagonals(two_by_two, "right") == pytest.approx([2.0, 1.0], abs=1e-14)
    assert inverse_diagonals(two_by_two, "left") == pytest.approx([1.0, 2.0], abs=1e-14)
    one = make_bidiagonal([math.sqrt(2.0)])
    for side in ("left", "right"):
        assert inverse_diagonals(one, side) == pytest.approx([0.5])


def test_kernel_oracle_agreement(rng):
    for _ in range(5):
        n = int(rng.integers(2, 10))
        B = random_bidiag(rng, n)
        dense = trace_inverse_powers_dense(B, 4)
        for kernel in (trace_type1, trace_type2):
            J = kernel(B, 4)
            for p in range(1, 5):
                assert J[p] == pytest.approx(dense[p], rel=1e-9)


def test_trace_identity_inverse_diagonals(rng):
    for _ in range(5):
        n = int(rng.integers(1, 30))
        B = random_bidiag(rng, n)
        J1_type2 = trace_type2(B, 1)[1]
        assert math.fsum(inverse_diagonals(B, "right")) == pytest.approx(J1_type2, rel=1e-10)
        J1_type1 = trace_type1(B, 1)[1]
        assert math.fsum(inverse_diagonals(B, "left")) == pytest.approx(J1_type1, rel=1e-10)


def test_eigenvalue_consistency(rng):
    for _ in range(5):
        n = int(rng.integers(1, 25))
        B = random_bidiag(rng, n)
        A = gram(B, "right")
        eigs = eigen_symmetric(A)
        assert math.fsum(eigs) == pytest.approx(float(np.trace(A.entries)), rel=1e-12)
        q, _ = B.squared()
        assert float(np.prod(eigs)) == pytest.approx(float(np.prod(q)), rel=1e-10)


def test_eigen_vs_power_traces(rng):
    for _ in range(5):
        n = int(rng.integers(1, 20))
        B = random_bidiag(rng, n)
        eigs = eigen_symmetric(gram(B, "right"))
        dense = trace_inverse_powers_dense(B, 5)
        for p in range(1, 6):
            assert dense[p] == pytest.approx(math.fsum(eigs**-float(p)), rel=1e-9)


def test_oracle_matches_sweep_diagonals(rng):
    for _ in range(5):
        n = int(rng.integers(1, 30))
        B = random_bidiag(rng, n)
        for side in ("left", "right"):
            assert inverse_gram_diagonal(B, side) == pytest.approx(
                inverse_diagonals(B, side), rel=1e-9
            )
