import math

import pytest

from bidiagbounds import (
    make_bidiagonal,
    theta_bounds,
    trace_type1,
    von_matt_bounds,
)
from bidiagbounds.kernels import TraceSeries
from bidiagbounds import oracle

from conftest import random_bidiag


def test_theta_single_eigenvalue():
    J = TraceSeries(2, (0.5, 0.25), "type1")
    theta = theta_bounds(J)
    assert theta[0] == pytest.approx(math.sqrt(2.0), rel=1e-15)
    assert theta[1] == pytest.approx(math.sqrt(2.0), rel=1e-15)


def test_theta_2x2_case():
    theta = theta_bounds(TraceSeries(2, (3.0, 7.0), "type1"))
    assert theta[0] == pytest.approx(3.0**-0.5, rel=1e-15)
    assert theta[1] == pytest.approx(7.0**-0.25, rel=1e-15)
    # sigma_min dominates both
    sigma = math.sqrt((3.0 - math.sqrt(5.0)) / 2.0)
    assert theta[0] < theta[1] < sigma


def test_theta_identity_matrix():
    n = 16
    B = make_bidiagonal([1.0] * n, [0.0] * (n - 1), permissive=True)
    J = trace_type1(B, 1)
    assert theta_bounds(J)[0] == pytest.approx(n**-0.5, rel=1e-15)


def test_theta_rejects_bad_traces():
    with pytest.raises(ValueError):
        theta_bounds(TraceSeries(2, (3.0, -1.0), "type1"))
    with pytest.raises(ValueError):
        theta_bounds(TraceSeries(1, (math.inf,), "type1"))


def test_von_matt_2x2_closed_form():
    rho, upsilon = von_matt_bounds(3.0, 7.0, 2)
    sigma = math.sqrt((3.0 - math.sqrt(5.0)) / 2.0)
    assert rho == pytest.approx(3.0**-0.5, rel=1e-15)
    # for N = 2, upsilon equals sigma_min exactly
    assert upsilon == pytest.approx(sigma, rel=1e-12)


def test_von_matt_n1():
    rho, upsilon = von_matt_bounds(0.5, 0.25, 1)
    assert rho == pytest.approx(math.sqrt(2.0), rel=1e-15)
    assert upsilon == pytest.approx(math.sqrt(2.0), rel=1e-15)


def test_von_matt_equal_spectrum():
    n = 8
    rho, upsilon = von_matt_bounds(float(n), float(n), n)
    assert rho == pytest.approx(n**-0.5, rel=1e-15)
    assert upsilon == pytest.approx(1.0, rel=1e-15)


def test_von_matt_radicand_clamp():
    # J2 infinitesimally below J1**2 / n: clamp to zero rather than fail
    n = 4
    J1 = 4.0
    J2 = (J1 * J1 / n) * (1.0 - 1e-14)
    _, upsilon = von_matt_bounds(J1, J2, n)
    assert upsilon == pytest.approx(1.0, rel=1e-12)
    with pytest.raises(ValueError):
        von_matt_bounds(J1, (J1 * J1 / n) * 0.9, n)


def test_von_matt_input_validation():
    with pytest.raises(ValueError):
        von_matt_bounds(-1.0, 1.0, 2)
    with pytest.raises(ValueError):
        von_matt_bounds(1.0, 1.0, 0)


def test_rho_bitwise_equals_theta1(rng):
    for _ in range(20):
        n = int(rng.integers(1, 40))
        B = random_bidiag(rng, n)
        J = trace_type1(B, 2)
        rho, _ = von_matt_bounds(J[1], J[2], n)
        assert rho == theta_bounds(J)[0]


def test_theta_monotone_and_dominated(rng):
    for _ in range(15):
        n = int(rng.integers(1, 20))
        B = random_bidiag(rng, n, (0.8, 2.0), (0.1, 0.8))
        theta = theta_bounds(trace_type1(B, 25))
        sigma = oracle.sigma_min_dense(B)
        for p in range(24):
            assert theta[p + 1] > theta[p] or abs(theta[p + 1] - theta[p]) < 1e-15 * theta[p]
        assert theta[-1] <= sigma * (1.0 + 1e-10)
        # floor from J_p <= N * lambda_min^-p
        assert theta[-1] >= sigma * n ** (-1.0 / 50.0) * (1.0 - 1e-10)


def test_theta_scaling_equivariance(rng):
    B = random_bidiag(rng, 12)
    theta = theta_bounds(trace_type1(B, 6))
    for s in (-2, 3):
        theta_s = theta_bounds(trace_type1(B.scaled(s), 6))
        for t, ts in zip(theta, theta_s):
            assert ts == pytest.approx(math.ldexp(t, s), rel=1e-15)
