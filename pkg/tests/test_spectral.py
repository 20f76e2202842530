"""Multipliers, truncated transforms, the remainder, and the matrix multipliers."""

import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from akhiezer.spectral import (
    QuadratureError,
    cosh_multiplier,
    cosh_multiplier_by_quadrature,
    forward_multiplier_matrix,
    inverse_multiplier_matrix,
    multiplier_normalization,
    remainder_sup_on_grid,
    sinh_multiplier,
    sinh_multiplier_extrapolated,
    sinh_multiplier_truncated,
    truncation_remainder,
)

OMEGAS = (0.5, 1.0, math.pi, 10.0)


@pytest.mark.parametrize(
    "omega, lam, expected",
    [
        (3.7, 0.0, 1.0),
        (math.pi / 2.0, 1.0, 0.6480542736638854),
        (1.0, 2.0, 0.086266738334054415),
    ],
)
def test_cosh_multiplier_values(omega, lam, expected):
    assert cosh_multiplier(omega, lam) == pytest.approx(expected, rel=1e-14)


def test_sinh_multiplier_values():
    assert sinh_multiplier(2.2, 0.0) == 0.0
    val = sinh_multiplier(math.pi / 2.0, 1.0)
    assert val.real == 0.0
    assert val.imag == pytest.approx(0.76159415595576489, rel=1e-14)
    assert sinh_multiplier(1.0, -2.0) == -sinh_multiplier(1.0, 2.0)


def test_cosh_multiplier_range_and_parity():
    lam = np.linspace(0.0, 300.0, 500)
    vals = cosh_multiplier(1.0, lam)
    assert np.all(vals > 0.0) and np.all(vals <= 1.0)
    assert np.array_equal(vals, cosh_multiplier(1.0, -lam))
    svals = sinh_multiplier(1.0, np.concatenate([lam, -lam]))
    assert np.all(np.abs(svals) <= 1.0)
    assert np.all(svals.real == 0.0)
    # modulus strictly below 1 wherever the gap is representable in doubles
    moderate = sinh_multiplier(1.0, np.linspace(-10.0, 10.0, 201))
    assert np.all(np.abs(moderate) < 1.0)


@given(
    lam=st.floats(min_value=-1e4, max_value=1e4, allow_nan=False),
    omega=st.floats(min_value=0.01, max_value=100.0),
)
def test_normalization_everywhere(lam, omega):
    assert multiplier_normalization(omega, lam) == pytest.approx(1.0, abs=1e-12)


@pytest.mark.parametrize("omega", OMEGAS)
def test_normalization_sweep(omega):
    lam = np.linspace(-100.0 * omega, 100.0 * omega, 1000)
    assert np.max(np.abs(multiplier_normalization(omega, lam) - 1.0)) < 1e-12


def test_truncated_transform_zero_frequency():
    assert sinh_multiplier_truncated(1.0, 0.0, 0.1) == 0.0


def test_truncated_transform_is_purely_imaginary():
    val = sinh_multiplier_truncated(1.0, 2.0, 0.05)
    assert val.real == 0.0
    assert 0.0 < val.imag < 1.0


def test_truncated_transform_requires_positive_epsilon():
    with pytest.raises(ValueError):
        sinh_multiplier_truncated(1.0, 1.0, 0.0)


def test_extrapolated_matches_closed_form():
    target = sinh_multiplier(math.pi / 2.0, 1.0)
    approx = sinh_multiplier_extrapolated(math.pi / 2.0, 1.0)
    assert abs(approx - target) < 1e-6


@pytest.mark.parametrize("lam", [0.7, 3.0, -12.5])
def test_extrapolated_other_frequencies(lam):
    assert abs(sinh_multiplier_extrapolated(1.0, lam) - sinh_multiplier(1.0, lam)) < 1e-6


def test_remainder_zero_at_zero_frequency():
    rem = truncation_remainder(1.0, 0.0, 0.3)
    assert rem.rho == 0.0


def test_remainder_monotone_decay():
    mags = [abs(truncation_remainder(1.0, 1.0, e).rho) for e in (0.2, 0.1, 0.05, 0.025)]
    assert all(mags[i + 1] < mags[i] for i in range(3))
    # remainder is linear in epsilon at leading order: halving roughly halves it
    ratios = [mags[i + 1] / mags[i] for i in range(3)]
    assert all(0.3 < r < 0.7 for r in ratios)


def test_remainder_below_grid_sup():
    lams = list(np.linspace(-50.0, 50.0, 11)) + [5.0]
    epsilons = [math.pi / 4.0 * 0.5**k for k in range(4)]
    sup = remainder_sup_on_grid(1.0, lams, epsilons)
    assert math.isfinite(sup)
    rho = abs(truncation_remainder(1.0, 5.0, math.pi / 4.0).rho)
    assert rho <= sup
    assert sup < 4.0


def test_multiplier_matrices_identity_at_zero():
    for build in (forward_multiplier_matrix, inverse_multiplier_matrix):
        m = build(1.0, 0.0)
        assert np.allclose(m.entries, np.eye(2), rtol=0, atol=0)


@pytest.mark.parametrize("omega, lam", [(1.0, 3.0), (math.pi / 2.0, 1.0), (0.5, -7.3)])
def test_multiplier_matrices_unitary_and_inverse(omega, lam):
    phi = forward_multiplier_matrix(omega, lam)
    psi = inverse_multiplier_matrix(omega, lam)
    assert phi.unitarity_defect() < 1e-12
    assert psi.unitarity_defect() < 1e-12
    assert phi.product_defect(psi) < 1e-12
    assert psi.product_defect(phi) < 1e-12


def test_quadrature_transform_matches_multiplier():
    lam = np.linspace(-20.0, 20.0, 41)
    numeric = cosh_multiplier_by_quadrature(1.0, lam)
    exact = cosh_multiplier(1.0, lam)
    assert np.max(np.abs(numeric - exact)) < 1e-6


def test_quadrature_error_carries_estimate():
    err = QuadratureError("boom", 0.25)
    assert err.estimate == 0.25
    assert "2.5" in str(err)
