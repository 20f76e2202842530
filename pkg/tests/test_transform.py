"""Spectral path, plans, norms, weighted machinery, round trips."""

import dataclasses
import math

import numpy as np
import pytest

from akhiezer import GridSignal
from akhiezer.quadrature import GridMismatchError, convolve_cosh_direct, hilbert_pv
from akhiezer.signals import (
    bandlimited_noise_signal,
    gaussian_signal,
    grown_bump_signal,
    make_grid,
)
from akhiezer.transform import (
    VectorSignal,
    apply_cosh_spectral,
    apply_forward,
    apply_hilbert_spectral,
    apply_inverse,
    apply_sinh_spectral,
    conjugate_weight,
    l2_norm,
    make_plan,
    roundtrip_error,
    vector_l2_norm,
    weighted_bound_report,
    weighted_norm,
)

GRID = make_grid(-20, 20, 4096)


@pytest.fixture(scope="module")
def plan():
    return make_plan(1.0, GRID)


@pytest.fixture(scope="module")
def gauss():
    return gaussian_signal(GRID)


def test_plan_padding_and_zero_entry(plan):
    assert plan.m == 8192
    assert plan.m >= 2 * plan.n
    zero_bin = int(np.argmin(np.abs(plan.lambdas)))
    assert plan.lambdas[zero_bin] == 0.0
    assert plan.cosh_table[zero_bin] == 1.0
    assert plan.sinh_table[zero_bin] == 0.0


def test_plan_tables_normalized(plan):
    assert plan.unitarity_defect() < 1e-12


def test_plan_deterministic():
    a = make_plan(1.0, GRID)
    b = make_plan(1.0, GRID)
    assert a.grid_key() == b.grid_key() and a.m == b.m
    assert np.array_equal(a.lambdas, b.lambdas)
    assert np.array_equal(a.cosh_table, b.cosh_table)
    assert np.array_equal(a.sinh_table, b.sinh_table)


def test_plan_rejects_bad_grid():
    with pytest.raises(ValueError):
        make_plan(1.0, (0.0, -0.1, 64))
    with pytest.raises(ValueError):
        make_plan(1.0, (0.0, 0.1, 1))
    with pytest.raises(ValueError):
        make_plan(1e308, (0.0, 1e308, 4))


def test_grid_mismatch_rejected(plan):
    other = gaussian_signal(make_grid(-20, 20, 2048))
    with pytest.raises(GridMismatchError):
        apply_cosh_spectral(plan, other)


def test_apply_cosh_zero(plan):
    x = GridSignal(GRID[0], GRID[1], np.zeros(GRID[2]))
    assert np.all(apply_cosh_spectral(plan, x).samples == 0.0)


def test_apply_cosh_spectrum_is_squared_multiplier(plan):
    # input = sampled kernel itself, so the output spectrum is the multiplier squared
    t = GRID[0] + GRID[1] * np.arange(GRID[2])
    e = np.exp(-np.abs(t))
    x = GridSignal(GRID[0], GRID[1], (2.0 / math.pi) * e / (1.0 + e * e))
    y = apply_cosh_spectral(plan, x)
    padded = np.zeros(plan.m, dtype=complex)
    padded[: plan.n] = y.samples
    spectrum = plan.delta * plan.m * np.fft.ifft(padded) * np.exp(1j * plan.lambdas * plan.t_min)
    expected = np.cosh(math.pi * plan.lambdas / 2.0) ** -2.0
    window = np.abs(plan.lambdas) <= 10.0
    assert np.max(np.abs(spectrum[window] - expected[window])) < 1e-6


def test_apply_cosh_matches_direct(plan, gauss):
    nodes = gauss.times[1024:3072:256]
    direct = convolve_cosh_direct(1.0, gauss, nodes)
    spectral = apply_cosh_spectral(plan, gauss).samples[1024:3072:256]
    assert np.max(np.abs(direct - spectral)) < 1e-6


def test_apply_sinh_kills_even_signal_at_center(plan, gauss):
    out = apply_sinh_spectral(plan, gauss)
    center = int(round((0.0 - GRID[0]) / GRID[1]))
    assert abs(out.samples[center]) < 1e-10


def test_apply_sinh_real_in_real_out(plan):
    x = bandlimited_noise_signal(GRID, seed=9, cutoff=3.0, complex_valued=False)
    out = apply_sinh_spectral(plan, x)
    assert np.max(np.abs(out.samples.imag)) < 1e-10 * max(1.0, np.max(np.abs(out.samples.real)))


def test_forward_of_scalar_pair_is_component_transforms(plan, gauss):
    zero = gauss.with_samples(np.zeros(gauss.n))
    out = apply_forward(plan, VectorSignal(gauss, zero))
    c = apply_cosh_spectral(plan, gauss)
    s = apply_sinh_spectral(plan, gauss)
    assert np.max(np.abs(out.x1.samples - c.samples)) < 1e-12
    assert np.max(np.abs(out.x2.samples - s.samples)) < 1e-12


def test_forward_isometry_and_inversion():
    # inversion error is linear in the mass the forward transform spills past
    # the grid; keep the signal support 16 units inside the edges
    grid = make_grid(-24, 24, 4096)
    plan = make_plan(1.0, grid)
    x = VectorSignal(
        bandlimited_noise_signal(grid, seed=1, cutoff=2.0, half=6.0, rolloff=2.0),
        bandlimited_noise_signal(grid, seed=2, cutoff=2.5, half=6.0, rolloff=2.0),
    )
    nx = vector_l2_norm(x)
    y = apply_forward(plan, x)
    assert abs(vector_l2_norm(y) / nx - 1.0) < 1e-6
    z = apply_inverse(plan, y)
    err = math.sqrt(
        l2_norm(x.x1.with_samples(z.x1.samples - x.x1.samples)) ** 2
        + l2_norm(x.x2.with_samples(z.x2.samples - x.x2.samples)) ** 2
    )
    assert err / nx < 1e-6
    w = apply_forward(plan, apply_inverse(plan, x))
    err2 = math.sqrt(
        l2_norm(x.x1.with_samples(w.x1.samples - x.x1.samples)) ** 2
        + l2_norm(x.x2.with_samples(w.x2.samples - x.x2.samples)) ** 2
    )
    assert err2 / nx < 1e-6


def test_hilbert_spectral_matches_pairing():
    # moment-free signal: the undamped 1/u kernel makes both paths sensitive
    # to low-order moments at the window scale, so use a signal without them
    from akhiezer.signals import odd_decaying_signal

    grid = make_grid(-40, 40, 4096)
    plan40 = make_plan(1.0, grid)
    x = odd_decaying_signal(grid, np.random.default_rng(4))
    spec = apply_hilbert_spectral(plan40, x)
    nodes = x.times[1024:3072:128]
    direct = hilbert_pv(x, nodes)
    assert np.max(np.abs(direct - spec.samples[1024:3072:128])) < 1e-5


def test_l2_norm_values():
    assert l2_norm(GridSignal(0.0, 0.5, np.zeros(16))) == 0.0
    ind = GridSignal(0.0, 1e-3, np.ones(1000))
    assert l2_norm(ind) == pytest.approx(1.0, abs=1e-3)
    gauss = gaussian_signal(GRID)
    assert l2_norm(gauss) == pytest.approx(1.1195151349202476, abs=1e-6)


def test_weighted_norm_values():
    ind = GridSignal(0.0, 1e-3, np.ones(1000))
    assert weighted_norm(ind, 0.0) == l2_norm(ind)
    assert weighted_norm(ind, 1.0) == pytest.approx(0.65751985398289963, abs=1e-3)


def test_weighted_norm_monotone_in_sigma():
    x = bandlimited_noise_signal(GRID, seed=5)
    norms = [weighted_norm(x, s) for s in (0.0, 0.3, 0.6, 0.9)]
    assert all(norms[i + 1] <= norms[i] for i in range(3))


def test_conjugate_weight_identity_and_roundtrip():
    x = bandlimited_noise_signal(GRID, seed=6)
    same = conjugate_weight(x, 0.0, "forward")
    assert np.array_equal(same.samples, x.samples)
    back = conjugate_weight(conjugate_weight(x, 0.7, "forward"), 0.7, "inverse")
    scale = np.max(np.abs(x.samples))
    assert np.max(np.abs(back.samples - x.samples)) < 1e-12 * scale
    assert l2_norm(conjugate_weight(x, 0.7, "forward")) == pytest.approx(weighted_norm(x, 0.7), rel=1e-12)


def test_conjugate_weight_overflow():
    x = gaussian_signal(make_grid(-20, 20, 64))
    with pytest.raises(OverflowError):
        conjugate_weight(x, 40.0, "inverse")
    with pytest.raises(ValueError):
        conjugate_weight(x, 0.5, "sideways")


def test_bound_report_contractive_at_sigma_zero(plan):
    rep = weighted_bound_report(plan, 0.0, "cosh", trials=20, seed=3)
    assert rep.empirical_ratio <= 1.0 + 1e-6
    assert rep.bound == 2.0
    assert rep.satisfied
    assert rep.skipped_trials == 0


@pytest.mark.parametrize(
    "operator, ratio, expected_bound",
    [
        ("cosh", 0.5, 4.0),
        ("sinh", 0.5, 4.0 * (math.pi + 1.0)),
        ("cosh", 0.9, 20.0),
        ("sinh", 0.9, (math.pi + 1.0) / 0.01),
    ],
)
def test_bound_report_bound_values(plan, operator, ratio, expected_bound):
    rep = weighted_bound_report(plan, ratio * plan.omega, operator, trials=10, seed=1)
    assert rep.bound == pytest.approx(expected_bound, rel=1e-12)
    assert rep.satisfied


@pytest.mark.parametrize("operator", ["forward", "inverse"])
@pytest.mark.parametrize("ratio", [0.0, 0.25, 0.5, 0.75])
def test_bound_report_vector_operators(plan, operator, ratio):
    rep = weighted_bound_report(plan, ratio * plan.omega, operator, trials=10, seed=2)
    expected = (2.0 + (math.pi + 1.0) / (1.0 - ratio)) / (1.0 - ratio)
    assert rep.bound == pytest.approx(expected, rel=1e-12)
    assert rep.satisfied
    assert "composite" in rep.note


def test_bound_report_accepts_aliases(plan):
    rep = weighted_bound_report(plan, 0.25, "C", trials=5, seed=0)
    assert rep.operator == "cosh"
    with pytest.raises(ValueError):
        weighted_bound_report(plan, 0.25, "nonsense", trials=5)


def test_roundtrip_error_l2(plan):
    t = GRID[0] + GRID[1] * np.arange(GRID[2])
    x = VectorSignal(
        gaussian_signal(GRID),
        GridSignal(GRID[0], GRID[1], t * np.exp(-t * t)),
    )
    assert roundtrip_error(plan, x, 0.0) < 1e-6


def test_roundtrip_error_weighted_growth():
    grid = make_grid(-24, 24, 4096)
    plan = make_plan(1.0, grid)
    x = VectorSignal(
        grown_bump_signal(grid, growth=0.4, halfwidth=14.0, freq=1.3),
        grown_bump_signal(grid, growth=0.35, halfwidth=12.0, center=1.0),
    )
    assert roundtrip_error(plan, x, 0.5) < 1e-4


def test_roundtrip_refinement_study():
    errs = []
    for n in (256, 512, 1024):
        grid = make_grid(-20, 20, n)
        plan = make_plan(1.0, grid)
        x1 = gaussian_signal(grid, width=0.25)
        x2 = x1.with_samples(np.zeros(n))
        errs.append(roundtrip_error(plan, VectorSignal(x1, x2), 0.0))
    # under-resolved bump: first refinement cuts the error far faster than n^-2,
    # afterwards it sits at the window-spill floor
    assert errs[1] < errs[0] / 4.0
    assert errs[2] < errs[1] * 1.5


def test_roundtrip_rejects_zero_signal(plan):
    zero = GridSignal(GRID[0], GRID[1], np.zeros(GRID[2]))
    with pytest.raises(ValueError):
        roundtrip_error(plan, VectorSignal(zero, zero), 0.0)


def test_energy_pythagoras(plan):
    rng = np.random.default_rng(8)
    for _ in range(5):
        f = bandlimited_noise_signal(GRID, rng=rng, cutoff=2.5)
        nf2 = l2_norm(f) ** 2
        gc2 = l2_norm(apply_cosh_spectral(plan, f)) ** 2
        gs2 = l2_norm(apply_sinh_spectral(plan, f)) ** 2
        assert abs(gc2 + gs2 - nf2) / nf2 < 1e-6


def test_plan_is_replaceable_for_fault_injection(plan):
    bad_table = plan.cosh_table.copy()
    bad_table[10] *= 1.01
    corrupted = dataclasses.replace(plan, cosh_table=bad_table)
    assert corrupted.unitarity_defect() > 1e-3
