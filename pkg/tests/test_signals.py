"""Signal generators: determinism, support, growth, spec parsing."""

import numpy as np
import pytest

from akhiezer.signals import (
    SignalSpec,
    bandlimited_noise_signal,
    build_signal,
    bump_signal,
    gaussian_signal,
    grid_times,
    grown_bump_signal,
    make_grid,
    odd_decaying_signal,
    sech_power_signal,
    smooth_window,
    standard_vector_signals,
    weighted_trial_signal,
)

GRID = make_grid(-20, 20, 1024)


def test_make_grid_validation():
    assert make_grid(-10, 10, 100) == (-10.0, 0.2, 100)
    with pytest.raises(ValueError):
        make_grid(5, 5, 100)
    with pytest.raises(ValueError):
        make_grid(-5, 5, 1)


def test_signal_spec_rejects_unknown_kind():
    with pytest.raises(ValueError):
        SignalSpec("wavelet")
    spec = SignalSpec("gaussian", {"width": 2.0})
    assert spec.kind == "gaussian"


def test_smooth_window_support_and_plateau():
    t = grid_times(GRID)
    w = smooth_window(t, 8.0, 3.0)
    assert np.all(w[np.abs(t) <= 8.0] == 1.0)
    assert np.all(w[np.abs(t) >= 11.0] == 0.0)
    assert np.all((w >= 0.0) & (w <= 1.0))


def test_gaussian_and_bump_shapes():
    g = gaussian_signal(GRID, center=1.0, width=2.0, amplitude=3.0)
    assert abs(g.samples[int(round((1.0 - GRID[0]) / GRID[1]))] - 3.0) < 1e-2
    b = bump_signal(GRID, halfwidth=5.0)
    t = grid_times(GRID)
    assert np.all(b.samples[np.abs(t) >= 5.0] == 0.0)
    assert b.samples[int(round((0.0 - GRID[0]) / GRID[1]))] == pytest.approx(1.0)


def test_sech_power_signal_even_and_positive():
    s = sech_power_signal(GRID, scale=2.0, power=2.0)
    assert np.all(s.samples.real > 0.0)
    mid = int(round((0.0 - GRID[0]) / GRID[1]))
    assert s.samples[mid].real == pytest.approx(1.0)


def test_grown_bump_growth_is_compact():
    g = grown_bump_signal(GRID, growth=0.4, halfwidth=10.0)
    assert np.all(np.isfinite(g.samples.view(np.float64)))
    t = grid_times(GRID)
    assert np.all(g.samples[np.abs(t) >= 10.0] == 0.0)


def test_bandlimited_noise_deterministic_and_compact():
    a = bandlimited_noise_signal(GRID, seed=42)
    b = bandlimited_noise_signal(GRID, seed=42)
    c = bandlimited_noise_signal(GRID, seed=43)
    assert np.array_equal(a.samples, b.samples)
    assert not np.array_equal(a.samples, c.samples)
    t = grid_times(GRID)
    assert np.all(a.samples[np.abs(t) >= 16.0] == 0.0)


def test_bandlimited_noise_band_is_respected():
    x = bandlimited_noise_signal(GRID, seed=7, cutoff=2.0)
    # spectrum before windowing lives in |lambda| <= 2; windowing smears by the
    # window bandwidth, so just confirm strong high-frequency suppression
    spec = np.fft.fft(x.samples)
    lam = 2.0 * np.pi * np.fft.fftfreq(GRID[2], d=GRID[1])
    high = np.abs(spec[np.abs(lam) > 30.0])
    low = np.max(np.abs(spec))
    assert np.max(high) < 1e-6 * low


def test_odd_signal_is_odd_and_decaying():
    grid = make_grid(-40, 40, 2048)
    x = odd_decaying_signal(grid, np.random.default_rng(0))
    t = grid_times(grid)
    mid = int(round((0.0 - grid[0]) / grid[1]))
    assert abs(x.samples[mid]) < 1e-12
    for k in (10, 100, 500):
        assert x.samples[mid + k] == pytest.approx(-x.samples[mid - k], rel=1e-9, abs=1e-12)
    assert np.max(np.abs(x.samples[np.abs(t) > 35.0])) < 1e-4 * np.max(np.abs(x.samples))


def test_weighted_trial_signal_finite_and_seeded():
    rng = np.random.default_rng(5)
    x = weighted_trial_signal(GRID, 0.5, rng)
    assert np.all(np.isfinite(x.samples.view(np.float64)))
    rng2 = np.random.default_rng(5)
    y = weighted_trial_signal(GRID, 0.5, rng2)
    assert np.array_equal(x.samples, y.samples)


def test_build_signal_dispatch():
    for kind in ("gaussian", "bump", "sech_power", "grown_bump", "bandlimited_noise"):
        out = build_signal(SignalSpec(kind), GRID, seed=1)
        assert out.n == GRID[2]
    with pytest.raises(ValueError):
        build_signal(SignalSpec("from_file"), GRID)


def test_standard_vector_signals_fixed():
    sigs = standard_vector_signals(GRID, seed=0)
    assert len(sigs) == 3
    again = standard_vector_signals(GRID, seed=0)
    for a, b in zip(sigs, again):
        assert np.array_equal(a.x1.samples, b.x1.samples)
        assert np.array_equal(a.x2.samples, b.x2.samples)
