"""Test-signal generation: named analytic families and seeded random signals.

Grids are given as (t_min, delta, n) tuples, matching GridSignal; the helper
:func:`make_grid` builds one from (t_min, t_max, n) with the right endpoint
excluded, so doubling n halves the step on a fixed domain.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .quadrature import GridSignal
from .transform import VectorSignal

__all__ = [
    "SignalSpec",
    "make_grid",
    "grid_times",
    "smooth_window",
    "gaussian_signal",
    "bump_signal",
    "sech_power_signal",
    "grown_bump_signal",
    "bandlimited_noise_signal",
    "odd_decaying_signal",
    "weighted_trial_signal",
    "build_signal",
    "standard_vector_signals",
]

KINDS = ("gaussian", "bump", "sech_power", "grown_bump", "bandlimited_noise", "from_file")


@dataclass(frozen=True)
class SignalSpec:
    """A named signal family plus its parameters (CLI-facing)."""

    kind: str
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown signal kind {self.kind!r}; choose from {KINDS}")


def make_grid(t_min: float, t_max: float, n: int) -> tuple[float, float, int]:
    if not (t_max > t_min) or n < 2:
        raise ValueError(f"invalid grid request: [{t_min}, {t_max}) with n={n}")
    return (float(t_min), (float(t_max) - float(t_min)) / int(n), int(n))


def grid_times(grid: tuple[float, float, int]) -> np.ndarray:
    t_min, delta, n = grid
    return t_min + delta * np.arange(n)


def _exp_step(s: np.ndarray) -> np.ndarray:
    """C-infinity step: 0 for s <= 0, 1 for s >= 1."""
    with np.errstate(divide="ignore", over="ignore"):
        f = np.where(s > 0, np.exp(-1.0 / np.maximum(s, 1e-300)), 0.0)
        g = np.where(1.0 - s > 0, np.exp(-1.0 / np.maximum(1.0 - s, 1e-300)), 0.0)
    return f / (f + g)


def smooth_window(t: np.ndarray, half: float, rolloff: float) -> np.ndarray:
    """Smooth plateau window: 1 on [-half, half], 0 beyond |t| = half + rolloff."""
    return _exp_step((t + half + rolloff) / rolloff) * _exp_step((half + rolloff - t) / rolloff)


def gaussian_signal(grid, *, center: float = 0.0, width: float = 1.0, amplitude: float = 1.0) -> GridSignal:
    t = grid_times(grid)
    return GridSignal(grid[0], grid[1], amplitude * np.exp(-(((t - center) / width) ** 2)))


def bump_signal(grid, *, center: float = 0.0, halfwidth: float = 1.0, amplitude: float = 1.0) -> GridSignal:
    """Compactly supported mollifier bump, amplitude at its center."""
    t = grid_times(grid)
    s = (t - center) / halfwidth
    out = np.zeros_like(t)
    inside = np.abs(s) < 1.0
    out[inside] = np.exp(1.0 - 1.0 / (1.0 - s[inside] ** 2))
    return GridSignal(grid[0], grid[1], amplitude * out)


def sech_power_signal(grid, *, scale: float = 1.0, power: float = 1.0, center: float = 0.0) -> GridSignal:
    t = grid_times(grid)
    e = np.exp(-np.abs((t - center) / scale))
    return GridSignal(grid[0], grid[1], (2.0 * e / (1.0 + e * e)) ** power)


def grown_bump_signal(
    grid,
    *,
    growth: float = 0.0,
    halfwidth: float | None = None,
    center: float = 0.0,
    freq: float = 0.0,
) -> GridSignal:
    """Bump modulated by e^{growth |t|} (and optionally a cosine carrier).

    The growth is what the weighted spaces admit; pair it with sigma > growth.
    """
    t_min, delta, n = grid
    if halfwidth is None:
        halfwidth = 0.6 * min(abs(t_min), abs(t_min + delta * n)) or 1.0
    base = bump_signal(grid, center=center, halfwidth=halfwidth)
    t = grid_times(grid)
    mod = np.exp(growth * np.abs(t))
    if freq:
        mod = mod * np.cos(freq * t)
    return GridSignal(t_min, delta, base.samples * mod)


def bandlimited_noise_signal(
    grid,
    *,
    seed: int = 0,
    cutoff: float = 2.0,
    min_freq: float = 0.0,
    half: float | None = None,
    rolloff: float | None = None,
    complex_valued: bool = True,
    rng: np.random.Generator | None = None,
) -> GridSignal:
    """Random signal with spectrum in [min_freq, cutoff] (rad/s), smoothly windowed.

    The window is compactly supported inside the grid, so the signal vanishes
    identically near the edges (keeps wrap-around and Nyquist leakage at
    rounding level for downstream spectral operations).
    """
    t_min, delta, n = grid
    if rng is None:
        rng = np.random.default_rng(seed)
    t = grid_times(grid)
    k = 2.0 * math.pi * np.fft.fftfreq(n, d=delta)
    band = (np.abs(k) <= cutoff) & (np.abs(k) >= min_freq)
    coeff = np.zeros(n, dtype=np.complex128)
    idx = np.nonzero(band)[0]
    coeff[idx] = rng.standard_normal(idx.size) + 1j * rng.standard_normal(idx.size)
    sig = np.fft.ifft(coeff) * n / max(1, idx.size) ** 0.5
    if not complex_valued:
        sig = sig.real.astype(np.complex128)
    span = min(abs(t_min), abs(t_min + delta * n))
    if half is None:
        half = 0.55 * span
    if rolloff is None:
        rolloff = 0.2 * span
    return GridSignal(t_min, delta, sig * smooth_window(t, half, rolloff))


def odd_decaying_signal(grid, rng: np.random.Generator, *, terms: int = 6) -> GridSignal:
    """Odd, rapidly decaying signal with vanishing low-order moments.

    Sum of sin(b t) e^{-(t/c)^2} terms with b*c/2 >= 5, so every moment (the
    transform's tail driver) is at the e^{-25} level; suitable for round-trip
    checks of kernels whose transform would otherwise decay too slowly for the
    grid window.
    """
    t = grid_times(grid)
    out = np.zeros_like(t, dtype=np.complex128)
    for _ in range(terms):
        c = rng.uniform(6.0, 9.0)
        b = rng.uniform(10.0 / c, 3.0)
        amp = rng.standard_normal() + 1j * rng.standard_normal()
        out += amp * np.sin(b * t) * np.exp(-((t / c) ** 2))
    return GridSignal(grid[0], grid[1], out)


def weighted_trial_signal(grid, sigma: float, rng: np.random.Generator) -> GridSignal:
    """Random member of the weighted space: band-limited noise times e^{gamma|t|}.

    gamma is drawn in [0, sigma) (zero when sigma is zero), then the product is
    smoothly truncated well inside the grid.
    """
    t_min, delta, n = grid
    t = grid_times(grid)
    base = bandlimited_noise_signal(grid, rng=rng, cutoff=2.5)
    gamma = rng.uniform(0.0, sigma) if sigma > 0 else 0.0
    return GridSignal(t_min, delta, base.samples * np.exp(gamma * np.abs(t)))


def build_signal(spec: SignalSpec, grid, *, seed: int = 0) -> GridSignal:
    """Instantiate a scalar signal from its spec on the given grid."""
    kind, params = spec.kind, dict(spec.params)
    if kind == "gaussian":
        return gaussian_signal(grid, **params)
    if kind == "bump":
        return bump_signal(grid, **params)
    if kind == "sech_power":
        return sech_power_signal(grid, **params)
    if kind == "grown_bump":
        return grown_bump_signal(grid, **params)
    if kind == "bandlimited_noise":
        params.setdefault("seed", seed)
        return bandlimited_noise_signal(grid, **params)
    raise ValueError(f"signal kind {kind!r} cannot be built directly on a grid")


def standard_vector_signals(grid, *, seed: int = 0) -> list[VectorSignal]:
    """The fixed signal set used by isometry / inversion checks.

    Supports stay well inside the grid (clearance above 14 length units for a
    unit-scale kernel) so that round-trip defects sit below 1e-6: truncating
    the transform at the grid edge loses mass like the kernel tail over the
    clearance, and inversion errors are linear in that loss.
    """
    t_min, delta, n = grid
    t = grid_times(grid)
    span = min(abs(t_min), abs(t_min + delta * n))
    rng = np.random.default_rng(seed)
    gauss = gaussian_signal(grid, width=2.0)
    gauss_t = GridSignal(t_min, delta, t * np.exp(-((t / 2.0) ** 2)))
    pairs = [
        VectorSignal(gauss, gauss_t),
        VectorSignal(
            bump_signal(grid, halfwidth=0.3 * span),
            sech_power_signal(grid, scale=2.0, power=2.0),
        ),
        VectorSignal(
            bandlimited_noise_signal(grid, rng=rng, cutoff=2.0, half=0.3 * span, rolloff=0.1 * span),
            bandlimited_noise_signal(grid, rng=rng, cutoff=3.0, half=0.3 * span, rolloff=0.1 * span),
        ),
    ]
    return pairs
