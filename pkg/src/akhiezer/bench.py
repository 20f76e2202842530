"""Benchmark: O(n^2) direct quadrature against the O(n log n) multiplier path.

Rows carry wall time per path, the node-wise deviation between the two, and
the backend that ran the direct loops.  When both backends are available the
direct path can additionally be timed under the NumPy fallback, which is the
compiled-core speedup measurement.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

import numpy as np

from . import _backend
from .quadrature import convolve_cosh_direct, convolve_sinh_pv, hilbert_pv
from .signals import gaussian_signal, make_grid
from .transform import (
    apply_cosh_spectral,
    apply_hilbert_spectral,
    apply_sinh_spectral,
    make_plan,
)

__all__ = ["BenchRow", "run_bench"]

BENCH_FIELDS = (
    "n",
    "delta",
    "transform",
    "backend",
    "t_direct_s",
    "t_spectral_s",
    "max_abs_deviation",
    "timed_out",
    "t_direct_fallback_s",
)


@dataclass(frozen=True)
class BenchRow:
    n: int
    delta: float
    transform: str
    backend: str
    t_direct_s: float
    t_spectral_s: float
    max_abs_deviation: float
    timed_out: bool
    t_direct_fallback_s: float | None


def _best_of(func, repeats: int) -> float:
    best = math.inf
    for _ in range(repeats):
        start = time.perf_counter()
        func()
        best = min(best, time.perf_counter() - start)
    return best


def _direct_runner(tag: str, omega: float, x, nodes):
    if tag == "cosh":
        return lambda: convolve_cosh_direct(omega, x, nodes)
    if tag == "sinh":
        return lambda: convolve_sinh_pv(omega, x, nodes)
    if tag == "hilbert":
        return lambda: hilbert_pv(x, nodes)
    raise ValueError(f"benchmark supports scalar transforms only, got {tag!r}")


def _spectral_runner(tag: str, plan, x):
    apply = {
        "cosh": apply_cosh_spectral,
        "sinh": apply_sinh_spectral,
        "hilbert": apply_hilbert_spectral,
    }[tag]
    return lambda: apply(plan, x)


def run_bench(
    omega: float,
    sizes: list[int],
    *,
    transform_tag: str = "cosh",
    span: float = 20.0,
    repeats: int = 3,
    timeout_s: float = 120.0,
    compare_backends: bool = False,
) -> list[BenchRow]:
    """Time both paths on a sampled gaussian for each grid size.

    Direct-path cost scales as n^2; when the projected cost (extrapolated from
    the previous size) exceeds ``timeout_s`` the direct run is skipped and the
    row is marked timed out.
    """
    if sizes != sorted(sizes):
        raise ValueError("sizes must be ascending")
    rows: list[BenchRow] = []
    prev: tuple[int, float] | None = None
    for n in sizes:
        grid = make_grid(-span, span, n)
        x = gaussian_signal(grid)
        plan = make_plan(omega, grid)
        nodes = x.times
        run_direct = _direct_runner(transform_tag, omega, x, nodes)
        run_spectral = _spectral_runner(transform_tag, plan, x)

        t_spec = _best_of(run_spectral, repeats)

        projected = prev[1] * (n / prev[0]) ** 2 if prev else 0.0
        if projected > timeout_s:
            rows.append(
                BenchRow(
                    n=n,
                    delta=grid[1],
                    transform=transform_tag,
                    backend=_backend.backend_name(),
                    t_direct_s=math.nan,
                    t_spectral_s=t_spec,
                    max_abs_deviation=math.nan,
                    timed_out=True,
                    t_direct_fallback_s=None,
                )
            )
            continue

        start = time.perf_counter()
        direct_vals = run_direct()
        t_direct = time.perf_counter() - start
        prev = (n, t_direct)

        spec_sig = {
            "cosh": apply_cosh_spectral,
            "sinh": apply_sinh_spectral,
            "hilbert": apply_hilbert_spectral,
        }[transform_tag](plan, x)
        deviation = float(np.max(np.abs(direct_vals - spec_sig.samples)))

        t_fallback = None
        if compare_backends and "compiled" in _backend.available_backends():
            with _backend.force_backend("numpy"):
                start = time.perf_counter()
                _direct_runner(transform_tag, omega, x, nodes)()
                t_fallback = time.perf_counter() - start

        rows.append(
            BenchRow(
                n=n,
                delta=grid[1],
                transform=transform_tag,
                backend=_backend.backend_name(),
                t_direct_s=t_direct,
                t_spectral_s=t_spec,
                max_abs_deviation=deviation,
                timed_out=False,
                t_direct_fallback_s=t_fallback,
            )
        )
    return rows
