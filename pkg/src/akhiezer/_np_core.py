"""NumPy implementations of the hot direct-quadrature loops.

Fallback backend used when the compiled extension is unavailable (or disabled
via AKHIEZER_PURE_PYTHON).  Signatures mirror ``_core_cy`` exactly.
"""

from __future__ import annotations

import math

import numpy as np

from .kernels import csch, sech, sinh_kernel_smooth_part

NAME = "numpy"

# rows per chunk in the dense kernel-matrix product of conv_cosh_direct
_CHUNK = 64


def conv_cosh_direct(eval_t: np.ndarray, t0: float, delta: float, x: np.ndarray, omega: float) -> np.ndarray:
    n = x.shape[0]
    tau = t0 + delta * np.arange(n)
    wx = x.copy()
    wx[0] *= 0.5
    wx[-1] *= 0.5
    out = np.empty(eval_t.shape[0], dtype=np.complex128)
    scale = (omega / math.pi) * delta
    for lo in range(0, eval_t.shape[0], _CHUNK):
        hi = min(lo + _CHUNK, eval_t.shape[0])
        kermat = sech(omega * (eval_t[lo:hi, None] - tau[None, :]))
        out[lo:hi] = scale * (kermat @ wx)
    return out


def _paired_differences(x: np.ndarray, j: int, L: int) -> np.ndarray:
    """b_l = x(t_j - l delta) - x(t_j + l delta) for l = 1..L, zero off-grid."""
    n = x.shape[0]
    l = np.arange(1, L + 1)
    im = j - l
    ip = j + l
    left = np.where(im >= 0, x[np.maximum(im, 0)], 0.0)
    right = np.where(ip <= n - 1, x[np.minimum(ip, n - 1)], 0.0)
    return left - right


def _slope_limit(b: np.ndarray, delta: float) -> complex:
    """Limit of kernel*pairing at u -> 0: b'(0)/pi.

    Uses the one-sided odd-expansion slope estimate of the highest order the
    available pairs allow; the 3-point form is exact through delta^5.
    """
    if b.shape[0] >= 3:
        return (45.0 * b[0] - 9.0 * b[1] + b[2]) / (30.0 * delta) / math.pi
    if b.shape[0] == 2:
        return (8.0 * b[0] - b[1]) / (6.0 * delta) / math.pi
    if b.shape[0] == 1:
        return b[0] / delta / math.pi
    return 0.0j


def conv_sinh_pv_nodes(
    idx: np.ndarray,
    x: np.ndarray,
    delta: float,
    omega: float,
    lmax: int,
    use_split: bool,
) -> np.ndarray:
    n = x.shape[0]
    out = np.empty(idx.shape[0], dtype=np.complex128)
    for i, j in enumerate(idx):
        L = max(j, n - 1 - j)
        if lmax > 0:
            L = min(L, lmax)
        b = _paired_differences(x, int(j), L)
        u = delta * np.arange(1, L + 1)
        if use_split:
            kern = 1.0 / (math.pi * u) + sinh_kernel_smooth_part(omega, u)
        else:
            kern = (omega / math.pi) * csch(omega * u)
        out[i] = delta * (0.5 * _slope_limit(b, delta) + np.sum(kern * b))
    return out


def hilbert_pv_nodes(idx: np.ndarray, x: np.ndarray, delta: float, lmax: int) -> np.ndarray:
    n = x.shape[0]
    out = np.empty(idx.shape[0], dtype=np.complex128)
    for i, j in enumerate(idx):
        L = max(j, n - 1 - j)
        if lmax > 0:
            L = min(L, lmax)
        b = _paired_differences(x, int(j), L)
        u = delta * np.arange(1, L + 1)
        out[i] = delta * (0.5 * _slope_limit(b, delta) + np.sum(b / (math.pi * u)))
    return out
