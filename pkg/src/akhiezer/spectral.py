"""Closed-form Fourier multipliers of the kernels and the truncation remainder.

Convention used throughout the package: the forward transform carries the
kernel ``e^{+i lambda t}`` and the inverse carries ``1/(2 pi)`` with
``e^{-i lambda t}``.  Under it the cosh kernel has multiplier
``sech(pi lambda / 2 omega)`` and the sinh kernel (as a principal-value
transform) has multiplier ``i tanh(pi lambda / 2 omega)``.  The two satisfy
``|c|^2 + |s|^2 = 1`` for every frequency, which is the source of the matrix
multipliers' unitarity and of the transform pair's invertibility.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy import integrate

from .kernels import OmegaParam, _omega_value, cosh_kernel, csch, sech

__all__ = [
    "QuadratureError",
    "MultiplierMatrix",
    "TruncationRemainder",
    "cosh_multiplier",
    "sinh_multiplier",
    "multiplier_normalization",
    "sinh_multiplier_truncated",
    "sinh_multiplier_extrapolated",
    "truncation_remainder",
    "remainder_sup_on_grid",
    "cosh_multiplier_by_quadrature",
    "forward_multiplier_matrix",
    "inverse_multiplier_matrix",
]


class QuadratureError(RuntimeError):
    """Adaptive quadrature failed to reach the requested accuracy."""

    def __init__(self, message: str, estimate: float):
        super().__init__(f"{message} (achieved error estimate {estimate:.3e})")
        self.estimate = estimate


def cosh_multiplier(omega: OmegaParam | float, lam):
    """sech(pi lambda / (2 omega)); even, real, values in (0, 1]."""
    w = _omega_value(omega)
    out = sech(math.pi * np.asarray(lam, dtype=float) / (2.0 * w))
    return out if np.ndim(lam) else float(out)


def sinh_multiplier(omega: OmegaParam | float, lam):
    """i * tanh(pi lambda / (2 omega)); odd, purely imaginary, modulus < 1."""
    w = _omega_value(omega)
    out = 1j * np.tanh(math.pi * np.asarray(lam, dtype=float) / (2.0 * w))
    return out if np.ndim(lam) else complex(out)


def multiplier_normalization(omega: OmegaParam | float, lam):
    """|c|^2 + |s|^2 at the given frequency; equals 1 up to rounding."""
    c = cosh_multiplier(omega, lam)
    s = sinh_multiplier(omega, lam)
    out = np.abs(c) ** 2 + np.abs(s) ** 2
    return out if np.ndim(lam) else float(out)


def _truncation_radius(omega: float, tol: float) -> float:
    """Cutoff T such that the sinh kernel's tail integral beyond T is below tol."""
    return -math.log(tol * math.pi / (2.0 * omega)) / omega


def _tail_bound(omega: float, T: float) -> float:
    """Bound on |2 * int_T^inf sinh_kernel(t) sin(lambda t) dt|."""
    return (4.0 / math.pi) * math.exp(-omega * T) / (-math.expm1(-2.0 * omega * T))


def sinh_multiplier_truncated(
    omega: OmegaParam | float,
    lam: float,
    epsilon: float,
    *,
    tol: float = 1e-12,
) -> complex:
    """Transform of the sinh kernel restricted to |t| >= epsilon.

    By oddness this equals ``2i * int_eps^T kernel(t) sin(lambda t) dt`` plus
    an exponentially small tail beyond the cutoff T(omega, tol).  The
    oscillatory integral is evaluated with QUADPACK's sine-weighted rule; the
    analytic tail bound is added to the error estimate.  Raises
    :class:`QuadratureError` if the combined estimate exceeds ``50 * tol``.
    """
    w = _omega_value(omega)
    eps = float(epsilon)
    if not (eps > 0.0):
        raise ValueError(f"epsilon must be positive, got {epsilon!r}")
    lam = float(lam)
    if lam == 0.0:
        return 0.0j
    T = max(_truncation_radius(w, tol), eps + 1.0 / w)
    val, err = integrate.quad(
        lambda t: (w / math.pi) * csch(w * t),
        eps,
        T,
        weight="sin",
        wvar=lam,
        limit=800,
        maxp1=100,
        epsabs=tol,
        epsrel=tol,
    )
    estimate = err + _tail_bound(w, T)
    if estimate > 50.0 * tol:
        raise QuadratureError(
            f"truncated sinh-kernel transform did not converge at lambda={lam}, epsilon={eps}",
            estimate,
        )
    return 2j * val


_RICHARDSON_ORDERS = (1, 3, 5, 7)


def sinh_multiplier_extrapolated(
    omega: OmegaParam | float,
    lam: float,
    *,
    eps0: float | None = None,
    tol: float = 1e-8,
    max_levels: int = 8,
) -> complex:
    """Limit of the truncated transform as epsilon -> 0, by Richardson extrapolation.

    The truncation remainder expands in odd powers of epsilon (valid once
    |lambda| * epsilon is below one, hence the frequency-dependent start), so
    halving steps with orders 1, 3, 5, ... are eliminated in turn.  Stops when
    two successive extrapolants agree to ``tol``; raises QuadratureError
    otherwise.
    """
    w = _omega_value(omega)
    lam = float(lam)
    if eps0 is None:
        eps0 = math.pi / (4.0 * w)
        if lam != 0.0:
            eps0 = min(eps0, 1.0 / abs(lam))
    vals = [sinh_multiplier_truncated(w, lam, eps0 * 0.5**k) for k in range(3)]
    prev_best = None
    last_diff = math.inf
    for level in range(3, max_levels + 1):
        rows = [list(vals)]
        for p in _RICHARDSON_ORDERS:
            last = rows[-1]
            if len(last) < 2:
                break
            fac = 2.0**p
            rows.append([(fac * last[j + 1] - last[j]) / (fac - 1.0) for j in range(len(last) - 1)])
        best = rows[-1][-1]
        if prev_best is not None:
            last_diff = abs(best - prev_best)
            if last_diff < tol:
                return best
        prev_best = best
        if level < max_levels:
            vals.append(sinh_multiplier_truncated(w, lam, eps0 * 0.5**level))
    raise QuadratureError(
        f"epsilon extrapolation of the truncated transform stalled at lambda={lam}",
        last_diff,
    )


@dataclass(frozen=True)
class TruncationRemainder:
    """Difference between the full and the epsilon-truncated sinh multiplier."""

    lam: float
    epsilon: float
    rho: complex


def truncation_remainder(omega: OmegaParam | float, lam: float, epsilon: float) -> TruncationRemainder:
    """rho(lambda, epsilon) = full multiplier minus truncated transform.

    Tends to 0 as epsilon -> 0 at fixed lambda and stays uniformly bounded
    over lambda for epsilon up to pi/(4 omega).
    """
    w = _omega_value(omega)
    rho = sinh_multiplier(w, lam) - sinh_multiplier_truncated(w, lam, epsilon)
    return TruncationRemainder(lam=float(lam), epsilon=float(epsilon), rho=complex(rho))


def remainder_sup_on_grid(
    omega: OmegaParam | float,
    lams: Sequence[float],
    epsilons: Sequence[float],
) -> float:
    """Empirical sup of |rho| over a finite (lambda, epsilon) grid."""
    w = _omega_value(omega)
    sup = 0.0
    for lam in lams:
        for eps in epsilons:
            sup = max(sup, abs(truncation_remainder(w, lam, eps).rho))
    return sup


def cosh_multiplier_by_quadrature(
    omega: OmegaParam | float,
    lams,
    *,
    step_scale: float = 0.01,
    span_scale: float = 40.0,
) -> np.ndarray:
    """Transform of the sampled cosh kernel by high-resolution trapezoid rule.

    Independent of :func:`cosh_multiplier`; used to reproduce the closed form
    numerically.  The kernel is analytic in a strip, so the trapezoid rule
    converges exponentially; the tail beyond span_scale/omega is below 1e-17.
    """
    w = _omega_value(omega)
    step = step_scale / w
    half = span_scale / w
    n = int(round(2.0 * half / step)) + 1
    t = -half + step * np.arange(n)
    samples = cosh_kernel(w, t)
    weights = np.ones(n)
    weights[0] = weights[-1] = 0.5
    lams = np.atleast_1d(np.asarray(lams, dtype=float))
    phases = np.exp(1j * np.outer(lams, t))
    return step * (phases @ (weights * samples))


@dataclass(frozen=True)
class MultiplierMatrix:
    """2x2 matrix multiplier of the vector transform at one frequency.

    ``kind`` is "forward" for [[c, s], [s, c]] and "inverse" for
    [[c, -s], [-s, c]].  Forward and inverse matrices at the same frequency
    are unitary and mutually inverse.
    """

    entries: np.ndarray
    lam: float
    kind: str

    def unitarity_defect(self) -> float:
        """Max-norm of (M* M - I)."""
        m = self.entries
        return float(np.max(np.abs(m.conj().T @ m - np.eye(2))))

    def product_defect(self, other: "MultiplierMatrix") -> float:
        """Max-norm of (M N - I); zero for a forward/inverse pair at equal frequency."""
        return float(np.max(np.abs(self.entries @ other.entries - np.eye(2))))


def forward_multiplier_matrix(omega: OmegaParam | float, lam: float) -> MultiplierMatrix:
    """Matrix multiplier [[c, s], [s, c]] of the forward vector transform."""
    c = cosh_multiplier(omega, lam)
    s = sinh_multiplier(omega, lam)
    return MultiplierMatrix(entries=np.array([[c, s], [s, c]], dtype=complex), lam=float(lam), kind="forward")


def inverse_multiplier_matrix(omega: OmegaParam | float, lam: float) -> MultiplierMatrix:
    """Matrix multiplier [[c, -s], [-s, c]] of the inverse vector transform."""
    c = cosh_multiplier(omega, lam)
    s = sinh_multiplier(omega, lam)
    return MultiplierMatrix(entries=np.array([[c, -s], [-s, c]], dtype=complex), lam=float(lam), kind="inverse")
