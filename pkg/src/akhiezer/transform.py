"""Fast multiplier path for the transforms, plus norms and bound reports.

A :class:`TransformPlan` fixes the grid, a zero-padded FFT length m >= 2n (so
the convolution is linear, not circular) and the multiplier tables sampled at
the discrete frequencies.  Applying a kernel is then FFT -> multiply ->
inverse FFT -> truncate.  The padding keeps wrap-around at the level of the
kernel tail e^{-omega m delta / 2}; the hard frequency cutoff at pi/delta only
touches signal content beyond the Nyquist frequency, negligible for resolved
smooth signals.

The weighted-space machinery (exponentially weighted norms, conjugation by the
weight, operator-norm trials against the proven bounds) lives here too.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .kernels import OmegaParam, SigmaParam, _omega_value, _sigma_value
from .quadrature import GridMismatchError, GridSignal, require_same_grid
from .spectral import cosh_multiplier, sinh_multiplier

__all__ = [
    "VectorSignal",
    "TransformPlan",
    "BoundReport",
    "make_plan",
    "apply_cosh_spectral",
    "apply_sinh_spectral",
    "apply_hilbert_spectral",
    "apply_forward",
    "apply_inverse",
    "l2_norm",
    "weighted_norm",
    "vector_l2_norm",
    "vector_weighted_norm",
    "conjugate_weight",
    "weighted_bound_report",
    "roundtrip_error",
]

_OPERATOR_ALIASES = {
    "C": "cosh",
    "S": "sinh",
    "phi": "forward",
    "psi": "inverse",
}


def canonical_operator(tag: str) -> str:
    op = _OPERATOR_ALIASES.get(tag, tag)
    if op not in ("cosh", "sinh", "forward", "inverse"):
        raise ValueError(f"unknown operator tag {tag!r}")
    return op


@dataclass(frozen=True)
class VectorSignal:
    """Two-component column signal; both components share one grid."""

    x1: GridSignal
    x2: GridSignal

    def __post_init__(self):
        require_same_grid(self.x1, self.x2)

    def grid_key(self):
        return self.x1.grid_key()


@dataclass(frozen=True, eq=False)
class TransformPlan:
    """Precomputed FFT layout and multiplier tables for one (omega, grid) pair.

    Immutable and shareable across threads; construction is deterministic.
    """

    omega: float
    t_min: float
    delta: float
    n: int
    m: int
    lambdas: np.ndarray
    cosh_table: np.ndarray
    sinh_table: np.ndarray

    def grid_key(self):
        return (self.t_min, self.delta, self.n)

    def unitarity_defect(self) -> float:
        """Max over table entries of ||c|^2 + |s|^2 - 1|."""
        return float(np.max(np.abs(np.abs(self.cosh_table) ** 2 + np.abs(self.sinh_table) ** 2 - 1.0)))


def _next_pow2(k: int) -> int:
    return 1 << (k - 1).bit_length()


def make_plan(omega: OmegaParam | float, grid) -> TransformPlan:
    """Build a plan for a grid given as a GridSignal or a (t_min, delta, n) tuple."""
    w = _omega_value(omega)
    if isinstance(grid, GridSignal):
        t_min, delta, n = grid.grid_key()
    else:
        t_min, delta, n = grid
        t_min, delta, n = float(t_min), float(delta), int(n)
    if n < 2 or not (delta > 0):
        raise ValueError(f"invalid grid (t_min={t_min}, delta={delta}, n={n})")
    m = _next_pow2(2 * n)
    if not math.isfinite(w * m * delta):
        raise ValueError("grid extent times omega overflows the floating range")
    lambdas = 2.0 * math.pi * np.fft.fftfreq(m, d=delta)
    plan = TransformPlan(
        omega=w,
        t_min=t_min,
        delta=delta,
        n=n,
        m=m,
        lambdas=lambdas,
        cosh_table=cosh_multiplier(w, lambdas),
        sinh_table=sinh_multiplier(w, lambdas),
    )
    plan.lambdas.setflags(write=False)
    plan.cosh_table.setflags(write=False)
    plan.sinh_table.setflags(write=False)
    return plan


def _check_plan_grid(plan: TransformPlan, x: GridSignal) -> None:
    if plan.grid_key() != x.grid_key():
        raise GridMismatchError(f"signal grid {x.grid_key()} does not match plan grid {plan.grid_key()}")


def _spectra(plan: TransformPlan, x: GridSignal) -> np.ndarray:
    """Positive-exponent DFT of the zero-padded samples (m * ifft)."""
    padded = np.zeros(plan.m, dtype=np.complex128)
    padded[: plan.n] = x.samples
    return np.fft.ifft(padded)


def _synthesize(plan: TransformPlan, spec: np.ndarray) -> np.ndarray:
    return np.fft.fft(spec)[: plan.n]


def _apply_table(plan: TransformPlan, x: GridSignal, table: np.ndarray) -> GridSignal:
    _check_plan_grid(plan, x)
    return x.with_samples(_synthesize(plan, table * _spectra(plan, x)))


def apply_cosh_spectral(plan: TransformPlan, x: GridSignal) -> GridSignal:
    """Cosh-kernel convolution through the multiplier table."""
    return _apply_table(plan, x, plan.cosh_table)


def apply_sinh_spectral(plan: TransformPlan, x: GridSignal) -> GridSignal:
    """Sinh-kernel principal-value convolution through the multiplier table."""
    return _apply_table(plan, x, plan.sinh_table)


def apply_hilbert_spectral(plan: TransformPlan, x: GridSignal) -> GridSignal:
    """Hilbert transform through its multiplier i*sign(lambda)."""
    table = 1j * np.sign(plan.lambdas)
    return _apply_table(plan, x, table)


def apply_forward(plan: TransformPlan, x: VectorSignal) -> VectorSignal:
    """Forward vector transform: y1 = C x1 + S x2, y2 = S x1 + C x2."""
    _check_plan_grid(plan, x.x1)
    s1 = _spectra(plan, x.x1)
    s2 = _spectra(plan, x.x2)
    c, s = plan.cosh_table, plan.sinh_table
    y1 = _synthesize(plan, c * s1 + s * s2)
    y2 = _synthesize(plan, s * s1 + c * s2)
    return VectorSignal(x.x1.with_samples(y1), x.x2.with_samples(y2))


def apply_inverse(plan: TransformPlan, x: VectorSignal) -> VectorSignal:
    """Inverse vector transform: z1 = C x1 - S x2, z2 = -S x1 + C x2."""
    _check_plan_grid(plan, x.x1)
    s1 = _spectra(plan, x.x1)
    s2 = _spectra(plan, x.x2)
    c, s = plan.cosh_table, plan.sinh_table
    z1 = _synthesize(plan, c * s1 - s * s2)
    z2 = _synthesize(plan, -s * s1 + c * s2)
    return VectorSignal(x.x1.with_samples(z1), x.x2.with_samples(z2))


def l2_norm(x: GridSignal) -> float:
    """Grid L2 norm sqrt(delta * sum |x_k|^2)."""
    return math.sqrt(x.delta * float(np.sum(np.abs(x.samples) ** 2)))


def weighted_norm(x: GridSignal, sigma: SigmaParam | float) -> float:
    """Grid norm of the exponentially weighted space: weight e^{-2 sigma |t|}."""
    s = _sigma_value(sigma)
    w = np.exp(-2.0 * s * np.abs(x.times))
    return math.sqrt(x.delta * float(np.sum(np.abs(x.samples) ** 2 * w)))


def vector_l2_norm(x: VectorSignal) -> float:
    return math.sqrt(l2_norm(x.x1) ** 2 + l2_norm(x.x2) ** 2)


def vector_weighted_norm(x: VectorSignal, sigma: SigmaParam | float) -> float:
    return math.sqrt(weighted_norm(x.x1, sigma) ** 2 + weighted_norm(x.x2, sigma) ** 2)


def conjugate_weight(x: GridSignal, sigma: SigmaParam | float, direction: str = "forward") -> GridSignal:
    """Multiply samples by e^{-sigma|t|} (forward) or e^{+sigma|t|} (inverse).

    Forward conjugation carries the weighted norm onto the plain L2 norm; the
    two directions compose to the identity up to one rounding per sample.
    """
    s = _sigma_value(sigma)
    if direction not in ("forward", "inverse"):
        raise ValueError(f"direction must be 'forward' or 'inverse', got {direction!r}")
    sign = -1.0 if direction == "forward" else 1.0
    with np.errstate(over="ignore"):
        factor = np.exp(sign * s * np.abs(x.times))
        out = x.samples * factor
    if direction == "inverse" and not np.all(np.isfinite(out.view(np.float64))):
        raise OverflowError("inverse weighting exceeds the floating-point range on this grid")
    return x.with_samples(out)


def _composite_vector_bound(a: float) -> tuple[float, str]:
    """Bound for the vector transforms obtained by composing the scalar ones.

    With B_c = 2/(1-a) and B_s = (pi+1)/(1-a)^2 the triangle and Cauchy-Schwarz
    inequalities give ||forward|| <= B_c + B_s = (2 + (pi+1)/(1-a))/(1-a).
    """
    bound = (2.0 + (math.pi + 1.0) / (1.0 - a)) / (1.0 - a)
    note = "composite bound (2 + (pi+1)/(1-a))/(1-a) from the scalar-kernel bounds"
    return bound, note


def proven_bound(operator: str, a: float) -> tuple[float, str]:
    """Proven operator-norm bound on the weighted space with ratio a = sigma/omega."""
    op = canonical_operator(operator)
    if op == "cosh":
        return 2.0 / (1.0 - a), "envelope-kernel bound 2/(1-a)"
    if op == "sinh":
        return (math.pi + 1.0) / (1.0 - a) ** 2, "envelope-kernel bound (pi+1)/(1-a)^2"
    return _composite_vector_bound(a)


@dataclass(frozen=True)
class BoundReport:
    """Empirical operator-norm ratio versus the proven weighted-space bound."""

    sigma: float
    omega: float
    operator: str
    empirical_ratio: float
    bound: float
    satisfied: bool
    trials: int
    skipped_trials: int
    note: str


def weighted_bound_report(
    plan: TransformPlan,
    sigma: SigmaParam | float,
    operator: str,
    trials: int = 50,
    seed: int = 0,
) -> BoundReport:
    """Estimate the weighted operator norm from below by random trials.

    Trial signals are band-limited noise grown by e^{gamma|t|} with gamma drawn
    in [0, sigma), then smoothly truncated inside the grid, so they exercise
    the growth the weighted space admits while keeping tail effects below the
    comparison's resolution.  Asserting ``empirical_ratio <= bound`` is the
    theorem-implied inequality; no tightness claim is made.
    """
    from .signals import weighted_trial_signal

    s = _sigma_value(sigma)
    if trials < 1:
        raise ValueError("trials must be >= 1")
    op = canonical_operator(operator)
    a = SigmaParam(s).ratio(plan.omega)
    bound, note = proven_bound(op, a)
    rng = np.random.default_rng(seed)
    grid = (plan.t_min, plan.delta, plan.n)

    worst = 0.0
    skipped = 0
    for _ in range(trials):
        if op in ("cosh", "sinh"):
            f = weighted_trial_signal(grid, s, rng)
            denom = weighted_norm(f, s)
            if denom == 0.0:
                skipped += 1
                continue
            g = apply_cosh_spectral(plan, f) if op == "cosh" else apply_sinh_spectral(plan, f)
            ratio = weighted_norm(g, s) / denom
        else:
            f = VectorSignal(weighted_trial_signal(grid, s, rng), weighted_trial_signal(grid, s, rng))
            denom = vector_weighted_norm(f, s)
            if denom == 0.0:
                skipped += 1
                continue
            g = apply_forward(plan, f) if op == "forward" else apply_inverse(plan, f)
            ratio = vector_weighted_norm(g, s) / denom
        worst = max(worst, ratio)

    return BoundReport(
        sigma=s,
        omega=plan.omega,
        operator=op,
        empirical_ratio=worst,
        bound=bound,
        satisfied=worst <= bound,
        trials=trials,
        skipped_trials=skipped,
        note=note,
    )


def roundtrip_error(plan: TransformPlan, x: VectorSignal, sigma: SigmaParam | float = 0.0) -> float:
    """Relative weighted-norm error of inverse(forward(x)) against x."""
    s = _sigma_value(sigma)
    denom = vector_weighted_norm(x, s)
    if denom == 0.0:
        raise ValueError("round-trip error is undefined for a zero-norm signal")
    back = apply_inverse(plan, apply_forward(plan, x))
    diff = VectorSignal(
        x.x1.with_samples(back.x1.samples - x.x1.samples),
        x.x2.with_samples(back.x2.samples - x.x2.samples),
    )
    return vector_weighted_norm(diff, s) / denom
