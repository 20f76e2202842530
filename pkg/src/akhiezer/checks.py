"""Named verification checks: each reproduces one identity or bound numerically.

Every check returns a :class:`CheckResult` carrying the measured value, the
target or bound it is compared against, the tolerance, and the verdict.  The
CLI serializes these to JSON and derives its exit code from the verdicts.
"""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass

import numpy as np
from scipy import integrate

from . import kernels, signals, spectral, transform
from .quadrature import convolve_cosh_direct, convolve_sinh_pv, hilbert_pv
from .signals import make_grid
from .transform import VectorSignal, make_plan

__all__ = ["CheckResult", "VerifyConfig", "run_verify"]

_OMEGA_SWEEP = (0.5, 1.0, math.pi, 10.0)
_RATIO_SWEEP = (0.0, 0.25, 0.5, 0.75)


@dataclass(frozen=True)
class CheckResult:
    name: str
    description: str
    value: float
    bound_or_target: float | None
    tolerance: float
    passed: bool

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "description": self.description,
            "value": self.value,
            "bound_or_target": self.bound_or_target,
            "tolerance": self.tolerance,
            "pass": self.passed,
        }


@dataclass(frozen=True)
class VerifyConfig:
    omega: float = 1.0
    sigma: float = 0.0
    t_min: float = -24.0
    t_max: float = 24.0
    n: int = 4096
    seed: int = 0
    quick: bool = False
    inject_fault: str | None = None


def _max_margin_check(name, description, value, tolerance, *, target=0.0) -> CheckResult:
    return CheckResult(
        name=name,
        description=description,
        value=float(value),
        bound_or_target=target,
        tolerance=tolerance,
        passed=bool(value <= tolerance),
    )


def check_multiplier_normalization(omegas=_OMEGA_SWEEP, n_lam: int = 1000) -> CheckResult:
    """|c|^2 + |s|^2 = 1 across frequencies and kernel scales."""
    worst = 0.0
    for w in omegas:
        lam = np.linspace(-100.0 * w, 100.0 * w, n_lam)
        worst = max(worst, float(np.max(np.abs(spectral.multiplier_normalization(w, lam) - 1.0))))
    return _max_margin_check(
        "multiplier_normalization",
        "multiplier normalization |c|^2+|s|^2 = 1 over the frequency sweep",
        worst,
        1e-12,
        target=1.0,
    )


def check_kernel_envelopes(omegas=_OMEGA_SWEEP, points: int = 10_000) -> list[CheckResult]:
    """Exponential envelopes of both kernels on a log-spaced sweep.

    The strict upper comparison for the even kernel is done in ratio form
    (value < upper iff e^{-2 omega xi} > 0), exact until far past the sweep.
    """
    even_ok = True
    odd_ok = True
    worst_even = 0.0  # max of (lower - value, value - upper); <= 0 when inside
    worst_odd = 0.0
    for w in omegas:
        xi = np.logspace(-6, math.log10(30.0 / w), points)
        value = kernels.cosh_kernel(w, xi)
        env = (w / math.pi) * np.exp(-w * xi)
        even_ok &= bool(np.all(value >= env)) and bool(np.all(np.exp(-2.0 * w * xi) > 0.0))
        worst_even = max(worst_even, float(np.max(np.maximum(env - value, value - 2.0 * env))))
        sval = np.abs(kernels.sinh_kernel(w, xi))
        bound = (2.0 * w / math.pi) * np.exp(-w * xi) / (-np.expm1(-2.0 * w * xi))
        rel = np.max(sval / bound) - 1.0
        odd_ok &= bool(rel <= 4.0 * np.finfo(float).eps)
        worst_odd = max(worst_odd, float(rel))
    return [
        CheckResult(
            "kernel_envelope_even",
            "two-sided exponential envelope of the cosh kernel on the parameter sweep",
            worst_even,
            0.0,
            0.0,
            even_ok,
        ),
        CheckResult(
            "kernel_envelope_odd",
            "exponential majorant of the sinh kernel on the parameter sweep",
            worst_odd,
            0.0,
            4.0 * float(np.finfo(float).eps),
            odd_ok,
        ),
    ]


def check_split_residual(omegas=_OMEGA_SWEEP, points: int = 10_000) -> CheckResult:
    """Sinh kernel minus Cauchy part minus smooth part vanishes (relative to the singular size)."""
    worst = 0.0
    for w in omegas:
        xi = np.logspace(-6, math.log10(30.0 / w), points)
        s = kernels.sinh_kernel(w, xi)
        cauchy = 1.0 / (math.pi * xi)
        r = kernels.sinh_kernel_smooth_part(w, xi)
        scale = np.maximum(np.abs(s), np.maximum(np.abs(cauchy), 1.0))
        worst = max(worst, float(np.max(np.abs(s - cauchy - r) / scale)))
    return _max_margin_check(
        "kernel_split_residual",
        "sinh kernel equals 1/(pi xi) plus its smooth part (relative residual)",
        worst,
        1e-12,
    )


def check_even_multiplier_quadrature(omega: float, n_lam: int = 401) -> CheckResult:
    """Trapezoid transform of the sampled cosh kernel reproduces its multiplier."""
    lam = np.linspace(-20.0 * omega, 20.0 * omega, n_lam)
    numeric = spectral.cosh_multiplier_by_quadrature(omega, lam)
    exact = spectral.cosh_multiplier(omega, lam)
    worst = float(np.max(np.abs(numeric - exact)))
    return _max_margin_check(
        "even_multiplier_quadrature",
        "numeric transform of the sampled cosh kernel matches the closed-form multiplier",
        worst,
        1e-6,
    )


def check_odd_multiplier_extrapolation(omega: float, n_lam: int = 50) -> CheckResult:
    """Extrapolated truncated transform of the sinh kernel reproduces i*tanh."""
    lam = np.linspace(-6.0 * omega, 6.0 * omega, n_lam)
    lam = lam[lam != 0.0]
    worst = 0.0
    for l in lam:
        approx = spectral.sinh_multiplier_extrapolated(omega, float(l), tol=1e-9)
        worst = max(worst, abs(approx - spectral.sinh_multiplier(omega, float(l))))
    return _max_margin_check(
        "odd_multiplier_extrapolation",
        "epsilon-extrapolated truncated transform of the sinh kernel matches i*tanh",
        worst,
        1e-6,
    )


def check_remainder_decay(omega: float) -> CheckResult:
    """|rho(lambda, eps)| decreases monotonically along a shrinking eps sweep."""
    eps = [0.2 / omega, 0.1 / omega, 0.05 / omega, 0.025 / omega]
    mags = [abs(spectral.truncation_remainder(omega, 1.0, e).rho) for e in eps]
    drops = [mags[i + 1] < mags[i] for i in range(len(mags) - 1)]
    return CheckResult(
        "remainder_decay",
        "truncation remainder decays monotonically as epsilon shrinks",
        float(mags[-1]),
        0.0,
        float(mags[0]),
        all(drops),
    )


def check_remainder_sup(omega: float, quick: bool = False) -> CheckResult:
    """Empirical sup of |rho| over the (lambda, epsilon) grid is finite."""
    n_lam, n_eps = (9, 4) if quick else (21, 6)
    lams = np.linspace(-50.0 * omega, 50.0 * omega, n_lam)
    epsilons = [math.pi / (4.0 * omega) * 0.5**k for k in range(n_eps)]
    sup = spectral.remainder_sup_on_grid(omega, lams, epsilons)
    return CheckResult(
        "remainder_grid_sup",
        "empirical sup of the truncation remainder over the sampled grid (finiteness)",
        float(sup),
        None,
        math.inf,
        bool(math.isfinite(sup)),
    )


def check_energy_pythagoras(cfg: VerifyConfig, plan) -> CheckResult:
    """||C f||^2 + ||S f||^2 = ||f||^2 on random well-contained smooth signals."""
    grid = (plan.t_min, plan.delta, plan.n)
    rng = np.random.default_rng(cfg.seed + 1)
    trials = 20 if cfg.quick else 100
    worst = 0.0
    for _ in range(trials):
        f = signals.bandlimited_noise_signal(grid, rng=rng, cutoff=2.5)
        nf = transform.l2_norm(f)
        if nf == 0.0:
            continue
        gc = transform.l2_norm(transform.apply_cosh_spectral(plan, f))
        gs = transform.l2_norm(transform.apply_sinh_spectral(plan, f))
        worst = max(worst, abs(gc**2 + gs**2 - nf**2) / nf**2)
    return _max_margin_check(
        "energy_pythagoras",
        "energy split ||Cf||^2 + ||Sf||^2 = ||f||^2 on random smooth signals",
        worst,
        1e-6,
    )


def check_isometry_and_inversion(cfg: VerifyConfig, plan) -> list[CheckResult]:
    """Isometry of the vector transforms and their mutual inversion."""
    grid = (plan.t_min, plan.delta, plan.n)
    worst_iso = 0.0
    worst_inv = 0.0
    for x in signals.standard_vector_signals(grid, seed=cfg.seed):
        nx = transform.vector_l2_norm(x)
        y = transform.apply_forward(plan, x)
        z = transform.apply_inverse(plan, x)
        worst_iso = max(
            worst_iso,
            abs(transform.vector_l2_norm(y) / nx - 1.0),
            abs(transform.vector_l2_norm(z) / nx - 1.0),
        )
        back = transform.apply_inverse(plan, y)
        forth = transform.apply_forward(plan, z)
        for orig, rt in ((x, back), (x, forth)):
            diff = VectorSignal(
                orig.x1.with_samples(rt.x1.samples - orig.x1.samples),
                orig.x2.with_samples(rt.x2.samples - orig.x2.samples),
            )
            worst_inv = max(worst_inv, transform.vector_l2_norm(diff) / nx)
    return [
        _max_margin_check(
            "vector_isometry",
            "forward and inverse vector transforms preserve the L2 (+) L2 norm",
            worst_iso,
            1e-6,
        ),
        _max_margin_check(
            "mutual_inversion",
            "inverse(forward(x)) = x and forward(inverse(x)) = x in L2 (+) L2",
            worst_inv,
            1e-6,
        ),
    ]


def check_hilbert(cfg: VerifyConfig) -> list[CheckResult]:
    """Hilbert transform is a grid isometry and squares to minus the identity."""
    n = 4096 if cfg.quick else 8192
    grid = make_grid(-40.0, 40.0, n)
    rng = np.random.default_rng(cfg.seed + 2)
    worst_iso = 0.0
    worst_inv = 0.0
    for _ in range(2):
        x = signals.odd_decaying_signal(grid, rng)
        nodes = x.times
        hx = x.with_samples(hilbert_pv(x, nodes))
        worst_iso = max(worst_iso, abs(transform.l2_norm(hx) / transform.l2_norm(x) - 1.0))
        hhx = hilbert_pv(hx, nodes)
        worst_inv = max(
            worst_inv,
            float(np.sqrt(x.delta * np.sum(np.abs(hhx + x.samples) ** 2))) / transform.l2_norm(x),
        )
    return [
        _max_margin_check(
            "hilbert_isometry",
            "Hilbert transform preserves the grid L2 norm",
            worst_iso,
            1e-3,
        ),
        _max_margin_check(
            "hilbert_involution",
            "applying the Hilbert transform twice negates the signal",
            worst_inv,
            1e-4,
        ),
    ]


def check_closed_form_integrals() -> list[CheckResult]:
    """Adaptive quadrature agrees with both closed-form envelope integrals."""
    worst_c = 0.0
    worst_s = 0.0
    for a in np.arange(0.0, 0.91, 0.1):
        a = float(a)
        qc, _ = integrate.quad(lambda u: kernels.cosh_ratio(a, u), 0.0, np.inf, epsabs=1e-12, epsrel=1e-12, limit=200)
        worst_c = max(worst_c, abs(qc - kernels.cosh_ratio_integral(a)))
        qs, _ = integrate.quad(lambda u: kernels.sinh_ratio(a, u), 0.0, np.inf, epsabs=1e-12, epsrel=1e-12, limit=200)
        worst_s = max(worst_s, abs(qs - kernels.sinh_ratio_integral(a)))
    return [
        _max_margin_check(
            "cosh_ratio_closed_form",
            "quadrature of cosh(a u)/cosh(u) matches pi/(2 cos(pi a/2))",
            worst_c,
            1e-8,
        ),
        _max_margin_check(
            "sinh_ratio_closed_form",
            "quadrature of u cosh(a u)/sinh(u) matches pi^2/(4 sin^2(pi(1-a)/2))",
            worst_s,
            1e-8,
        ),
    ]


def check_weighted_envelope_l1(omega: float) -> CheckResult:
    """Numeric L1 norm of the weighted cosh envelope stays below 2/(1-a)."""
    worst = -math.inf
    for a in (0.0, 0.25, 0.5, 0.75):
        norm = kernels.weighted_cosh_l1_norm(omega, a * omega)
        worst = max(worst, norm - 2.0 / (1.0 - a))
    return CheckResult(
        "weighted_envelope_l1",
        "L1 norm of the weighted cosh envelope is below its explicit bound",
        float(worst),
        0.0,
        0.0,
        worst < 0.0,
    )


def check_weighted_bounds(cfg: VerifyConfig, plan) -> list[CheckResult]:
    """Random-trial operator-norm ratios stay below the proven weighted bounds."""
    ratios = sorted(set(_RATIO_SWEEP) | ({cfg.sigma / cfg.omega} if cfg.sigma > 0 else set()))
    trials = 10 if cfg.quick else 50
    out = []
    for op in ("cosh", "sinh", "forward", "inverse"):
        worst_excess = -math.inf
        ok = True
        for a in ratios:
            rep = transform.weighted_bound_report(plan, a * cfg.omega, op, trials=trials, seed=cfg.seed + 3)
            worst_excess = max(worst_excess, rep.empirical_ratio - rep.bound)
            ok &= rep.satisfied
        out.append(
            CheckResult(
                f"weighted_bound_{op}",
                f"empirical {op}-operator norm ratios stay below the proven weighted bound",
                float(worst_excess),
                0.0,
                0.0,
                ok,
            )
        )
    return out


def check_weighted_roundtrip(cfg: VerifyConfig, plan) -> CheckResult:
    """Round trip in the weighted norm for growth-admitting signals."""
    grid = (plan.t_min, plan.delta, plan.n)
    worst = 0.0
    for a in (0.25, 0.5):
        sigma = a * cfg.omega
        x = VectorSignal(
            signals.grown_bump_signal(grid, growth=0.8 * sigma, halfwidth=14.0, freq=1.3),
            signals.grown_bump_signal(grid, growth=0.7 * sigma, halfwidth=12.0, center=1.0),
        )
        worst = max(worst, transform.roundtrip_error(plan, x, sigma))
    return _max_margin_check(
        "weighted_roundtrip",
        "inverse(forward(x)) returns x in the weighted norm for growing signals",
        worst,
        1e-4,
    )


def check_plan_tables(plan) -> CheckResult:
    """Multiplier tables of the active plan satisfy the normalization per bin."""
    return _max_margin_check(
        "plan_table_normalization",
        "plan multiplier tables satisfy |c|^2+|s|^2 = 1 at every bin",
        plan.unitarity_defect(),
        1e-12,
        target=1.0,
    )


def check_cross_path(cfg: VerifyConfig) -> list[CheckResult]:
    """Spectral path against direct quadrature, both kernels."""
    worst_c = 0.0
    worst_s = 0.0
    for n, full in ((256, True), (4096, False)):
        grid = make_grid(-20.0, 20.0, n)
        x = signals.gaussian_signal(grid)
        plan = make_plan(cfg.omega, grid)
        t = x.times
        nodes = t if full else t[n // 2 : 7 * n // 8 : n // 16]
        yc = convolve_cosh_direct(cfg.omega, x, nodes)
        ys = convolve_sinh_pv(cfg.omega, x, nodes)
        idx = np.rint((np.asarray(nodes) - x.t_min) / x.delta).astype(int)
        worst_c = max(worst_c, float(np.max(np.abs(yc - transform.apply_cosh_spectral(plan, x).samples[idx]))))
        worst_s = max(worst_s, float(np.max(np.abs(ys - transform.apply_sinh_spectral(plan, x).samples[idx]))))
    return [
        _max_margin_check(
            "cross_path_cosh",
            "spectral and direct quadrature paths agree for the cosh kernel",
            worst_c,
            1e-6,
        ),
        _max_margin_check(
            "cross_path_sinh",
            "spectral and principal-value quadrature paths agree for the sinh kernel",
            worst_s,
            1e-4,
        ),
    ]


def run_verify(cfg: VerifyConfig) -> list[CheckResult]:
    """Run the full verification suite under one configuration."""
    grid = make_grid(cfg.t_min, cfg.t_max, cfg.n)
    plan = make_plan(cfg.omega, grid)
    if cfg.inject_fault == "multiplier":
        bad = plan.cosh_table.copy()
        bad[1] *= 1.01  # low-frequency bin, where the multiplier is order one
        plan = dataclasses.replace(plan, cosh_table=bad)
    elif cfg.inject_fault:
        raise ValueError(f"unknown fault tag {cfg.inject_fault!r}")

    results: list[CheckResult] = []
    results.append(check_multiplier_normalization())
    results.extend(check_kernel_envelopes())
    results.append(check_split_residual())
    results.append(check_even_multiplier_quadrature(cfg.omega))
    results.append(check_odd_multiplier_extrapolation(cfg.omega, n_lam=12 if cfg.quick else 50))
    results.append(check_remainder_decay(cfg.omega))
    results.append(check_remainder_sup(cfg.omega, cfg.quick))
    results.append(check_plan_tables(plan))
    results.append(check_energy_pythagoras(cfg, plan))
    results.extend(check_isometry_and_inversion(cfg, plan))
    results.extend(check_hilbert(cfg))
    results.extend(check_closed_form_integrals())
    results.append(check_weighted_envelope_l1(cfg.omega))
    results.extend(check_weighted_bounds(cfg, plan))
    results.append(check_weighted_roundtrip(cfg, plan))
    results.extend(check_cross_path(cfg))
    return results
