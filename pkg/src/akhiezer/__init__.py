"""Akhiezer integral transform pair on the real line.

A pair of mutually inverse 2x2 convolution transforms built from the
hyperbolic kernels (omega/pi)/cosh(omega t) and (omega/pi)/sinh(omega t),
evaluated two independent ways: trusted direct quadrature (principal value
for the odd kernel) and a fast FFT multiplier path.  The package ships a
verification suite reproducing the defining identities numerically: multiplier
normalization, isometry, mutual inversion, Hilbert-transform checks, and
operator-norm bounds on exponentially weighted spaces.

The O(n^2) quadrature loops run through a compiled extension when available;
a NumPy fallback is selected automatically (or forced with
AKHIEZER_PURE_PYTHON=1).
"""

from ._backend import available_backends, backend_name
from .kernels import (
    OmegaParam,
    SigmaParam,
    check_cosh_envelope,
    check_sinh_envelope,
    cosh_kernel,
    cosh_ratio_integral,
    sinh_kernel,
    sinh_kernel_smooth_part,
    sinh_ratio_integral,
    weighted_cosh_envelope,
)
from .quadrature import (
    GridMismatchError,
    GridSignal,
    NonNodeError,
    PVConfig,
    convolve_cosh_direct,
    convolve_sinh_pv,
    epsilon_sweep_pv,
    hilbert_pv,
)
from .spectral import (
    MultiplierMatrix,
    QuadratureError,
    TruncationRemainder,
    cosh_multiplier,
    forward_multiplier_matrix,
    inverse_multiplier_matrix,
    multiplier_normalization,
    sinh_multiplier,
    sinh_multiplier_truncated,
    truncation_remainder,
)
from .transform import (
    BoundReport,
    TransformPlan,
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
    vector_weighted_norm,
    weighted_bound_report,
    weighted_norm,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "available_backends",
    "backend_name",
    # kernels
    "OmegaParam",
    "SigmaParam",
    "cosh_kernel",
    "sinh_kernel",
    "sinh_kernel_smooth_part",
    "check_cosh_envelope",
    "check_sinh_envelope",
    "weighted_cosh_envelope",
    "cosh_ratio_integral",
    "sinh_ratio_integral",
    # spectral
    "cosh_multiplier",
    "sinh_multiplier",
    "multiplier_normalization",
    "sinh_multiplier_truncated",
    "truncation_remainder",
    "forward_multiplier_matrix",
    "inverse_multiplier_matrix",
    "MultiplierMatrix",
    "TruncationRemainder",
    "QuadratureError",
    # quadrature
    "GridSignal",
    "PVConfig",
    "GridMismatchError",
    "NonNodeError",
    "convolve_cosh_direct",
    "convolve_sinh_pv",
    "hilbert_pv",
    "epsilon_sweep_pv",
    # transform
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
