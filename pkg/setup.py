"""Build script for the optional compiled core.

The package is fully functional without the extension (a NumPy fallback is
selected at import time); the extension only accelerates the O(n^2) direct
quadrature loops.
"""

import warnings

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Build the extension if possible, fall back to pure Python otherwise."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # missing compiler, etc.
            warnings.warn(f"compiled core skipped ({exc}); using NumPy fallback")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            warnings.warn(f"compiled core skipped ({exc}); using NumPy fallback")


extensions = []
try:
    import numpy as np
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "akhiezer._core_cy",
                ["src/akhiezer/_core_cy.pyx"],
                include_dirs=[np.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
            )
        ],
        language_level=3,
    )
except ImportError as exc:
    warnings.warn(f"Cython/NumPy unavailable at build time ({exc}); building pure-Python package")

setup(ext_modules=extensions, cmdclass={"build_ext": OptionalBuildExt})
