"""Backend selection: compiled extension when available, NumPy fallback otherwise.

Set AKHIEZER_PURE_PYTHON=1 to force the fallback; :func:`force_backend` gives
tests and benchmarks scoped control.
"""

from __future__ import annotations

import os
from contextlib import contextmanager

from . import _np_core

_compiled = None
if os.environ.get("AKHIEZER_PURE_PYTHON", "") not in ("", "0"):
    _compiled = None
else:
    try:
        from . import _core_cy as _compiled  # type: ignore[no-redef]
    except ImportError:
        _compiled = None

_forced: list = []


def available_backends() -> tuple[str, ...]:
    return ("numpy",) if _compiled is None else ("compiled", "numpy")


def get(name: str | None = None):
    """Return the active backend module (or the named one)."""
    if name is None:
        if _forced:
            name = _forced[-1]
        else:
            return _compiled if _compiled is not None else _np_core
    if name == "numpy":
        return _np_core
    if name == "compiled":
        if _compiled is None:
            raise RuntimeError("compiled backend requested but the extension is not available")
        return _compiled
    raise ValueError(f"unknown backend {name!r}")


def backend_name() -> str:
    return get().NAME


@contextmanager
def force_backend(name: str):
    """Temporarily route the quadrature loops through the named backend."""
    get(name)  # validate
    _forced.append(name)
    try:
        yield
    finally:
        _forced.pop()
