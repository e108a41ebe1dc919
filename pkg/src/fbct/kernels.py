"""Backend selection for the table kernels.

numba is used when importable unless ``FBCT_DISABLE_NUMBA`` is set to a truthy
value, in which case every kernel runs on the pure-numpy implementation. Both
backends return identical integer arrays.
"""

import os
from types import ModuleType

from . import _kernels_numpy

try:
    from . import _kernels_numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    _kernels_numba = None

NAMES = ("numba", "numpy")


def _disabled() -> bool:
    return os.environ.get("FBCT_DISABLE_NUMBA", "").strip().lower() in ("1", "true", "yes", "on")


def default_backend() -> str:
    if _kernels_numba is None or _disabled():
        return "numpy"
    return "numba"


def get(name: str | None = None) -> ModuleType:
    name = name or default_backend()
    if name == "numba":
        if _kernels_numba is None:
            raise ValueError("numba backend requested but numba is not installed")
        return _kernels_numba
    if name == "numpy":
        return _kernels_numpy
    raise ValueError(f"unknown kernel backend {name!r}; choose from {NAMES}")
