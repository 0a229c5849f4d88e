"""Backend selection for the scan kernels.

The compiled kernels are used when the extension was built; otherwise, or
when a bound is too large for 64-bit arithmetic, the pure-Python kernels run
instead.  Both return identical hit lists.
"""
from __future__ import annotations

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

BACKENDS = ("python", "cython") if _ckernels is not None else ("python",)
DEFAULT_BACKEND = BACKENDS[-1]
C_MAX_BOUND = _ckernels.MAX_BOUND if _ckernels is not None else 0


def _module(backend: str | None, bound: int):
    backend = backend or DEFAULT_BACKEND
    if backend not in ("python", "cython"):
        raise ValueError(f"unknown backend {backend!r}")
    if backend == "cython":
        if _ckernels is None:
            raise ImportError("the compiled kernels are not available")
        if bound <= C_MAX_BOUND:
            return _ckernels
    return _pykernels


def resolve(backend: str | None, bound: int) -> str:
    """Name of the backend that will actually run a scan at ``bound``."""
    return "cython" if _module(backend, bound) is _ckernels else "python"


def rhombus_scan(x_lo: int, x_hi: int, bound: int, backend: str | None = None):
    return _module(backend, bound).rhombus_scan(x_lo, x_hi, bound)


def parallelogram_scan(x_lo: int, x_hi: int, bound: int, backend: str | None = None):
    return _module(backend, bound).parallelogram_scan(x_lo, x_hi, bound)
