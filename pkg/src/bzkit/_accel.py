"""Optional numba acceleration.

Set ``BZKIT_DISABLE_JIT=1`` to run the hot kernels as plain Python.
"""
import os

try:
    import numba

    HAS_NUMBA = True
except ImportError:  # pragma: no cover
    numba = None
    HAS_NUMBA = False

USE_JIT = HAS_NUMBA and os.environ.get("BZKIT_DISABLE_JIT", "0") not in ("1", "true", "yes")


def njit(func):
    """Compile ``func`` with numba when enabled, else return it unchanged."""
    if USE_JIT:
        return numba.njit(cache=True)(func)
    return func


def py_func(func):
    """The uncompiled Python version of a kernel."""
    return getattr(func, "py_func", func)
