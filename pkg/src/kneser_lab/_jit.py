"""Numba switch for the search kernels.

Set ``KNESER_LAB_DISABLE_JIT=1`` to run every kernel as plain Python over
numpy arrays (same source, no compilation).  This is the reference path the
benchmark compares against and the path used when numba is missing.
"""
from __future__ import annotations

import os

_FLAG = "KNESER_LAB_DISABLE_JIT"

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None


def jit_enabled() -> bool:
    return numba is not None and os.environ.get(_FLAG, "0").lower() not in ("1", "true", "yes")


JIT_ENABLED = jit_enabled()


def njit(fn):
    """Compile ``fn`` with numba when enabled; otherwise return it unchanged.

    The undecorated function stays reachable as ``fn.py_func`` in both cases.
    """
    if JIT_ENABLED:
        return numba.njit(cache=True, nogil=True)(fn)
    fn.py_func = fn
    return fn
