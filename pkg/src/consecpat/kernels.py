"""Kernel dispatch: the compiled extension when importable, else pure Python.

Set ``CONSECPAT_PURE=1`` before import to force the pure-Python kernels.
"""

import os

from . import _pure

try:
    if os.environ.get("CONSECPAT_PURE"):
        raise ImportError("pure kernels forced by CONSECPAT_PURE")
    from . import _kernels as _ext
except ImportError:
    _ext = None

BACKEND = _ext.NAME if _ext is not None else _pure.NAME


def _tup(sigma):
    return tuple(int(v) for v in sigma)


def dp_counts(sigma, n_max, backend=None):
    sigma = _tup(sigma)
    mod = _select(backend)
    if mod is _ext and (n_max > _ext.MAX_DP_N or len(sigma) > _ext.MAX_M):
        mod = _pure
    return mod.dp_counts(sigma, n_max)


def brute_count(sigma, n, backend=None):
    sigma = _tup(sigma)
    mod = _select(backend)
    if mod is _ext and (n > _ext.MAX_BRUTE_N or len(sigma) > _ext.MAX_M):
        mod = _pure
    return mod.brute_count(sigma, n)


def has_occurrence(perm, sigma, backend=None):
    sigma = _tup(sigma)
    mod = _select(backend)
    if mod is _ext and len(sigma) > _ext.MAX_M:
        mod = _pure
    return mod.has_occurrence(perm, sigma)


def overlap_mask(sigma, backend=None):
    sigma = _tup(sigma)
    mod = _select(backend)
    if mod is _ext and len(sigma) > 30:
        mod = _pure
    return mod.overlap_mask(sigma)


def _select(backend):
    if backend is None:
        return _ext if _ext is not None else _pure
    if backend == "python":
        return _pure
    if backend == "cython":
        if _ext is None:
            raise RuntimeError("compiled kernels are not available")
        return _ext
    raise ValueError(f"unknown backend {backend!r}")


def available_backends():
    return ["python"] + (["cython"] if _ext is not None else [])
