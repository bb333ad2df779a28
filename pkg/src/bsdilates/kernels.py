"""int64 array kernels for sumset and dilate-sum computation.

Two interchangeable backends produce identical results on sorted,
duplicate-free 1-d int64 arrays:

* a numba ``@njit`` backend, the default whenever numba imports cleanly;
* a pure-numpy backend, forced by setting ``BSDILATES_NO_NUMBA=1`` in the
  environment (any of ``1/true/yes/on``), and used automatically when
  numba is unavailable.

The backend is chosen once at import time and reported by
:func:`backend`.  ``benchmarks/bench_kernels.py`` times the two paths
against each other and against a plain Python reference.

These kernels are a fast path, not the source of truth: results are only
correct when every input and output value fits in int64.  Callers in
:mod:`bsdilates.intset` compute a magnitude envelope with exact Python
integers first and call in only when :func:`fits_int64` accepts it;
otherwise they fall back to exact big-integer arithmetic.
"""

from __future__ import annotations

import os

import numpy as np

# One bit of headroom under int64 so a single addition of two in-envelope
# values cannot wrap.
INT64_SAFE = 2**62


def fits_int64(*magnitudes: int) -> bool:
    """True when every magnitude stays inside the kernel-safe envelope."""
    return all(m <= INT64_SAFE for m in magnitudes)


def as_i64(values) -> np.ndarray:
    return np.array(values, dtype=np.int64)


def _sumset_numpy(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return np.unique(np.add.outer(a, b))


def _weighted_sumset_numpy(coeffs: np.ndarray, a: np.ndarray) -> np.ndarray:
    # coeffs are >= 1, so scaling preserves sortedness and uniqueness.
    acc = coeffs[0] * a
    for i in range(1, coeffs.size):
        acc = np.unique(np.add.outer(acc, coeffs[i] * a))
    return acc


def _build_numba_kernels():
    from numba import njit

    @njit(cache=True)
    def sumset(a, b):
        out = np.empty(a.size * b.size, dtype=np.int64)
        pos = 0
        for i in range(a.size):
            ai = a[i]
            for j in range(b.size):
                out[pos] = ai + b[j]
                pos += 1
        out.sort()
        n = 0
        for i in range(out.size):
            if i == 0 or out[i] != out[i - 1]:
                out[n] = out[i]
                n += 1
        return out[:n].copy()

    @njit(cache=True)
    def weighted_sumset(coeffs, a):
        acc = coeffs[0] * a
        for i in range(1, coeffs.size):
            acc = sumset(acc, coeffs[i] * a)
        return acc

    return sumset, weighted_sumset


def _numba_disabled() -> bool:
    return os.environ.get("BSDILATES_NO_NUMBA", "").strip().lower() in {
        "1",
        "true",
        "yes",
        "on",
    }


_sumset_numba = None
_weighted_sumset_numba = None
_BACKEND = "numpy"
if not _numba_disabled():
    try:
        _sumset_numba, _weighted_sumset_numba = _build_numba_kernels()
        _BACKEND = "numba"
    except ImportError:
        pass

if _BACKEND == "numba":
    sumset_i64 = _sumset_numba
    weighted_sumset_i64 = _weighted_sumset_numba
else:
    sumset_i64 = _sumset_numpy
    weighted_sumset_i64 = _weighted_sumset_numpy


def backend() -> str:
    """Name of the active backend, ``"numba"`` or ``"numpy"``."""
    return _BACKEND


def warmup() -> str:
    """Run each kernel once on tiny input (triggers jit compilation)."""
    a = as_i64([0, 1])
    sumset_i64(a, a)
    weighted_sumset_i64(as_i64([1, 2]), a)
    return _BACKEND
