"""Shared brute-force oracles, independent of the package's fast paths.

Sumsets are recomputed by direct pairwise enumeration and dilate sums by
enumerating one element choice per term, so any fold/merge/kernel bug in
the package cannot hide here.
"""

from __future__ import annotations

import itertools


def brute_sumset(a, b) -> list[int]:
    return sorted({x + y for x in a for y in b})


def brute_dilate_sum(coeffs, elems) -> list[int]:
    return sorted(
        {
            sum(c * x for c, x in zip(coeffs, pick))
            for pick in itertools.product(list(elems), repeat=len(coeffs))
        }
    )
