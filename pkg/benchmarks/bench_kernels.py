"""Benchmark the numba kernels against the numpy twins and pure Python.

Three workloads:

* tiny:   repeated calls on small sets, where dispatch overhead dominates
* large:  one call on wide random arrays, where throughput dominates
* search: the exhaustive-verification inner loop over a real box

Every timed variant is checked for identical output before timing, so
the table can only ever compare correct implementations.

Run:  python benchmarks/bench_kernels.py
"""

import random
import time

import numpy as np

from bsdilates import kernels
from bsdilates.kernels import _sumset_numpy, as_i64
from bsdilates.search import SearchConfig, enumerate_normal_sets, exhaustive_verify_integer

try:
    numba_pair = kernels._build_numba_kernels()
except ImportError:
    numba_pair = None


def _sumset_python(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    out = sorted({int(x) + int(y) for x in a for y in b})
    return as_i64(out)


def _timeit(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(3):
        start = time.perf_counter()
        for _ in range(repeat):
            fn()
        best = min(best, (time.perf_counter() - start) / repeat)
    return best


def _fmt(seconds: float) -> str:
    if seconds < 1e-3:
        return f"{seconds * 1e6:8.1f} us"
    if seconds < 1.0:
        return f"{seconds * 1e3:8.2f} ms"
    return f"{seconds:8.2f} s "


def bench_sumset(name: str, a: np.ndarray, b: np.ndarray, repeat: int) -> None:
    reference = _sumset_numpy(a, b)
    variants = [("numpy", lambda: _sumset_numpy(a, b))]
    if numba_pair is not None:
        sumset_numba, _ = numba_pair
        sumset_numba(a, b)  # compile before timing
        assert np.array_equal(sumset_numba(a, b), reference)
        variants.insert(0, ("numba", lambda: sumset_numba(a, b)))
    if len(a) * len(b) <= 250_000:
        assert np.array_equal(_sumset_python(a, b), reference)
        variants.append(("python", lambda: _sumset_python(a, b)))
    print(f"\n{name}  (|A|={len(a)}, |B|={len(b)}, |A+B|={len(reference)})")
    for label, fn in variants:
        print(f"  {label:7s} {_fmt(_timeit(fn, repeat))}")


def bench_search() -> None:
    config = SearchConfig(k_min=1, k_max=6, max_length=12)
    size = sum(sum(1 for _ in enumerate_normal_sets(k, 12)) for k in range(1, 7))
    print(f"\nbox search: direct2 over k<=6, length<=12 ({size} sets)")
    baseline = None
    for label, flag in (("active backend", False), ("numpy only", True)):
        if flag:
            import os
            import subprocess
            import sys

            code = (
                "from bsdilates.search import SearchConfig, exhaustive_verify_integer\n"
                "import time, json\n"
                "start = time.perf_counter()\n"
                "out = exhaustive_verify_integer('direct2', SearchConfig(k_min=1, k_max=6, max_length=12))\n"
                "print(json.dumps({'elapsed': time.perf_counter() - start,"
                " 'checked': out.instances_checked, 'violations': len(out.violations)}))\n"
            )
            env = dict(os.environ, BSDILATES_NO_NUMBA="1")
            proc = subprocess.run(
                [sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True
            )
            import json

            payload = json.loads(proc.stdout)
            elapsed = payload["elapsed"]
            summary = (payload["checked"], payload["violations"])
        else:
            kernels.warmup()
            start = time.perf_counter()
            out = exhaustive_verify_integer("direct2", config)
            elapsed = time.perf_counter() - start
            summary = (out.instances_checked, len(out.violations))
        if baseline is None:
            baseline = summary
        assert summary == baseline, f"backends disagree: {summary} != {baseline}"
        print(f"  {label:15s} {_fmt(elapsed)}  checked={summary[0]} violations={summary[1]}")


def main() -> None:
    print(f"active backend: {kernels.warmup()}")
    rng = random.Random(20240817)

    tiny_a = as_i64(sorted(rng.sample(range(-20, 21), 5)))
    tiny_b = as_i64(sorted(rng.sample(range(-20, 21), 6)))
    bench_sumset("tiny sets, per call", tiny_a, tiny_b, repeat=20_000)

    mid = as_i64(sorted(rng.sample(range(-10_000, 10_000), 400)))
    bench_sumset("mid sets, per call", mid, mid, repeat=50)

    big = as_i64(sorted(rng.sample(range(-5_000_000, 5_000_000), 4_000)))
    bench_sumset("large sets, per call", big, big, repeat=3)

    bench_search()


if __name__ == "__main__":
    main()
