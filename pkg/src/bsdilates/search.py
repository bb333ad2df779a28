"""Exhaustive verification over finite boxes of instances.

Integer-side searches enumerate normal sets (min 0, gcd of differences
1) of each size k in [k_min, k_max] with max element <= max_length, in
lexicographic order, and run one checker per instance.  Monoid searches
enumerate subsets of the ground box {b^m a^x : 0 <= m <= m_max,
0 <= x <= x_max} by size, again lexicographically.

Outcomes are deterministic for a fixed config regardless of the
parallelism degree: sharding uses an order-preserving map, so violation
and witness lists come out identical and only the elapsed time varies.
Extremal witnesses are collected per size k, deduplicated by affine
canonical form.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from time import perf_counter
from typing import Callable, Iterable, Iterator

from .bsgroup import BSContext, BSElement
from .intset import IntSet, affine_canonical, dilate_sum_size
from .subsets import BSSubset, from_elements, is_nonabelian
from .theorems import (
    VerificationReport,
    Verdict,
    check_dilate4_bound,
    check_direct_r,
    check_direct2,
    check_extended_inverse,
    check_main_monoid,
    classify_dilate3,
)

__all__ = [
    "SearchConfig",
    "WitnessEntry",
    "SearchOutcome",
    "INTEGER_THEOREMS",
    "enumerate_normal_sets",
    "enumerate_bs_subsets",
    "exhaustive_verify_integer",
    "find_extremal",
    "exhaustive_verify_monoid",
]


@dataclass(frozen=True)
class SearchConfig:
    """Box description: sizes k_min..k_max plus the per-domain limits.

    Integer boxes need max_length (and r for the parameterized dilate
    checker); monoid boxes need m_max and x_max and use n.  jobs is the
    parallelism degree.
    """

    k_min: int
    k_max: int
    max_length: int | None = None
    r: int | None = None
    n: int = 2
    m_max: int | None = None
    x_max: int | None = None
    jobs: int = 1

    def __post_init__(self):
        if self.k_min < 1:
            raise ValueError(f"k_min must be >= 1, got {self.k_min}")
        if self.k_max < self.k_min:
            raise ValueError(f"k_max {self.k_max} below k_min {self.k_min}")
        if self.jobs < 1:
            raise ValueError(f"jobs must be >= 1, got {self.jobs}")
        if self.max_length is not None and self.max_length < self.k_max - 1:
            raise ValueError(
                f"infeasible box: max_length {self.max_length} cannot hold {self.k_max} elements"
            )
        for name in ("m_max", "x_max"):
            v = getattr(self, name)
            if v is not None and v < 0:
                raise ValueError(f"{name} must be >= 0, got {v}")

    def to_json_dict(self) -> dict:
        return {
            "k_min": self.k_min,
            "k_max": self.k_max,
            "max_length": self.max_length,
            "r": self.r,
            "n": self.n,
            "m_max": self.m_max,
            "x_max": self.x_max,
            "jobs": self.jobs,
        }


@dataclass
class WitnessEntry:
    """One extremal or structural witness: the instance and its value."""

    item: IntSet | BSSubset
    value: int
    witness: object | None = None

    def to_json_dict(self) -> dict:
        w = self.witness
        if w is not None and hasattr(w, "to_json_dict"):
            w = w.to_json_dict()
        doc = {"item": str(self.item), "value": self.value}
        if w is not None:
            doc["witness"] = w
        return doc


@dataclass
class SearchOutcome:
    """Result of one exhaustive run.

    elapsed (seconds) is measurement, not content: two runs of the same
    config compare equal everywhere else, whatever the jobs setting.
    """

    config: SearchConfig
    instances_checked: int
    violations: list[VerificationReport] = field(default_factory=list)
    extremal_witnesses: list[WitnessEntry] = field(default_factory=list)
    elapsed: float = 0.0

    def to_json_dict(self, limit: int | None = None) -> dict:
        violations = self.violations if limit is None else self.violations[:limit]
        witnesses = (
            self.extremal_witnesses if limit is None else self.extremal_witnesses[:limit]
        )
        return {
            "config": self.config.to_json_dict(),
            "instances_checked": self.instances_checked,
            "violations_total": len(self.violations),
            "violations": [r.to_json_dict() for r in violations],
            "extremal_witnesses_total": len(self.extremal_witnesses),
            "extremal_witnesses": [w.to_json_dict() for w in witnesses],
            "elapsed_ms": round(self.elapsed * 1000.0, 3),
        }


def enumerate_normal_sets(k: int, max_length: int) -> Iterator[IntSet]:
    """All normal sets of size k with max <= max_length, lexicographic.

    Normal means min 0 and gcd of differences 1; for k = 1 that is just
    {0}.  Raises on an infeasible box (max_length < k - 1).
    """
    if k < 1:
        raise ValueError(f"set size must be >= 1, got {k}")
    if max_length < k - 1:
        raise ValueError(f"infeasible box: max_length {max_length} cannot hold {k} elements")
    if k == 1:
        yield IntSet([0])
        return
    for rest in itertools.combinations(range(1, max_length + 1), k - 1):
        g = 0
        for v in rest:
            g = math.gcd(g, v)
            if g == 1:
                break
        if g == 1:
            yield IntSet._from_sorted((0,) + rest)


def enumerate_bs_subsets(config: SearchConfig, nonabelian_only: bool = False) -> Iterator[BSSubset]:
    """Subsets of the (m_max, x_max) ground box, by size then lexicographic."""
    if config.m_max is None or config.x_max is None:
        raise ValueError("monoid enumeration needs m_max and x_max")
    ctx = BSContext(config.n)
    ground = [BSElement(m, x) for m in range(config.m_max + 1) for x in range(config.x_max + 1)]
    if config.k_max > len(ground):
        raise ValueError(
            f"infeasible box: ground set has {len(ground)} elements, k_max = {config.k_max}"
        )
    for size in range(config.k_min, config.k_max + 1):
        for combo in itertools.combinations(ground, size):
            s = from_elements(ctx, combo)
            if nonabelian_only and not is_nonabelian(s):
                continue
            yield s


def _ordered_map(fn: Callable, items: Iterable, jobs: int) -> Iterator:
    if jobs <= 1:
        yield from map(fn, items)
        return
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        yield from pool.map(fn, items)


INTEGER_THEOREMS = ("direct2", "extended_inverse", "classify3", "direct_r", "dilate4")

# Checkers whose hypotheses start above k = 1; boxes are clamped up to
# the floor rather than rejected, so one box serves several theorems.
_K_FLOOR = {"extended_inverse": 3, "dilate4": 5}


def _integer_checker(theorem_id: str, config: SearchConfig) -> Callable[[IntSet], VerificationReport]:
    if theorem_id == "direct2":
        return check_direct2
    if theorem_id == "extended_inverse":
        return check_extended_inverse
    if theorem_id == "classify3":
        return lambda a: classify_dilate3(a)[0]
    if theorem_id == "dilate4":
        return check_dilate4_bound
    if theorem_id == "direct_r":
        r = config.r
        if r is None or r < 3:
            raise ValueError(f"direct_r search needs config.r >= 3, got {r}")
        return lambda a: check_direct_r(a, r)
    raise ValueError(f"unknown integer theorem id {theorem_id!r}; expected one of {INTEGER_THEOREMS}")


def exhaustive_verify_integer(theorem_id: str, config: SearchConfig) -> SearchOutcome:
    """Run one integer-side checker over every normal set in the box.

    Collects all VIOLATION reports plus, per size k, the minimum value
    of the checked sumset and its achievers in affine canonical form.
    """
    if config.max_length is None:
        raise ValueError("integer search needs max_length")
    check = _integer_checker(theorem_id, config)
    start = perf_counter()
    checked = 0
    violations: list[VerificationReport] = []
    witnesses: list[WitnessEntry] = []
    k_lo = max(config.k_min, _K_FLOOR.get(theorem_id, 1))
    for k in range(k_lo, config.k_max + 1):
        best: int | None = None
        achievers: list[IntSet] = []
        sets = enumerate_normal_sets(k, config.max_length)
        for a, report in _ordered_map(lambda a: (a, check(a)), sets, config.jobs):
            checked += 1
            if report.verdict is Verdict.VIOLATION:
                violations.append(report)
            value = report.computed["value"]
            if best is None or value < best:
                best = value
                achievers = [affine_canonical(a)]
            elif value == best:
                canon = affine_canonical(a)
                if canon not in achievers:
                    achievers.append(canon)
        witnesses.extend(WitnessEntry(item=a, value=best) for a in achievers)
    return SearchOutcome(
        config=config,
        instances_checked=checked,
        violations=violations,
        extremal_witnesses=witnesses,
        elapsed=perf_counter() - start,
    )


def find_extremal(k: int, r: int, max_length: int, jobs: int = 1) -> SearchOutcome:
    """Minimum of |A + r*A| over normal sets of size k, with all achievers.

    Achievers are reported in affine canonical form, deduplicated.  The
    minimum is monotone non-increasing in max_length and non-decreasing
    in k.
    """
    if r < 2:
        raise ValueError(f"find_extremal requires r >= 2, got {r}")
    config = SearchConfig(k_min=k, k_max=k, max_length=max_length, r=r, jobs=jobs)
    start = perf_counter()
    checked = 0
    best: int | None = None
    achievers: list[IntSet] = []
    coeffs = (1, r)
    sets = enumerate_normal_sets(k, max_length)
    for a, value in _ordered_map(lambda a: (a, dilate_sum_size(coeffs, a)), sets, jobs):
        checked += 1
        if best is None or value < best:
            best = value
            achievers = [affine_canonical(a)]
        elif value == best:
            canon = affine_canonical(a)
            if canon not in achievers:
                achievers.append(canon)
    return SearchOutcome(
        config=config,
        instances_checked=checked,
        violations=[],
        extremal_witnesses=[WitnessEntry(item=a, value=best) for a in achievers],
        elapsed=perf_counter() - start,
    )


def exhaustive_verify_monoid(config: SearchConfig) -> SearchOutcome:
    """Run the main monoid checker over every nonabelian subset in the box.

    Violations are collected (none are expected); subsets that land in
    the small-doubling regime are returned as witnesses together with
    their covering progression.
    """
    if config.n != 2:
        raise ValueError(f"monoid search is stated for n = 2, got n = {config.n}")
    start = perf_counter()
    checked = 0
    violations: list[VerificationReport] = []
    witnesses: list[WitnessEntry] = []
    subsets = enumerate_bs_subsets(config, nonabelian_only=True)
    for s, report in _ordered_map(lambda s: (s, check_main_monoid(s)), subsets, config.jobs):
        checked += 1
        if report.verdict is Verdict.VIOLATION:
            violations.append(report)
        elif report.verdict is Verdict.STRUCTURE_CONFIRMED:
            witnesses.append(
                WitnessEntry(item=s, value=report.computed["value"], witness=report.witness)
            )
    return SearchOutcome(
        config=config,
        instances_checked=checked,
        violations=violations,
        extremal_witnesses=witnesses,
        elapsed=perf_counter() - start,
    )
