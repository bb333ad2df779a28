"""Exact arithmetic on finite nonempty sets of integers.

Conventions: for a set A = {a_0 < a_1 < ... < a_{k-1}} the *length* is
l(A) = a_{k-1} - a_0, the number of *holes* is h(A) = l(A) + 1 - k, and
d(A) is the gcd of the differences a_i - a_0.  A is *normal* when
min(A) = 0 and d(A) = 1 (singletons {0} count as normal).  The dilate is
r*A = {r·a} and a sum of dilates r_1*A + ... + r_s*A is the Minkowski sum
of the dilated copies.

Every operation is a pure function on immutable values and is exact at
any magnitude: elements are Python integers, and computations route
through the int64 numpy/numba kernels (:mod:`bsdilates.kernels`) only
when a magnitude envelope, computed exactly, proves the fast path cannot
overflow.
"""

from __future__ import annotations

import itertools
import operator
from dataclasses import dataclass
from enum import Enum
from math import gcd
from typing import Iterable, Iterator

from . import kernels

__all__ = [
    "IntSet",
    "SetStats",
    "NormalizationWitness",
    "ApDescription",
    "LssClause",
    "LssVerdict",
    "parse_intset",
    "sumset",
    "union",
    "dilate",
    "dilate_sum",
    "dilate_sum_size",
    "stats",
    "normalize",
    "reflect",
    "ap_analysis",
    "residue_split",
    "affine_canonical",
    "lss_check",
]

_SET_GRAMMAR = "'{' INT (',' INT)* '}'"


class IntSet:
    """A finite nonempty set of integers, stored strictly increasing.

    Accepts any iterable of integers; duplicates collapse, order is
    irrelevant.  Empty input is rejected.
    """

    __slots__ = ("elements",)

    elements: tuple[int, ...]

    def __init__(self, elements: Iterable[int]):
        elems = sorted({operator.index(e) for e in elements})
        if not elems:
            raise ValueError("IntSet requires at least one element")
        object.__setattr__(self, "elements", tuple(elems))

    @classmethod
    def _from_sorted(cls, elements: Iterable[int]) -> "IntSet":
        # Trusted constructor: caller guarantees sorted, duplicate-free,
        # nonempty Python ints (kernel outputs, affine images).
        s = object.__new__(cls)
        object.__setattr__(s, "elements", tuple(elements))
        return s

    def __setattr__(self, name: str, value) -> None:
        raise AttributeError("IntSet is immutable")

    @property
    def min(self) -> int:
        return self.elements[0]

    @property
    def max(self) -> int:
        return self.elements[-1]

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __contains__(self, value: object) -> bool:
        return value in self.elements

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntSet):
            return NotImplemented
        return self.elements == other.elements

    def __lt__(self, other: "IntSet") -> bool:
        # Lexicographic on the sorted element tuples; used to pick
        # canonical representatives and to order witness lists.
        return self.elements < other.elements

    def __hash__(self) -> int:
        return hash(self.elements)

    def __repr__(self) -> str:
        return f"IntSet({list(self.elements)!r})"

    def __str__(self) -> str:
        return "{" + ",".join(str(e) for e in self.elements) + "}"


def parse_intset(text: str) -> IntSet:
    """Parse a set literal like ``{0, 1, 3}``.

    Whitespace is insignificant; elements may repeat (set semantics).
    Raises ValueError naming the failing position and the grammar.
    """

    def fail(pos: int, expected: str) -> None:
        raise ValueError(
            f"set literal: expected {expected} at position {pos}; grammar: {_SET_GRAMMAR}"
        )

    n = len(text)

    def skip_ws(i: int) -> int:
        while i < n and text[i].isspace():
            i += 1
        return i

    i = skip_ws(0)
    if i >= n or text[i] != "{":
        fail(i, "'{'")
    i += 1
    elems = []
    while True:
        i = skip_ws(i)
        j = i
        if j < n and text[j] in "+-":
            j += 1
        end = j
        while end < n and text[end].isdigit():
            end += 1
        if end == j:
            fail(i, "an integer")
        elems.append(int(text[i:end]))
        i = skip_ws(end)
        if i < n and text[i] == ",":
            i += 1
            continue
        if i < n and text[i] == "}":
            i += 1
            break
        fail(i, "',' or '}'")
    i = skip_ws(i)
    if i != n:
        fail(i, "end of input")
    return IntSet(elems)


@dataclass(frozen=True)
class SetStats:
    """Size, extremes, length l, holes h and difference gcd d of a set.

    ``diff_gcd`` is None for singletons (no differences to take).
    """

    k: int
    min: int
    max: int
    length: int
    holes: int
    diff_gcd: int | None


@dataclass(frozen=True)
class NormalizationWitness:
    """Normal form plus the affine witness: original = scale*normal + offset."""

    normal: IntSet
    offset: int
    scale: int


@dataclass(frozen=True)
class ApDescription:
    """Arithmetic progression {start + i*difference : 0 <= i < count}.

    difference is 0 only for the degenerate count = 1 progression.
    """

    start: int
    difference: int
    count: int

    def to_json_dict(self) -> dict[str, int]:
        return {"start": self.start, "difference": self.difference, "count": self.count}


class LssClause(str, Enum):
    CASE_I = "CaseI"
    CASE_II = "CaseII"
    NOT_APPLICABLE = "NotApplicable"


@dataclass(frozen=True)
class LssVerdict:
    """Outcome of the two-clause sumset lower bound check.

    ``bound`` is the lower bound asserted by the applicable clause; for
    NotApplicable it falls back to the universal |A| + |B| - 1.  In every
    case actual >= bound.
    """

    delta: int
    clause: LssClause
    bound: int
    actual: int


def _maxabs(a: IntSet) -> int:
    return max(-a.min, a.max)


def sumset(a: IntSet, b: IntSet) -> IntSet:
    """Minkowski sum A + B = {x + y : x in A, y in B}."""
    if kernels.fits_int64(_maxabs(a) + _maxabs(b)):
        arr = kernels.sumset_i64(kernels.as_i64(a.elements), kernels.as_i64(b.elements))
        return IntSet._from_sorted(arr.tolist())
    return IntSet(x + y for x in a.elements for y in b.elements)


def union(a: IntSet, b: IntSet) -> IntSet:
    return IntSet(itertools.chain(a.elements, b.elements))


def dilate(r: int, a: IntSet) -> IntSet:
    """Dilate r*A = {r·x : x in A} for r >= 1."""
    if r < 1:
        raise ValueError(f"dilation coefficient must be >= 1, got {r}")
    return IntSet._from_sorted(r * x for x in a.elements)


def _check_coeffs(coeffs) -> tuple[int, ...]:
    cs = tuple(coeffs)
    if not cs:
        raise ValueError("dilate_sum requires at least one coefficient")
    for c in cs:
        if not isinstance(c, int) or c < 1:
            raise ValueError(f"dilation coefficients must be integers >= 1, got {c!r}")
    return cs


def dilate_sum(coeffs: Iterable[int], a: IntSet) -> IntSet:
    """Sum of dilates r_1*A + r_2*A + ... for coefficients r_i >= 1.

    A single coefficient degenerates to a dilate.  The fast kernel path
    is taken only when sum(r_i) * max|A| fits the int64 envelope;
    otherwise the fold runs on exact Python integers.
    """
    cs = _check_coeffs(coeffs)
    if len(cs) == 1:
        return dilate(cs[0], a)
    if kernels.fits_int64(sum(cs) * _maxabs(a)):
        arr = kernels.weighted_sumset_i64(kernels.as_i64(cs), kernels.as_i64(a.elements))
        return IntSet._from_sorted(arr.tolist())
    acc = {cs[0] * x for x in a.elements}
    for c in cs[1:]:
        acc = {u + c * x for u in acc for x in a.elements}
    return IntSet(acc)


def dilate_sum_size(coeffs: Iterable[int], a: IntSet) -> int:
    """len(dilate_sum(coeffs, a)) without materializing the IntSet."""
    cs = _check_coeffs(coeffs)
    if len(cs) == 1:
        return len(a)
    if kernels.fits_int64(sum(cs) * _maxabs(a)):
        return int(
            kernels.weighted_sumset_i64(kernels.as_i64(cs), kernels.as_i64(a.elements)).size
        )
    return len(dilate_sum(cs, a))


def stats(a: IntSet) -> SetStats:
    k = len(a)
    length = a.max - a.min
    d = None
    if k >= 2:
        d = 0
        for x in a.elements[1:]:
            d = gcd(d, x - a.min)
    return SetStats(k=k, min=a.min, max=a.max, length=length, holes=length + 1 - k, diff_gcd=d)


def _scale_of(a: IntSet) -> int:
    # Singleton convention: scale 1.
    st = stats(a)
    return st.diff_gcd if st.diff_gcd is not None else 1


def normalize(a: IntSet) -> NormalizationWitness:
    """Translate to min 0 and divide out d(A), with the affine witness.

    The result set is normal, and scale*normal + offset reproduces the
    input exactly.  Idempotent on normal sets (offset 0, scale 1).
    """
    offset = a.min
    scale = _scale_of(a)
    normal = IntSet._from_sorted((x - offset) // scale for x in a.elements)
    return NormalizationWitness(normal=normal, offset=offset, scale=scale)


def reflect(a: IntSet) -> IntSet:
    """Mirror image {max(A) - x : x in A}."""
    return IntSet._from_sorted(a.max - x for x in reversed(a.elements))


def ap_analysis(a: IntSet) -> tuple[bool, ApDescription]:
    """Whether A is an arithmetic progression, plus its minimal covering AP.

    The covering AP has start min(A), difference d(A) and count
    l(A)/d(A) + 1; A is an AP exactly when that count equals |A|.
    Singletons are APs of count 1 and difference 0.
    """
    k = len(a)
    if k == 1:
        return True, ApDescription(start=a.min, difference=0, count=1)
    d = _scale_of(a)
    count = (a.max - a.min) // d + 1
    return count == k, ApDescription(start=a.min, difference=d, count=count)


def residue_split(a: IntSet, r: int) -> list[tuple[int, IntSet]]:
    """Split A by residue class mod r, ascending by residue, empty classes omitted."""
    if r < 2:
        raise ValueError(f"residue_split requires modulus >= 2, got {r}")
    classes: dict[int, list[int]] = {}
    for x in a.elements:
        classes.setdefault(x % r, []).append(x)
    return [(res, IntSet._from_sorted(classes[res])) for res in sorted(classes)]


def affine_canonical(a: IntSet) -> IntSet:
    """Canonical representative of A under maps x -> u·x + v, u != 0.

    Computed as the lexicographically smaller of normalize(A).normal and
    normalize(reflect(A)).normal, so affinely equivalent sets (including
    mirror images) share one representative.
    """
    fwd = normalize(a).normal
    bwd = normalize(reflect(a)).normal
    return fwd if fwd.elements <= bwd.elements else bwd


def lss_check(a: IntSet, b: IntSet) -> LssVerdict:
    """Two-clause lower bound for |A + B|, for A, B ⊆ ℕ with 0 in both.

    With delta = 1 when l(A) = l(B) and 0 otherwise:

    * CaseI applies when l(A) = max(l(A), l(B)) >= |A| + |B| - 1 - delta
      and d(A) = 1; then |A + B| >= |A| + 2|B| - 2 - delta.
    * CaseII applies when max(l(A), l(B)) <= |A| + |B| - 2 - delta; then
      |A + B| >= l(L) + |S| where L is the set of larger length and S
      the other one (a tie admits both orderings, so the bound is the
      larger of the two).  Equivalently |A + B| >= (|A| + |B| - 1) plus
      the hole count of the longer set.

    The two cases are mutually exclusive; anything else is
    NotApplicable, reported with the universal bound |A| + |B| - 1.
    """
    if a.min != 0 or b.min != 0:
        raise ValueError("lss_check requires subsets of the naturals with min(A) = min(B) = 0")
    ka, kb = len(a), len(b)
    la, lb = a.max, b.max
    delta = 1 if la == lb else 0
    actual = len(sumset(a, b))
    if la >= lb and la >= ka + kb - 1 - delta and _scale_of(a) == 1:
        return LssVerdict(delta, LssClause.CASE_I, ka + 2 * kb - 2 - delta, actual)
    if max(la, lb) <= ka + kb - 2 - delta:
        if la > lb:
            bound = la + kb
        elif lb > la:
            bound = lb + ka
        else:
            bound = la + max(ka, kb)
        return LssVerdict(delta, LssClause.CASE_II, bound, actual)
    return LssVerdict(delta, LssClause.NOT_APPLICABLE, ka + kb - 1, actual)
