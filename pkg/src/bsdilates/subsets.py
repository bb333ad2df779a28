"""Finite subsets of BS+(1, n) and their product sets.

A finite subset S decomposes uniquely by b-exponent into cosets
S = ∪_i b^{m_i} a^{A_i} with m_1 < m_2 < ... and each A_i a finite set
of a-exponents.  Products respect this grading: elements with distinct
b-exponents never collide, and the coset pair (b^{m_i} a^{A_i},
b^{m_j} a^{B_j}) contributes b^{m_i+m_j} a^{n^{m_j}*A_i + B_j}.

Two product routes are exposed on purpose.  :func:`product` applies the
per-coset normal-form formula; :func:`product_elementwise` multiplies
element pairs one by one via :func:`bsgroup.mul` and regroups, serving
as the independent oracle the checkers and tests compare against.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .bsgroup import BSContext, BSElement, commutes, mul
from .intset import IntSet, dilate, dilate_sum_size, parse_intset, sumset, union

__all__ = [
    "BSSubset",
    "CosetSummary",
    "from_elements",
    "parse_subset",
    "format_subset",
    "subset_to_json",
    "subset_from_json",
    "product",
    "product_elementwise",
    "square_size",
    "square_size_via_normal_form",
    "decompose",
    "is_nonabelian",
]


@dataclass(frozen=True)
class BSSubset:
    """Finite nonempty subset of BS+(1, n), stored as its coset decomposition.

    ``cosets`` is a tuple of (m, A) pairs with strictly increasing
    b-exponents m >= 0 and nonempty a-exponent sets A.
    """

    ctx: BSContext
    cosets: tuple[tuple[int, IntSet], ...]

    def __post_init__(self):
        if not self.cosets:
            raise ValueError("BSSubset requires at least one coset")
        prev = -1
        for m, a in self.cosets:
            if m <= prev:
                raise ValueError("coset b-exponents must be strictly increasing")
            if m < 0:
                raise ValueError(f"coset b-exponent must be >= 0, got {m}")
            if not isinstance(a, IntSet):
                raise TypeError("coset a-exponents must be an IntSet")
            prev = m

    def __len__(self) -> int:
        return sum(len(a) for _, a in self.cosets)

    def elements(self) -> list[BSElement]:
        """All elements, ordered by (m, x)."""
        return [BSElement(m, x) for m, a in self.cosets for x in a.elements]

    def __str__(self) -> str:
        return format_subset(self)


def from_elements(ctx: BSContext, elements: Iterable[BSElement]) -> BSSubset:
    """Group elements by b-exponent into the coset decomposition."""
    grouped: dict[int, set[int]] = {}
    for g in elements:
        grouped.setdefault(g.m, set()).add(g.x)
    if not grouped:
        raise ValueError("BSSubset requires at least one element")
    return BSSubset(ctx, tuple((m, IntSet(grouped[m])) for m in sorted(grouped)))


def parse_subset(text: str, ctx: BSContext) -> BSSubset:
    """Parse a subset literal like ``0:{0,1,2}; 1:{0}``.

    Entries are ``m:SET`` separated by ``;``; whitespace is
    insignificant.  Entries may appear in any order but b-exponents must
    not repeat.
    """
    entries: dict[int, IntSet] = {}
    for part in text.split(";"):
        if not part.strip():
            raise ValueError("subset literal: empty entry; grammar: M ':' SET (';' M ':' SET)*")
        head, sep, rest = part.partition(":")
        if not sep:
            raise ValueError(
                f"subset literal: missing ':' in entry {part.strip()!r}; "
                "grammar: M ':' SET (';' M ':' SET)*"
            )
        try:
            m = int(head.strip())
        except ValueError:
            raise ValueError(
                f"subset literal: expected integer b-exponent before ':', got {head.strip()!r}"
            ) from None
        if m in entries:
            raise ValueError(f"subset literal: duplicate b-exponent {m}")
        entries[m] = parse_intset(rest)
    return BSSubset(ctx, tuple((m, entries[m]) for m in sorted(entries)))


def format_subset(s: BSSubset) -> str:
    return "; ".join(f"{m}:{a}" for m, a in s.cosets)


def subset_to_json(s: BSSubset) -> dict:
    return {
        "n": s.ctx.n,
        "cosets": [{"m": m, "a_exponents": list(a.elements)} for m, a in s.cosets],
    }


def subset_from_json(doc: dict) -> BSSubset:
    ctx = BSContext(doc["n"])
    cosets = tuple(
        sorted((entry["m"], IntSet(entry["a_exponents"])) for entry in doc["cosets"])
    )
    return BSSubset(ctx, cosets)


def product(s: BSSubset, t: BSSubset) -> BSSubset:
    """Product set ST via the per-coset normal-form formula.

    Coset (m_i, A_i) of S against (m_j, B_j) of T lands in b-exponent
    m_i + m_j with a-exponents n^{m_j}*A_i + B_j; contributions to equal
    b-exponents are unioned, and distinct b-exponents never merge.
    """
    if s.ctx != t.ctx:
        raise ValueError(f"context mismatch: n = {s.ctx.n} versus n = {t.ctx.n}")
    n = s.ctx.n
    acc: dict[int, IntSet] = {}
    for mi, a in s.cosets:
        for mj, b in t.cosets:
            contrib = sumset(dilate(n**mj, a), b)
            key = mi + mj
            acc[key] = union(acc[key], contrib) if key in acc else contrib
    return BSSubset(s.ctx, tuple((m, acc[m]) for m in sorted(acc)))


def product_elementwise(s: BSSubset, t: BSSubset) -> BSSubset:
    """Oracle route: multiply all element pairs with mul and regroup."""
    if s.ctx != t.ctx:
        raise ValueError(f"context mismatch: n = {s.ctx.n} versus n = {t.ctx.n}")
    return from_elements(
        s.ctx, (mul(s.ctx, g, h) for g in s.elements() for h in t.elements())
    )


def square_size(s: BSSubset) -> int:
    """|S^2|, always routed through product."""
    return len(product(s, s))


def square_size_via_normal_form(s: BSSubset) -> int:
    """|S^2| for a single coset S = b^m a^A, via |n^m*A + A|.

    Cross-check path: for S = b^m a^A the square is b^{2m} a^{n^m*A + A},
    so its size is a pure sumset computation.  Multi-coset subsets are
    rejected.
    """
    if len(s.cosets) != 1:
        raise ValueError("normal-form shortcut applies to single-coset subsets only")
    m, a = s.cosets[0]
    return dilate_sum_size((s.ctx.n**m, 1), a)


@dataclass(frozen=True)
class CosetSummary:
    """Coset count minus one (t) and the (m, size) profile."""

    t: int
    entries: tuple[tuple[int, int], ...]


def decompose(s: BSSubset) -> CosetSummary:
    return CosetSummary(
        t=len(s.cosets) - 1, entries=tuple((m, len(a)) for m, a in s.cosets)
    )


def is_nonabelian(s: BSSubset) -> bool:
    """Whether some pair of elements of S fails to commute."""
    elems = s.elements()
    for i, g in enumerate(elems):
        for h in elems[i + 1 :]:
            if not commutes(s.ctx, g, h):
                return True
    return False
