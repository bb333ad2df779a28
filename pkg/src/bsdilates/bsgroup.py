"""Elements of the positive Baumslag-Solitar monoid BS+(1, n).

BS(1, n) is generated by a, b with the relation b a b^{-1} = a^n, i.e.
ab = ba^n.  Every element of the submonoid generated by {a^z, b : z in Z}
has a unique normal form b^m a^x with m >= 0 and x in Z, and

    (b^m a^x)(b^s a^y) = b^{m+s} a^{n^s x + y}.

Exponents are exact Python integers throughout, so n^s x never
overflows no matter how large s grows.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

__all__ = [
    "BSContext",
    "BSElement",
    "IDENTITY",
    "mul",
    "commutes",
    "parse_element",
    "format_element",
]


@dataclass(frozen=True)
class BSContext:
    """The monoid parameter n >= 2."""

    n: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"BS+(1, n) requires n >= 2, got n = {self.n}")


@dataclass(frozen=True, order=True)
class BSElement:
    """Normal form b^m a^x with m >= 0.

    Ordering is lexicographic on (m, x), giving enumeration and
    serialization a single deterministic element order.
    """

    m: int
    x: int

    def __post_init__(self):
        if self.m < 0:
            raise ValueError(f"monoid element needs b-exponent >= 0, got m = {self.m}")

    def __str__(self) -> str:
        return f"b^{self.m} a^{self.x}"


IDENTITY = BSElement(0, 0)


def mul(ctx: BSContext, g: BSElement, h: BSElement) -> BSElement:
    """Product g·h in normal form: b^{m_g+m_h} a^{n^{m_h} x_g + x_h}."""
    return BSElement(g.m + h.m, ctx.n ** h.m * g.x + h.x)


def commutes(ctx: BSContext, g: BSElement, h: BSElement) -> bool:
    """Whether gh = hg, via (n^{m_h} - 1)·x_g = (n^{m_g} - 1)·x_h."""
    return (ctx.n ** h.m - 1) * g.x == (ctx.n ** g.m - 1) * h.x


_ELEMENT_RE = re.compile(
    r"""^\s*
        (?:
            (?P<one>1)
          | (?P<bfac>b(?:\s*\^\s*(?P<bm>[+-]?\d+))?)?
            \s*
            (?P<afac>a(?:\s*\^\s*(?P<ax>[+-]?\d+))?)?
        )
        \s*$""",
    re.VERBOSE,
)


def parse_element(text: str) -> BSElement:
    """Parse an element literal.

    Grammar: ``1`` alone, or an optional b-factor followed by an optional
    a-factor, at least one present.  A factor is the letter optionally
    followed by ``^`` and a signed integer; a bare letter means exponent
    1.  Examples: ``b^2 a^-3``, ``ba``, ``b^3``, ``a^5``, ``1``.
    Negative b-exponents are rejected (monoid, not group).
    """
    match = _ELEMENT_RE.match(text)
    if not match or (
        not match.group("one") and not match.group("bfac") and not match.group("afac")
    ):
        raise ValueError(
            f"element literal {text!r}: expected '1' or 'b[^M] a[^X]' with at least one factor"
        )
    if match.group("one"):
        return IDENTITY
    m = int(match.group("bm")) if match.group("bm") is not None else (1 if match.group("bfac") else 0)
    x = int(match.group("ax")) if match.group("ax") is not None else (1 if match.group("afac") else 0)
    return BSElement(m, x)


def format_element(g: BSElement) -> str:
    """Fully explicit form ``b^m a^x`` (exponents never omitted)."""
    return str(g)
