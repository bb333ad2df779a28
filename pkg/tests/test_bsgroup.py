import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bsdilates.bsgroup import (
    IDENTITY,
    BSContext,
    BSElement,
    commutes,
    format_element,
    mul,
    parse_element,
)

contexts = st.integers(2, 5).map(BSContext)
elements = st.builds(BSElement, m=st.integers(0, 4), x=st.integers(-30, 30))


class TestConstruction:
    def test_context_rejects_small_n(self):
        with pytest.raises(ValueError):
            BSContext(1)

    def test_element_rejects_negative_m(self):
        with pytest.raises(ValueError):
            BSElement(-1, 0)

    def test_ordering(self):
        assert BSElement(0, 5) < BSElement(1, -10)
        assert BSElement(1, -2) < BSElement(1, 3)


class TestMul:
    def test_defining_relation(self):
        # ab = b a^n
        ctx = BSContext(2)
        a, b = BSElement(0, 1), BSElement(1, 0)
        assert mul(ctx, a, b) == BSElement(1, 2)
        assert mul(ctx, b, a) == BSElement(1, 1)

    def test_example_n3(self):
        ctx = BSContext(3)
        assert mul(ctx, BSElement(1, 2), BSElement(2, 1)) == BSElement(3, 19)

    def test_exact_at_huge_exponents(self):
        ctx = BSContext(2)
        g = mul(ctx, BSElement(0, 1), BSElement(100, 0))
        assert g == BSElement(100, 2**100)

    @given(contexts, elements)
    def test_identity(self, ctx, g):
        assert mul(ctx, g, IDENTITY) == g
        assert mul(ctx, IDENTITY, g) == g

    @given(contexts, elements, elements, elements)
    @settings(max_examples=60)
    def test_associative(self, ctx, g, h, w):
        assert mul(ctx, mul(ctx, g, h), w) == mul(ctx, g, mul(ctx, h, w))


class TestCommutes:
    def test_examples(self):
        ctx = BSContext(2)
        assert not commutes(ctx, BSElement(0, 1), BSElement(1, 0))
        assert commutes(ctx, BSElement(0, 2), BSElement(0, 5))
        assert commutes(ctx, BSElement(1, 0), BSElement(3, 0))
        assert commutes(ctx, BSElement(1, 2), BSElement(2, 6))

    @pytest.mark.parametrize("n", [2, 3])
    def test_criterion_equals_direct_comparison(self, n):
        ctx = BSContext(n)
        box = [BSElement(m, x) for m in range(3) for x in range(-3, 4)]
        for g in box:
            for h in box:
                assert commutes(ctx, g, h) == (mul(ctx, g, h) == mul(ctx, h, g))


class TestParseFormat:
    @pytest.mark.parametrize(
        "text,expected",
        [
            ("b a^3", BSElement(1, 3)),
            ("b^2 a^1", BSElement(2, 1)),
            ("b^2a^-3", BSElement(2, -3)),
            ("ba", BSElement(1, 1)),
            ("b^3", BSElement(3, 0)),
            ("a^-7", BSElement(0, -7)),
            ("a", BSElement(0, 1)),
            ("1", IDENTITY),
            ("b^0 a^0", IDENTITY),
            (" b ^ 2  a ^ 5 ", BSElement(2, 5)),
        ],
    )
    def test_parse(self, text, expected):
        assert parse_element(text) == expected

    @pytest.mark.parametrize("text", ["", "c", "ab", "b^", "a^x", "1 a"])
    def test_parse_rejects(self, text):
        with pytest.raises(ValueError):
            parse_element(text)

    def test_parse_rejects_negative_b_exponent(self):
        with pytest.raises(ValueError):
            parse_element("b^-1 a^2")

    def test_format_is_fully_explicit(self):
        assert format_element(BSElement(0, 5)) == "b^0 a^5"
        assert format_element(IDENTITY) == "b^0 a^0"

    @given(elements)
    def test_round_trip(self, g):
        assert parse_element(format_element(g)) == g
