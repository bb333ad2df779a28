import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bsdilates.bsgroup import BSContext, BSElement
from bsdilates.intset import IntSet, dilate, parse_intset, sumset
from bsdilates.subsets import (
    BSSubset,
    decompose,
    format_subset,
    from_elements,
    is_nonabelian,
    parse_subset,
    product,
    product_elementwise,
    square_size,
    square_size_via_normal_form,
    subset_from_json,
    subset_to_json,
)

CTX2 = BSContext(2)
CTX3 = BSContext(3)


def _subset(text: str, ctx: BSContext = CTX2) -> BSSubset:
    return parse_subset(text, ctx)


small_subsets = st.builds(
    from_elements,
    st.just(CTX2),
    st.sets(
        st.builds(BSElement, m=st.integers(0, 2), x=st.integers(-4, 4)),
        min_size=1,
        max_size=5,
    ),
)
coset_pairs = st.tuples(
    st.integers(0, 3),
    st.sets(st.integers(-6, 6), min_size=1, max_size=4).map(IntSet),
)


class TestConstruction:
    def test_from_elements_groups_by_b_exponent(self):
        s = from_elements(CTX2, [BSElement(1, 2), BSElement(1, 0), BSElement(0, 1)])
        assert s.cosets == ((0, IntSet([1])), (1, IntSet([0, 2])))

    def test_duplicates_collapse(self):
        s = from_elements(CTX2, [BSElement(1, 0), BSElement(1, 0)])
        assert len(s) == 1

    def test_elements_round_trip(self):
        s = _subset("0:{1}; 2:{0,3}")
        assert s.elements() == [BSElement(0, 1), BSElement(2, 0), BSElement(2, 3)]
        assert from_elements(CTX2, s.elements()) == s

    def test_validation(self):
        with pytest.raises(ValueError):
            BSSubset(CTX2, ())
        with pytest.raises(ValueError):
            BSSubset(CTX2, ((1, IntSet([0])), (1, IntSet([1]))))
        with pytest.raises(ValueError):
            BSSubset(CTX2, ((-1, IntSet([0])),))


class TestParseFormat:
    def test_round_trip(self):
        text = "0:{0,1,2}; 1:{0}"
        assert format_subset(_subset(text)) == text
        assert format_subset(_subset(" 1 : {3} ;0: { 1 , 2 }")) == "0:{1,2}; 1:{3}"

    @pytest.mark.parametrize(
        "text", ["", "0:{0};;1:{1}", "{0,1}", "x:{0}", "0:{0}; 0:{1}", "0:"]
    )
    def test_rejects(self, text):
        with pytest.raises(ValueError):
            _subset(text)

    def test_json_round_trip(self):
        s = _subset("0:{0,1}; 3:{-2,5}")
        doc = subset_to_json(s)
        assert doc == {
            "n": 2,
            "cosets": [
                {"m": 0, "a_exponents": [0, 1]},
                {"m": 3, "a_exponents": [-2, 5]},
            ],
        }
        assert subset_from_json(doc) == s

    def test_json_accepts_unordered_cosets(self):
        doc = {"n": 3, "cosets": [{"m": 2, "a_exponents": [1]}, {"m": 0, "a_exponents": [0]}]}
        assert subset_from_json(doc).cosets[0][0] == 0

    @given(small_subsets)
    def test_parse_inverts_format(self, s):
        assert _subset(format_subset(s)) == s


class TestProduct:
    def test_square_of_two_cosets(self):
        # {b, b^2 a}^2 = {b^2, b^3 a, b^3 a^2, b^4 a^5}
        s = _subset("1:{0}; 2:{1}")
        assert format_subset(product(s, s)) == "2:{0}; 3:{1,2}; 4:{5}"

    def test_square_of_single_coset(self):
        s = _subset("1:{0,1,2}")
        assert format_subset(product(s, s)) == "2:{0,1,2,3,4,5,6}"

    def test_abelian_part(self):
        s = _subset("0:{5}")
        assert format_subset(product(s, s)) == "0:{10}"

    def test_context_mismatch_rejected(self):
        with pytest.raises(ValueError):
            product(_subset("0:{0}"), _subset("0:{0}", CTX3))

    def test_distinct_b_exponents_never_merge(self):
        s = _subset("0:{0,7}; 1:{0,3}; 2:{1}")
        st_ = product(s, s)
        sizes = {m: len(a) for m, a in st_.cosets}
        # every coset pair (m_i, m_j) lands in exactly m_i + m_j
        assert set(sizes) == {0, 1, 2, 3, 4}

    @given(small_subsets, small_subsets)
    @settings(max_examples=60)
    def test_formula_matches_elementwise_oracle(self, s, t):
        assert product(s, t) == product_elementwise(s, t)

    @given(coset_pairs, coset_pairs, st.integers(2, 4))
    @settings(max_examples=60)
    def test_single_coset_product_formula(self, sc, tc, n):
        # b^r a^A  *  b^s a^B  =  b^{r+s} a^{n^s*A + B}
        ctx = BSContext(n)
        (r, a), (s_exp, b) = sc, tc
        s = BSSubset(ctx, ((r, a),))
        t = BSSubset(ctx, ((s_exp, b),))
        got = product_elementwise(s, t)
        expected = BSSubset(ctx, ((r + s_exp, sumset(dilate(n**s_exp, a), b)),))
        assert got == expected
        assert len(got) == len(sumset(dilate(n**s_exp, a), b))

    def test_exact_at_huge_b_exponents(self):
        s = BSSubset(CTX2, ((40, IntSet([1])),))
        sq = product(s, s)
        assert sq.cosets == ((80, IntSet([2**40 + 1])),)


class TestSquareSize:
    def test_routes_through_product(self):
        s = _subset("0:{0,1}; 1:{0}; 2:{0}")  # example: {1, a} u {b, b^2}
        assert square_size(s) == len(product(s, s))
        assert square_size(s) == 11

    def test_normal_form_shortcut_agrees(self):
        s = _subset("1:{0,1,2,3}")
        assert square_size_via_normal_form(s) == square_size(s)

    def test_shortcut_rejects_multi_coset(self):
        with pytest.raises(ValueError):
            square_size_via_normal_form(_subset("0:{0}; 1:{0}"))

    @given(st.integers(1, 3), st.sets(st.integers(0, 8), min_size=1, max_size=5), st.integers(2, 3))
    @settings(max_examples=60)
    def test_shortcut_agrees_on_random_cosets(self, m, xs, n):
        s = BSSubset(BSContext(n), ((m, IntSet(xs)),))
        assert square_size_via_normal_form(s) == square_size(s)


class TestDecompose:
    def test_example(self):
        summary = decompose(_subset("0:{0,1}; 1:{0}; 2:{0}"))
        assert summary.t == 2
        assert summary.entries == ((0, 2), (1, 1), (2, 1))

    def test_single_coset(self):
        assert decompose(_subset("1:{0,1,2}")).t == 0


class TestNonabelian:
    def test_examples(self):
        assert not is_nonabelian(_subset("0:{0,1}"))
        assert is_nonabelian(_subset("0:{1}; 1:{0}"))
        assert not is_nonabelian(_subset("1:{0}; 3:{0}"))
        assert is_nonabelian(_subset("1:{0,1}"))

    def test_identity_commutes_with_everything(self):
        assert not is_nonabelian(_subset("0:{0}; 1:{0}"))

    @given(small_subsets, st.builds(BSElement, m=st.integers(0, 2), x=st.integers(-4, 4)))
    def test_monotone_under_supersets(self, s, extra):
        if is_nonabelian(s):
            bigger = from_elements(CTX2, s.elements() + [extra])
            assert is_nonabelian(bigger)
