import pytest

from bsdilates.intset import IntSet, parse_intset
from bsdilates.search import (
    SearchConfig,
    enumerate_bs_subsets,
    enumerate_normal_sets,
    exhaustive_verify_integer,
    exhaustive_verify_monoid,
    find_extremal,
)
from bsdilates.subsets import is_nonabelian

S = parse_intset


class TestSearchConfig:
    def test_validation(self):
        with pytest.raises(ValueError):
            SearchConfig(k_min=0, k_max=3)
        with pytest.raises(ValueError):
            SearchConfig(k_min=3, k_max=2)
        with pytest.raises(ValueError):
            SearchConfig(k_min=1, k_max=3, jobs=0)
        with pytest.raises(ValueError):
            SearchConfig(k_min=1, k_max=5, max_length=3)

    def test_json_echo(self):
        config = SearchConfig(k_min=1, k_max=3, max_length=6, r=3, jobs=2)
        doc = config.to_json_dict()
        assert doc["k_min"] == 1 and doc["r"] == 3 and doc["jobs"] == 2


class TestEnumerateNormalSets:
    def test_small_box(self):
        got = list(enumerate_normal_sets(3, 4))
        assert got == [S("{0,1,2}"), S("{0,1,3}"), S("{0,1,4}"), S("{0,2,3}"), S("{0,3,4}")]

    def test_gcd_filter(self):
        # {0,2} and {0,3} are not normal (difference gcd > 1)
        assert list(enumerate_normal_sets(2, 3)) == [S("{0,1}")]

    def test_singleton(self):
        assert list(enumerate_normal_sets(1, 0)) == [S("{0}")]
        assert list(enumerate_normal_sets(1, 5)) == [S("{0}")]

    def test_infeasible_box_rejected(self):
        with pytest.raises(ValueError):
            list(enumerate_normal_sets(4, 2))

    def test_all_results_are_normal_and_lexicographic(self):
        sets = list(enumerate_normal_sets(4, 7))
        assert sets == sorted(sets)
        for a in sets:
            assert a.min == 0 and a.max <= 7 and len(a) == 4


class TestExhaustiveVerifyInteger:
    def test_direct2_clean_box(self):
        out = exhaustive_verify_integer("direct2", SearchConfig(k_min=1, k_max=4, max_length=8))
        assert out.violations == []
        assert out.instances_checked == sum(
            len(list(enumerate_normal_sets(k, 8))) for k in range(1, 5)
        )
        by_k = {len(w.item): w for w in out.extremal_witnesses}
        assert by_k[3].value == 7 and by_k[3].item == S("{0,1,2}")
        assert by_k[4].value == 10

    def test_classify3_witnesses(self):
        out = exhaustive_verify_integer("classify3", SearchConfig(k_min=4, k_max=4, max_length=10))
        assert out.violations == []
        assert [(str(w.item), w.value) for w in out.extremal_witnesses] == [("{0,1,3,4}", 12)]

    def test_k_floor_clamps_to_hypothesis(self):
        out = exhaustive_verify_integer("dilate4", SearchConfig(k_min=1, k_max=5, max_length=8))
        assert out.instances_checked == len(list(enumerate_normal_sets(5, 8)))
        assert all(len(w.item) == 5 for w in out.extremal_witnesses)

    def test_direct_r_needs_r(self):
        with pytest.raises(ValueError):
            exhaustive_verify_integer("direct_r", SearchConfig(k_min=1, k_max=2, max_length=4))

    def test_unknown_theorem(self):
        with pytest.raises(ValueError):
            exhaustive_verify_integer("nope", SearchConfig(k_min=1, k_max=2, max_length=4))

    def test_needs_max_length(self):
        with pytest.raises(ValueError):
            exhaustive_verify_integer("direct2", SearchConfig(k_min=1, k_max=2))

    def test_deterministic_across_jobs(self):
        docs = []
        for jobs in (1, 3):
            out = exhaustive_verify_integer(
                "classify3", SearchConfig(k_min=2, k_max=4, max_length=8, jobs=jobs)
            )
            doc = out.to_json_dict()
            doc.pop("elapsed_ms")
            doc["config"].pop("jobs")
            docs.append(doc)
        assert docs[0] == docs[1]


class TestFindExtremal:
    def test_r2_minimum_is_progression(self):
        out = find_extremal(3, 2, 6)
        assert [(str(w.item), w.value) for w in out.extremal_witnesses] == [("{0,1,2}", 7)]

    def test_r3_two_achievers(self):
        out = find_extremal(3, 3, 6)
        assert [(str(w.item), w.value) for w in out.extremal_witnesses] == [
            ("{0,1,3}", 8),
            ("{0,1,4}", 8),
        ]

    def test_k2_any_r(self):
        out = find_extremal(2, 5, 3)
        assert out.extremal_witnesses[0].value == 4

    def test_rejects_r1(self):
        with pytest.raises(ValueError):
            find_extremal(3, 1, 6)

    def test_monotone_in_box_and_size(self):
        def minimum(k, max_length):
            return find_extremal(k, 3, max_length).extremal_witnesses[0].value

        assert minimum(4, 6) >= minimum(4, 8) >= minimum(4, 10)
        assert minimum(2, 10) <= minimum(3, 10) <= minimum(4, 10)

    def test_deterministic_across_jobs(self):
        a = find_extremal(4, 3, 9, jobs=1).to_json_dict()
        b = find_extremal(4, 3, 9, jobs=4).to_json_dict()
        for doc in (a, b):
            doc.pop("elapsed_ms")
            doc["config"].pop("jobs")
        assert a == b


class TestEnumerateBsSubsets:
    def test_counts_small_box(self):
        config = SearchConfig(k_min=2, k_max=2, m_max=1, x_max=2)
        assert len(list(enumerate_bs_subsets(config))) == 15
        nonabelian = list(enumerate_bs_subsets(config, nonabelian_only=True))
        assert len(nonabelian) == 9
        assert all(is_nonabelian(s) for s in nonabelian)

    def test_abelian_box_has_no_nonabelian_subsets(self):
        config = SearchConfig(k_min=2, k_max=2, m_max=1, x_max=0)
        assert list(enumerate_bs_subsets(config, nonabelian_only=True)) == []

    def test_needs_box_limits(self):
        with pytest.raises(ValueError):
            list(enumerate_bs_subsets(SearchConfig(k_min=1, k_max=2)))

    def test_infeasible_size_rejected(self):
        with pytest.raises(ValueError):
            list(enumerate_bs_subsets(SearchConfig(k_min=1, k_max=5, m_max=0, x_max=1)))


class TestExhaustiveVerifyMonoid:
    def test_small_box_clean(self):
        out = exhaustive_verify_monoid(SearchConfig(k_min=2, k_max=3, m_max=1, x_max=3))
        assert out.violations == []
        assert out.instances_checked > 0
        for entry in out.extremal_witnesses:
            assert entry.value >= 3 * len(entry.item) - 2

    def test_requires_n2(self):
        with pytest.raises(ValueError):
            exhaustive_verify_monoid(SearchConfig(k_min=2, k_max=2, n=3, m_max=1, x_max=1))

    def test_deterministic_across_jobs(self):
        docs = []
        for jobs in (1, 2):
            out = exhaustive_verify_monoid(
                SearchConfig(k_min=2, k_max=3, m_max=1, x_max=3, jobs=jobs)
            )
            doc = out.to_json_dict()
            doc.pop("elapsed_ms")
            doc["config"].pop("jobs")
            docs.append(doc)
        assert docs[0] == docs[1]

    def test_witnesses_include_single_coset_progression(self):
        out = exhaustive_verify_monoid(SearchConfig(k_min=5, k_max=5, m_max=1, x_max=4))
        items = [str(w.item) for w in out.extremal_witnesses]
        assert "1:{0,1,2,3,4}" in items
