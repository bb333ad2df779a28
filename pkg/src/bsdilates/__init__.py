"""Exact sumsets of dilates and product sets in BS+(1, n).

The package computes Minkowski sums of dilated copies of finite integer
sets, products of finite subsets of the positive Baumslag-Solitar monoid
BS+(1, n), and mechanically verifies the associated doubling bounds,
inverse structure results and extremal constructions, by direct
recomputation and by exhaustive search over finite boxes.
"""

from .bsgroup import IDENTITY, BSContext, BSElement, commutes, format_element, mul, parse_element
from .intset import (
    ApDescription,
    IntSet,
    LssClause,
    LssVerdict,
    NormalizationWitness,
    SetStats,
    affine_canonical,
    ap_analysis,
    dilate,
    dilate_sum,
    dilate_sum_size,
    lss_check,
    normalize,
    parse_intset,
    reflect,
    residue_split,
    stats,
    sumset,
    union,
)
from .kernels import backend, warmup
from .search import (
    SearchConfig,
    SearchOutcome,
    WitnessEntry,
    enumerate_bs_subsets,
    enumerate_normal_sets,
    exhaustive_verify_integer,
    exhaustive_verify_monoid,
    find_extremal,
)
from .subsets import (
    BSSubset,
    CosetSummary,
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
from .theorems import (
    ExtremalFamily,
    Verdict,
    VerificationReport,
    build_chs,
    build_example,
    check_chs,
    check_dilate4_bound,
    check_direct_r,
    check_direct2,
    check_example,
    check_extended_inverse,
    check_group_coset,
    check_main_monoid,
    classify_dilate3,
    example_closed_form,
    extremal_family,
    f3_set,
)

__version__ = "0.1.0"
