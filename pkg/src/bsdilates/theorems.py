"""Checkers for the doubling bounds and inverse structure results.

Each checker recomputes its quantities from scratch on a concrete
instance and reports a :class:`VerificationReport` with a fixed verdict
vocabulary:

* ``BoundHolds``       - inequality satisfied with slack;
* ``EqualityExtremal`` - inequality tight, extremal structure confirmed;
* ``StructureConfirmed`` - structural hypothesis applies and the claimed
  structure (covering progression, single coset, ...) checks out;
* ``HypothesisNotApplicable`` - instance falls outside the structural
  hypothesis; quantities are still recorded;
* ``VIOLATION``        - a claimed inequality or structure fails; the
  report carries the full failing instance.

Checkers never raise on mathematical failure (that is what VIOLATION is
for); ValueError means the instance does not satisfy a checker's
preconditions (wrong k, wrong r, abelian input, ...).

Every computed map shares the keys ``k``, ``value`` (the measured
sumset or product-set size) and ``bound``, plus ``excess`` = value -
bound where an excess drives a structure clause, so the search layer can
aggregate reports without string parsing.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .bsgroup import BSContext
from .intset import (
    ApDescription,
    IntSet,
    ap_analysis,
    affine_canonical,
    dilate,
    dilate_sum_size,
    sumset,
)
from .subsets import (
    BSSubset,
    is_nonabelian,
    product_elementwise,
    square_size,
    square_size_via_normal_form,
)

__all__ = [
    "Verdict",
    "VerificationReport",
    "ExtremalFamily",
    "f3_set",
    "extremal_family",
    "check_direct2",
    "check_extended_inverse",
    "classify_dilate3",
    "check_direct_r",
    "check_dilate4_bound",
    "check_group_coset",
    "check_main_monoid",
    "build_example",
    "example_closed_form",
    "check_example",
    "build_chs",
    "check_chs",
]


class Verdict(str, Enum):
    BOUND_HOLDS = "BoundHolds"
    EQUALITY_EXTREMAL = "EqualityExtremal"
    STRUCTURE_CONFIRMED = "StructureConfirmed"
    HYPOTHESIS_NOT_APPLICABLE = "HypothesisNotApplicable"
    VIOLATION = "VIOLATION"


@dataclass
class VerificationReport:
    """Outcome of one checker run on one instance.

    ``witness`` carries the confirming structure when there is one (a
    covering progression, an extremal family label) and the full failing
    instance on VIOLATION.
    """

    theorem_id: str
    instance: str
    computed: dict[str, int | float | str] = field(default_factory=dict)
    verdict: Verdict = Verdict.BOUND_HOLDS
    witness: ApDescription | str | None = None

    @property
    def ok(self) -> bool:
        return self.verdict is not Verdict.VIOLATION

    def to_json_dict(self) -> dict:
        witness = self.witness
        if isinstance(witness, ApDescription):
            witness = witness.to_json_dict()
        return {
            "theorem_id": self.theorem_id,
            "instance": self.instance,
            "computed": dict(self.computed),
            "verdict": self.verdict.value,
            "witness": witness,
        }


@dataclass(frozen=True)
class ExtremalFamily:
    """Label for the |A + 3*A| equality classification.

    kind is F1 ({0,1,3}), F2 ({0,1,4}), F3 (3*{0..m} ∪ (3*{0..m}+1),
    with the parameter in ``m``), or NotExtremal.
    """

    kind: str
    m: int | None = None

    def label(self) -> str:
        return f"F3({self.m})" if self.kind == "F3" else self.kind


def f3_set(m: int) -> IntSet:
    """The size-2(m+1) family member {3i, 3i+1 : 0 <= i <= m}."""
    if m < 0:
        raise ValueError(f"f3_set requires m >= 0, got {m}")
    return IntSet._from_sorted(x for i in range(m + 1) for x in (3 * i, 3 * i + 1))


def extremal_family(a: IntSet) -> ExtremalFamily:
    """Classify affine_canonical(a) as F1, F2, F3(m) or NotExtremal."""
    canon = affine_canonical(a)
    if canon.elements == (0, 1, 3):
        return ExtremalFamily("F1")
    if canon.elements == (0, 1, 4):
        return ExtremalFamily("F2")
    k = len(canon)
    if k % 2 == 0:
        m = k // 2 - 1
        if canon == f3_set(m):
            return ExtremalFamily("F3", m)
    return ExtremalFamily("NotExtremal")


def _violation(report: VerificationReport, detail: str) -> VerificationReport:
    report.verdict = Verdict.VIOLATION
    report.witness = f"{report.instance}; {detail}"
    return report


def check_direct2(a: IntSet) -> VerificationReport:
    """|A + 2*A| >= 3k - 2, with equality exactly for progressions."""
    k = len(a)
    value = dilate_sum_size((1, 2), a)
    bound = 3 * k - 2
    report = VerificationReport(
        theorem_id="direct2",
        instance=f"A={a}",
        computed={"k": k, "value": value, "bound": bound, "excess": value - bound},
    )
    is_ap, cover = ap_analysis(a)
    if value < bound:
        return _violation(report, f"value {value} below bound {bound}")
    if value == bound:
        if not is_ap:
            return _violation(report, "equality reached by a non-progression")
        report.verdict = Verdict.EQUALITY_EXTREMAL
        report.witness = cover
        return report
    if is_ap:
        return _violation(report, f"progression missed equality: value {value} > bound {bound}")
    report.verdict = Verdict.BOUND_HOLDS
    return report


def check_extended_inverse(a: IntSet) -> VerificationReport:
    """Structure of A when |A + 2*A| = 3k - 2 + h stays below 4k - 4.

    Requires k >= 3.  In the small-excess regime the whole of A must fit
    in an arithmetic progression of at most k + h <= 2k - 3 terms, and
    h = 0 forces A itself to be one.  Above the 4k - 4 threshold the
    structural hypothesis says nothing (HypothesisNotApplicable).
    """
    k = len(a)
    if k < 3:
        raise ValueError(f"extended inverse check requires k >= 3, got k = {k}")
    value = dilate_sum_size((1, 2), a)
    bound = 3 * k - 2
    threshold = 4 * k - 4
    h = value - bound
    report = VerificationReport(
        theorem_id="extended_inverse",
        instance=f"A={a}",
        computed={
            "k": k,
            "value": value,
            "bound": bound,
            "excess": h,
            "threshold": threshold,
        },
    )
    if value < bound:
        return _violation(report, f"value {value} below bound {bound}")
    if value >= threshold:
        report.verdict = Verdict.HYPOTHESIS_NOT_APPLICABLE
        return report
    is_ap, cover = ap_analysis(a)
    report.computed["covering_size"] = cover.count
    report.computed["ap_cap"] = k + h
    if cover.count > k + h:
        return _violation(report, f"covering progression has {cover.count} > k + h = {k + h} terms")
    if k + h > 2 * k - 3:
        return _violation(report, f"k + h = {k + h} exceeds 2k - 3 = {2 * k - 3}")
    if h == 0:
        if not is_ap:
            return _violation(report, "h = 0 but A is not a progression")
        report.verdict = Verdict.EQUALITY_EXTREMAL
    else:
        report.verdict = Verdict.STRUCTURE_CONFIRMED
    report.witness = cover
    return report


def classify_dilate3(a: IntSet) -> tuple[VerificationReport, ExtremalFamily]:
    """|A + 3*A| >= 4k - 4 for k >= 2, equality exactly on three families.

    Returns the report plus the family of affine_canonical(A): F1, F2 or
    F3(m) when equality holds, NotExtremal otherwise.  Both directions
    are enforced: equality outside the families and a family member off
    equality are VIOLATIONs.
    """
    k = len(a)
    value = dilate_sum_size((1, 3), a)
    bound = 4 * k - 4 if k >= 2 else 1
    report = VerificationReport(
        theorem_id="classify3",
        instance=f"A={a}",
        computed={"k": k, "value": value, "bound": bound, "excess": value - bound},
    )
    not_extremal = ExtremalFamily("NotExtremal")
    if value < bound:
        return _violation(report, f"value {value} below bound {bound}"), not_extremal
    if k < 2:
        report.verdict = Verdict.BOUND_HOLDS
        return report, not_extremal
    family = extremal_family(a)
    if value == bound:
        if family.kind == "NotExtremal":
            return (
                _violation(report, f"equality reached outside families (canonical {affine_canonical(a)})"),
                not_extremal,
            )
        report.verdict = Verdict.EQUALITY_EXTREMAL
        report.witness = family.label()
        return report, family
    if family.kind != "NotExtremal":
        return (
            _violation(report, f"family member {family.label()} missed equality: value {value}"),
            not_extremal,
        )
    report.verdict = Verdict.BOUND_HOLDS
    return report, not_extremal


def check_direct_r(a: IntSet, r: int) -> VerificationReport:
    """|A + r*A| >= max(4k - 4, 1) for every dilation coefficient r >= 3."""
    if r < 3:
        raise ValueError(f"direct r-dilate check requires r >= 3, got r = {r}")
    k = len(a)
    value = dilate_sum_size((1, r), a)
    bound = max(4 * k - 4, 1)
    report = VerificationReport(
        theorem_id="direct_r",
        instance=f"A={a}, r={r}",
        computed={"k": k, "r": r, "value": value, "bound": bound, "excess": value - bound},
    )
    if value < bound:
        return _violation(report, f"value {value} below bound {bound}")
    report.verdict = Verdict.EQUALITY_EXTREMAL if value == bound else Verdict.BOUND_HOLDS
    return report


def check_dilate4_bound(a: IntSet) -> VerificationReport:
    """|A + 4*A| >= 5k - 6 for k >= 5."""
    k = len(a)
    if k < 5:
        raise ValueError(f"4-dilate bound requires k >= 5, got k = {k}")
    value = dilate_sum_size((1, 4), a)
    bound = 5 * k - 6
    report = VerificationReport(
        theorem_id="dilate4",
        instance=f"A={a}",
        computed={"k": k, "value": value, "bound": bound, "excess": value - bound},
    )
    if value < bound:
        return _violation(report, f"value {value} below bound {bound}")
    report.verdict = Verdict.EQUALITY_EXTREMAL if value == bound else Verdict.BOUND_HOLDS
    return report


def check_group_coset(ctx: BSContext, m: int, a: IntSet) -> VerificationReport:
    """Square of a single coset S = b^m a^A, m >= 1, checked two ways.

    |S^2| is computed element-wise and via |n^m*A + A|; the two must
    agree.  With r_eff = n^m the size bound is the r = 2 doubling bound
    3k - 2 when r_eff = 2 (n = 2, m = 1), where the small-excess regime
    also forces A into a short covering progression, and max(4k - 4, 1)
    for r_eff >= 3.
    """
    if m < 1:
        raise ValueError(f"coset check requires m >= 1 (m = 0 is the abelian part), got {m}")
    k = len(a)
    r_eff = ctx.n**m
    s = BSSubset(ctx, ((m, a),))
    value = len(product_elementwise(s, s))
    via_formula = square_size_via_normal_form(s)
    report = VerificationReport(
        theorem_id="group_coset",
        instance=f"S=b^{m} a^A, A={a}, n={ctx.n}",
        computed={"k": k, "n": ctx.n, "m": m, "value": value, "value_formula": via_formula},
    )
    if value != via_formula:
        return _violation(
            report, f"element-wise size {value} disagrees with normal-form size {via_formula}"
        )
    if r_eff == 2:
        bound = 3 * k - 2
        threshold = 4 * k - 4
        h = value - bound
        report.computed.update({"bound": bound, "excess": h, "threshold": threshold})
        is_ap, cover = ap_analysis(a)
        if value < bound:
            return _violation(report, f"value {value} below bound {bound}")
        if k >= 3 and value >= threshold:
            report.verdict = Verdict.HYPOTHESIS_NOT_APPLICABLE
            return report
        report.computed["covering_size"] = cover.count
        report.computed["ap_cap"] = k + h
        if cover.count > k + h:
            return _violation(
                report, f"covering progression has {cover.count} > k + h = {k + h} terms"
            )
        if k >= 3 and k + h > 2 * k - 3:
            return _violation(report, f"k + h = {k + h} exceeds 2k - 3 = {2 * k - 3}")
        if h == 0:
            if not is_ap:
                return _violation(report, "h = 0 but exponents are not a progression")
            report.verdict = Verdict.EQUALITY_EXTREMAL
        else:
            report.verdict = Verdict.STRUCTURE_CONFIRMED
        report.witness = cover
        return report
    bound = max(4 * k - 4, 1)
    report.computed.update({"bound": bound, "excess": value - bound})
    if value < bound:
        return _violation(report, f"value {value} below bound {bound}")
    report.verdict = Verdict.EQUALITY_EXTREMAL if value == bound else Verdict.BOUND_HOLDS
    return report


def check_main_monoid(s: BSSubset) -> VerificationReport:
    """Square bound and inverse structure for nonabelian subsets at n = 2.

    Always |S^2| >= 3k - 2.  When |S^2| < 3.5k - 4 the subset must be a
    single coset b a^A whose exponent set fits in an arithmetic
    progression of k + h < 1.5k - 2 terms, h = |S^2| - (3k - 2).
    Abelian subsets and n != 2 are precondition errors.
    """
    if s.ctx.n != 2:
        raise ValueError(f"main monoid check is stated for n = 2, got n = {s.ctx.n}")
    if not is_nonabelian(s):
        raise ValueError("main monoid check requires a nonabelian subset")
    k = len(s)
    value = square_size(s)
    bound = 3 * k - 2
    h = value - bound
    report = VerificationReport(
        theorem_id="main_monoid",
        instance=f"S={s}, n=2",
        computed={
            "k": k,
            "value": value,
            "bound": bound,
            "excess": h,
            "threshold": 3.5 * k - 4,
        },
    )
    if value < bound:
        return _violation(report, f"value {value} below bound {bound}")
    # Strict comparison |S^2| < 3.5k - 4 done in integers: 2*value < 7k - 8.
    if 2 * value < 7 * k - 8:
        if len(s.cosets) != 1 or s.cosets[0][0] != 1:
            return _violation(report, "small doubling but S is not a single coset b a^A")
        a = s.cosets[0][1]
        _, cover = ap_analysis(a)
        report.computed["covering_size"] = cover.count
        report.computed["ap_cap"] = k + h
        if cover.count > k + h:
            return _violation(
                report, f"covering progression has {cover.count} > k + h = {k + h} terms"
            )
        if 2 * (k + h) >= 3 * k - 4:
            return _violation(report, f"k + h = {k + h} not below 1.5k - 2")
        report.verdict = Verdict.STRUCTURE_CONFIRMED
        report.witness = cover
        return report
    report.verdict = Verdict.HYPOTHESIS_NOT_APPLICABLE
    return report


def build_example(example_id: int, *, k: int | None = None, t: int | None = None) -> BSSubset:
    """The four extremal constructions at n = 2.

    1. a^{0..k-2} ∪ {b} for even k >= 4 (pass k); |S^2| = 3.5k - 4.
    2. {1, a} ∪ {b, ..., b^t} for t >= 2 (pass t, k = t + 2); |S^2| = 4k - 5.
    3. {1, b, ..., b^{t-1}} ∪ {b^t, b^t a} for t >= 2 (pass t, k = t + 2);
       |S^2| = 4k - 5.
    4. {b, ..., b^{t-1}} ∪ {b^t a} for t >= 2 (pass t, k = t); |S^2| = 4k - 4.
    """
    ctx = BSContext(2)
    if example_id == 1:
        if t is not None:
            raise ValueError("example 1 takes k, not t")
        if k is None or k < 4 or k % 2 != 0:
            raise ValueError(f"example 1 requires even k >= 4, got k = {k}")
        return BSSubset(ctx, ((0, IntSet(range(k - 1))), (1, IntSet([0]))))
    if k is not None:
        raise ValueError(f"example {example_id} takes t, not k")
    if t is None or t < 2:
        raise ValueError(f"example {example_id} requires t >= 2, got t = {t}")
    zero = IntSet([0])
    if example_id == 2:
        return BSSubset(ctx, ((0, IntSet([0, 1])),) + tuple((j, zero) for j in range(1, t + 1)))
    if example_id == 3:
        return BSSubset(ctx, tuple((j, zero) for j in range(t)) + ((t, IntSet([0, 1])),))
    if example_id == 4:
        return BSSubset(ctx, tuple((j, zero) for j in range(1, t)) + ((t, IntSet([1])),))
    raise ValueError(f"unknown example id {example_id}; expected 1, 2, 3 or 4")


def example_closed_form(example_id: int, *, k: int | None = None, t: int | None = None) -> int:
    """Exact |S^2| of the corresponding construction."""
    if example_id == 1:
        if k is None or k % 2 != 0:
            raise ValueError("example 1 closed form needs even k")
        return 7 * k // 2 - 4
    if t is None:
        raise ValueError(f"example {example_id} closed form needs t")
    if example_id in (2, 3):
        return 4 * (t + 2) - 5
    if example_id == 4:
        return 4 * t - 4
    raise ValueError(f"unknown example id {example_id}; expected 1, 2, 3 or 4")


def check_example(example_id: int, *, k: int | None = None, t: int | None = None) -> VerificationReport:
    """Build an example and compare |S^2| against its closed form."""
    s = build_example(example_id, k=k, t=t)
    expected = example_closed_form(example_id, k=k, t=t)
    value = square_size(s)
    size = len(s)
    param = f"k={k}" if example_id == 1 else f"t={t}"
    report = VerificationReport(
        theorem_id="example",
        instance=f"example {example_id}, {param}: S={s}",
        computed={"k": size, "value": value, "bound": expected},
    )
    if value != expected:
        return _violation(report, f"|S^2| = {value} differs from closed form {expected}")
    report.verdict = Verdict.EQUALITY_EXTREMAL
    return report


def _is_odd_prime(p: int) -> bool:
    if p < 3 or p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def build_chs(p: int, m: int) -> IntSet:
    """Blockwise construction A = p*{0..m} + {0..(p-1)/2} for odd prime p.

    The m + 1 blocks are disjoint, so |A| = (m+1)(p+1)/2.
    """
    if not _is_odd_prime(p):
        raise ValueError(f"construction requires an odd prime p, got {p}")
    if m < 0:
        raise ValueError(f"construction requires m >= 0, got {m}")
    return sumset(dilate(p, IntSet(range(m + 1))), IntSet(range((p - 1) // 2 + 1)))


def check_chs(p: int, m: int) -> VerificationReport:
    """|A + p*A| for the blockwise construction versus (p+1)k - ceil(p(p+2)/4).

    For p = 3 the reference equals 4k - 4 and must be met exactly.  For
    p >= 5 the construction dips below the reference (e.g. 24 < 27 at
    p = 5, m = 1), which is consistent: the sharp bound carries a size
    hypothesis far beyond any enumerable k, so the verdict is
    HypothesisNotApplicable with both numbers recorded.
    """
    a = build_chs(p, m)
    k = len(a)
    value = dilate_sum_size((1, p), a)
    reference = (p + 1) * k - (-(-(p * (p + 2)) // 4))
    report = VerificationReport(
        theorem_id="chs",
        instance=f"p={p}, m={m}, A={a}",
        computed={"k": k, "p": p, "m": m, "value": value, "bound": reference},
    )
    if p == 3:
        if value != reference:
            return _violation(report, f"value {value} differs from 4k - 4 = {reference}")
        report.verdict = Verdict.EQUALITY_EXTREMAL
        return report
    report.verdict = Verdict.HYPOTHESIS_NOT_APPLICABLE
    return report
