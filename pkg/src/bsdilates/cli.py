"""Command line front end.

Subcommands cover the computation surface (sumset, dilate-sum, bs-mul,
square), single-instance verification (verify, classify, examples) and
exhaustive box searches (search).  Every subcommand takes
``--format table|json``; json output is the envelope
``{"command": ..., "config": ..., "result": ...}``.

Exit codes: 0 success, 1 when any check reports VIOLATION, 2 for usage
and parse errors.
"""

from __future__ import annotations

import argparse
import functools
import json
import sys
from dataclasses import dataclass, field

from . import kernels, search, subsets, theorems
from .bsgroup import BSContext, mul, parse_element
from .intset import (
    IntSet,
    LssClause,
    affine_canonical,
    dilate_sum,
    lss_check,
    parse_intset,
    stats,
    sumset,
)
from .theorems import Verdict, VerificationReport

__all__ = ["main", "build_parser"]

SEARCH_TARGETS = search.INTEGER_THEOREMS + ("monoid", "extremal")
VERIFY_TARGETS = search.INTEGER_THEOREMS + ("coset", "main", "lss", "chs")


@dataclass
class CommandOutput:
    result: dict
    lines: list[str] = field(default_factory=list)
    code: int = 0


def _parse_coeffs(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError(
            f"coefficient list {text!r}: expected comma-separated integers like 1,2"
        ) from None


def _report_lines(report: VerificationReport) -> list[str]:
    lines = [
        f"theorem:  {report.theorem_id}",
        f"instance: {report.instance}",
        f"verdict:  {report.verdict.value}",
        "computed: " + " ".join(f"{k}={v}" for k, v in report.computed.items()),
    ]
    if report.witness is not None:
        w = report.witness
        if hasattr(w, "to_json_dict"):
            w = " ".join(f"{k}={v}" for k, v in w.to_json_dict().items())
        lines.append(f"witness:  {w}")
    return lines


def _report_output(report: VerificationReport) -> CommandOutput:
    return CommandOutput(
        result=report.to_json_dict(),
        lines=_report_lines(report),
        code=0 if report.ok else 1,
    )


def _one_set(args, flag_count: int = 1) -> list[IntSet]:
    literals = args.set or []
    if len(literals) != flag_count:
        plural = "s" if flag_count != 1 else ""
        raise ValueError(f"expected {flag_count} --set literal{plural}, got {len(literals)}")
    return [parse_intset(text) for text in literals]


def cmd_sumset(args) -> CommandOutput:
    a = parse_intset(args.operands[0])
    b = parse_intset(args.operands[1])
    c = sumset(a, b)
    return CommandOutput(
        result={"set": str(c), "elements": list(c.elements), "size": len(c)},
        lines=[f"A + B = {c}", f"size: {len(c)}"],
    )


def cmd_dilate_sum(args) -> CommandOutput:
    coeffs = _parse_coeffs(args.coeffs)
    (a,) = _one_set(args)
    c = dilate_sum(coeffs, a)
    expr = " + ".join(f"{r}*A" for r in coeffs)
    return CommandOutput(
        result={
            "coeffs": list(coeffs),
            "set": str(c),
            "elements": list(c.elements),
            "size": len(c),
        },
        lines=[f"{expr} = {c}", f"size: {len(c)}"],
    )


def _missing(flag: str):
    raise ValueError(f"{flag} is required for this command")


def cmd_bs_mul(args) -> CommandOutput:
    ctx = BSContext(args.n)
    elems = [parse_element(text) for text in args.elements]
    result = functools.reduce(lambda g, h: mul(ctx, g, h), elems)
    return CommandOutput(
        result={"element": str(result), "m": result.m, "x": result.x},
        lines=[str(result)],
    )


def cmd_square(args) -> CommandOutput:
    ctx = BSContext(args.n)
    s = subsets.parse_subset(args.subset, ctx)
    sq = subsets.product(s, s)
    summary = subsets.decompose(sq)
    return CommandOutput(
        result={
            "subset": subsets.format_subset(sq),
            "size": len(sq),
            "cosets": [{"m": m, "size": size} for m, size in summary.entries],
        },
        lines=[
            f"|S^2| = {len(sq)}",
            f"S^2 = {subsets.format_subset(sq)}",
            "cosets: " + " ".join(f"b^{m}:{size}" for m, size in summary.entries),
        ],
    )


def cmd_classify(args) -> CommandOutput:
    (a,) = _one_set(args)
    report, family = theorems.classify_dilate3(a)
    st = stats(a)
    out = _report_output(report)
    out.result = {
        "report": out.result,
        "family": family.label(),
        "canonical": str(affine_canonical(a)),
        "stats": {
            "k": st.k,
            "min": st.min,
            "max": st.max,
            "length": st.length,
            "holes": st.holes,
            "diff_gcd": st.diff_gcd,
        },
    }
    out.lines += [f"family:   {family.label()}", f"canonical: {affine_canonical(a)}"]
    return out


def _lss_report(a: IntSet, b: IntSet) -> VerificationReport:
    v = lss_check(a, b)
    if v.actual < v.bound:
        verdict = Verdict.VIOLATION
    elif v.clause is LssClause.NOT_APPLICABLE:
        verdict = Verdict.HYPOTHESIS_NOT_APPLICABLE
    elif v.actual == v.bound:
        verdict = Verdict.EQUALITY_EXTREMAL
    else:
        verdict = Verdict.BOUND_HOLDS
    report = VerificationReport(
        theorem_id="lss",
        instance=f"A={a}, B={b}",
        computed={
            "delta": v.delta,
            "clause": v.clause.value,
            "bound": v.bound,
            "value": v.actual,
        },
        verdict=verdict,
    )
    if verdict is Verdict.VIOLATION:
        report.witness = f"{report.instance}; value {v.actual} below bound {v.bound}"
    return report


def cmd_verify(args) -> CommandOutput:
    theorem = args.theorem
    if theorem == "direct2":
        (a,) = _one_set(args)
        return _report_output(theorems.check_direct2(a))
    if theorem == "extended_inverse":
        (a,) = _one_set(args)
        return _report_output(theorems.check_extended_inverse(a))
    if theorem == "classify3":
        (a,) = _one_set(args)
        return _report_output(theorems.classify_dilate3(a)[0])
    if theorem == "direct_r":
        (a,) = _one_set(args)
        if args.r is None:
            _missing("--r")
        return _report_output(theorems.check_direct_r(a, args.r))
    if theorem == "dilate4":
        (a,) = _one_set(args)
        return _report_output(theorems.check_dilate4_bound(a))
    if theorem == "coset":
        (a,) = _one_set(args)
        if args.m is None:
            _missing("--m")
        return _report_output(theorems.check_group_coset(BSContext(args.n), args.m, a))
    if theorem == "main":
        if args.subset is None:
            _missing("--subset")
        s = subsets.parse_subset(args.subset, BSContext(args.n))
        return _report_output(theorems.check_main_monoid(s))
    if theorem == "lss":
        a, b = _one_set(args, flag_count=2)
        return _report_output(_lss_report(a, b))
    if theorem == "chs":
        if args.p is None or args.m is None:
            _missing("--p and --m")
        return _report_output(theorems.check_chs(args.p, args.m))
    raise ValueError(f"unknown verify target {theorem!r}; expected one of {VERIFY_TARGETS}")


def cmd_examples(args) -> CommandOutput:
    s = theorems.build_example(args.id, k=args.k, t=args.t)
    report = theorems.check_example(args.id, k=args.k, t=args.t)
    out = _report_output(report)
    out.result = {
        "report": out.result,
        "subset": subsets.format_subset(s),
        "k": len(s),
        "square_size": report.computed["value"],
        "closed_form": report.computed["bound"],
    }
    out.lines = [
        f"S = {subsets.format_subset(s)}",
        f"k = {len(s)}",
        f"|S^2| = {report.computed['value']} (closed form {report.computed['bound']})",
        f"verdict: {report.verdict.value}",
    ]
    return out


def _outcome_lines(outcome: search.SearchOutcome, limit: int) -> list[str]:
    lines = [
        f"instances_checked: {outcome.instances_checked}",
        f"violations: {len(outcome.violations)}",
    ]
    shown = outcome.violations[:limit]
    if shown:
        lines.append(f"violations (showing {len(shown)} of {len(outcome.violations)}):")
        for report in shown:
            lines.append(f"  {report.instance}: {report.witness}")
    wits = outcome.extremal_witnesses
    shown_w = wits[:limit]
    lines.append(f"witnesses (showing {len(shown_w)} of {len(wits)}):")
    for entry in shown_w:
        lines.append(f"  k={len(entry.item)} value={entry.value} {entry.item}")
    lines.append(f"elapsed_ms: {round(outcome.elapsed * 1000.0, 3)}")
    return lines


def cmd_search(args) -> CommandOutput:
    target = args.target
    if target not in SEARCH_TARGETS:
        raise ValueError(f"unknown search target {target!r}; expected one of {SEARCH_TARGETS}")
    kernels.warmup()
    if target == "extremal":
        if args.max_length is None:
            _missing("--max-length")
        if args.r is None:
            _missing("--r")
        outcomes = [
            search.find_extremal(k, args.r, args.max_length, jobs=args.jobs)
            for k in range(args.k_min, args.k_max + 1)
        ]
        lines = []
        for k, outcome in zip(range(args.k_min, args.k_max + 1), outcomes):
            achievers = ", ".join(str(w.item) for w in outcome.extremal_witnesses[: args.limit])
            best = outcome.extremal_witnesses[0].value if outcome.extremal_witnesses else None
            lines.append(f"k={k}: min={best} achievers: {achievers}")
        return CommandOutput(
            result={"outcomes": [o.to_json_dict(limit=args.limit) for o in outcomes]},
            lines=lines,
        )
    config = search.SearchConfig(
        k_min=args.k_min,
        k_max=args.k_max,
        max_length=args.max_length,
        r=args.r,
        n=args.n,
        m_max=args.m_max,
        x_max=args.x_max,
        jobs=args.jobs,
    )
    if target == "monoid":
        outcome = search.exhaustive_verify_monoid(config)
    else:
        outcome = search.exhaustive_verify_integer(target, config)
    return CommandOutput(
        result=outcome.to_json_dict(limit=args.limit),
        lines=_outcome_lines(outcome, args.limit),
        code=1 if outcome.violations else 0,
    )


def _add_format(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=("table", "json"), default="table")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bsdilates",
        description="Sumsets of dilates and product sets in BS+(1, n), with exhaustive verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sumset", help="Minkowski sum of two set literals")
    p.add_argument("operands", nargs=2, metavar="SET")
    _add_format(p)
    p.set_defaults(func=cmd_sumset)

    p = sub.add_parser("dilate-sum", help="sum of dilates r1*A + r2*A + ...")
    p.add_argument("--coeffs", required=True, help="comma-separated coefficients, e.g. 1,2")
    p.add_argument("--set", action="append", metavar="SET")
    _add_format(p)
    p.set_defaults(func=cmd_dilate_sum)

    p = sub.add_parser("bs-mul", help="multiply monoid elements left to right")
    p.add_argument("--n", type=int, default=2)
    p.add_argument("elements", nargs="+", metavar="ELEM")
    _add_format(p)
    p.set_defaults(func=cmd_bs_mul)

    p = sub.add_parser("square", help="product set S^2 of a subset literal")
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--subset", required=True)
    _add_format(p)
    p.set_defaults(func=cmd_square)

    p = sub.add_parser("classify", help="extremal family of a set under the 3-dilate bound")
    p.add_argument("--set", action="append", metavar="SET")
    _add_format(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", help="run one checker on one instance")
    p.add_argument("theorem", choices=VERIFY_TARGETS)
    p.add_argument("--set", action="append", metavar="SET", help="repeatable (lss takes two)")
    p.add_argument("--subset")
    p.add_argument("--coeffs")
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--r", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--p", type=int)
    _add_format(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="exhaustive verification over a box")
    p.add_argument("target", choices=SEARCH_TARGETS)
    p.add_argument("--k-min", type=int, required=True)
    p.add_argument("--k-max", type=int, required=True)
    p.add_argument("--max-length", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--m-max", type=int)
    p.add_argument("--x-max", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--limit", type=int, default=100)
    _add_format(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("examples", help="extremal constructions with golden square sizes")
    p.add_argument("--id", type=int, required=True, choices=(1, 2, 3, 4))
    p.add_argument("--k", type=int)
    p.add_argument("--t", type=int)
    _add_format(p)
    p.set_defaults(func=cmd_examples)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        output = args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.format == "json":
        config = {
            key: value
            for key, value in vars(args).items()
            if key not in ("func", "command", "format") and value is not None
        }
        envelope = {"command": args.command, "config": config, "result": output.result}
        print(json.dumps(envelope, indent=2))
    else:
        for line in output.lines:
            print(line)
    return output.code


if __name__ == "__main__":
    sys.exit(main())
