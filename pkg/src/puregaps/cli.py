"""Command line interface for pure-gap computation and cross-verification.

Exit codes: 0 success, 1 usage or parameter error, 2 verification
mismatch.  JSON and CSV payloads are canonical: identical inputs give
byte-identical output, and timing goes to stderr only.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from collections.abc import Sequence
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, NoReturn

from .counting import (
    count_pure_gaps_hermitian,
    count_pure_gaps_quotient,
    gap_set_single,
    gaps_pair_via_homma,
    hermitian_pair_closed,
    pair_closed_gaps,
    pair_closed_pure,
    sum_gaps_single,
)
from .curves import (
    CurveParams,
    P_INFINITY,
    canonical_shape,
    finite_place,
    make_curve,
)
from .errors import PureGapsError
from .figures import box_csv, box_svg
from .intmath import is_prime_power
from .membership import classify_box, enumerate_pure_gaps
from .riemann_roch import brute_force_pure_gaps, gap_set_oracle

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MISMATCH = 2

METHOD_ORDER = ("formula", "enumerate", "oracle")
MAX_VERIFY_Q = 16


@dataclass(frozen=True)
class Mismatch:
    check: str
    expected: Any
    actual: Any

    def describe(self) -> str:
        return f"{self.check}: expected {self.expected}, got {self.actual}"


@dataclass
class RunReport:
    """Outcome of one command: canonical payload plus diagnostics.

    results is the emitted payload; elapsed_ms is diagnostic only and
    never enters it, so payloads are reproducible byte for byte.
    """

    command: str
    curve: CurveParams | None
    parameters: dict[str, Any]
    results: dict[str, Any]
    mismatches: list[Mismatch] = field(default_factory=list)
    elapsed_ms: int = 0

    @property
    def ok(self) -> bool:
        return not self.mismatches


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _curve_dict(curve: CurveParams) -> dict[str, int]:
    return {"q": curve.q, "m": curve.m, "N": curve.N, "genus": curve.genus}


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _json_text(payload: dict[str, Any]) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _report_mismatches(report: RunReport) -> None:
    for mismatch in report.mismatches:
        print(f"MISMATCH {mismatch.describe()}", file=sys.stderr)


def _set_difference_detail(first, second) -> str:
    only_first = sorted(set(first) - set(second))[:3]
    only_second = sorted(set(second) - set(first))[:3]
    return f"first-only {only_first} second-only {only_second}"


def cmd_info(args: argparse.Namespace) -> int:
    curve = make_curve(args.q, args.m, unchecked=args.unchecked)
    shape = canonical_shape(curve)
    report = RunReport(
        command="info",
        curve=curve,
        parameters={"q": args.q, "m": args.m},
        results={
            "command": "info",
            "curve": _curve_dict(curve),
            "hermitian": curve.is_hermitian,
            "coordinate_bound": curve.coordinate_bound,
            "bezout": {"a": shape.a, "b": shape.b},
        },
    )
    if args.format == "json":
        _emit(_json_text(report.results), args.out)
    else:
        lines = [
            f"curve: {curve}",
            f"q={curve.q} m={curve.m} N={curve.N} genus={curve.genus}",
            f"hermitian: {'yes' if curve.is_hermitian else 'no'}",
            f"coordinate bound (2g-1): {curve.coordinate_bound}",
            f"bezout pair: a={shape.a} b={shape.b}",
        ]
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_gaps(args: argparse.Namespace) -> int:
    curve = make_curve(args.q, args.m, unchecked=args.unchecked)
    mismatches: list[Mismatch] = []
    if args.place == "finite":
        gaps = gap_set_single(curve)
        closed_sum = sum_gaps_single(curve)
        if sum(gaps) != closed_sum:
            mismatches.append(Mismatch("gap sum closed form", closed_sum, sum(gaps)))
        if len(gaps) != curve.genus:
            mismatches.append(Mismatch("gap cardinality", curve.genus, len(gaps)))
        if args.check:
            oracle = gap_set_oracle(curve, finite_place(1))
            if oracle != gaps:
                mismatches.append(
                    Mismatch(
                        "oracle gap set", "same set", _set_difference_detail(gaps, oracle)
                    )
                )
    else:
        gaps = gap_set_oracle(curve, P_INFINITY)
        if args.check and len(gaps) != curve.genus:
            mismatches.append(Mismatch("gap cardinality", curve.genus, len(gaps)))
    report = RunReport(
        command="gaps",
        curve=curve,
        parameters={"q": args.q, "m": args.m, "place": args.place, "check": args.check},
        results={
            "command": "gaps",
            "curve": _curve_dict(curve),
            "place": args.place,
            "gaps": list(gaps),
            "cardinality": len(gaps),
            "sum": sum(gaps),
        },
        mismatches=mismatches,
    )
    if args.format == "json":
        _emit(_json_text(report.results), args.out)
    elif args.format == "csv":
        _emit("gap\n" + "".join(f"{g}\n" for g in gaps), args.out)
    else:
        lines = [
            f"curve: {curve}",
            f"place: {'P_1' if args.place == 'finite' else 'P_inf'}",
            f"gaps ({len(gaps)}): {' '.join(str(g) for g in gaps)}",
            f"sum: {sum(gaps)}",
        ]
        _emit("\n".join(lines) + "\n", args.out)
    _report_mismatches(report)
    return EXIT_OK if report.ok else EXIT_MISMATCH


def cmd_puregaps(args: argparse.Namespace) -> int:
    curve = make_curve(args.q, args.m, unchecked=args.unchecked)
    n = args.n
    methods = [name for name in METHOD_ORDER if name in (args.method or ["formula", "enumerate"])]
    counts: dict[str, int] = {}
    tuple_sets: dict[str, tuple[tuple[int, ...], ...]] = {}
    breakdown = None
    if "formula" in methods:
        breakdown = count_pure_gaps_quotient(curve, n)
        counts["formula"] = breakdown.total
    if "enumerate" in methods:
        enumerated = enumerate_pure_gaps(
            curve, n, include_infinity=args.infinity, work_limit=args.work_limit
        )
        counts["enumerate"] = enumerated.count
        tuple_sets["enumerate"] = enumerated.tuples
    if "oracle" in methods:
        if args.infinity:
            places = [finite_place(i) for i in range(1, n)] + [P_INFINITY]
        else:
            places = [finite_place(i) for i in range(1, n + 1)]
        oracle_result = brute_force_pure_gaps(curve, places, work_limit=args.work_limit)
        counts["oracle"] = oracle_result.count
        tuple_sets["oracle"] = oracle_result.tuples

    mismatches: list[Mismatch] = []
    baseline = methods[0]
    for name in methods[1:]:
        if counts[name] != counts[baseline]:
            mismatches.append(
                Mismatch(f"count by {name} vs {baseline}", counts[baseline], counts[name])
            )
    if "enumerate" in tuple_sets and "oracle" in tuple_sets:
        if tuple_sets["enumerate"] != tuple_sets["oracle"]:
            mismatches.append(
                Mismatch(
                    "tuples by enumerate vs oracle",
                    "same set",
                    _set_difference_detail(tuple_sets["enumerate"], tuple_sets["oracle"]),
                )
            )

    tuples = tuple_sets.get("enumerate", tuple_sets.get("oracle", ()))
    payload = {
        "curve": _curve_dict(curve),
        "n": n,
        "includes_infinity": args.infinity,
        "method": "+".join(methods),
        "count": counts[baseline],
        "breakdown": [
            {"A": term.A, "weight": term.weight, "s": term.s_value, "product": term.product}
            for term in (breakdown.terms if breakdown is not None else ())
        ],
        "tuples": [list(t) for t in tuples],
    }
    report = RunReport(
        command="puregaps",
        curve=curve,
        parameters={"q": args.q, "m": args.m, "n": n, "infinity": args.infinity,
                    "method": methods},
        results=payload,
        mismatches=mismatches,
    )
    if args.format == "json":
        _emit(_json_text(payload), args.out)
    elif args.format == "csv":
        header = ",".join(f"t{i}" for i in range(1, n + 1))
        rows = "".join(",".join(str(v) for v in t) + "\n" for t in tuples)
        _emit(header + "\n" + rows, args.out)
    else:
        lines = [
            f"curve: {curve}",
            f"n={n} includes_infinity={args.infinity} method={'+'.join(methods)}",
            f"count: {counts[baseline]}",
        ]
        if breakdown is not None and breakdown.terms:
            lines.append("breakdown (A weight s product):")
            lines.extend(
                f"  {term.A} {term.weight} {term.s_value} {term.product}"
                for term in breakdown.terms
            )
        if tuples:
            lines.append(f"tuples ({len(tuples)}):")
            lines.extend("  (" + ", ".join(str(v) for v in t) + ")" for t in tuples)
        _emit("\n".join(lines) + "\n", args.out)
    _report_mismatches(report)
    return EXIT_OK if report.ok else EXIT_MISMATCH


def _verify_curve(curve: CurveParams, n_max: int, work_limit: int | None) -> list[dict[str, Any]]:
    checks: list[dict[str, Any]] = []
    tag = f"q={curve.q} m={curve.m}"

    def check(label: str, expected: Any, actual: Any) -> None:
        checks.append(
            {"label": label, "ok": expected == actual,
             "expected": str(expected), "actual": str(actual)}
        )

    gaps = gap_set_single(curve)
    check(f"{tag} single gap cardinality = genus", curve.genus, len(gaps))
    check(f"{tag} single gap sum closed form", sum_gaps_single(curve), sum(gaps))
    check(f"{tag} oracle single gap set", gaps, gap_set_oracle(curve, finite_place(1)))
    infinity_gaps = gap_set_oracle(curve, P_INFINITY)
    check(f"{tag} infinity gap cardinality = genus", curve.genus, len(infinity_gaps))

    if curve.q - 2 - curve.N >= 0:
        pure2 = count_pure_gaps_quotient(curve, 2).total
        check(f"{tag} pair pure closed form", pure2, pair_closed_pure(curve))
        homma = gaps_pair_via_homma(sum_gaps_single(curve), sum_gaps_single(curve), pure2)
        check(f"{tag} pair gap closed form vs identity", homma, pair_closed_gaps(curve))
        if curve.is_hermitian:
            check(f"{tag} hermitian pair closed form", pure2, hermitian_pair_closed(curve.q))

    top_n = min(n_max, curve.q - curve.N)
    for n in range(2, top_n + 1):
        ctag = f"q={curve.q} m={curve.m} n={n}"
        formula = count_pure_gaps_quotient(curve, n).total
        finite_set = enumerate_pure_gaps(curve, n, work_limit=work_limit)
        check(f"{ctag} formula = enumerate", formula, finite_set.count)
        infinite_set = enumerate_pure_gaps(
            curve, n, include_infinity=True, work_limit=work_limit
        )
        check(
            f"{ctag} finite and infinity sets equal",
            True,
            finite_set.tuples == infinite_set.tuples,
        )
        places = [finite_place(i) for i in range(1, n + 1)]
        oracle_set = brute_force_pure_gaps(curve, places, work_limit=work_limit)
        check(
            f"{ctag} enumerate = oracle",
            True,
            finite_set.tuples == oracle_set.tuples,
        )
        if curve.is_hermitian:
            check(
                f"{ctag} hermitian reduction",
                count_pure_gaps_hermitian(curve.q, n).total,
                formula,
            )
    return checks


def cmd_verify(args: argparse.Namespace) -> int:
    if args.q_max > MAX_VERIFY_Q:
        print(f"error: --q-max above the configured limit {MAX_VERIFY_Q}", file=sys.stderr)
        return EXIT_USAGE
    if args.q_max < 2 or args.n_max < 2:
        print("error: need --q-max >= 2 and --n-max >= 2", file=sys.stderr)
        return EXIT_USAGE
    checks: list[dict[str, Any]] = []
    for q in range(2, args.q_max + 1):
        if not is_prime_power(q):
            continue
        for m in range(2, q + 2):
            if (q + 1) % m != 0:
                continue
            checks.extend(_verify_curve(make_curve(q, m), args.n_max, args.work_limit))
    failed = [c for c in checks if not c["ok"]]
    payload = {
        "command": "verify",
        "q_max": args.q_max,
        "n_max": args.n_max,
        "checks": checks,
        "total": len(checks),
        "failed": len(failed),
    }
    if args.format == "json":
        _emit(_json_text(payload), args.out)
    else:
        lines = []
        for c in checks:
            if c["ok"]:
                lines.append(f"PASS {c['label']}")
            else:
                lines.append(
                    f"FAIL {c['label']} (expected {c['expected']}, got {c['actual']})"
                )
        lines.append(f"{len(checks)} checks, {len(failed)} failed")
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_MISMATCH if failed else EXIT_OK


def cmd_plot(args: argparse.Namespace) -> int:
    curve = make_curve(args.q, args.m, unchecked=args.unchecked)
    t1_max, t2_max = args.box
    points = classify_box(curve, t1_max, t2_max)
    out = Path(args.out)
    try:
        out.write_text(box_svg(points, t1_max, t2_max), encoding="utf-8")
        out.with_suffix(".csv").write_text(box_csv(points), encoding="utf-8")
    except OSError as exc:
        print(f"error: cannot write output: {exc}", file=sys.stderr)
        return EXIT_USAGE
    pure = sum(1 for _, _, cls in points if cls == "pure_gap")
    members = sum(1 for _, _, cls in points if cls == "semigroup")
    plain = len(points) - pure - members
    print(f"curve: {curve}")
    print(f"box [0,{t1_max}]x[0,{t2_max}]: {len(points)} points, "
          f"{pure} pure gaps, {members} semigroup, {plain} other gaps")
    print(f"wrote {out} and {out.with_suffix('.csv')}")
    return EXIT_OK


def _add_curve_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--q", type=int, required=True, help="prime power q")
    parser.add_argument("--m", type=int, required=True, help="degree m dividing q + 1")
    parser.add_argument(
        "--unchecked", action="store_true",
        help="skip the prime-power check on q (formula exploration)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="puregaps",
        description="Pure Weierstrass gaps on quotients of Hermitian curves "
                    "(y^m = x^q + x), with independent cross-checks.",
    )
    sub = parser.add_subparsers(dest="command", metavar="command")

    p_info = sub.add_parser("info", help="curve parameters and derived constants")
    _add_curve_arguments(p_info)
    p_info.add_argument("--format", choices=("table", "json"), default="table")
    p_info.add_argument("--out", help="write output to this path instead of stdout")
    p_info.set_defaults(func=cmd_info)

    p_gaps = sub.add_parser("gaps", help="gap sequence at a single place")
    _add_curve_arguments(p_gaps)
    p_gaps.add_argument("--place", choices=("finite", "infinity"), default="finite")
    p_gaps.add_argument(
        "--check", action="store_true",
        help="cross-check against the dimension oracle",
    )
    p_gaps.add_argument("--format", choices=("table", "json", "csv"), default="table")
    p_gaps.add_argument("--out", help="write output to this path instead of stdout")
    p_gaps.set_defaults(func=cmd_gaps)

    p_pure = sub.add_parser("puregaps", help="pure gaps at n places")
    _add_curve_arguments(p_pure)
    p_pure.add_argument("--n", type=int, required=True, help="number of places (2..q)")
    p_pure.add_argument(
        "--infinity", action="store_true",
        help="replace the last finite place by the place at infinity",
    )
    p_pure.add_argument(
        "--method", action="append", choices=METHOD_ORDER,
        help="computation route; repeatable (default: formula and enumerate)",
    )
    p_pure.add_argument("--format", choices=("table", "json", "csv"), default="table")
    p_pure.add_argument("--out", help="write output to this path instead of stdout")
    p_pure.add_argument("--work-limit", type=int, help="evaluation budget for scans")
    p_pure.set_defaults(func=cmd_puregaps)

    p_verify = sub.add_parser("verify", help="sweep all routes and report agreement")
    p_verify.add_argument("--q-max", type=int, required=True, help="largest q (<= 16)")
    p_verify.add_argument("--n-max", type=int, required=True, help="largest tuple arity")
    p_verify.add_argument("--format", choices=("table", "json"), default="table")
    p_verify.add_argument("--out", help="write output to this path instead of stdout")
    p_verify.add_argument("--work-limit", type=int, help="evaluation budget for scans")
    p_verify.set_defaults(func=cmd_verify)

    p_plot = sub.add_parser("plot", help="SVG scatter of a two-place box")
    _add_curve_arguments(p_plot)
    p_plot.add_argument(
        "--box", type=int, nargs=2, default=(20, 20), metavar=("T1", "T2"),
        help="box corner (default 20 20)",
    )
    p_plot.add_argument("--out", required=True, help="SVG output path (CSV written alongside)")
    p_plot.set_defaults(func=cmd_plot)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    if not hasattr(args, "func"):
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    start = time.perf_counter()
    try:
        code = args.func(args)
    except (PureGapsError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        elapsed_ms = int((time.perf_counter() - start) * 1000)
        print(f"[{args.command}] elapsed_ms={elapsed_ms}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
