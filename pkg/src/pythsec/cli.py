"""Command-line frontend.

Subcommands: ``elements``, ``family``, ``search``, ``verify-paper``.
Reports go to stdout, diagnostics to stderr.  Exit codes: 0 success,
1 usage or input error, 2 internal verification failure.

CSV columns (fixed order):

* elements: element, num, den, radicand, decimal, class
* family: kind, k, l, m, n, root, t, delta, value, class, reason
* search: x, y, z
* verify-paper: claim_id, status, paper_value, normative_value, note
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from .diophantine import QuarticEquation, Regime, search_quartic
from .elements import DISPLAY_NAMES, ELEMENT_NAMES, ElementReport, secondary_elements
from .exactmath import DomainError, Surd, classify
from .families import FamilyMember, d_beta_value, delta_beta_value, family_scan
from .papercheck import (
    EXPECTED_FLAGGED,
    ClaimOutcome,
    ClaimStatus,
    SelfInconsistencyError,
    flagged_set,
    verify_paper,
)
from .triples import TripleParams, parse_int_triple, decompose, generate

EXIT_OK, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2

EQUATION_TEXT = {
    QuarticEquation.A: "x^4 - x^2 y^2 + y^4 = z^2",
    QuarticEquation.B: "x^4 + 14 x^2 y^2 + y^4 = z^2",
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad flags; 2 is reserved for internal failures here
    def error(self, message: str):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def dump_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _csv(header: Sequence[str], rows: List[Dict[str, object]]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(header), lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


def _table(header: Sequence[str], rows: List[Sequence[object]]) -> str:
    cells = [list(map(str, header))] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def rational_record(x: Fraction) -> Dict[str, int]:
    return {"num": x.numerator, "den": x.denominator}


def surd_record(v: Surd, digits: int) -> Dict[str, object]:
    return {
        "num": v.coeff.numerator,
        "den": v.coeff.denominator,
        "radicand": v.radicand,
        "decimal": v.decimal(digits),
        "class": classify(v).value,
    }


# -- elements ---------------------------------------------------------------

def render_elements(params: TripleParams, report: ElementReport, fmt: str, digits: int) -> str:
    tri = generate(params)
    if fmt == "json":
        doc: Dict[str, object] = {name: surd_record(v, digits) for name, v in report.items()}
        doc["s"] = rational_record(report.s)
        doc["area"] = rational_record(report.area)
        doc["params"] = {"delta": params.delta, "m": params.m, "n": params.n}
        doc["triple"] = {"alpha": tri.alpha, "beta": tri.beta, "gamma": tri.gamma}
        return dump_json(doc)
    if fmt == "csv":
        header = ("element", "num", "den", "radicand", "decimal", "class")
        rows = [
            {"element": name, **{k: surd_record(v, digits)[k] for k in header[1:]}}
            for name, v in report.items()
        ]
        return _csv(header, rows)
    head = (
        f"(delta, m, n) = ({params.delta}, {params.m}, {params.n});  "
        f"alpha = {tri.alpha}, beta = {tri.beta}, gamma = {tri.gamma}\n"
        f"s = {report.s}, area = {report.area}\n\n"
    )
    rows = [
        (name, DISPLAY_NAMES[name], str(v), v.decimal(digits), classify(v).value)
        for name, v in report.items()
    ]
    return head + _table(("element", "symbol", "exact", "decimal", "class"), rows)


def cmd_elements(args) -> int:
    try:
        if args.params is not None:
            params = TripleParams.parse(args.params)
        else:
            params = decompose(*parse_int_triple(args.triple))
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(render_elements(params, secondary_elements(params), args.format, args.digits))
    return EXIT_OK


# -- family -----------------------------------------------------------------

def _member_value(member: FamilyMember, delta: int) -> Fraction:
    if member.family <= 3:
        return delta_beta_value(member, delta)
    return d_beta_value(member, delta)


def cmd_family(args) -> int:
    if args.family not in range(1, 6):
        print(f"error: --family must be 1..5, got {args.family}", file=sys.stderr)
        return EXIT_USAGE
    if args.bound < 1 or args.delta < 1:
        print("error: --bound and --delta must be positive", file=sys.stderr)
        return EXIT_USAGE
    members, rejections = family_scan(args.family, args.bound)
    value_name = "delta_beta" if args.family <= 3 else "d_beta"
    recs = []
    for mem in members:
        value = _member_value(mem, args.delta)
        recs.append({
            "kind": "member", "k": mem.gen[0], "l": mem.gen[1], "m": mem.m, "n": mem.n,
            "root": mem.root, "t": "" if mem.t is None else mem.t, "delta": args.delta,
            "value": str(value), "class": classify(Surd.of(value)).value, "reason": "",
        })
    rej_recs = [
        {"kind": "rejection", "k": r.gen[0], "l": r.gen[1], "m": r.m, "n": r.n, "root": "",
         "t": "", "delta": "", "value": "", "class": "", "reason": r.reason}
        for r in rejections
    ]
    if args.format == "json":
        doc = {
            "family": args.family,
            "delta": args.delta,
            "value_name": value_name,
            "members": [{k: v for k, v in r.items() if k not in ("kind", "reason")} for r in recs],
            "rejections": [{k: r[k] for k in ("k", "l", "m", "n", "reason")} for r in rej_recs],
        }
        sys.stdout.write(dump_json(doc))
        return EXIT_OK
    if args.format == "csv":
        header = ("kind", "k", "l", "m", "n", "root", "t", "delta", "value", "class", "reason")
        sys.stdout.write(_csv(header, recs + rej_recs))
        return EXIT_OK
    gen = ("k", "l") if args.family <= 3 else ("K", "L")
    root = "z" if args.family <= 3 else "w"
    out = [f"family {args.family}, max({gen[0]},{gen[1]}) <= {args.bound}, delta = {args.delta}\n\n"]
    if recs:
        out.append(_table(
            (f"({gen[0]},{gen[1]})", "m", "n", root, "t", DISPLAY_NAMES[value_name], "class"),
            [(f"({r['k']},{r['l']})", r["m"], r["n"], r["root"], r["t"], r["value"], r["class"])
             for r in recs],
        ))
    else:
        out.append("no members\n")
    if rej_recs:
        out.append(f"\nrejected generator pairs ({len(rej_recs)}):\n")
        out.append(_table(
            (f"({gen[0]},{gen[1]})", "m", "n", "reason"),
            [(f"({r['k']},{r['l']})", r["m"], r["n"], r["reason"]) for r in rej_recs],
        ))
    sys.stdout.write("".join(out))
    return EXIT_OK


# -- search -----------------------------------------------------------------

def cmd_search(args) -> int:
    if args.bound < 1:
        print("error: --bound must be positive", file=sys.stderr)
        return EXIT_USAGE
    eq, regime = QuarticEquation(args.equation), Regime(args.regime)
    sols = search_quartic(eq, regime, args.bound, workers=args.workers)
    if args.format == "json":
        sys.stdout.write(dump_json({
            "equation": eq.value, "regime": regime.value, "bound": args.bound,
            "solutions": [[s.x, s.y, s.z] for s in sols],
        }))
    elif args.format == "csv":
        sys.stdout.write(_csv(("x", "y", "z"), [{"x": s.x, "y": s.y, "z": s.z} for s in sols]))
    else:
        word = "solution" if len(sols) == 1 else "solutions"
        lines = [
            f"equation {eq.value}: {EQUATION_TEXT[eq]}; regime {regime.value}",
            f"{len(sols)} {word} in box {args.bound}×{args.bound}",
        ]
        if sols:
            lines.append(",".join(str(s) for s in sols))
        sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_OK


# -- verify-paper -----------------------------------------------------------

STATUS_ORDER = (ClaimStatus.CONFIRMED, ClaimStatus.CONFIRMED_WITH_ERRATUM, ClaimStatus.REFUTED)


def render_outcomes(outcomes: List[ClaimOutcome], fmt: str) -> str:
    ordered = sorted(outcomes, key=lambda o: o.claim_id)
    if fmt == "json":
        return dump_json([o.as_row() for o in ordered])
    if fmt == "csv":
        header = ("claim_id", "status", "paper_value", "normative_value", "note")
        return _csv(header, [o.as_row() for o in ordered])
    lines = []
    for status in STATUS_ORDER:
        group = [o for o in ordered if o.status is status]
        lines.append(f"== {status.value} ({len(group)}) ==")
        for o in group:
            line = f"{o.status.value} {o.claim_id}"
            if o.paper_value is not None:
                line += f" paper={o.paper_value} normative={o.normative_value}"
            lines.append(line)
            if o.note:
                lines.append(f"    {o.note}")
        lines.append("")
    return "\n".join(lines)


def cmd_verify_paper(args) -> int:
    if args.survey_m < 2:
        print("error: --survey-m must be at least 2", file=sys.stderr)
        return EXIT_USAGE
    try:
        outcomes = verify_paper(args.survey_m)
    except SelfInconsistencyError as exc:
        print(f"internal verification failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    sys.stdout.write(render_outcomes(outcomes, args.format))
    got = flagged_set(outcomes)
    if got != EXPECTED_FLAGGED:
        print("flagged outcomes differ from the expected set:", file=sys.stderr)
        for cid in sorted(set(got) | set(EXPECTED_FLAGGED)):
            if got.get(cid) != EXPECTED_FLAGGED.get(cid):
                print(f"  {cid}: expected {EXPECTED_FLAGGED.get(cid)}, got {got.get(cid)}", file=sys.stderr)
        return EXIT_INTERNAL
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="pythsec", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    formats = ("table", "json", "csv")

    p = sub.add_parser("elements", help="the seventeen secondary elements of one triangle")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--params", metavar="DELTA,M,N")
    src.add_argument("--triple", metavar="A,B,C")
    p.add_argument("--format", choices=formats, default="table")
    p.add_argument("--digits", type=int, default=12)
    p.set_defaults(func=cmd_elements)

    p = sub.add_parser("family", help="enumerate a rational-bisector family")
    p.add_argument("--family", type=int, required=True)
    p.add_argument("--bound", type=int, default=10)
    p.add_argument("--delta", type=int, default=1)
    p.add_argument("--format", choices=formats, default="table")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("search", help="bounded search on a quartic form")
    p.add_argument("--equation", choices=[e.value for e in QuarticEquation], required=True)
    p.add_argument("--regime", choices=[r.value for r in Regime], required=True)
    p.add_argument("--bound", type=int, default=300)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--format", choices=formats, default="table")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify-paper", help="check the printed formulas and examples")
    p.add_argument("--survey-m", type=int, default=50)
    p.add_argument("--format", choices=formats, default="table")
    p.set_defaults(func=cmd_verify_paper)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    if getattr(args, "digits", 0) < 0:
        print("error: --digits must be nonnegative", file=sys.stderr)
        return EXIT_USAGE
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
