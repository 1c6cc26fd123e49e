"""Command-line surface: one verb per artifact.

    compute    --diagram CDP [--method ...] [--format text|json|compat]
    matrix     --diagram CDP --which im|imj [--blocks]
    coeffs     --diagram CDP [--basis lambda|d]
    enumerate  --chords N [--verify]
    relations  --chords N
    census     --diagram CDP

Exit codes: 0 success/agreement, 1 verification failure or exceeded size
cap, 2 input/parse errors.  Output is byte-deterministic for fixed flags
and inputs (timings are kept out of it).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .caps import SizeCapError, SizeCaps
from .diagrams import CDPError, ChordDiagram, enumerate_diagrams, parse_cdp
from .permanent import build_imj, imj_block_labels, int_matrix_grid
from .polynomials import IntPoly, to_d_basis
from .recursion import wj_via_recursion
from .statesum import census_records
from .verify import METHODS, VerificationReport, verify_diagram, verify_exhaustive, verify_relations

JSON_SCHEMA_VERSION = 1


def _add_diagram_options(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--diagram", help="CDP involution string, e.g. CDP[2,1]")
    group.add_argument("--diagram-file", help="file containing a CDP string")


def _add_caps_option(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--max-chords",
        type=int,
        default=None,
        help="override every per-method chord cap (prints a warning)",
    )


def _resolve_caps(args: argparse.Namespace) -> SizeCaps:
    if getattr(args, "max_chords", None) is None:
        return SizeCaps()
    print(
        f"warning: size caps overridden to {args.max_chords} chords",
        file=sys.stderr,
    )
    return SizeCaps.uniform(args.max_chords)


def _read_diagram(args: argparse.Namespace) -> ChordDiagram:
    if args.diagram_file is not None:
        text = Path(args.diagram_file).read_text(encoding="utf-8")
    else:
        text = args.diagram
    return parse_cdp(text)


def _report_json(report: VerificationReport) -> dict:
    methods = {}
    for name, res in report.results.items():
        if res.error is not None:
            methods[name] = {"ok": False, "error": res.error}
        else:
            methods[name] = {
                "ok": True,
                "coefficients": [str(c) for c in res.poly.coeffs],
                "text": res.poly.to_text(),
            }
    return {
        "schema_version": JSON_SCHEMA_VERSION,
        "diagram": report.diagram,
        "chords": report.n,
        "methods": methods,
        "agreement": report.agreement,
        "checks": {
            "leading_equals_im_permanent": report.leading_matches_im_permanent,
            "d_basis_census": report.d_basis_census_matches,
        },
    }


def _flag(value: bool | None) -> str:
    if value is None:
        return "skipped"
    return "pass" if value else "fail"


def _cmd_compute(args: argparse.Namespace) -> int:
    d = _read_diagram(args)
    caps = _resolve_caps(args)
    methods = METHODS if args.method == "all" else (args.method,)
    report = verify_diagram(d, methods, caps)
    if args.format == "json":
        print(json.dumps(_report_json(report), indent=2, ensure_ascii=False))
    elif args.format == "compat":
        value = report.value()
        if value is None or not report.agreement:
            print("error: no agreed value to print", file=sys.stderr)
            return 1
        print(value.to_text(var="x"))
    else:
        print(f"diagram: {report.diagram}")
        print(f"chords: {report.n}")
        for name in methods:
            res = report.results[name]
            if res.error is not None:
                print(f"{name}: error: {res.error}")
            else:
                print(f"{name}: {res.poly.to_text()}")
        print(f"agreement: {'yes' if report.agreement else 'no'}")
        print(f"check leading = Per(IM): {_flag(report.leading_matches_im_permanent)}")
        print(f"check d-basis census: {_flag(report.d_basis_census_matches)}")
    return 0 if report.ok else 1


def _cmd_matrix(args: argparse.Namespace) -> int:
    d = _read_diagram(args)
    if args.which == "im":
        grid = int_matrix_grid(d.intersection_matrix())
    elif args.blocks:
        grid = "\n".join(" ".join(row) for row in imj_block_labels(d))
    else:
        grid = build_imj(d).to_grid()
    if grid:
        print(grid)
    return 0


def _cmd_coeffs(args: argparse.Namespace) -> int:
    d = _read_diagram(args)
    caps = _resolve_caps(args)
    try:
        poly = wj_via_recursion(d, chord_cap=caps.recursion_chords)
    except SizeCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.basis == "d":
        poly = to_d_basis(poly)
        var = "d"
    else:
        var = "λ"
    padded = [poly.coefficient(k) for k in range(d.n + 1)]
    print(f"basis: {args.basis}")
    print("coefficients: " + " ".join(str(c) for c in padded))
    print(f"polynomial: {poly.to_text(var=var)}")
    return 0


def _cmd_enumerate(args: argparse.Namespace) -> int:
    caps = _resolve_caps(args)
    if args.verify:
        summary = verify_exhaustive(args.chords, caps=caps)
        print(f"chords: {summary.chords}")
        print(f"diagrams: {summary.diagrams}")
        print(f"agreements: {summary.agreements}")
        print(f"failures: {len(summary.failures)}")
        for cdp in summary.failures:
            print(f"failure: {cdp}")
        print(f"isolated-zero diagrams: {summary.isolated_zero_diagrams}")
        return 0 if summary.ok else 1
    for d in enumerate_diagrams(args.chords):
        print(d.to_cdp())
    return 0


def _cmd_relations(args: argparse.Namespace) -> int:
    caps = _resolve_caps(args)
    summary = verify_relations(args.chords, caps=caps)
    print(f"chords: {summary.chords}")
    print(f"isolated-chord diagrams: {summary.isolated_diagrams}")
    print(f"one-term violations: {len(summary.one_term_violations)}")
    for cdp in summary.one_term_violations:
        print(f"one-term violation: {cdp}")
    print(f"quadruples: {summary.quadruples}")
    print(f"four-term violations: {len(summary.four_term_violations)}")
    for desc in summary.four_term_violations:
        print(f"four-term violation: {desc}")
    return 0 if summary.ok else 1


def _cmd_census(args: argparse.Namespace) -> int:
    d = _read_diagram(args)
    caps = _resolve_caps(args)
    try:
        for record in census_records(d, chord_cap=caps.statesum_chords):
            print(json.dumps(record, ensure_ascii=False))
    except SizeCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jonesweight",
        description="Exact colored Jones weight system on chord diagrams, three ways.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="evaluate the weight system on one diagram")
    _add_diagram_options(p)
    p.add_argument("--method", choices=METHODS + ("all",), default="all")
    p.add_argument("--format", choices=("text", "json", "compat"), default="text")
    _add_caps_option(p)
    p.set_defaults(func=_cmd_compute)

    p = sub.add_parser("matrix", help="print the intersection or blown-up matrix")
    _add_diagram_options(p)
    p.add_argument("--which", choices=("im", "imj"), required=True)
    p.add_argument("--blocks", action="store_true", help="block-label view of imj")
    p.set_defaults(func=_cmd_matrix)

    p = sub.add_parser("coeffs", help="coefficient list in the λ or d basis")
    _add_diagram_options(p)
    p.add_argument("--basis", choices=("lambda", "d"), default="lambda")
    _add_caps_option(p)
    p.set_defaults(func=_cmd_coeffs)

    p = sub.add_parser("enumerate", help="list all diagrams, optionally verifying")
    p.add_argument("--chords", type=int, required=True)
    p.add_argument("--verify", action="store_true")
    _add_caps_option(p)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("relations", help="check the one- and four-term relations")
    p.add_argument("--chords", type=int, required=True)
    _add_caps_option(p)
    p.set_defaults(func=_cmd_relations)

    p = sub.add_parser("census", help="export acceptable objects as JSON lines")
    _add_diagram_options(p)
    _add_caps_option(p)
    p.set_defaults(func=_cmd_census)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CDPError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
