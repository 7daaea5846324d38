"""Batch command-line front end: ``slope-calc <command> [options]``.

Exit status is 0 on success, 1 when a computation is rejected (violated hypothesis,
non-knot closure, invalid range, exhausted search budget) and 2 on unparsable input.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Any, TextIO

from braid_mcp.braid import BraidWord, parse_braid, parse_braid_file
from braid_mcp.invariants import braid_report
from extendability_mcp.verdicts import (
    SlopeInvariant,
    extendability_report,
    index_lower_bound,
    slope_value_table,
)
from mapping_class_mcp.sl2z import parse_slope, slopes_up_to
from satellite_mcp.norms import braid_torus_norm
from satellite_mcp.report import slope_report
from satellite_mcp.specs import BraidTorusSpec, SatelliteSpec, parse_satellite_spec
from satellite_mcp.unit_ball import unit_ball_payload, unit_ball_polygon
from slope_calc import __version__, config
from slope_calc.errors import ParseError, SlopeCalcError
from slope_calc.rendering import OutputFormat, render_csv, render_json, render_table, render_text
from slope_calc.svg import unit_ball_svg
from word_oracle_mcp.search import cl_upper_bound
from word_oracle_mcp.words import parse_group_word

logger = logging.getLogger("SlopeCalcCLI")

EXIT_REJECTED = 1
EXIT_PARSE_ERROR = 2

TABLE_FORMATS = [OutputFormat.JSON.value, OutputFormat.CSV.value, OutputFormat.TEXT.value]
REPORT_FORMATS = [OutputFormat.JSON.value, OutputFormat.TEXT.value]


def _add_satellite_arguments(parser: argparse.ArgumentParser, required: bool = True) -> None:
    parser.add_argument("--companion", required=required, help="Companion braid word, e.g. '1 1 1'")
    parser.add_argument("--strands", type=int, required=required, help="Strands of the companion braid")
    parser.add_argument("--pattern", required=required, help="Pattern braid word")
    parser.add_argument("--pattern-strands", type=int, required=required, help="Strands of the pattern braid")
    parser.add_argument("--twist", default="0 -1 1 0", help="Twist 'p q r s' (default: plumbing '0 -1 1 0')")
    parser.add_argument("--companion-genus", type=int, help="Exact genus override for the companion knot")
    parser.add_argument("--pattern-genus", type=int, help="Exact genus override for the pattern knot")


def _add_slope_arguments(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--slope", action="append", help="Slope 'x/y' or 'x y'; repeat for several")
    group.add_argument("--range", type=int, dest="slope_range", metavar="N", help="All slopes with max(|x|,|y|) <= N")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="slope-calc", description="Exact slope invariants of knotted tori built from braid satellites."
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--debug", action="store_true", help="Enable debug logging on stderr")
    parser.add_argument("--output", type=Path, help="Write the result to this file instead of stdout")
    subparsers = parser.add_subparsers(dest="command", required=True)

    braid_parser = subparsers.add_parser("braid", help="Permutation, Alexander polynomial and genus of a braid")
    source = braid_parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--word", help="Braid word, signed integers, e.g. '1 -2 1 -2'")
    source.add_argument("--file", type=Path, help="Braid file: 'strands=N' header, one word per line")
    braid_parser.add_argument("--strands", type=int, help="Strand count (required with --word)")
    braid_parser.add_argument("--format", choices=REPORT_FORMATS, default="json")

    torus_parser = subparsers.add_parser("torus-norm", help="Seminorm (2g-1)|y| of a standard braid torus")
    torus_parser.add_argument("--word", required=True, help="Braid word whose closure is a nontrivial knot")
    torus_parser.add_argument("--strands", type=int, required=True)
    torus_parser.add_argument("--genus", type=int, help="Exact genus override")
    _add_slope_arguments(torus_parser)
    torus_parser.add_argument("--format", choices=TABLE_FORMATS, default="json")

    satellite_parser = subparsers.add_parser("satellite", help="Norm and genus bounds of slopes of a satellite")
    _add_satellite_arguments(satellite_parser)
    _add_slope_arguments(satellite_parser)
    satellite_parser.add_argument(
        "--invariant",
        choices=[invariant.value for invariant in SlopeInvariant],
        default=SlopeInvariant.NORM.value,
        help="Invariant whose value set bounds the index with --range (default: norm)",
    )
    satellite_parser.add_argument("--format", choices=TABLE_FORMATS, default="json")

    ball_parser = subparsers.add_parser("unit-ball", help="Unit-ball polygon of the satellite seminorm")
    _add_satellite_arguments(ball_parser)
    ball_parser.add_argument("--format", choices=[OutputFormat.SVG.value, OutputFormat.JSON.value], default="svg")

    ext_parser = subparsers.add_parser(
        "extendability", help="Extendability verdicts; without --companion, the unknotted torus"
    )
    _add_satellite_arguments(ext_parser, required=False)
    ext_parser.add_argument(
        "--range", type=int, dest="slope_range", metavar="N", default=config.SLOPE_CALC_DEFAULT_RANGE
    )
    ext_parser.add_argument("--dehn-twist", metavar="SLOPE", help="Also judge the Dehn twist along this slope")
    ext_parser.add_argument("--singular-genus", type=int, help="Certified singular genus of the --dehn-twist slope")
    ext_parser.add_argument("--format", choices=REPORT_FORMATS, default="json")

    cl_parser = subparsers.add_parser("cl", help="Commutator-length upper bound of a free-group word")
    cl_parser.add_argument("--word", required=True, help="Word such as 'x y X Y' (uppercase = inverse)")
    cl_parser.add_argument("--rank", type=int, help="Rank of the free group")
    cl_parser.add_argument("--k-max", type=int, default=config.SLOPE_CALC_CL_K_MAX)
    cl_parser.add_argument("--len-max", type=int, default=config.SLOPE_CALC_CL_LEN_MAX)
    cl_parser.add_argument("--node-limit", type=int, default=config.SLOPE_CALC_NODE_LIMIT)
    cl_parser.add_argument("--format", choices=REPORT_FORMATS, default="json")
    return parser


def _satellite(args: argparse.Namespace) -> SatelliteSpec:
    return parse_satellite_spec(
        args.companion,
        args.strands,
        args.pattern,
        args.pattern_strands,
        args.twist,
        companion_genus=args.companion_genus,
        pattern_genus=args.pattern_genus,
    )


def _slopes(args: argparse.Namespace) -> list:
    if args.slope_range is not None:
        return slopes_up_to(args.slope_range)
    return [parse_slope(text) for text in args.slope]


def _render_rows(args: argparse.Namespace, payload: dict[str, Any], verdict: dict[str, Any] | None = None) -> str:
    rows = payload.get("rows", [payload])
    if args.format == OutputFormat.CSV:
        return render_csv(rows, verdict)
    if args.format == OutputFormat.TEXT:
        return render_table(rows, verdict)
    return render_json(payload)


def _render_report(args: argparse.Namespace, payload: dict[str, Any]) -> str:
    return render_text(payload) if args.format == OutputFormat.TEXT else render_json(payload)


def run_braid(args: argparse.Namespace) -> str:
    braids: list[BraidWord]
    if args.file is not None:
        braids = parse_braid_file(args.file.read_text(encoding="utf-8"))
    else:
        if args.strands is None:
            raise ParseError("--strands is required with --word")
        braids = [parse_braid(args.word, args.strands)]
    reports = [braid_report(braid).to_dict() for braid in braids]
    payload = {"rows": reports} if args.file is not None else reports[0]
    return _render_report(args, payload)


def run_torus_norm(args: argparse.Namespace) -> str:
    torus = BraidTorusSpec.from_braid(parse_braid(args.word, args.strands), args.genus)
    rows = [{"slope": [c.x, c.y], "norm": braid_torus_norm(torus, c).to_dict()} for c in _slopes(args)]
    return _render_rows(args, {"torus": torus.to_dict(), "rows": rows})


def slope_table(spec: SatelliteSpec, bound: int, invariant: SlopeInvariant) -> dict[str, Any]:
    """Slope reports for every canonical slope up to ``bound`` plus the index bound they imply."""
    rows = [slope_report(spec, c).to_dict() for c in slopes_up_to(bound)]
    payload: dict[str, Any] = {"satellite": spec.to_dict(), "rows": rows}
    try:
        payload["index_bound"] = index_lower_bound(slope_value_table(spec, bound, invariant)).to_dict()
    except SlopeCalcError as exc:
        logger.info("no index bound over N=%d: %s", bound, exc)
        payload["index_bound"] = None
        payload["index_bound_error"] = str(exc)
    return payload


def run_satellite(args: argparse.Namespace) -> str:
    """One slope prints its report; several print ``rows``; ``--range`` adds the index bound."""
    spec = _satellite(args)
    if args.slope_range is None:
        rows = [slope_report(spec, parse_slope(text)).to_dict() for text in args.slope]
        if len(rows) == 1:
            return _render_rows(args, rows[0])
        return _render_rows(args, {"satellite": spec.to_dict(), "rows": rows})

    payload = slope_table(spec, args.slope_range, SlopeInvariant(args.invariant))
    return _render_rows(args, payload, payload["index_bound"])


def run_unit_ball(args: argparse.Namespace) -> str:
    spec = _satellite(args)
    if args.format == OutputFormat.JSON:
        return render_json(unit_ball_payload(spec))
    return unit_ball_svg(unit_ball_polygon(spec), title=f"unit ball, twist {spec.twist}")


def run_extendability(args: argparse.Namespace) -> str:
    spec = _satellite(args) if args.companion is not None else None
    dehn_twist = None
    if args.dehn_twist is not None:
        if args.singular_genus is None:
            raise ParseError("--singular-genus is required with --dehn-twist")
        dehn_twist = (parse_slope(args.dehn_twist), args.singular_genus)
    return _render_report(args, extendability_report(spec, args.slope_range, dehn_twist).to_dict())


def run_cl(args: argparse.Namespace) -> str:
    word = parse_group_word(args.word, args.rank)
    result = cl_upper_bound(word, args.k_max, args.len_max, node_limit=args.node_limit)
    return _render_report(args, {"word": str(word), **result.to_dict()})


COMMANDS = {
    "braid": run_braid,
    "torus-norm": run_torus_norm,
    "satellite": run_satellite,
    "unit-ball": run_unit_ball,
    "extendability": run_extendability,
    "cl": run_cl,
}


def run(argv: list[str] | None = None, stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    """Parse ``argv``, run the command and write its output; returns the exit status."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)

    log_level = logging.DEBUG if args.debug else logging.WARNING
    logging.basicConfig(level=log_level, format=config.LOG_FORMAT, datefmt=config.LOG_DATEFMT, stream=sys.stderr)
    logger.setLevel(log_level)

    try:
        output = COMMANDS[args.command](args)
    except ParseError as exc:
        print(f"slope-calc: error: {exc}", file=stderr)
        return EXIT_PARSE_ERROR
    except SlopeCalcError as exc:
        print(f"slope-calc: error: {exc}", file=stderr)
        return EXIT_REJECTED
    except OSError as exc:
        print(f"slope-calc: error: {exc}", file=stderr)
        return EXIT_PARSE_ERROR

    if args.output is not None:
        args.output.write_text(output, encoding="utf-8")
        logger.info("wrote %s output to %s", args.command, args.output)
    else:
        stdout.write(output)
    return 0


def main() -> None:
    """Entry point for the ``slope-calc`` console script."""
    sys.exit(run())


if __name__ == "__main__":
    main()
