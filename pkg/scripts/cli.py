#!/usr/bin/env python3
"""
Command-line entry point: compute, verify, invariance and dump-matrix.

Reports go to stdout in the selected format; diagnostics and the
check marks go to stderr. Exit codes: 0 success, 1 unexpected error,
2 invalid input, 3 a differential that does not square to zero,
4 a failed verification or invariance comparison.
"""

import argparse
import csv
import io
import json
import sys

from pydantic import BaseModel, ValidationError

from config import settings
from core.pipeline import (
    CrossingLimitError,
    check_crossing_cap,
    load_input,
    matrix_for,
    run_compute,
    run_invariance,
)
from core.schemas import ComputeReport, InvarianceReport, RunConfig, VerifyReport
from core.verification import VerifyOptions, run_verification, to_report
from cube.decoration import DecorationError, parse_decoration
from diagram.models import DiagramError
from differential.assemble import DifferentialError
from homology.ranks import HomologyError
from loaders.metadata import CorpusError
from monitoring.logging import StructuredLogger, setup_logging
from monitoring.metrics import get_metrics, measure_latency
from monitoring.tracing import setup_tracing

EXIT_OK = 0
EXIT_UNEXPECTED = 1
EXIT_INPUT = 2
EXIT_DIFFERENTIAL = 3
EXIT_VERIFY = 4

INPUT_ERRORS = (DiagramError, DecorationError, CorpusError, ValidationError, CrossingLimitError)
THEORIES = ["khovanov", "szabo", "szabo-mirror", "reduced", "reduced-mirror"]

logger = setup_logging()


def _add_input_arguments(parser: argparse.ArgumentParser) -> None:
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--pd", type=str, help="PD code, e.g. 'X(1,5,2,4) X(3,1,4,6) ...'")
    source.add_argument("--braid", type=str, help="Braid word 'k: w1 w2 ...'")
    source.add_argument("--corpus", type=str, help="Name of a corpus entry")
    parser.add_argument(
        "--unknot", action="store_true", help="Accept an empty PD code as the unknot"
    )
    parser.add_argument("--basepoint", type=int, help="Edge label for the reduced theory")
    parser.add_argument(
        "--decoration", type=str, default="auto", help="auto, braid, random or a bit string"
    )
    parser.add_argument("--seed", type=int, default=settings.SEED, help="Random seed")
    parser.add_argument("--allow-large", action="store_true", help="Lift the crossing cap")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="khss",
        description="Khovanov homology and its spectral sequence over F_2",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    compute = sub.add_parser("compute", help="Homology ranks of one diagram")
    _add_input_arguments(compute)
    compute.add_argument(
        "--theory", choices=THEORIES, default=settings.DEFAULT_THEORY, help="Differential"
    )
    compute.add_argument(
        "--output",
        choices=["json", "csv", "text"],
        default=settings.OUTPUT_FORMAT,
        help="Report format",
    )
    compute.add_argument("--pages", action="store_true", help="Print spectral sequence pages")
    compute.add_argument("--jones", action="store_true", help="Print the Jones polynomial")
    compute.add_argument(
        "--transverse", action="store_true", help="Report the transverse element"
    )
    compute.add_argument(
        "--khovanov-table", action="store_true", help="Print the bigraded Khovanov table"
    )
    compute.add_argument("--workers", type=int, help="Worker processes for assembly")

    verify = sub.add_parser("verify", help="Run the verification suite")
    verify.add_argument("--quick", action="store_true", help="Small samples")
    verify.add_argument("--seed", type=int, default=settings.SEED, help="Random seed")
    verify.add_argument(
        "--include-slow", action="store_true", help="Also use slow corpus entries"
    )
    verify.add_argument(
        "--corrupt-type",
        type=int,
        choices=range(1, 17),
        metavar="{1..16}",
        help="Deliberately break one configuration type (negative control)",
    )
    verify.add_argument("--output", choices=["json", "text"], default="text")

    invariance = sub.add_parser(
        "invariance", help="Compare diagrams declared to be the same link"
    )
    invariance.add_argument(
        "inputs", nargs="+", help="corpus:NAME, braid:'k: w...' or pd:'X(...) ...'"
    )
    invariance.add_argument("--theory", choices=THEORIES, default=settings.DEFAULT_THEORY)
    invariance.add_argument(
        "--decorations", type=int, default=2, help="Random decorations per input"
    )
    invariance.add_argument("--seed", type=int, default=settings.SEED)
    invariance.add_argument("--output", choices=["json", "text"], default="text")

    dump = sub.add_parser("dump-matrix", help="Print a sparse matrix over F_2")
    _add_input_arguments(dump)
    dump.add_argument("--theory", choices=THEORIES, default=settings.DEFAULT_THEORY)
    dump.add_argument(
        "--component", choices=["d", "dk", "hm", "g"], default="d", help="Which map"
    )
    dump.add_argument("--k", type=int, help="Face dimension for dk")
    dump.add_argument("--m", type=int, help="Crossing for hm and g")
    dump.add_argument("--decoration-to", type=str, help="Target decoration for g")
    return parser


def render_compute(report: ComputeReport, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report.model_dump(exclude_none=True), indent=2)
    if fmt == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["table", "key", "rank"])
        for table, ranks in report.ranks.items():
            for key, value in ranks.items():
                writer.writerow([table, key, value])
        for page in report.pages or []:
            for key, value in page.ranks.items():
                writer.writerow([f"E{page.r}", key, value])
        for key, value in (report.khovanov or {}).items():
            writer.writerow(["khovanov", key, value])
        return buffer.getvalue().rstrip("\n")

    lines = [
        f"diagram: {report.diagram}",
        f"theory: {report.theory}",
        f"crossings: {report.crossings} (n+={report.n_plus}, n-={report.n_minus})",
        f"decoration: {report.decoration}",
        f"generators: {report.generators}",
    ]
    for table, ranks in report.ranks.items():
        cells = ", ".join(f"{key}: {value}" for key, value in ranks.items()) or "0"
        lines.append(f"ranks ({table}): {cells}")
    lines.append(f"total rank: {report.total_rank}")
    for page in report.pages or []:
        cells = ", ".join(f"({key}): {value}" for key, value in page.ranks.items()) or "0"
        marker = " [stable]" if page.stabilized else ""
        lines.append(f"E_{page.r}{marker}: {cells}")
    if report.khovanov is not None:
        cells = ", ".join(f"(q,h)=({key}): {value}" for key, value in report.khovanov.items())
        lines.append(f"khovanov: {cells}")
    if report.jones is not None:
        lines.append(f"jones: {report.jones}")
        lines.append(f"euler characteristic: {report.euler_characteristic}")
    if report.transverse is not None:
        tr = report.transverse
        lines.append(
            f"transverse: {tr.generator} at resolution {tr.resolution}, "
            f"(h, q, delta) = ({tr.h}, {tr.q}, {tr.delta}), "
            f"closed={tr.closed}, survives={tr.survives}"
        )
    return "\n".join(lines)


def _render_model(report: BaseModel, fmt: str, text: str) -> str:
    if fmt == "json":
        return json.dumps(report.model_dump(), indent=2)
    return text


def cmd_compute(args: argparse.Namespace) -> int:
    cfg = RunConfig(
        pd=args.pd,
        braid=args.braid,
        corpus=args.corpus,
        unknot=args.unknot,
        basepoint=args.basepoint,
        theory=args.theory,
        decoration=args.decoration,
        seed=args.seed,
        output=args.output,
        pages=args.pages,
        jones=args.jones,
        transverse=args.transverse,
        khovanov_table=args.khovanov_table,
        allow_large=args.allow_large,
        workers=args.workers,
    )
    metrics = get_metrics()
    metrics.reset()
    with measure_latency("compute") as elapsed:
        report = run_compute(cfg)
    StructuredLogger("runs").log_run(
        diagram=report.diagram,
        theory=report.theory,
        crossings=report.crossings,
        generators=report.generators,
        elapsed_ms=elapsed(),
        ranks=report.ranks["delta"],
        faces=metrics.face_counts(),
    )
    print(render_compute(report, cfg.output))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    overrides = {
        "seed": args.seed,
        "include_slow": args.include_slow,
        "corrupt_type": args.corrupt_type,
    }
    options = VerifyOptions.quick(**overrides) if args.quick else VerifyOptions(**overrides)
    results = run_verification(options)

    checks = StructuredLogger("checks")
    for result in results:
        mark = "✓" if result.passed else "✗"
        print(f"{mark} {result.name} ({result.samples} samples)", file=sys.stderr)
        for failure in result.failures[:5]:
            print(f"    {failure}", file=sys.stderr)
        checks.log_check(
            result.name,
            result.passed,
            result.samples,
            detail="; ".join(result.failures[:5]),
        )

    report: VerifyReport = to_report(results)
    text = "PASS" if report.passed else "FAIL"
    print(_render_model(report, args.output, text))
    return EXIT_OK if report.passed else EXIT_VERIFY


def cmd_invariance(args: argparse.Namespace) -> int:
    report: InvarianceReport = run_invariance(
        args.inputs, theory=args.theory, decorations=args.decorations, seed=args.seed
    )
    lines = [f"{name}: {ranks}" for name, ranks in zip(report.inputs, report.ranks, strict=True)]
    lines.extend(f"mismatch: {line}" for line in report.mismatches)
    lines.append("EQUAL" if report.equal else "DIFFERENT")
    print(_render_model(report, args.output, "\n".join(lines)))
    return EXIT_OK if report.equal else EXIT_VERIFY


def cmd_dump_matrix(args: argparse.Namespace) -> int:
    cfg = RunConfig(
        pd=args.pd,
        braid=args.braid,
        corpus=args.corpus,
        unknot=args.unknot,
        basepoint=args.basepoint,
        theory=args.theory,
    )
    d = load_input(cfg).diagram
    check_crossing_cap(d, args.allow_large)
    t = parse_decoration(args.decoration, d, args.seed)
    t_prime = parse_decoration(args.decoration_to, d) if args.decoration_to else None
    matrix = matrix_for(d, t, args.component, args.theory, k=args.k, m=args.m, t_prime=t_prime)
    rows, cols = matrix.shape
    print(f"# {args.component} {rows}x{cols} nnz={matrix.nnz}")
    dump = matrix.dump()
    if dump:
        print(dump)
    return EXIT_OK


COMMANDS = {
    "compute": cmd_compute,
    "verify": cmd_verify,
    "invariance": cmd_invariance,
    "dump-matrix": cmd_dump_matrix,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "dump-matrix":
        if args.component == "dk" and args.k is None:
            parser.error("--component dk needs --k")
        if args.component == "hm" and args.m is None:
            parser.error("--component hm needs --m")
        if args.component == "g" and args.m is None and args.decoration_to is None:
            parser.error("--component g needs --m or --decoration-to")
    setup_tracing()
    errors = StructuredLogger("errors")
    try:
        return COMMANDS[args.command](args)
    except INPUT_ERRORS as e:
        print(f"✗ {e}", file=sys.stderr)
        errors.log_error(e, {"command": args.command})
        return EXIT_INPUT
    except (DifferentialError, HomologyError) as e:
        print(f"✗ {e}", file=sys.stderr)
        errors.log_error(e, {"command": args.command})
        return EXIT_DIFFERENTIAL
    except Exception as e:
        logger.exception(f"Unexpected failure in {args.command}")
        errors.log_error(e, {"command": args.command})
        return EXIT_UNEXPECTED


if __name__ == "__main__":
    sys.exit(main())
