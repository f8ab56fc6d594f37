"""Command-line front end.

Subcommands: analyze-complex, analyze-arrangement, analyze-lines,
check-graph, generate. Exit codes: 0 success, 1 input error, 2 a --strict
run hit failed or inapplicable checks (violated hypotheses), 3 resource cap
exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import arrangements as arr_mod
from . import complexes as cx_mod
from . import graphs as graph_mod
from . import lines as lines_mod
from . import reports
from .errors import DualGraphsError, FieldError, InputError, ResourceCapError
from .homology import DEFAULT_MAX_HOCHSTER_VERTICES
from .linalg import QQ, parse_field

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_STRICT = 2
EXIT_CAP = 3


def _add_common(parser):
    parser.add_argument("--format", choices=("text", "json"), default="text",
                        help="output format (default text)")
    parser.add_argument("--strict", action="store_true",
                        help="exit 2 when any check fails or is inapplicable")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dualgraphs",
        description="Dual graphs and homological invariants of squarefree "
                    "monomial ideals, subspace arrangements, and projective "
                    "line arrangements.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze-complex", help="analyze a facet file")
    p.add_argument("path", help="facet file (one facet per line)")
    p.add_argument("--field", action="append", default=None, metavar="q|gf:p",
                   help="coefficient field, repeatable (default q)")
    p.add_argument("--max-hochster-n", type=int, default=DEFAULT_MAX_HOCHSTER_VERTICES,
                   help="vertex cap for the 2^n regularity sweep (default 20)")
    p.add_argument("--allow-void", action="store_true",
                   help="accept an input file with no facets")
    _add_common(p)

    p = sub.add_parser("analyze-arrangement", help="analyze an arrangement JSON file")
    p.add_argument("path")
    p.add_argument("--regularity-certificate", type=int, default=None, metavar="R",
                   help="caller-certified regularity; enables the r-connectivity check")
    p.add_argument("--ds-subset", default=None, metavar="I,J,...",
                   help="1-based component subset for the Derksen-Sidman bound")
    p.add_argument("--section", type=int, default=0, metavar="K",
                   help="apply K generic hyperplane sections first (seeded)")
    p.add_argument("--seed", type=int, default=0, help="PRNG seed (default 0)")
    _add_common(p)

    p = sub.add_parser("analyze-lines", help="analyze a line arrangement JSON file")
    p.add_argument("path")
    _add_common(p)

    p = sub.add_parser("check-graph", help="analyze a graph edge-list file")
    p.add_argument("path")
    _add_common(p)

    p = sub.add_parser("generate", help="write a named family to a file")
    p.add_argument("family",
                   help="complex families: %s; graph families: %s"
                        % (", ".join(cx_mod.COMPLEX_FAMILIES),
                           ", ".join(graph_mod.GRAPH_FAMILIES)))
    p.add_argument("parameter", type=int, nargs="?", default=None)
    p.add_argument("--out", default=None, help="output path (default stdout)")
    return parser


def _emit(report: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(report, indent=2))
    else:
        print(reports.render_text(report), end="")


def _strict_exit(report: dict, strict: bool) -> int:
    if not strict:
        return EXIT_OK
    bad = [c for c in report.get("checks", ())
           if c["status"] in (reports.STATUS_FAIL, reports.STATUS_NA)]
    if bad or report.get("warnings"):
        return EXIT_STRICT
    return EXIT_OK


def _run_analyze_complex(args) -> int:
    fields = tuple(parse_field(f) for f in (args.field or ["q"]))
    cx = cx_mod.read_facet_file(args.path, allow_void=args.allow_void)
    report = reports.build_complex_report(
        cx, fields=fields, max_hochster_n=args.max_hochster_n, descriptor=args.path
    )
    _emit(report, args.format)
    return _strict_exit(report, args.strict)


def _run_analyze_arrangement(args) -> int:
    arr = arr_mod.read_arrangement_file(args.path)
    for k in range(args.section):
        arr = arr_mod.generic_hyperplane_section(arr, seed=args.seed + k)
    subset = None
    if args.ds_subset:
        try:
            subset = [int(tok) - 1 for tok in args.ds_subset.split(",")]
        except ValueError:
            raise InputError(f"bad subset {args.ds_subset!r}") from None
    report = reports.build_arrangement_report(
        arr,
        descriptor=args.path,
        regularity_certificate=args.regularity_certificate,
        ds_subset=subset,
        sections_applied=args.section,
    )
    _emit(report, args.format)
    return _strict_exit(report, args.strict)


def _run_analyze_lines(args) -> int:
    arr = lines_mod.read_lines_file(args.path)
    report = reports.build_lines_report(arr, descriptor=args.path)
    _emit(report, args.format)
    return _strict_exit(report, args.strict)


def _run_check_graph(args) -> int:
    g = graph_mod.read_graph_file(args.path)
    report = reports.build_graph_report(g, descriptor=args.path)
    _emit(report, args.format)
    return _strict_exit(report, args.strict)


def _run_generate(args) -> int:
    family = args.family
    if family in cx_mod.COMPLEX_FAMILIES:
        text = cx_mod.format_facet_text(cx_mod.generate_complex(family, args.parameter))
    elif family in graph_mod.GRAPH_FAMILIES:
        text = graph_mod.format_graph_text(graph_mod.generate_graph(family, args.parameter))
    else:
        raise InputError(
            f"unknown family {family!r}; complexes: "
            f"{', '.join(cx_mod.COMPLEX_FAMILIES)}; graphs: "
            f"{', '.join(graph_mod.GRAPH_FAMILIES)}"
        )
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        print(text, end="")
    return EXIT_OK


_RUNNERS = {
    "analyze-complex": _run_analyze_complex,
    "analyze-arrangement": _run_analyze_arrangement,
    "analyze-lines": _run_analyze_lines,
    "check-graph": _run_check_graph,
    "generate": _run_generate,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _RUNNERS[args.command](args)
    except ResourceCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (OSError, FieldError, InputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except DualGraphsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
