"""Command-line interface.

Subcommands: generate (write family instances to files), score (quality
report for a graph + clustering), table (the two built-in reference
grids), sweep (per-scale comparison rows), maximize (exhaustive or greedy
search).  All tabular output is CSV; identical invocations produce
byte-identical output.  ``--figures DIR`` on table/sweep also renders PNG
charts next to the CSV.

Exit codes: 0 ok; 2 file parse/format; 3 invalid parameters; 4 size guard;
5 undefined quality/similarity; 6 I/O failure; 1 anything else.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .bounds import find_witness
from .errors import (
    FamilyParameterError,
    FormatError,
    IncompatibleClusteringError,
    InstanceTooLargeError,
    LoopRejectedError,
    MalformedEdgeError,
    MalformedInputError,
    ModlabError,
    UndefinedQualityError,
    UndefinedSimilarityError,
)
from .families import FamilyParams, balanced_clustering, build_graph, natural_clustering
from .graph import Graph
from .io import read_clustering, read_edge_list, write_clustering, write_edge_list
from .quality import quality_report
from .report import format_fixed, score_csv, sweep_csv, sweep_rows, table_csv, table_rows
from .search import brute_force_max, greedy_agglomerative, max_edge_fraction

EXIT_OK = 0
EXIT_OTHER = 1
EXIT_PARSE = 2
EXIT_PARAMETER = 3
EXIT_GUARD = 4
EXIT_UNDEFINED = 5
EXIT_IO = 6

_PARSE_ERRORS = (FormatError, MalformedEdgeError, LoopRejectedError)
_PARAMETER_ERRORS = (MalformedInputError, FamilyParameterError, IncompatibleClusteringError)
_UNDEFINED_ERRORS = (UndefinedQualityError, UndefinedSimilarityError)


def _int_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _x_range(text: str) -> list[int]:
    parts = text.split("..")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected a..b, got {text!r}")
    try:
        lo, hi = int(parts[0]), int(parts[1])
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a..b with integers, got {text!r}")
    if hi < lo:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return list(range(lo, hi + 1))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="modlab",
        description="Graph-clustering quality analysis: modularity, block families, bounds.",
    )
    parser.add_argument("--version", action="version", version=f"modlab {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="Write a family instance and its clusterings to files.")
    gen.add_argument("--family", choices=("G", "H"), required=True)
    gen.add_argument("--K", type=int, required=True, dest="k", help="Number of blocks copies.")
    gen.add_argument("--N1", type=int, required=True, dest="n1", help="First part size.")
    gen.add_argument("--N2", type=int, required=True, dest="n2", help="Second part size.")
    gen.add_argument(
        "--J",
        type=int,
        action="append",
        dest="j",
        default=None,
        help="Balanced cluster count; repeatable for several clustering files.",
    )
    gen.add_argument("--out", type=Path, default=Path("."), help="Output directory.")

    score = sub.add_parser("score", help="Quality report for a graph file and a clustering file.")
    score.add_argument("graph", type=Path)
    score.add_argument("clustering", type=Path)
    score.add_argument("--gamma", type=float, default=None, help="Also report q_f - gamma*q_0.")

    table = sub.add_parser("table", help="Reference comparison grid (1: family G, 2: family H).")
    table.add_argument("table", type=int, choices=(1, 2))
    table.add_argument("--x", type=_int_list, default=None, help="Comma-separated scale values.")
    table.add_argument("--K", type=int, default=3, dest="k")
    table.add_argument("--N1", type=int, default=None, dest="n1")
    table.add_argument("--out", type=Path, default=None, help="CSV path (default: stdout).")
    table.add_argument("--figures", type=Path, default=None, help="Directory for PNG charts.")

    sweep = sub.add_parser("sweep", help="Comparison rows over a range of scale values.")
    sweep.add_argument("--family", choices=("G", "H"), required=True)
    sweep.add_argument("--K", type=int, default=3, dest="k")
    sweep.add_argument("--x", type=_int_list, default=None, help="Comma-separated scale values.")
    sweep.add_argument("--x-range", type=_x_range, default=None, help="Inclusive range a..b.")
    sweep.add_argument(
        "--epsilon",
        type=float,
        default=None,
        help="Witness target; adds per-row checks and runs the witness search.",
    )
    sweep.add_argument("--out", type=Path, default=None, help="CSV path (default: stdout).")
    sweep.add_argument("--figures", type=Path, default=None, help="Directory for PNG charts.")

    maxi = sub.add_parser("maximize", help="Search for a high-quality clustering of a graph file.")
    maxi.add_argument("graph", type=Path)
    maxi.add_argument("--method", choices=("exhaustive", "greedy"), default="exhaustive")
    maxi.add_argument("--quality", choices=("qn", "qf", "q0", "qgamma"), default="qn")
    maxi.add_argument("--gamma", type=float, default=None)
    maxi.add_argument("--K", type=int, default=None, dest="k",
                      help="Exhaustive only: restrict to exactly K clusters.")
    maxi.add_argument("--out", type=Path, default=None, help="Write the best clustering here.")
    return parser


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(text, encoding="utf-8")


def _cmd_generate(args) -> int:
    params = FamilyParams(args.family, args.k, args.n1, args.n2)
    g = build_graph(params)
    out_dir: Path = args.out
    out_dir.mkdir(parents=True, exist_ok=True)
    stem = f"{params.family}_K{params.k}_N1-{params.n1}_N2-{params.n2}"
    written = []
    graph_path = out_dir / f"{stem}.edges"
    graph_path.write_text(write_edge_list(g), encoding="utf-8")
    written.append(graph_path)
    natural_path = out_dir / f"{stem}_V.clusters"
    natural_path.write_text(write_clustering(natural_clustering(params)), encoding="utf-8")
    written.append(natural_path)
    for j in args.j or ():
        balanced_path = out_dir / f"{stem}_U{j}.clusters"
        balanced_path.write_text(
            write_clustering(balanced_clustering(params.n, j)), encoding="utf-8"
        )
        written.append(balanced_path)
    for path in written:
        print(path)
    return EXIT_OK


def _load_graph(path: Path) -> Graph:
    return read_edge_list(path.read_text(encoding="utf-8"))


def _cmd_score(args) -> int:
    g = _load_graph(args.graph)
    c = read_clustering(args.clustering.read_text(encoding="utf-8"))
    report = quality_report(g, c, gamma=args.gamma)
    sys.stdout.write(score_csv(report))
    return EXIT_OK


def _cmd_table(args) -> int:
    xs = tuple(args.x) if args.x else None
    rows = table_rows(args.table, xs=xs, k=args.k, n1=args.n1)
    _emit(table_csv(rows), args.out)
    if args.figures is not None:
        from .plots import save_table_figures

        for path in save_table_figures(rows, args.figures, f"table{args.table}"):
            print(path, file=sys.stderr)
    return EXIT_OK


def _cmd_sweep(args) -> int:
    xs: list[int] = []
    if args.x:
        xs.extend(args.x)
    if args.x_range:
        xs.extend(args.x_range)
    if not xs:
        raise MalformedInputError("sweep needs --x or --x-range")
    rows = sweep_rows(args.family, args.k, xs, epsilon=args.epsilon)
    _emit(sweep_csv(rows), args.out)
    if args.epsilon is not None:
        witness = find_witness(args.k, args.epsilon, args.family)
        summary = (
            f"witness: x={witness.x} N1={witness.params.n1} N2={witness.params.n2} "
            f"J={witness.j} qn_natural={format_fixed(witness.qn_natural)} "
            f"qn_balanced={format_fixed(witness.qn_balanced)} "
            f"similarity={format_fixed(witness.similarity)}"
        )
        stream = sys.stdout if args.out is not None else sys.stderr
        print(summary, file=stream)
    if args.figures is not None:
        from .plots import save_sweep_figures

        stem = f"sweep_{args.family}_K{args.k}"
        for path in save_sweep_figures(rows, args.figures, stem):
            print(path, file=sys.stderr)
    return EXIT_OK


def _cmd_maximize(args) -> int:
    g = _load_graph(args.graph)
    if args.method == "exhaustive":
        result = brute_force_max(g, quality=args.quality, gamma=args.gamma, k=args.k)
    else:
        if args.k is not None:
            raise MalformedInputError("--K is only meaningful with --method exhaustive")
        result = greedy_agglomerative(g, quality=args.quality, gamma=args.gamma)
    lines = [
        "method,quality,gamma,score,clusters,evaluations,f_g_k",
        ",".join(
            [
                result.method,
                args.quality,
                "" if args.gamma is None else repr(args.gamma),
                repr(result.best_score),
                str(result.best_clustering.k),
                str(result.evaluations),
                str(max_edge_fraction(g, args.k))
                if args.k is not None and args.quality == "qf"
                else "",
            ]
        ),
    ]
    sys.stdout.write("\n".join(lines) + "\n")
    if args.out is not None:
        args.out.parent.mkdir(parents=True, exist_ok=True)
        args.out.write_text(write_clustering(result.best_clustering), encoding="utf-8")
        print(args.out, file=sys.stderr)
    return EXIT_OK


_COMMANDS = {
    "generate": _cmd_generate,
    "score": _cmd_score,
    "table": _cmd_table,
    "sweep": _cmd_sweep,
    "maximize": _cmd_maximize,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except _PARSE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except _PARAMETER_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARAMETER
    except InstanceTooLargeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except _UNDEFINED_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNDEFINED
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ModlabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_OTHER


if __name__ == "__main__":
    raise SystemExit(main())
