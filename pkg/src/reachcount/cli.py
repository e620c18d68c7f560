"""Command-line interface.

Subcommands: ``count`` (per-vertex reachability counts of a digraph file),
``reduce`` (CNF to reachability graph), ``solve`` (decide satisfiability via
the translated graph's counts), ``gen`` (seeded instance generators), and
``bench`` (timing sweeps).

Exit codes: 0 success (``solve``: satisfiable), 1 ``solve`` unsatisfiable,
2 unreadable or malformed input, 3 memory budget exceeded, 4 instance cap
exceeded. Machine-readable output goes to stdout or ``-o``; diagnostics go
to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bench import render_bench_plot, run_bench, write_bench_csv
from .counting import (
    DEFAULT_MEM_BUDGET,
    MemoryBudgetError,
    count_bfs_all,
    count_bitset_closure,
)
from .formats import (
    ParseError,
    ReductionAnnotations,
    gen_dag,
    gen_ksat,
    parse_dimacs,
    parse_graph,
    write_dimacs,
    write_graph,
)
from .graphs import Digraph, GraphError
from .reduction import (
    DEFAULT_SIDE_CAP,
    InstanceCapError,
    build_reduction,
    decide_sat,
    pad_to_even,
)

EXIT_OK = 0
EXIT_UNSAT = 1
EXIT_PARSE = 2
EXIT_MEMORY = 3
EXIT_CAP = 4


def _fail(code: int, message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def _read_text(path: str) -> str:
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _emit(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)


def _run_counts(g: Digraph, algo: str, mem_budget: int) -> list[int]:
    if algo == "bitset":
        return count_bitset_closure(g, mem_budget)
    return count_bfs_all(g)


def _cmd_count(args: argparse.Namespace) -> int:
    try:
        graph, _ = parse_graph(_read_text(args.graph))
    except (OSError, ParseError, GraphError) as exc:
        return _fail(EXIT_PARSE, str(exc))
    try:
        counts = _run_counts(graph, args.algo, args.mem_budget)
    except MemoryBudgetError as exc:
        return _fail(EXIT_MEMORY, f"{exc}; retry with --algo bfs")
    if args.format == "jsonl":
        lines = [json.dumps({"id": v, "count": c}) for v, c in enumerate(counts)]
    else:
        lines = [f"{v},{c}" for v, c in enumerate(counts)]
    _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK


def _cmd_reduce(args: argparse.Namespace) -> int:
    try:
        formula = parse_dimacs(_read_text(args.cnf))
    except (OSError, ParseError, ValueError) as exc:
        return _fail(EXIT_PARSE, str(exc))
    try:
        rg = build_reduction(pad_to_even(formula), side_cap=args.cap)
    except InstanceCapError as exc:
        return _fail(EXIT_CAP, str(exc))
    text = write_graph(rg.graph, ReductionAnnotations.from_reduction(rg))
    _emit(text, args.output)
    print(f"N={rg.graph.n_vertices} M={rg.graph.m_edges} l={rg.l}")
    return EXIT_OK


def _cmd_solve(args: argparse.Namespace) -> int:
    try:
        formula = parse_dimacs(_read_text(args.cnf))
    except (OSError, ParseError, ValueError) as exc:
        return _fail(EXIT_PARSE, str(exc))
    padded = pad_to_even(formula)
    try:
        rg = build_reduction(padded, side_cap=args.cap)
    except InstanceCapError as exc:
        return _fail(EXIT_CAP, str(exc))
    try:
        counts = _run_counts(rg.graph, args.algo, args.mem_budget)
    except MemoryBudgetError as exc:
        return _fail(EXIT_MEMORY, f"{exc}; retry with --algo bfs")
    verdict = decide_sat(rg, counts)
    if not verdict.satisfiable:
        print("UNSAT")
        return EXIT_UNSAT
    print("SAT")
    if args.witness:
        x_mask, y_mask = verdict.witness
        assignment = x_mask | (y_mask << rg.l)
        for var in range(formula.n_vars):
            value = "T" if assignment >> var & 1 else "F"
            print(f"x{var + 1}={value}")
    return EXIT_OK


def _cmd_gen(args: argparse.Namespace) -> int:
    try:
        if args.family == "ksat":
            formula = gen_ksat(args.vars, args.clauses, args.k, args.seed)
            text = write_dimacs(formula)
        else:
            graph = gen_dag(args.nodes, args.edges, args.seed)
            text = write_graph(graph)
    except ValueError as exc:
        return _fail(EXIT_PARSE, str(exc))
    _emit(text, args.output)
    return EXIT_OK


def _cmd_bench(args: argparse.Namespace) -> int:
    try:
        sizes = [int(s) for s in args.sizes.split(",") if s]
        algos = [a for a in args.algos.split(",") if a]
        records = run_bench(
            family=args.family,
            sizes=sizes,
            algos=algos,
            reps=args.reps,
            seed=args.seed,
            ratio=args.ratio,
            avg_deg=args.avg_deg,
            mem_budget=args.mem_budget,
        )
    except ValueError as exc:
        return _fail(EXIT_PARSE, str(exc))
    except MemoryBudgetError as exc:
        return _fail(EXIT_MEMORY, f"{exc}; retry with --algos bfs")
    _emit(write_bench_csv(records), args.output)
    if args.plot is not None:
        render_bench_plot(records, args.plot)
        print(f"plot written to {args.plot}", file=sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="reachcount",
        description="Per-vertex reachability counts and a CNF-to-reachability solver.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_algo(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--algo",
            choices=("bfs", "bitset"),
            default="bfs",
            help="counting algorithm (default: bfs)",
        )
        p.add_argument(
            "--mem-budget",
            type=int,
            default=DEFAULT_MEM_BUDGET,
            metavar="BYTES",
            help="byte budget for the bitset closure (default: 2^31)",
        )

    p_count = sub.add_parser("count", help="reachability counts of a dg v1 graph file")
    p_count.add_argument("graph", help="path to a dg v1 graph file")
    add_algo(p_count)
    p_count.add_argument(
        "--format", choices=("csv", "jsonl"), default="csv", help="output record format"
    )
    p_count.add_argument("-o", "--output", metavar="PATH", help="write records here instead of stdout")
    p_count.set_defaults(func=_cmd_count)

    p_reduce = sub.add_parser("reduce", help="translate a DIMACS CNF into a dg v1 graph")
    p_reduce.add_argument("cnf", help="path to a DIMACS CNF file")
    p_reduce.add_argument(
        "-o", "--output", metavar="PATH", required=True, help="write the graph here"
    )
    p_reduce.add_argument(
        "--cap",
        type=int,
        default=DEFAULT_SIDE_CAP,
        metavar="N",
        help="refuse instances needing N or more vertices per side (default: 2^20)",
    )
    p_reduce.set_defaults(func=_cmd_reduce)

    p_solve = sub.add_parser("solve", help="decide satisfiability via reachability counts")
    p_solve.add_argument("cnf", help="path to a DIMACS CNF file")
    add_algo(p_solve)
    p_solve.add_argument(
        "--witness", action="store_true", help="print a satisfying assignment when SAT"
    )
    p_solve.add_argument(
        "--cap",
        type=int,
        default=DEFAULT_SIDE_CAP,
        metavar="N",
        help="refuse instances needing N or more vertices per side (default: 2^20)",
    )
    p_solve.set_defaults(func=_cmd_solve)

    p_gen = sub.add_parser("gen", help="generate seeded random instances")
    gen_sub = p_gen.add_subparsers(dest="family", required=True)
    p_ksat = gen_sub.add_parser("ksat", help="random k-CNF in DIMACS format")
    p_ksat.add_argument("--vars", type=int, required=True, help="number of variables")
    p_ksat.add_argument("--clauses", type=int, required=True, help="number of clauses")
    p_ksat.add_argument("--k", type=int, default=3, help="literals per clause (default: 3)")
    p_ksat.add_argument("--seed", type=int, default=0, help="RNG seed (default: 0)")
    p_ksat.add_argument("-o", "--output", metavar="PATH", help="output path (default: stdout)")
    p_ksat.set_defaults(func=_cmd_gen)
    p_dag = gen_sub.add_parser("dag", help="random DAG in dg v1 format")
    p_dag.add_argument("--nodes", type=int, required=True, help="number of vertices")
    p_dag.add_argument("--edges", type=int, required=True, help="number of edges")
    p_dag.add_argument("--seed", type=int, default=0, help="RNG seed (default: 0)")
    p_dag.add_argument("-o", "--output", metavar="PATH", help="output path (default: stdout)")
    p_dag.set_defaults(func=_cmd_gen)

    p_bench = sub.add_parser("bench", help="time the counting algorithms")
    p_bench.add_argument(
        "--family",
        choices=("reduction", "dag"),
        default="reduction",
        help="instance family (default: reduction)",
    )
    p_bench.add_argument(
        "--sizes",
        required=True,
        metavar="A,B,...",
        help="comma-separated sizes: CNF variable counts (reduction) or vertex counts (dag)",
    )
    p_bench.add_argument(
        "--algos",
        default="bfs,bitset",
        metavar="A,B",
        help="comma-separated algorithms to time (default: bfs,bitset)",
    )
    p_bench.add_argument("--reps", type=int, default=3, help="repetitions per instance (default: 3)")
    p_bench.add_argument("--seed", type=int, default=0, help="base RNG seed (default: 0)")
    p_bench.add_argument(
        "--ratio",
        type=float,
        default=4.0,
        help="clauses per variable for the reduction family (default: 4.0)",
    )
    p_bench.add_argument(
        "--avg-deg",
        type=float,
        default=5.0,
        help="edges per vertex for the dag family (default: 5.0)",
    )
    p_bench.add_argument(
        "--mem-budget",
        type=int,
        default=DEFAULT_MEM_BUDGET,
        metavar="BYTES",
        help="byte budget for the bitset closure (default: 2^31)",
    )
    p_bench.add_argument("-o", "--output", metavar="PATH", help="CSV path (default: stdout)")
    p_bench.add_argument(
        "--plot", metavar="PATH", help="also render a runtime figure to this file"
    )
    p_bench.set_defaults(func=_cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
