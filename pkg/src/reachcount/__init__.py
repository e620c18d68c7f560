"""Per-vertex reachability counting for digraphs, and a satisfiability
decider that works purely from those counts on translated CNF formulas."""

from .bench import (
    BENCH_CSV_HEADER,
    BenchRecord,
    counts_checksum,
    render_bench_plot,
    run_bench,
    write_bench_csv,
)
from .counting import (
    DEFAULT_MEM_BUDGET,
    MemoryBudgetError,
    ReachCounts,
    count_bfs_all,
    count_bitset_closure,
    count_oracle,
    reach_targets,
    reachable_from,
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
from .graphs import Condensation, Digraph, GraphError, build_digraph, condense, is_acyclic
from .reduction import (
    DEFAULT_SIDE_CAP,
    Clause,
    CnfFormula,
    InstanceCapError,
    Literal,
    ReductionGraph,
    SatVerdict,
    VariableSplit,
    brute_force_sat,
    build_reduction,
    decide_sat,
    evaluate_clause_side,
    extract_witness,
    pad_to_even,
    split_variables,
    witness_satisfies,
)

__version__ = "0.1.0"

__all__ = [
    "BENCH_CSV_HEADER",
    "BenchRecord",
    "Clause",
    "CnfFormula",
    "Condensation",
    "DEFAULT_MEM_BUDGET",
    "DEFAULT_SIDE_CAP",
    "Digraph",
    "GraphError",
    "InstanceCapError",
    "Literal",
    "MemoryBudgetError",
    "ParseError",
    "ReachCounts",
    "ReductionAnnotations",
    "ReductionGraph",
    "SatVerdict",
    "VariableSplit",
    "brute_force_sat",
    "build_digraph",
    "build_reduction",
    "condense",
    "count_bfs_all",
    "count_bitset_closure",
    "count_oracle",
    "counts_checksum",
    "decide_sat",
    "evaluate_clause_side",
    "extract_witness",
    "gen_dag",
    "gen_ksat",
    "is_acyclic",
    "pad_to_even",
    "parse_dimacs",
    "parse_graph",
    "reach_targets",
    "reachable_from",
    "render_bench_plot",
    "run_bench",
    "split_variables",
    "witness_satisfies",
    "write_bench_csv",
    "write_dimacs",
    "write_graph",
]
