"""Wall-clock benchmarking of the counting algorithms.

Emits raw repetition timings as CSV with the fixed header
``label,n,m,algo,rep,usec,checksum``. Timings cover only the counting call,
never instance construction or parsing, and are reported as-is: no
aggregation and no assertions about growth rates. The checksum fingerprints
the counts vector so rows from different algorithms can be cross-checked.
"""

from __future__ import annotations

import time
import zlib
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .counting import DEFAULT_MEM_BUDGET, ReachCounts, count_bfs_all, count_bitset_closure
from .formats import gen_dag, gen_ksat
from .graphs import Digraph
from .reduction import build_reduction, pad_to_even

BENCH_CSV_HEADER = "label,n,m,algo,rep,usec,checksum"

ALGORITHMS: dict[str, Callable[[Digraph, int], ReachCounts]] = {
    "bfs": lambda g, mem_budget: count_bfs_all(g),
    "bitset": lambda g, mem_budget: count_bitset_closure(g, mem_budget),
}


@dataclass(frozen=True)
class BenchRecord:
    label: str
    n: int
    m: int
    algo: str
    rep: int
    usec: int
    checksum: str

    def as_csv_row(self) -> str:
        return (
            f"{self.label},{self.n},{self.m},{self.algo},"
            f"{self.rep},{self.usec},{self.checksum}"
        )


def counts_checksum(counts: Iterable[int]) -> str:
    """CRC-32 (hex) of the comma-joined decimal counts vector."""
    data = ",".join(map(str, counts)).encode()
    return f"{zlib.crc32(data):08x}"


def _build_instance(
    family: str, size: int, seed: int, ratio: float, avg_deg: float
) -> tuple[str, Digraph]:
    if family == "reduction":
        n_clauses = max(1, round(ratio * size))
        formula = gen_ksat(size, n_clauses, min(3, size), seed)
        rg = build_reduction(pad_to_even(formula))
        return f"reduction-n{size}", rg.graph
    if family == "dag":
        max_edges = size * (size - 1) // 2
        m = min(round(avg_deg * size), max_edges)
        return f"dag-N{size}", gen_dag(size, m, seed)
    raise ValueError(f"unknown family {family!r}")


def run_bench(
    family: str,
    sizes: Sequence[int],
    algos: Sequence[str] = ("bfs", "bitset"),
    reps: int = 3,
    seed: int = 0,
    ratio: float = 4.0,
    avg_deg: float = 5.0,
    mem_budget: int = DEFAULT_MEM_BUDGET,
) -> list[BenchRecord]:
    """Time the selected algorithms over one generated instance per size.

    ``family`` is ``"reduction"`` (size = CNF variable count, 3-CNF at
    ``ratio`` clauses per variable) or ``"dag"`` (size = vertex count at
    ``avg_deg`` edges per vertex). The instance for the i-th size is built
    with ``seed + i``, so a run is fully determined by its arguments.
    """
    for algo in algos:
        if algo not in ALGORITHMS:
            raise ValueError(f"unknown algorithm {algo!r}")
    records = []
    for index, size in enumerate(sizes):
        label, graph = _build_instance(family, size, seed + index, ratio, avg_deg)
        for algo in algos:
            run = ALGORITHMS[algo]
            for rep in range(reps):
                start = time.perf_counter_ns()
                counts = run(graph, mem_budget)
                elapsed = time.perf_counter_ns() - start
                records.append(
                    BenchRecord(
                        label=label,
                        n=graph.n_vertices,
                        m=graph.m_edges,
                        algo=algo,
                        rep=rep,
                        usec=elapsed // 1000,
                        checksum=counts_checksum(counts),
                    )
                )
    return records


def write_bench_csv(records: Iterable[BenchRecord]) -> str:
    lines = [BENCH_CSV_HEADER]
    lines.extend(r.as_csv_row() for r in records)
    return "\n".join(lines) + "\n"


def render_bench_plot(records: Sequence[BenchRecord], path: str) -> None:
    """Render wall time against edge count, one series per algorithm.

    The CSV is the benchmark contract; this figure is a convenience rendered
    alongside it.
    """
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    for algo in sorted({r.algo for r in records}):
        points = sorted((r.m, r.usec) for r in records if r.algo == algo)
        ax.plot(
            [m for m, _ in points],
            [usec for _, usec in points],
            marker="o",
            alpha=0.85,
            label=algo,
        )
    if records and all(r.m > 0 and r.usec > 0 for r in records):
        ax.set_xscale("log")
        ax.set_yscale("log")
    ax.set_xlabel("edges (M)")
    ax.set_ylabel("wall time (usec)")
    ax.set_title("reachability counting runtime")
    ax.grid(True, which="both", alpha=0.3)
    ax.legend()
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
