"""Exact per-vertex reachability counting.

``counts[v]`` is the number of vertices other than ``v`` that ``v`` can reach
along directed paths, i.e. the out-degree of ``v`` in the (irreflexive)
transitive closure. Three independent implementations are provided so that
results can be cross-checked: a per-source BFS, an SCC-condensed bitset
closure, and a deliberately plain oracle for tests.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable

from .graphs import Digraph, condense

ReachCounts = list[int]

DEFAULT_MEM_BUDGET = 2**31


class MemoryBudgetError(RuntimeError):
    """The closure bitmap would not fit in the configured byte budget."""

    def __init__(self, required_bytes: int, budget_bytes: int) -> None:
        super().__init__(
            f"transitive-closure bitmap needs about {required_bytes} bytes "
            f"but the budget is {budget_bytes}; use the per-source BFS "
            f"counter instead"
        )
        self.required_bytes = required_bytes
        self.budget_bytes = budget_bytes


def count_bfs_all(g: Digraph) -> ReachCounts:
    """Count reachable vertices from every source by repeated BFS.

    O(N * (N + M)) time, O(N) working memory. The count for ``v`` excludes
    ``v`` itself even when ``v`` lies on a cycle.
    """
    n = g.n_vertices
    adj = g._adj
    counts = [0] * n
    for source in range(n):
        seen = bytearray(n)
        seen[source] = 1
        queue = deque((source,))
        reached = 0
        while queue:
            for v in adj[queue.popleft()]:
                if not seen[v]:
                    seen[v] = 1
                    reached += 1
                    queue.append(v)
        counts[source] = reached
    return counts


def count_bitset_closure(g: Digraph, mem_budget: int = DEFAULT_MEM_BUDGET) -> ReachCounts:
    """Count reachable vertices via SCC condensation and bitset closure.

    Condenses the graph, then sweeps the condensation DAG once in reverse
    topological order, accumulating per-SCC reachability bitsets in arbitrary
    precision integers. All vertices of an SCC share one result, so the work
    is proportional to the condensation size rather than the vertex count.

    Raises :class:`MemoryBudgetError` before allocating anything when the
    S x S closure bitmap (S = number of SCCs) would exceed ``mem_budget``
    bytes.
    """
    cond = condense(g)
    s = cond.n_sccs
    required = s * ((s + 7) // 8)
    if required > mem_budget:
        raise MemoryBudgetError(required, mem_budget)

    dag_adj = cond.dag._adj
    reach_bits = [0] * s
    for c in range(s - 1, -1, -1):  # edges go low -> high, so sinks first
        bits = 0
        for succ in dag_adj[c]:
            bits |= reach_bits[succ] | (1 << succ)
        reach_bits[c] = bits

    sizes = cond.scc_sizes
    scc_counts = [0] * s
    if all(size == 1 for size in sizes):
        for c in range(s):
            scc_counts[c] = reach_bits[c].bit_count()
    else:
        for c in range(s):
            bits = reach_bits[c]
            total = sizes[c] - 1  # cycle mates count, the vertex itself does not
            while bits:
                lowest = bits & -bits
                total += sizes[lowest.bit_length() - 1]
                bits ^= lowest
            scc_counts[c] = total
    return [scc_counts[cond.scc_of[v]] for v in range(g.n_vertices)]


def count_oracle(g: Digraph) -> ReachCounts:
    """Reference counter for tests: one plain set-based traversal per source.

    No shared state between sources and no cleverness. Intended for graphs
    of at most about 1000 vertices.
    """
    counts = []
    for source in range(g.n_vertices):
        visited = {source}
        stack = [source]
        while stack:
            for v in g.out_neighbors(stack.pop()):
                if v not in visited:
                    visited.add(v)
                    stack.append(v)
        counts.append(len(visited) - 1)
    return counts


def reachable_from(g: Digraph, source: int) -> set[int]:
    """The set of vertices reachable from ``source``, including the source."""
    if not 0 <= source < g.n_vertices:
        raise ValueError(f"source {source} outside [0, {g.n_vertices})")
    adj = g._adj
    seen = bytearray(g.n_vertices)
    seen[source] = 1
    queue = deque((source,))
    out = {source}
    while queue:
        for v in adj[queue.popleft()]:
            if not seen[v]:
                seen[v] = 1
                out.add(v)
                queue.append(v)
    return out


def reach_targets(g: Digraph, source: int, targets: Iterable[int]) -> int:
    """How many of ``targets`` the source reaches, never counting itself."""
    target_set = set(targets)
    for t in target_set:
        if not 0 <= t < g.n_vertices:
            raise ValueError(f"target {t} outside [0, {g.n_vertices})")
    reached = reachable_from(g, source)
    return sum(1 for t in target_set if t != source and t in reached)
