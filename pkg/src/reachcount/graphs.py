"""Immutable directed graphs with SCC condensation and acyclicity checks."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class GraphError(ValueError):
    """Raised when graph construction input is malformed."""


class Digraph:
    """A directed graph over dense 0-based vertex ids, immutable once built.

    Duplicate edges collapse on ingestion. Self-loops are stored (input files
    may contain them) but reachability counts are defined over distinct other
    vertices, so they never affect results. Out-neighbors enumerate in
    first-occurrence order of the ingested edge list, stable across calls.

    Build instances with :func:`build_digraph`.
    """

    __slots__ = ("n_vertices", "m_edges", "_adj")

    def __init__(
        self,
        n_vertices: int,
        adjacency: tuple[tuple[int, ...], ...],
        m_edges: int,
    ) -> None:
        self.n_vertices = n_vertices
        self.m_edges = m_edges
        self._adj = adjacency

    def out_neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def out_degree(self, v: int) -> int:
        return len(self._adj[v])

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield every edge, grouped by source vertex in adjacency order."""
        for u, neighbors in enumerate(self._adj):
            for v in neighbors:
                yield (u, v)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def has_self_loop(self) -> bool:
        return any(u in neighbors for u, neighbors in enumerate(self._adj))

    def reverse(self) -> "Digraph":
        """The graph with every edge flipped; neighbor order stays deterministic."""
        rev: list[list[int]] = [[] for _ in range(self.n_vertices)]
        for u, neighbors in enumerate(self._adj):
            for v in neighbors:
                rev[v].append(u)
        return Digraph(self.n_vertices, tuple(tuple(r) for r in rev), self.m_edges)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        if self.n_vertices != other.n_vertices:
            return False
        return all(
            sorted(self._adj[v]) == sorted(other._adj[v])
            for v in range(self.n_vertices)
        )

    __hash__ = None  # mutable-free but compared by edge set; not hashable

    def __repr__(self) -> str:
        return f"Digraph(n_vertices={self.n_vertices}, m_edges={self.m_edges})"


def build_digraph(n_vertices: int, edge_list: Iterable[Sequence[int]]) -> Digraph:
    """Build a :class:`Digraph` from an edge list, collapsing duplicates.

    Raises :class:`GraphError` naming the offending edge index when an
    endpoint falls outside ``[0, n_vertices)``.
    """
    if n_vertices < 0:
        raise GraphError(f"n_vertices must be nonnegative, got {n_vertices}")
    adjacency: list[list[int]] = [[] for _ in range(n_vertices)]
    seen: set[tuple[int, int]] = set()
    for index, (u, v) in enumerate(edge_list):
        if not (0 <= u < n_vertices and 0 <= v < n_vertices):
            raise GraphError(
                f"edge {index} = ({u}, {v}) has an endpoint outside "
                f"[0, {n_vertices})"
            )
        if (u, v) in seen:
            continue
        seen.add((u, v))
        adjacency[u].append(v)
    return Digraph(n_vertices, tuple(tuple(a) for a in adjacency), len(seen))


@dataclass(frozen=True)
class Condensation:
    """SCC condensation of a digraph.

    SCC ids are assigned in topological order: every edge of ``dag`` goes
    from a lower id to a higher id, so ``topo_order`` is simply ``0..S-1``.
    """

    scc_of: tuple[int, ...]
    scc_sizes: tuple[int, ...]
    dag: Digraph
    topo_order: tuple[int, ...]

    @property
    def n_sccs(self) -> int:
        return len(self.scc_sizes)


def condense(g: Digraph) -> Condensation:
    """Compute strongly connected components and the condensation DAG.

    Uses an iterative Tarjan walk (no recursion, so vertex count is bounded
    only by memory). Deterministic: roots are tried in ascending vertex order
    and neighbors in adjacency order.
    """
    n = g.n_vertices
    adj = g._adj
    index = [-1] * n
    low = [0] * n
    on_stack = bytearray(n)
    stack: list[int] = []
    comp_of = [-1] * n
    comp_sizes: list[int] = []
    next_index = 0

    for root in range(n):
        if index[root] != -1:
            continue
        call: list[tuple[int, int]] = [(root, 0)]
        while call:
            v, ptr = call.pop()
            if ptr == 0:
                index[v] = low[v] = next_index
                next_index += 1
                stack.append(v)
                on_stack[v] = 1
            neighbors = adj[v]
            descended = False
            while ptr < len(neighbors):
                w = neighbors[ptr]
                ptr += 1
                if index[w] == -1:
                    call.append((v, ptr))
                    call.append((w, 0))
                    descended = True
                    break
                if on_stack[w] and index[w] < low[v]:
                    low[v] = index[w]
            if descended:
                continue
            if low[v] == index[v]:
                size = 0
                while True:
                    w = stack.pop()
                    on_stack[w] = 0
                    comp_of[w] = len(comp_sizes)
                    size += 1
                    if w == v:
                        break
                comp_sizes.append(size)
            if call and low[v] < low[call[-1][0]]:
                low[call[-1][0]] = low[v]

    # Tarjan emits components in reverse topological order; flip the ids so
    # that every condensation edge goes from a lower id to a higher one.
    s = len(comp_sizes)
    scc_of = tuple(s - 1 - c for c in comp_of)
    scc_sizes = tuple(reversed(comp_sizes))
    dag_edges = []
    for u, v in g.edges():
        cu, cv = scc_of[u], scc_of[v]
        if cu != cv:
            dag_edges.append((cu, cv))
    dag = build_digraph(s, dag_edges)
    return Condensation(scc_of, scc_sizes, dag, tuple(range(s)))


def is_acyclic(g: Digraph) -> bool:
    """True iff the graph has no directed cycle (self-loops included)."""
    if g.has_self_loop():
        return False
    return condense(g).n_sccs == g.n_vertices
