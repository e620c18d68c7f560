"""Parsers, serializers, and seeded random generators.

Two text formats are handled:

* DIMACS CNF (read and write). Lines starting with ``c`` are comments, one
  ``p cnf <vars> <clauses>`` header, then whitespace-separated nonzero
  integer literals with ``0`` terminating each clause (clauses may span
  lines). Literal ``i > 0`` is variable ``i-1`` positive, ``i < 0`` is
  variable ``-i-1`` negated.

* ``dg v1`` digraphs. Lines starting with ``#`` are comments, one
  ``p dg <N> <M>`` header, ``e <u> <v>`` records with 0-based endpoints,
  then optional translation annotations: a single ``l <half-width>`` record
  and one ``v <id> <X|C|Y> <value>`` record per vertex (the value is a
  decimal assignment mask for X and Y vertices and a clause index for C
  vertices). Serialization is deterministic, so equal graphs produce equal
  bytes.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .graphs import Digraph, build_digraph
from .reduction import CnfFormula, ReductionGraph


class ParseError(ValueError):
    """A malformed input file; carries the 1-based line number."""

    def __init__(self, line_no: int, message: str) -> None:
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def parse_dimacs(text: str) -> CnfFormula:
    """Parse DIMACS CNF text into a :class:`CnfFormula`.

    Raises :class:`ParseError` with a line number for a missing or duplicate
    header, a non-integer token, a literal whose variable exceeds the
    declared count, an unterminated clause, or a clause-count mismatch.
    """
    n_vars: int | None = None
    declared_clauses = 0
    clauses: list[tuple[tuple[int, bool], ...]] = []
    current: list[tuple[int, bool]] = []
    last_line = 1
    for line_no, raw in enumerate(text.splitlines(), 1):
        last_line = line_no
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            if n_vars is not None:
                raise ParseError(line_no, "duplicate 'p cnf' header")
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ParseError(line_no, f"malformed header {line!r}")
            try:
                n_vars = int(parts[2])
                declared_clauses = int(parts[3])
            except ValueError:
                raise ParseError(line_no, f"non-integer header field in {line!r}") from None
            if n_vars < 0 or declared_clauses < 0:
                raise ParseError(line_no, "header counts must be nonnegative")
            continue
        if n_vars is None:
            raise ParseError(line_no, "clause data before 'p cnf' header")
        for token in line.split():
            try:
                lit = int(token)
            except ValueError:
                raise ParseError(line_no, f"non-integer token {token!r}") from None
            if lit == 0:
                clauses.append(tuple(current))
                current.clear()
            else:
                var = abs(lit) - 1
                if var >= n_vars:
                    raise ParseError(
                        line_no,
                        f"literal {lit} names a variable beyond the declared {n_vars}",
                    )
                current.append((var, lit > 0))
    if n_vars is None:
        raise ParseError(last_line, "missing 'p cnf' header")
    if current:
        raise ParseError(last_line, "unterminated clause (no trailing 0)")
    if len(clauses) != declared_clauses:
        raise ParseError(
            last_line,
            f"header declares {declared_clauses} clauses but the file has {len(clauses)}",
        )
    return CnfFormula(n_vars, tuple(clauses))


def write_dimacs(f: CnfFormula) -> str:
    """Serialize a formula as DIMACS CNF, one clause per line."""
    lines = [f"p cnf {f.n_vars} {f.n_clauses}"]
    for clause in f.clauses:
        nums = [str(var + 1 if positive else -(var + 1)) for var, positive in clause]
        nums.append("0")
        lines.append(" ".join(nums))
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class ReductionAnnotations:
    """Vertex labels carried by a serialized translation graph.

    ``labels[id]`` is ``(kind, value)`` with kind ``"X"``, ``"C"`` or ``"Y"``;
    the value is an assignment mask for X and Y and a clause index for C.
    """

    l: int
    labels: tuple[tuple[str, int], ...]

    @classmethod
    def from_reduction(cls, rg: ReductionGraph) -> "ReductionAnnotations":
        labels: list[tuple[str, int]] = []
        labels.extend(("X", mask) for mask in range(len(rg.x_vertex_of)))
        labels.extend(("C", j) for j in range(rg.n_clauses))
        labels.extend(("Y", mask) for mask in range(len(rg.y_vertex_of)))
        return cls(rg.l, tuple(labels))

    def vertices_of(self, kind: str) -> list[tuple[int, int]]:
        """All ``(vertex id, value)`` pairs with the given label kind."""
        return [(v, value) for v, (k, value) in enumerate(self.labels) if k == kind]


def write_graph(g: Digraph, annotations: ReductionAnnotations | None = None) -> str:
    """Serialize a digraph (and optional annotations) as ``dg v1`` text.

    Edges are emitted sorted by (source, target); with the canonical vertex
    layout of translated graphs this lists all X->C edges by source mask and
    clause index, then all C->Y edges by clause index and target mask.
    """
    lines = [f"p dg {g.n_vertices} {g.m_edges}"]
    lines.extend(f"e {u} {v}" for u, v in sorted(g.edges()))
    if annotations is not None:
        if len(annotations.labels) != g.n_vertices:
            raise ValueError(
                f"annotations label {len(annotations.labels)} vertices but the "
                f"graph has {g.n_vertices}"
            )
        lines.append(f"l {annotations.l}")
        lines.extend(
            f"v {v} {kind} {value}"
            for v, (kind, value) in enumerate(annotations.labels)
        )
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> tuple[Digraph, ReductionAnnotations | None]:
    """Parse ``dg v1`` text; inverse of :func:`write_graph` on its output.

    Raises :class:`ParseError` with a line number for header problems,
    out-of-range endpoints or vertex ids, duplicate or incomplete vertex
    annotations, unknown record types, and an edge count that disagrees with
    the header.
    """
    n_vertices = -1
    declared_edges = 0
    header_line = 0
    edges: list[tuple[int, int]] = []
    half_width: int | None = None
    labels: dict[int, tuple[str, int]] = {}
    first_v_line = 0

    def ints(line_no: int, fields: list[str]) -> list[int]:
        try:
            return [int(f) for f in fields]
        except ValueError:
            raise ParseError(line_no, f"non-integer field in {' '.join(fields)!r}") from None

    for line_no, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        kind = fields[0]
        if kind == "p":
            if n_vertices >= 0:
                raise ParseError(line_no, "duplicate 'p dg' header")
            if len(fields) != 4 or fields[1] != "dg":
                raise ParseError(line_no, f"malformed header {line!r}")
            n_vertices, declared_edges = ints(line_no, fields[2:])
            if n_vertices < 0 or declared_edges < 0:
                raise ParseError(line_no, "header counts must be nonnegative")
            header_line = line_no
            continue
        if n_vertices < 0:
            raise ParseError(line_no, "record before 'p dg' header")
        if kind == "e":
            if len(fields) != 3:
                raise ParseError(line_no, f"malformed edge record {line!r}")
            u, v = ints(line_no, fields[1:])
            if not (0 <= u < n_vertices and 0 <= v < n_vertices):
                raise ParseError(
                    line_no, f"edge ({u}, {v}) outside [0, {n_vertices})"
                )
            edges.append((u, v))
        elif kind == "l":
            if len(fields) != 2:
                raise ParseError(line_no, f"malformed half-width record {line!r}")
            if half_width is not None:
                raise ParseError(line_no, "duplicate 'l' record")
            (half_width,) = ints(line_no, fields[1:])
            if half_width < 0:
                raise ParseError(line_no, "half-width must be nonnegative")
        elif kind == "v":
            if len(fields) != 4 or fields[2] not in ("X", "C", "Y"):
                raise ParseError(line_no, f"malformed vertex annotation {line!r}")
            vid, value = ints(line_no, [fields[1], fields[3]])
            if not 0 <= vid < n_vertices:
                raise ParseError(line_no, f"vertex id {vid} outside [0, {n_vertices})")
            if value < 0:
                raise ParseError(line_no, "annotation value must be nonnegative")
            if vid in labels:
                raise ParseError(line_no, f"duplicate annotation for vertex {vid}")
            labels[vid] = (fields[2], value)
            first_v_line = first_v_line or line_no
        else:
            raise ParseError(line_no, f"unknown record type {kind!r}")

    if n_vertices < 0:
        raise ParseError(1, "missing 'p dg' header")
    if len(edges) != declared_edges:
        raise ParseError(
            header_line,
            f"header declares {declared_edges} edges but the file has {len(edges)}",
        )
    graph = build_digraph(n_vertices, edges)

    annotations = None
    if labels or half_width is not None:
        if half_width is None:
            raise ParseError(first_v_line, "vertex annotations without an 'l' record")
        if len(labels) != n_vertices:
            missing = next(v for v in range(n_vertices) if v not in labels)
            raise ParseError(header_line, f"vertex {missing} has no annotation")
        annotations = ReductionAnnotations(
            half_width, tuple(labels[v] for v in range(n_vertices))
        )
    return graph, annotations


def gen_ksat(n: int, m: int, k: int, seed: int) -> CnfFormula:
    """Deterministic random k-CNF with ``m`` clauses over ``n >= 1`` variables.

    Each clause picks ``k`` distinct variables and independent polarities.
    Reproducibility contract, frozen across releases: draws come from a fresh
    ``random.Random(seed)``; per clause, a partial Fisher-Yates pass over
    ``[0, n)`` picks variable ``i`` via ``rng.randrange(i, n)``, immediately
    followed by one ``rng.getrandbits(1)`` polarity bit (1 means positive),
    with literals kept in draw order.
    """
    if n < 1:
        raise ValueError(f"need at least one variable, got n={n}")
    if not 0 <= k <= n:
        raise ValueError(f"clause width k={k} must lie in [0, {n}]")
    if m < 0:
        raise ValueError(f"clause count must be nonnegative, got {m}")
    rng = random.Random(seed)
    clauses = []
    for _ in range(m):
        pool = list(range(n))
        clause = []
        for i in range(k):
            j = rng.randrange(i, n)
            pool[i], pool[j] = pool[j], pool[i]
            clause.append((pool[i], rng.getrandbits(1) == 1))
        clauses.append(tuple(clause))
    return CnfFormula(n, tuple(clauses))


def _pair_from_index(t: int, n: int) -> tuple[int, int]:
    """Decode pair index ``t`` into the t-th pair (i, j) with i < j < n."""
    # cum(i) = pairs whose first element is below i; binary search the last
    # i with cum(i) <= t.
    lo, hi = 0, n - 1
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if mid * (2 * n - mid - 1) // 2 <= t:
            lo = mid
        else:
            hi = mid - 1
    offset = t - lo * (2 * n - lo - 1) // 2
    return lo, lo + 1 + offset


def gen_dag(n: int, m: int, seed: int) -> Digraph:
    """Deterministic random DAG with ``n`` vertices and ``m`` distinct edges.

    A random vertex permutation orders the vertices; ``m`` distinct pairs are
    drawn from the n*(n-1)/2 position pairs and oriented along the
    permutation, which rules out cycles. Reproducibility contract, frozen
    across releases: draws come from a fresh ``random.Random(seed)``; the
    permutation is shuffled by swaps ``rng.randrange(i + 1)`` for ``i`` from
    ``n - 1`` down to 1; pair indices are then drawn by a partial
    Fisher-Yates pass over ``range(n*(n-1)//2)`` when ``4 * m`` reaches that
    total and by rejection sampling via ``rng.randrange(total)`` otherwise,
    with edges kept in draw order.
    """
    if n < 0:
        raise ValueError(f"vertex count must be nonnegative, got {n}")
    total = n * (n - 1) // 2
    if not 0 <= m <= total:
        raise ValueError(f"edge count {m} must lie in [0, {total}] for n={n}")
    rng = random.Random(seed)
    perm = list(range(n))
    for i in range(n - 1, 0, -1):
        j = rng.randrange(i + 1)
        perm[i], perm[j] = perm[j], perm[i]

    picks: list[int] = []
    if m and 4 * m >= total:
        indices = list(range(total))
        for i in range(m):
            j = rng.randrange(i, total)
            indices[i], indices[j] = indices[j], indices[i]
            picks.append(indices[i])
    elif m:
        chosen: set[int] = set()
        while len(picks) < m:
            t = rng.randrange(total)
            if t not in chosen:
                chosen.add(t)
                picks.append(t)

    edges = []
    for t in picks:
        i, j = _pair_from_index(t, n)
        edges.append((perm[i], perm[j]))
    return build_digraph(n, edges)
