"""CNF formulas and their translation into layered reachability graphs.

A formula over an even number of variables splits into an X half (the first
n/2 variables) and a Y half (the rest). The translated graph has one vertex
per X half-assignment, one per clause, and one per Y half-assignment. An
X vertex points at every clause it leaves unsatisfied on the X side, and a
clause points at every Y half-assignment that leaves it unsatisfied on the
Y side. A full assignment then satisfies the formula exactly when its X part
cannot reach its Y part, so satisfiability can be read off reachability
counts alone: the formula is satisfiable iff some X vertex reaches fewer
than all 2^(n/2) Y vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .counting import reachable_from
from .graphs import Digraph, build_digraph


class Literal(NamedTuple):
    var: int
    positive: bool


Clause = tuple[Literal, ...]

DEFAULT_SIDE_CAP = 2**20


class InstanceCapError(ValueError):
    """The translation would need more vertices per side than allowed."""

    def __init__(self, required_side: int, side_cap: int) -> None:
        super().__init__(
            f"translation needs {required_side} vertices per side but the "
            f"cap allows fewer than {side_cap}"
        )
        self.required_side = required_side
        self.side_cap = side_cap


@dataclass(frozen=True)
class CnfFormula:
    """A CNF formula: ``n_vars`` variables indexed from 0, clauses as given.

    Duplicate clauses and repeated or complementary literals inside a clause
    are kept verbatim; they are legal CNF and the translation handles them
    without special cases.
    """

    n_vars: int
    clauses: tuple[Clause, ...]

    def __post_init__(self) -> None:
        if self.n_vars < 0:
            raise ValueError(f"n_vars must be nonnegative, got {self.n_vars}")
        normalized = tuple(
            tuple(Literal(int(var), bool(pos)) for var, pos in clause)
            for clause in self.clauses
        )
        for ci, clause in enumerate(normalized):
            for lit in clause:
                if not 0 <= lit.var < self.n_vars:
                    raise ValueError(
                        f"clause {ci}: variable index {lit.var} outside "
                        f"[0, {self.n_vars})"
                    )
        object.__setattr__(self, "clauses", normalized)

    @property
    def n_clauses(self) -> int:
        return len(self.clauses)

    @property
    def k(self) -> int:
        """Width of the widest clause (0 for a formula with no clauses)."""
        return max((len(c) for c in self.clauses), default=0)


@dataclass(frozen=True)
class VariableSplit:
    """The X/Y halves of an even-width variable set."""

    l: int
    x_vars: tuple[int, ...]
    y_vars: tuple[int, ...]


@dataclass(frozen=True)
class SatVerdict:
    """Outcome of a satisfiability decision.

    ``witness`` is ``(x_mask, y_mask)`` over the padded variable split when
    satisfiable, else ``None``. Bit ``i`` of a mask is the truth value of the
    side's variable ``i``.
    """

    satisfiable: bool
    witness: tuple[int, int] | None = None


@dataclass(frozen=True)
class ReductionGraph:
    """A translated formula: the graph plus the vertex bookkeeping.

    Vertex layout is canonical: X vertices first (ids equal their masks),
    then clause vertices in clause order, then Y vertices in mask order.
    """

    graph: Digraph
    l: int
    x_vertex_of: tuple[int, ...]
    y_vertex_of: tuple[int, ...]
    clause_vertex_of: tuple[int, ...]
    partition: tuple[str, ...]

    @property
    def n_clauses(self) -> int:
        return len(self.clause_vertex_of)


def pad_to_even(f: CnfFormula) -> CnfFormula:
    """Return ``f`` unchanged if ``n_vars`` is even, else add one unused variable."""
    if f.n_vars % 2 == 0:
        return f
    return CnfFormula(f.n_vars + 1, f.clauses)


def split_variables(f: CnfFormula) -> VariableSplit:
    """Split an even-width formula's variables into X and Y halves."""
    if f.n_vars % 2:
        raise ValueError(f"variable count {f.n_vars} is odd; pad_to_even first")
    l = f.n_vars // 2
    return VariableSplit(l, tuple(range(l)), tuple(range(l, 2 * l)))


def evaluate_clause_side(clause: Clause, mask: int, side: str, split: VariableSplit) -> bool:
    """True iff some literal of ``clause`` on the given side is satisfied.

    ``side`` is ``"X"`` or ``"Y"``; bit ``i`` of ``mask`` is the value of the
    side's variable ``i``. Literals belonging to the other side are ignored,
    and a clause with no literals on this side is unsatisfied for every mask.
    """
    if side == "X":
        lo, hi = 0, split.l
    elif side == "Y":
        lo, hi = split.l, 2 * split.l
    else:
        raise ValueError(f"side must be 'X' or 'Y', got {side!r}")
    for var, positive in clause:
        if lo <= var < hi and (mask >> (var - lo) & 1) == positive:
            return True
    return False


def build_reduction(f: CnfFormula, side_cap: int = DEFAULT_SIDE_CAP) -> ReductionGraph:
    """Translate an even-width CNF formula into its reachability graph.

    The graph has N = 2 * 2^(n/2) + n_clauses vertices and at most
    2 * 2^(n/2) * n_clauses edges. Refuses with :class:`InstanceCapError`
    when a side would need ``side_cap`` or more vertices.
    """
    if f.n_vars % 2:
        raise ValueError(f"variable count {f.n_vars} is odd; pad_to_even first")
    l = f.n_vars // 2
    side = 1 << l
    if side >= side_cap:
        raise InstanceCapError(side, side_cap)

    # (bit position, polarity) per clause, restricted to one side.
    x_lits = [
        [(lit.var, 1 if lit.positive else 0) for lit in cl if lit.var < l]
        for cl in f.clauses
    ]
    y_lits = [
        [(lit.var - l, 1 if lit.positive else 0) for lit in cl if lit.var >= l]
        for cl in f.clauses
    ]

    n_clauses = f.n_clauses
    c_base = side
    y_base = side + n_clauses
    edges: list[tuple[int, int]] = []
    for mask in range(side):
        for j, lits in enumerate(x_lits):
            if not any(mask >> pos & 1 == pol for pos, pol in lits):
                edges.append((mask, c_base + j))
    for j, lits in enumerate(y_lits):
        cj = c_base + j
        for mask in range(side):
            if not any(mask >> pos & 1 == pol for pos, pol in lits):
                edges.append((cj, y_base + mask))

    graph = build_digraph(y_base + side, edges)
    return ReductionGraph(
        graph=graph,
        l=l,
        x_vertex_of=tuple(range(side)),
        y_vertex_of=tuple(range(y_base, y_base + side)),
        clause_vertex_of=tuple(range(c_base, c_base + n_clauses)),
        partition=("X",) * side + ("C",) * n_clauses + ("Y",) * side,
    )


def decide_sat(rg: ReductionGraph, counts: Iterable[int]) -> SatVerdict:
    """Decide satisfiability from reachability counts of the translated graph.

    Every clause vertex an X vertex reaches is one of its direct successors,
    so subtracting the out-degree from the count leaves exactly the number of
    reachable Y vertices. The formula is satisfiable iff some X vertex
    reaches fewer than 2^l of them; the first such vertex in mask order
    yields the witness.
    """
    counts = list(counts)
    g = rg.graph
    if len(counts) != g.n_vertices:
        raise ValueError(
            f"counts vector has {len(counts)} entries for a graph with "
            f"{g.n_vertices} vertices"
        )
    full_side = 1 << rg.l
    for x_mask, v in enumerate(rg.x_vertex_of):
        if counts[v] - g.out_degree(v) < full_side:
            return SatVerdict(True, (x_mask, extract_witness(rg, x_mask)))
    return SatVerdict(False, None)


def extract_witness(rg: ReductionGraph, x_mask: int) -> int:
    """Smallest Y mask not reachable from the given X vertex.

    Precondition: at least one Y vertex is unreachable from it (as certified
    by :func:`decide_sat`); raises ``ValueError`` otherwise.
    """
    reached = reachable_from(rg.graph, rg.x_vertex_of[x_mask])
    for y_mask, v in enumerate(rg.y_vertex_of):
        if v not in reached:
            return y_mask
    raise ValueError(f"X mask {x_mask} reaches every Y vertex; no witness exists")


def witness_satisfies(f: CnfFormula, x_mask: int, y_mask: int) -> bool:
    """Check a split witness directly against the formula.

    The masks are over the padded variable set: bit ``i`` of ``x_mask`` is
    variable ``i``, bit ``i`` of ``y_mask`` is variable ``l + i``.
    """
    padded = pad_to_even(f)
    l = padded.n_vars // 2
    assignment = (x_mask & ((1 << l) - 1)) | (y_mask << l)
    for clause in padded.clauses:
        if not any(assignment >> var & 1 == positive for var, positive in clause):
            return False
    return True


def brute_force_sat(f: CnfFormula) -> SatVerdict:
    """Exhaustive scan over all 2^n assignments; the testing oracle.

    Pads internally, so the witness masks line up with the translated graph.
    Returns the first satisfying assignment in ascending mask order (the full
    assignment mask is ``x_mask | y_mask << l``). Intended for formulas of
    at most about 24 variables.
    """
    padded = pad_to_even(f)
    n = padded.n_vars
    l = n // 2
    clause_masks = []
    for clause in padded.clauses:
        pos = neg = 0
        for var, positive in clause:
            if positive:
                pos |= 1 << var
            else:
                neg |= 1 << var
        clause_masks.append((pos, neg))
    full = (1 << n) - 1
    for assignment in range(1 << n):
        flipped = assignment ^ full
        for pos, neg in clause_masks:
            if not (assignment & pos or flipped & neg):
                break
        else:
            return SatVerdict(True, (assignment & ((1 << l) - 1), assignment >> l))
    return SatVerdict(False, None)
