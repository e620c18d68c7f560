"""Shared golden data and hypothesis strategies for the test suite."""

from __future__ import annotations

import random

from hypothesis import settings
from hypothesis import strategies as st

from reachcount import CnfFormula, Digraph, build_digraph

settings.register_profile("suite", deadline=None, derandomize=True)
settings.load_profile("suite")

# The running example: (not x1 or y2) and (x1 or not y1 or y2) and
# (x1 or x2 or not y1), with X = {x1, x2} and Y = {y1, y2}.
FIG_DIMACS = "p cnf 4 3\n-1 4 0\n1 -3 4 0\n1 2 -3 0\n"

# Vertex ids: X masks 0..3 -> 0..3, clauses 0..2 -> 4..6, Y masks 0..3 -> 7..10.
FIG_EDGES = [
    (0, 5),
    (0, 6),
    (1, 4),
    (2, 5),
    (3, 4),
    (4, 7),
    (4, 8),
    (5, 8),
    (6, 8),
    (6, 10),
]

# Derived with the set-based oracle and checked by hand against the graph.
FIG_COUNTS = [4, 3, 2, 3, 2, 1, 2, 0, 0, 0, 0]

FIG_DG_TEXT = (
    "p dg 11 10\n"
    "e 0 5\n"
    "e 0 6\n"
    "e 1 4\n"
    "e 2 5\n"
    "e 3 4\n"
    "e 4 7\n"
    "e 4 8\n"
    "e 5 8\n"
    "e 6 8\n"
    "e 6 10\n"
    "l 2\n"
    "v 0 X 0\n"
    "v 1 X 1\n"
    "v 2 X 2\n"
    "v 3 X 3\n"
    "v 4 C 0\n"
    "v 5 C 1\n"
    "v 6 C 2\n"
    "v 7 Y 0\n"
    "v 8 Y 1\n"
    "v 9 Y 2\n"
    "v 10 Y 3\n"
)


@st.composite
def digraphs(draw, max_n: int = 40, allow_self_loops: bool = True) -> Digraph:
    """Random digraphs, cycles and self-loops included."""
    n = draw(st.integers(min_value=0, max_value=max_n))
    if n == 0:
        return build_digraph(0, [])
    vertex = st.integers(min_value=0, max_value=n - 1)
    pair = st.tuples(vertex, vertex)
    if not allow_self_loops:
        pair = pair.filter(lambda uv: uv[0] != uv[1])
    edges = draw(st.lists(pair, max_size=min(3 * n, n * n)))
    return build_digraph(n, edges)


@st.composite
def formulas(draw, max_vars: int = 8, max_clauses: int = 10, max_k: int = 4) -> CnfFormula:
    """Random CNF formulas; duplicate and complementary literals allowed."""
    n = draw(st.integers(min_value=0, max_value=max_vars))
    n_clauses = draw(st.integers(min_value=0, max_value=max_clauses))
    clauses = []
    for _ in range(n_clauses):
        if n == 0:
            clauses.append(())
            continue
        width = draw(st.integers(min_value=0, max_value=max_k))
        clause = tuple(
            (draw(st.integers(min_value=0, max_value=n - 1)), draw(st.booleans()))
            for _ in range(width)
        )
        clauses.append(clause)
    return CnfFormula(n, tuple(clauses))


def seeded_random_digraph(rng: random.Random, max_n: int = 200) -> Digraph:
    """One random digraph from a caller-owned RNG; may contain cycles."""
    n = rng.randint(0, max_n)
    if n == 0:
        return build_digraph(0, [])
    m = rng.randint(0, min(3 * n, n * n))
    edges = [(rng.randrange(n), rng.randrange(n)) for _ in range(m)]
    return build_digraph(n, edges)
