"""Acceptance gate: every shipping criterion, one pass/fail line each.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines as they
print. Each criterion states its own tolerance (exact values, or a wall-time
budget for the sweeps) and fails loudly when missed.
"""

from __future__ import annotations

import random
import time

import pytest

from conftest import (
    FIG_COUNTS,
    FIG_DG_TEXT,
    FIG_DIMACS,
    FIG_EDGES,
    seeded_random_digraph,
)
from reachcount import (
    CnfFormula,
    ReductionAnnotations,
    brute_force_sat,
    build_reduction,
    count_bfs_all,
    count_bitset_closure,
    count_oracle,
    decide_sat,
    gen_dag,
    gen_ksat,
    is_acyclic,
    pad_to_even,
    parse_dimacs,
    parse_graph,
    reach_targets,
    witness_satisfies,
    write_graph,
)
from reachcount.bench import BENCH_CSV_HEADER
from reachcount.cli import main


def report(num: int, name: str, ok: bool, detail: str = "") -> None:
    status = "PASS" if ok else "FAIL"
    suffix = f" ({detail})" if detail else ""
    print(f"[acceptance {num:02d}] {name}: {status}{suffix}")
    assert ok, f"acceptance criterion {num} failed: {name} {suffix}"


@pytest.fixture(scope="module")
def fig_formula():
    return parse_dimacs(FIG_DIMACS)


@pytest.fixture(scope="module")
def reduction_corpus():
    """At least 100 translated instances with their formulas and counts."""
    rng = random.Random(2026)
    corpus = []
    for _ in range(110):
        n = rng.randint(1, 12)
        k = min(n, rng.choice((2, 3, 4)))
        m = rng.randint(0, 3 * n)
        f = pad_to_even(gen_ksat(n, m, k, rng.getrandbits(32)))
        rg = build_reduction(f)
        corpus.append((f, rg, count_bfs_all(rg.graph)))
    return corpus


def test_criterion_01_figure_reduction_golden(fig_formula):
    start = time.perf_counter()
    rg = build_reduction(fig_formula)
    elapsed = time.perf_counter() - start
    ok = (
        rg.graph.n_vertices == 11
        and rg.graph.m_edges == 10
        and sorted(rg.graph.edges()) == FIG_EDGES
        and elapsed < 1.0
    )
    report(1, "figure instance translates to the exact 11/10 graph", ok,
           f"{elapsed * 1000:.1f} ms")


def test_criterion_02_figure_counts_exact(fig_formula):
    g = build_reduction(fig_formula).graph
    bfs = count_bfs_all(g)
    bitset = count_bitset_closure(g)
    oracle = count_oracle(g)
    per_evaluation = {  # X mask -> expected count, masks encode (x1, x2)
        0b11: 3,  # (T, T)
        0b01: 3,  # (T, F)
        0b10: 2,  # (F, T)
        0b00: 4,  # (F, F)
    }
    ok = (
        bfs == FIG_COUNTS
        and bitset == FIG_COUNTS
        and oracle == FIG_COUNTS
        and all(bfs[mask] == want for mask, want in per_evaluation.items())
        and bfs[4:7] == [2, 1, 2]
        and bfs[7:] == [0, 0, 0, 0]
    )
    report(2, "figure counts are exact under every algorithm", ok, f"counts={bfs}")


def test_criterion_03_figure_verdict_and_witness(fig_formula, tmp_path, capsys):
    cnf_path = tmp_path / "fig.cnf"
    cnf_path.write_text(FIG_DIMACS)
    code = main(["solve", str(cnf_path), "--witness"])
    lines = capsys.readouterr().out.splitlines()
    values = {}
    for line in lines[1:]:
        name, _, value = line.partition("=")
        values[int(name[1:]) - 1] = value == "T"
    witness_ok = len(values) == 4 and all(
        any(values[lit.var] == lit.positive for lit in clause)
        for clause in fig_formula.clauses
    )
    highlighted_ok = witness_satisfies(fig_formula, 0b11, 0b11)
    ok = code == 0 and lines[0] == "SAT" and witness_ok and highlighted_ok
    report(3, "figure instance solves SAT with a checkable witness", ok,
           f"witness lines={lines[1:]}")


def test_criterion_04_brute_force_equivalence_sweep():
    start = time.perf_counter()
    rng = random.Random(404)
    instances: list[CnfFormula] = []
    for _ in range(520):
        k = rng.choice((2, 3, 4))
        n = rng.randint(k, 10)
        m = rng.randint(0, 5 * n)
        instances.append(gen_ksat(n, m, k, rng.getrandbits(32)))
    instances += [
        CnfFormula(0, ()),  # no variables, no clauses
        CnfFormula(0, ((),)),  # the empty clause alone
        CnfFormula(2, ((),)),  # empty clause among variables
        CnfFormula(2, (((0, True), (0, False)),)),  # tautological clause
        CnfFormula(2, (((0, True),), ((0, True),))),  # duplicate clauses
        CnfFormula(1, (((0, True),), ((0, False),))),  # direct contradiction
        CnfFormula(3, (((2, True),),)),  # odd width, padded internally
        CnfFormula(9, (((8, False),),)),  # odd width again
    ]
    checked = 0
    mismatches = []
    for f in instances:
        rg = build_reduction(pad_to_even(f))
        verdict = decide_sat(rg, count_bfs_all(rg.graph))
        expected = brute_force_sat(f)
        if verdict.satisfiable != expected.satisfiable:
            mismatches.append(f)
        elif verdict.satisfiable and not witness_satisfies(f, *verdict.witness):
            mismatches.append(f)
        checked += 1
    elapsed = time.perf_counter() - start
    ok = not mismatches and checked >= 500 and elapsed < 60.0
    report(4, "count-based verdicts match brute force over the sweep", ok,
           f"{checked} instances, {elapsed:.1f} s")


def test_criterion_05_cross_algorithm_equivalence():
    start = time.perf_counter()
    rng = random.Random(505)
    graphs = []
    for _ in range(150):
        graphs.append(seeded_random_digraph(rng, max_n=200))
    for _ in range(150):
        n = rng.randint(0, 200)
        m = rng.randint(0, min(3 * n, n * (n - 1) // 2))
        graphs.append(gen_dag(n, m, rng.getrandbits(32)))
    cyclic = sum(1 for g in graphs if not is_acyclic(g))
    disagreements = 0
    for g in graphs:
        reference = count_oracle(g)
        if count_bfs_all(g) != reference or count_bitset_closure(g) != reference:
            disagreements += 1
    elapsed = time.perf_counter() - start
    ok = (
        disagreements == 0
        and len(graphs) >= 300
        and cyclic > 0
        and cyclic < len(graphs)
        and elapsed < 60.0
    )
    report(5, "all three counters agree on random digraphs", ok,
           f"{len(graphs)} graphs ({cyclic} cyclic), {elapsed:.1f} s")


def test_criterion_06_subtraction_identity(reduction_corpus):
    bad = 0
    for _f, rg, counts in reduction_corpus:
        for xv in rg.x_vertex_of:
            direct = rg.graph.out_degree(xv)
            if counts[xv] - direct != reach_targets(rg.graph, xv, rg.y_vertex_of):
                bad += 1
    ok = bad == 0 and len(reduction_corpus) >= 100
    report(6, "count minus out-degree equals reached Y vertices", ok,
           f"{len(reduction_corpus)} instances")


def test_criterion_07_size_bounds(reduction_corpus):
    violations = 0
    for f, rg, _counts in reduction_corpus:
        side = 1 << (f.n_vars // 2)
        if rg.graph.n_vertices > 2 * side + f.n_clauses:
            violations += 1
        if rg.graph.m_edges > 2 * side * f.n_clauses:
            violations += 1
    ok = violations == 0 and len(reduction_corpus) >= 100
    report(7, "translated graphs respect the size bounds", ok,
           f"{len(reduction_corpus)} instances")


def test_criterion_08_structural_shape(reduction_corpus):
    violations = 0
    for _f, rg, _counts in reduction_corpus:
        g = rg.graph
        side = 1 << rg.l
        x_set, c_set, y_set = (
            set(rg.x_vertex_of),
            set(rg.clause_vertex_of),
            set(rg.y_vertex_of),
        )
        if len(rg.x_vertex_of) != side or len(rg.y_vertex_of) != side:
            violations += 1
        if not is_acyclic(g):
            violations += 1
        for u, v in g.edges():
            if not ((u in x_set and v in c_set) or (u in c_set and v in y_set)):
                violations += 1
                break
    ok = violations == 0 and len(reduction_corpus) >= 100
    report(8, "translated graphs are acyclic and layered X->C->Y", ok,
           f"{len(reduction_corpus)} instances")


def test_criterion_09_bench_smoke(tmp_path, capsys):
    start = time.perf_counter()
    csv_path = tmp_path / "bench.csv"
    code = main(
        ["bench", "--family", "reduction", "--sizes", "12,14,16,18",
         "--reps", "2", "--seed", "9", "-o", str(csv_path)]
    )
    capsys.readouterr()
    elapsed = time.perf_counter() - start
    lines = csv_path.read_text().splitlines()
    rows = [line.split(",") for line in lines[1:]]
    shape_ok = (
        code == 0
        and lines[0] == BENCH_CSV_HEADER
        and len(rows) == 4 * 2 * 2
        and all(len(r) == 7 for r in rows)
        and all(r[3] in ("bfs", "bitset") for r in rows)
        and all(int(r[5]) >= 0 for r in rows)
    )
    checksums_by_label: dict[str, set[str]] = {}
    for r in rows:
        checksums_by_label.setdefault(r[0], set()).add(r[6])
    checksum_ok = len(checksums_by_label) == 4 and all(
        len(s) == 1 for s in checksums_by_label.values()
    )
    ok = shape_ok and checksum_ok and elapsed < 120.0
    report(9, "bench sweep emits well-formed CSV with matching checksums", ok,
           f"{len(rows)} rows, {elapsed:.1f} s")


def test_criterion_10_round_trip(reduction_corpus):
    rng = random.Random(1010)
    failures = 0
    plain = 0
    for _ in range(60):
        g = seeded_random_digraph(rng, max_n=60)
        text = write_graph(g)
        parsed, ann = parse_graph(text)
        if parsed != g or ann is not None or write_graph(parsed) != text:
            failures += 1
        plain += 1
    for _ in range(40):
        n = rng.randint(0, 60)
        m = rng.randint(0, min(3 * n, n * (n - 1) // 2))
        g = gen_dag(n, m, rng.getrandbits(32))
        text = write_graph(g)
        parsed, ann = parse_graph(text)
        if parsed != g or write_graph(parsed) != text:
            failures += 1
        plain += 1
    annotated = 0
    for _f, rg, _counts in reduction_corpus[:20]:
        ann = ReductionAnnotations.from_reduction(rg)
        text = write_graph(rg.graph, ann)
        parsed, parsed_ann = parse_graph(text)
        if parsed != rg.graph or parsed_ann != ann or write_graph(parsed, parsed_ann) != text:
            failures += 1
        annotated += 1
    fig_ok = parse_graph(FIG_DG_TEXT)[0].m_edges == 10
    ok = failures == 0 and plain >= 100 and annotated >= 20 and fig_ok
    report(10, "serialization round-trips byte-exactly", ok,
           f"{plain} plain + {annotated} annotated graphs")
