"""Acceptance criteria, one test per criterion.

Each test prints a `[PASS]`/`[FAIL]` line (run with `pytest -s` to see them
on success) and asserts the criterion at its stated tolerance, timing
included.  Everything is seeded; there is no tolerance calibration left to
the environment beyond the wall-clock budgets.
"""

import itertools
import random
import time

import pytest

from corpus import corpus
from lckit import (
    StarCompleteState,
    StarKind,
    and_gadget,
    apply_sequence,
    backend_name,
    build_graph,
    compile_circuit,
    copy_gadget,
    dup_gadget,
    evaluate,
    gadget_by_name,
    is_circle_graph,
    levelize,
    normalize,
    not_gadget,
    orbit,
    parse_netlist,
    run_gadget,
    run_gadget_graph,
    simulate_gss,
    solve_lep,
    star_complete_graph,
    star_complete_track,
    verify_witness,
    word_interleaving_graph,
)


def report(criterion: str, ok: bool, elapsed: float, detail: str = "") -> None:
    status = "PASS" if ok else "FAIL"
    extra = f" {detail}" if detail else ""
    print(f"[{status}] {criterion}{extra} ({elapsed:.2f}s)")
    assert ok, f"{criterion}: {detail}"


def complete(n):
    return build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def all_graphs_on_4():
    pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    return [
        build_graph(4, [p for i, p in enumerate(pairs) if (mask >> i) & 1])
        for mask in range(64)
    ]


@pytest.fixture(scope="module")
def lep_workload():
    """Criterion 3 decisions, shared with criterion 4's witness audit."""
    t0 = time.perf_counter()
    graphs4 = all_graphs_on_4()
    orbits = [orbit(g) for g in graphs4]
    sweep = []
    for g1, orb in zip(graphs4, orbits):
        for g2 in graphs4:
            sweep.append((g1, g2, g2 in orb, solve_lep(g1, g2)))
    rng = random.Random(2024)
    positives = []
    for _ in range(500):
        n = rng.randint(1, 32)
        edges = [
            (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5
        ]
        g = build_graph(n, edges)
        h = apply_sequence(g, [rng.randrange(n) for _ in range(rng.randint(0, 50))])
        positives.append((g, h, solve_lep(g, h)))
    star1 = build_graph(5, [(1, 0), (1, 2), (1, 3), (1, 4)])
    named = [
        (complete(5), star1, True, solve_lep(complete(5), star1)),
        (build_graph(2, [(0, 1)]), build_graph(2, []), False,
         solve_lep(build_graph(2, [(0, 1)]), build_graph(2, []))),
    ]
    elapsed = time.perf_counter() - t0
    return sweep, positives, named, elapsed


def test_criterion_1_gadget_truth_tables():
    t0 = time.perf_counter()
    ok = True
    ok &= run_gadget(copy_gadget(), [False]) == [False]
    ok &= run_gadget(copy_gadget(), [True]) == [True]
    # COPY on FALSE leaves the graph bit-identical
    ok &= run_gadget_graph(copy_gadget(), [False]) == copy_gadget().graph
    ok &= run_gadget(not_gadget(), [False]) == [True]
    ok &= run_gadget(not_gadget(), [True]) == [False]
    for a, b in itertools.product([False, True], repeat=2):
        ok &= run_gadget(and_gadget(), [a, b]) == [a and b]
    # AND on FALSE/FALSE creates exactly the edge (0,3) and nothing else
    ff = run_gadget_graph(and_gadget(), [False, False])
    ok &= set(ff.edges()) == set(and_gadget().graph.edges()) | {(0, 3)}
    for bit in (False, True):
        ok &= run_gadget(dup_gadget(), [bit]) == [bit, bit]
        final = run_gadget_graph(dup_gadget(), [bit])
        ok &= not any(final.has_edge(a, b) for a in (4, 5) for b in (6, 7))
    elapsed = time.perf_counter() - t0
    report("criterion 1: gadget truth tables", ok and elapsed < 1.0, elapsed)


def test_criterion_2_reduction_correctness():
    t0 = time.perf_counter()
    texts = corpus(seed=1789, count=100)
    mismatches = 0
    circuits = 0
    assignments = 0
    for text in texts:
        c = parse_netlist(text)
        lc = levelize(normalize(c))
        circuits += 1
        for bits in itertools.product([False, True], repeat=len(c.input_order)):
            asg = dict(zip(c.input_order, bits))
            assignments += 1
            if simulate_gss(compile_circuit(lc, asg)) != evaluate(c, asg):
                mismatches += 1
    elapsed = time.perf_counter() - t0
    report(
        "criterion 2: reduction correctness",
        mismatches == 0 and circuits >= 100 and elapsed < 300.0,
        elapsed,
        f"({circuits} circuits, {assignments} assignments, {mismatches} mismatches)",
    )


def test_criterion_3_lep_vs_orbit_oracle(lep_workload):
    sweep, positives, named, elapsed = lep_workload
    mism = sum(1 for _, _, want, verdict in sweep if verdict.equivalent != want)
    mism += sum(1 for _, _, verdict in positives if not verdict.equivalent)
    mism += sum(1 for _, _, want, verdict in named if verdict.equivalent != want)
    report(
        "criterion 3: lep agrees with orbit oracle",
        mism == 0 and elapsed < 120.0,
        elapsed,
        f"({len(sweep)} exhaustive + {len(positives)} positive + {len(named)} named, {mism} mismatches)",
    )


def test_criterion_4_witness_soundness(lep_workload):
    sweep, positives, named, _ = lep_workload
    t0 = time.perf_counter()
    failures = 0
    audited = 0
    for g1, g2, _, verdict in sweep + named:
        if verdict.equivalent:
            audited += 1
            if not verify_witness(verdict.witness, g1, g2):
                failures += 1
    for g, h, verdict in positives:
        if verdict.equivalent:
            audited += 1
            if not verify_witness(verdict.witness, g, h):
                failures += 1
    elapsed = time.perf_counter() - t0
    report(
        "criterion 4: witness soundness",
        failures == 0 and audited > 500,
        elapsed,
        f"({audited} witnesses, {failures} failures)",
    )


def test_criterion_5_gadgets_are_circle_graphs():
    t0 = time.perf_counter()
    ok = True
    for name in ("copy", "not", "and", "dup"):
        g = gadget_by_name(name).graph
        word = is_circle_graph(g)
        ok &= word is not None and word_interleaving_graph(word, g.n) == g
    elapsed = time.perf_counter() - t0
    report("criterion 5: gadget circle-graph words", ok and elapsed < 60.0, elapsed)


def test_criterion_6_star_complete_tracker():
    t0 = time.perf_counter()
    rng = random.Random(99)
    mismatches = 0
    for n in (3, 10, 100):
        start = StarCompleteState(StarKind.COMPLETE, None, n)
        explicit_start = star_complete_graph(start)
        for _ in range(100):
            seq = [rng.randrange(n) for _ in range(1000)]
            predicted = star_complete_graph(star_complete_track(start, seq))
            if predicted != apply_sequence(explicit_start, seq):
                mismatches += 1
    elapsed = time.perf_counter() - t0
    report(
        "criterion 6: star/complete tracker",
        mismatches == 0,
        elapsed,
        f"(300 sequences, {mismatches} mismatches)",
    )


def test_criterion_7_performance():
    rng = random.Random(512)
    n = 512
    g = build_graph(
        n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5]
    )
    seq = [rng.randrange(n) for _ in range(10_000)]
    t0 = time.perf_counter()
    apply_sequence(g, seq)
    t_apply = time.perf_counter() - t0

    m = 128
    g1 = build_graph(
        m, [(u, v) for u in range(m) for v in range(u + 1, m) if rng.random() < 0.5]
    )
    g2 = apply_sequence(g1, [rng.randrange(m) for _ in range(200)])
    t0 = time.perf_counter()
    verdict = solve_lep(g1, g2, threads=1)
    t_lep = time.perf_counter() - t0

    ok = t_apply < 2.0 and t_lep < 10.0 and verdict.equivalent
    report(
        "criterion 7: performance targets",
        ok,
        t_apply + t_lep,
        f"(apply {t_apply:.3f}s < 2s, lep {t_lep:.3f}s < 10s, backend={backend_name()})",
    )
