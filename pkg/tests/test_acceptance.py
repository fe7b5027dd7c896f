"""Acceptance suite: every pinned claim at its stated tolerance.

Each test prints one pass/fail line (visible with `pytest -v -s` or in the
captured output).  Runtime ceilings are asserted as stated; all values are
exact, so there are no numeric tolerances to tune.
"""

import os
import time

import pytest

from cross5.coloring import find_coloring_exhaustive, five_color, verify_coloring
from cross5.corpus import bundled_corpus, stream, verify_entry
from cross5.drawings import (crossed_edges_at, eliminate_trivial,
                             induced_drawing, is_good, trivial_crossings,
                             validate_drawing)
from cross5.graphs import (all_graphs_up_to_iso, clique_number,
                           complete_bipartite, complete_graph, construct_named,
                           vertex_connectivity_at_least)
from cross5.immersions import verify_immersion
from cross5.planarity import euler_lower_bound
from cross5.random_drawings import (random_drawing_with_trivials,
                                    random_subdivision_pair)
from cross5.solver import (crossing_number, crossing_number_exhaustive,
                           decide_crossing_number, enumerate_good_drawings)
from cross5.witnesses import c3_join_c5_six_crossing_drawing
from oracles import (oracle_clique_number, oracle_connectivity_at_least)


def _report(criterion, ok, elapsed, detail):
    print(f"[criterion {criterion}] {'PASS' if ok else 'FAIL'} "
          f"({elapsed:.1f}s) {detail}", flush=True)
    assert ok, detail


def test_c01_k5_crossing_number():
    start = time.time()
    g = complete_graph(5)
    unsat = decide_crossing_number(g, 0)
    sat = decide_crossing_number(g, 1)
    witness_ok = sat.status == "sat" and validate_drawing(sat.witness).valid \
        and sat.witness.crossing_total == 1
    elapsed = time.time() - start
    ok = unsat.status == "unsat" and witness_ok and elapsed < 1.0
    _report(1, ok, elapsed,
            f"K5: decide(0)={unsat.status}, decide(1)={sat.status}, "
            f"witness verified={witness_ok}")


def test_c02_k6_crossing_number():
    start = time.time()
    g = complete_graph(6)
    bound = euler_lower_bound(g)
    unsat = decide_crossing_number(g, 2)
    sat = decide_crossing_number(g, 3)
    elapsed = time.time() - start
    ok = bound == 3 and unsat.status == "unsat" and sat.status == "sat" \
        and validate_drawing(sat.witness).valid and elapsed < 30.0
    _report(2, ok, elapsed,
            f"K6: edge bound={bound}, decide(2)={unsat.status}, "
            f"decide(3)={sat.status}")


def test_c03_k35_crossing_number():
    start = time.time()
    g = complete_bipartite(3, 5)
    unsat = decide_crossing_number(g, 3)
    sat = decide_crossing_number(g, 4)
    elapsed = time.time() - start
    ok = unsat.status == "unsat" and sat.status == "sat" \
        and validate_drawing(sat.witness).valid and elapsed < 600.0
    _report(3, ok, elapsed,
            f"K(3,5): decide(3)={unsat.status} with "
            f"{unsat.planarity_calls} planarity calls, decide(4)={sat.status}")


def test_c04_c3c5_default_tier():
    start = time.time()
    g = construct_named("join(C3,C5)")
    lower = euler_lower_bound(g)
    witness = c3_join_c5_six_crossing_drawing()
    res = validate_drawing(witness)
    elapsed = time.time() - start
    ok = lower == 5 and res.valid and witness.crossing_total == 6 \
        and is_good(witness) and witness.base == g
    _report(4, ok, elapsed,
            f"join(C3,C5): lower bound {lower}, bundled witness valid={res.valid} "
            f"with 6 crossings")


@pytest.mark.skipif(not os.environ.get("CROSS5_EXTENDED"),
                    reason="hours-long exhaustive tier; set CROSS5_EXTENDED=1")
def test_c04_c3c5_extended_tier():
    start = time.time()
    g = construct_named("join(C3,C5)")
    out = decide_crossing_number(g, 5, symmetry=True, budget=10 ** 10)
    elapsed = time.time() - start
    _report("4x", out.status == "unsat", elapsed,
            f"join(C3,C5): decide(5)={out.status} "
            f"({out.planarity_calls} planarity calls)")


def test_c05_k5_parity():
    start = time.time()
    g = complete_graph(5)
    counts = {k: len(enumerate_good_drawings(g, k)) for k in range(5)}
    elapsed = time.time() - start
    ok = counts[0] == 0 and counts[2] == 0 and counts[4] == 0 \
        and counts[1] > 0 and counts[3] > 0 and elapsed < 300.0
    _report(5, ok, elapsed, f"good K5 drawings by crossings: {counts}")


def test_c06_k6_two_crossed_edges():
    start = time.time()
    g = complete_graph(6)
    drawings = enumerate_good_drawings(g, 3)
    violations = sum(1 for d in drawings for v in range(6)
                     if len(crossed_edges_at(d, v)) != 2)
    elapsed = time.time() - start
    ok = len(drawings) > 0 and violations == 0 and elapsed < 600.0
    _report(6, ok, elapsed,
            f"{len(drawings)} optimal K6 drawings, {violations} vertices with "
            f"crossed-edge count != 2")


def _spot_check_exactness(entries, seed, samples=6):
    rng = stream(seed, 0)
    picks = rng.sample(range(len(entries)), min(samples, len(entries)))
    for i in picks:
        e = entries[i]
        if e.nu > 0:
            if decide_crossing_number(e.graph, e.nu - 1).status != "unsat":
                return False
    return True


def _corpus_coloring_criterion(criterion, name, time_limit, extra=None):
    start = time.time()
    entries = bundled_corpus(name)
    size_ok = len(entries) >= 200
    witnesses_ok = all(verify_entry(e) for e in entries)
    exact_ok = _spot_check_exactness(entries, seed=criterion * 101)
    colored = 0
    for e in entries:
        out = five_color(e.graph)
        if out.colored and verify_coloring(e.graph, out.coloring):
            colored += 1
    extra_ok, extra_note = (True, "") if extra is None else extra(entries)
    elapsed = time.time() - start
    ok = size_ok and witnesses_ok and exact_ok and colored == len(entries) \
        and extra_ok and elapsed < time_limit
    _report(criterion, ok, elapsed,
            f"{name}: {colored}/{len(entries)} properly 5-colored; witnesses "
            f"verified={witnesses_ok}; spot-checked exactness={exact_ok}{extra_note}")


def test_c07_five_color_low_crossing_corpus():
    def caps(entries):
        return all(e.nu <= 2 for e in entries), "; caps<=2"
    _corpus_coloring_criterion(7, "corpus_nu2", 300.0, caps)


def test_c08_main_theorem_corpus():
    def hypotheses(entries):
        ok = all(e.nu <= 3 and e.omega <= 5 for e in entries)
        return ok, "; caps<=3 and cliques<=5"
    _corpus_coloring_criterion(8, "corpus_nu3_omega5", 600.0, hypotheses)


def test_c09_four_connected_corpus():
    start = time.time()
    entries = bundled_corpus("corpus_4conn")
    witnesses_ok = all(verify_entry(e) for e in entries)
    caps_ok = all(e.nu <= 3 for e in entries)
    conn_ok = all(vertex_connectivity_at_least(e.graph, 4) for e in entries)
    none_is_k6 = all(not (e.graph.vertex_count == 6 and e.graph.edge_count == 15)
                     for e in entries)
    has_octahedron = any(e.graph.vertex_count == 6 and e.graph.edge_count == 12
                         for e in entries)
    colored = 0
    for e in entries:
        out = five_color(e.graph)
        if out.colored and verify_coloring(e.graph, out.coloring):
            colored += 1
    elapsed = time.time() - start
    ok = witnesses_ok and caps_ok and conn_ok and none_is_k6 \
        and has_octahedron and colored == len(entries)
    _report(9, ok, elapsed,
            f"corpus_4conn: {colored}/{len(entries)} colored; 4-connected="
            f"{conn_ok}; none is K6={none_is_k6}; octahedron included="
            f"{has_octahedron}")


def test_c10_obstruction_soundness():
    start = time.time()
    problems = []
    for name in ("K6", "join(C3,C5)"):
        g = construct_named(name)
        out = five_color(g)
        if out.colored:
            problems.append(f"{name} unexpectedly colored")
            continue
        cert = out.obstruction.certificate
        if not verify_immersion(cert, essential=True, v_immersion=True):
            problems.append(f"{name} certificate failed verification")
    j = construct_named("join(C3,C5)")
    if find_coloring_exhaustive(j, 5) is not None:
        problems.append("join(C3,C5) admits a 5-coloring")
    six = find_coloring_exhaustive(j, 6)
    if six is None or not verify_coloring(j, six):
        problems.append("join(C3,C5) should be exactly 6-chromatic")
    elapsed = time.time() - start
    _report(10, not problems, elapsed,
            "; ".join(problems) or "obstructions verify and the join is "
            "6-chromatic by exhaustive search")


def test_c11a_solver_matches_naive_enumeration():
    start = time.time()
    mismatches = 0
    checked = 0
    for n in range(1, 7):
        for g in all_graphs_up_to_iso(n):
            expected = crossing_number_exhaustive(g, cap=6)
            got = crossing_number(g).value
            checked += 1
            if got != expected:
                mismatches += 1
    elapsed = time.time() - start
    ok = checked == 208 and mismatches == 0
    _report("11a", ok, elapsed,
            f"solver vs unpruned enumeration on {checked} graphs (n<=6): "
            f"{mismatches} mismatches")


def test_c11b_structural_oracles():
    start = time.time()
    from cross5.graphs import Graph
    mismatches = 0
    trials = 0
    for idx in range(150):
        rng = stream(1100, idx)
        n = rng.randint(3, 9)
        pool = [(i, j) for i in range(n) for j in range(i + 1, n)]
        m = rng.randrange(len(pool) + 1)
        g = Graph(n, tuple(sorted(rng.sample(pool, m))))
        trials += 1
        if g.vertex_count and clique_number(g) != oracle_clique_number(g):
            mismatches += 1
        for k in (1, 2, 3, 4):
            if vertex_connectivity_at_least(g, k) != \
                    oracle_connectivity_at_least(g, k):
                mismatches += 1
    elapsed = time.time() - start
    _report("11b", mismatches == 0, elapsed,
            f"clique/connectivity oracles on {trials} random graphs (n<=9): "
            f"{mismatches} mismatches")


def test_c11c_eliminate_trivial_thousand():
    start = time.time()
    preserved = 0
    total = 1000
    for idx in range(total):
        rng = stream(1131, idx)
        base, with_trivials = random_drawing_with_trivials(rng)
        cleaned = eliminate_trivial(with_trivials)
        if trivial_crossings(cleaned) == [] and \
                cleaned.crossing_total == base.crossing_total:
            preserved += 1
    elapsed = time.time() - start
    _report("11c", preserved == total, elapsed,
            f"{preserved}/{total} random drawings kept their non-trivial "
            f"crossing count")


def test_c11d_induced_drawing_hundred():
    start = time.time()
    preserved = 0
    total = 100
    for idx in range(total):
        rng = stream(1733, idx)
        host_drawing, cert = random_subdivision_pair(rng)
        out = induced_drawing(host_drawing, cert)
        if out.crossing_total == host_drawing.crossing_total and is_good(out):
            preserved += 1
    elapsed = time.time() - start
    _report("11d", preserved == total, elapsed,
            f"{preserved}/{total} immersion pairs kept the crossing count "
            f"with a good result")
