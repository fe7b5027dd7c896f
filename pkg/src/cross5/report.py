"""Data-driven verification of every numeric claim the library is built
around, with a delimited report and summary figures.

Each claim pins a command-equivalent computation and its expected outcome;
the runner executes them in registry order and emits one pass/fail line per
claim, a CSV, optional JSON, and matplotlib figures rendered to files.
"""

from __future__ import annotations

import csv
import json
import os
import time
from dataclasses import dataclass, field

from . import corpus as corpus_mod
from .coloring import five_color, find_coloring_exhaustive, verify_coloring
from .drawings import (crossed_edges_at, eliminate_trivial,
                       induced_drawing, is_good, trivial_crossings,
                       validate_drawing)
from .graphs import (Graph, all_graphs_up_to_iso, clique_number,
                     complete_graph, construct_named,
                     vertex_connectivity_at_least)
from .immersions import verify_immersion
from .planarity import euler_lower_bound
from .solver import (crossing_number, crossing_number_exhaustive,
                     decide_crossing_number, enumerate_good_drawings)
from .witnesses import c3_join_c5_six_crossing_drawing


@dataclass
class ClaimResult:
    claim_id: str
    title: str
    passed: bool
    detail: str
    elapsed: float
    payload: dict = field(default_factory=dict)


@dataclass(frozen=True)
class Claim:
    claim_id: str
    title: str
    runner: object
    extended: bool = False


def _check_nu_k5() -> tuple:
    g = complete_graph(5)
    unsat = decide_crossing_number(g, 0)
    sat = decide_crossing_number(g, 1)
    ok = unsat.status == "unsat" and sat.status == "sat" \
        and validate_drawing(sat.witness).valid
    return ok, f"decide(0)={unsat.status}, decide(1)={sat.status}", {}


def _check_nu_k6() -> tuple:
    g = complete_graph(6)
    ok_bound = euler_lower_bound(g) == 3
    unsat = decide_crossing_number(g, 2)
    sat = decide_crossing_number(g, 3)
    ok = ok_bound and unsat.status == "unsat" and sat.status == "sat" \
        and validate_drawing(sat.witness).valid
    return ok, (f"edge bound=3, decide(2)={unsat.status}, "
                f"decide(3)={sat.status}"), {}


def _check_nu_k35() -> tuple:
    g = construct_named("K3,5")
    unsat = decide_crossing_number(g, 3)
    sat = decide_crossing_number(g, 4)
    ok = unsat.status == "unsat" and sat.status == "sat" \
        and validate_drawing(sat.witness).valid
    return ok, (f"decide(3)={unsat.status} ({unsat.planarity_calls} planarity "
                f"calls), decide(4)={sat.status}"), {}


def _check_nu_c3c5_bounds() -> tuple:
    g = construct_named("join(C3,C5)")
    lower = euler_lower_bound(g)
    witness = c3_join_c5_six_crossing_drawing()
    res = validate_drawing(witness)
    ok = lower == 5 and res.valid and witness.crossing_total == 6 \
        and is_good(witness) and witness.base == g
    return ok, f"edge bound={lower}, stored witness crossings=6 valid={res.valid}", {}


def _check_nu_c3c5_exact() -> tuple:
    g = construct_named("join(C3,C5)")
    out = decide_crossing_number(g, 5, symmetry=True, budget=10 ** 9)
    ok = out.status == "unsat"
    return ok, (f"decide(5)={out.status} after {out.planarity_calls} planarity "
                f"calls / {out.nodes} nodes"), {}


def _check_k5_parity() -> tuple:
    g = complete_graph(5)
    counts = {k: len(enumerate_good_drawings(g, k)) for k in range(5)}
    ok = counts[0] == 0 and counts[2] == 0 and counts[4] == 0 \
        and counts[1] > 0 and counts[3] > 0
    detail = ", ".join(f"k={k}: {v}" for k, v in counts.items())
    return ok, detail, {"k5_counts": counts}


def _check_k6_two_crossed_edges() -> tuple:
    g = complete_graph(6)
    ds = enumerate_good_drawings(g, 3)
    bad = 0
    for d in ds:
        for v in range(6):
            if len(crossed_edges_at(d, v)) != 2:
                bad += 1
    ok = len(ds) > 0 and bad == 0
    return ok, f"{len(ds)} optimal drawings, {bad} vertex violations", \
        {"k6_optimal_drawings": len(ds)}


def _color_corpus(name: str, expect_connectivity: int | None = None) -> tuple:
    entries = corpus_mod.bundled_corpus(name)
    colored = 0
    bad_witness = 0
    bad_conn = 0
    nus = []
    for e in entries:
        if not corpus_mod.verify_entry(e):
            bad_witness += 1
            continue
        if expect_connectivity is not None and e.connectivity < expect_connectivity:
            bad_conn += 1
            continue
        nus.append(e.nu)
        out = five_color(e.graph)
        if out.colored and verify_coloring(e.graph, out.coloring):
            colored += 1
    ok = bad_witness == 0 and bad_conn == 0 and colored == len(entries)
    detail = f"{colored}/{len(entries)} colored; witness failures={bad_witness}"
    if expect_connectivity is not None:
        detail += f"; connectivity failures={bad_conn}"
    return ok, detail, {"corpus": name, "size": len(entries), "nus": nus}


def _check_five_color_nu2() -> tuple:
    ok, detail, payload = _color_corpus("corpus_nu2")
    payload["label"] = "crossing number <= 2"
    return ok, detail, payload


def _check_main_theorem() -> tuple:
    entries = corpus_mod.bundled_corpus("corpus_nu3_omega5")
    bad = sum(1 for e in entries if e.omega > 5)
    ok, detail, payload = _color_corpus("corpus_nu3_omega5")
    payload["label"] = "crossing number <= 3, clique number <= 5"
    return ok and bad == 0, detail + f"; omega violations={bad}", payload


def _check_four_connected() -> tuple:
    entries = corpus_mod.bundled_corpus("corpus_4conn")
    k6 = complete_graph(6)
    not_k6 = all(not (e.graph.vertex_count == 6 and e.graph.edge_count == 15)
                 for e in entries)
    conn_ok = all(vertex_connectivity_at_least(e.graph, 4) for e in entries)
    ok, detail, payload = _color_corpus("corpus_4conn")
    payload["label"] = "4-connected, crossing number <= 3"
    return ok and not_k6 and conn_ok, \
        detail + f"; all 4-connected={conn_ok}; none is K6={not_k6}", payload


def _check_obstruction_soundness() -> tuple:
    problems = []
    for name in ("K6", "join(C3,C5)"):
        g = construct_named(name)
        out = five_color(g)
        if out.colored:
            problems.append(f"{name} was colored")
            continue
        cert = out.obstruction.certificate
        if not verify_immersion(cert, essential=True, v_immersion=True):
            problems.append(f"{name} certificate failed")
    j = construct_named("join(C3,C5)")
    if find_coloring_exhaustive(j, 5) is not None:
        problems.append("join(C3,C5) is 5-colorable")
    if find_coloring_exhaustive(j, 6) is None:
        problems.append("join(C3,C5) is not 6-colorable")
    return not problems, "; ".join(problems) or \
        "both obstructions verify; chromatic number of the join is 6", {}


def _check_solver_vs_oracle() -> tuple:
    checked = 0
    mismatches = 0
    for n in range(1, 7):
        for g in all_graphs_up_to_iso(n):
            expected = crossing_number_exhaustive(g, cap=6)
            got = crossing_number(g).value
            checked += 1
            if expected != got:
                mismatches += 1
    return mismatches == 0, \
        f"{checked} graphs on up to 6 vertices, {mismatches} mismatches", \
        {"graphs_checked": checked}


def _check_structural_oracles() -> tuple:
    import itertools
    from .corpus import stream
    problems = 0
    trials = 0
    for idx in range(120):
        rng = stream(909, idx)
        n = rng.randint(4, 9)
        pool = [(i, j) for i in range(n) for j in range(i + 1, n)]
        m = rng.randint(n - 1, min(len(pool), 3 * n - 4))
        g = Graph(n, tuple(sorted(rng.sample(pool, m))))
        trials += 1
        om = clique_number(g)
        best = 1
        for size in range(2, n + 1):
            found = any(all(g.has_edge(a, b) for a, b in itertools.combinations(c, 2))
                        for c in itertools.combinations(range(n), size))
            if found:
                best = size
            else:
                break
        if om != best:
            problems += 1
        for k in (2, 3, 4):
            exhaustive = _connectivity_oracle(g, k)
            if vertex_connectivity_at_least(g, k) != exhaustive:
                problems += 1
    return problems == 0, f"{trials} random graphs, {problems} oracle mismatches", {}


def _connectivity_oracle(g: Graph, k: int) -> bool:
    import itertools
    n = g.vertex_count
    if n <= k:
        return False
    for size in range(k):
        for combo in itertools.combinations(range(n), size):
            removed = set(combo)
            verts = [v for v in range(n) if v not in removed]
            if not verts:
                continue
            seen = {verts[0]}
            stack = [verts[0]]
            while stack:
                x = stack.pop()
                for y in g.adjacency[x]:
                    if y not in removed and y not in seen:
                        seen.add(y)
                        stack.append(y)
            if len(seen) != len(verts):
                return False
    return True


def _check_eliminate_trivial_bulk() -> tuple:
    from .random_drawings import random_drawing_with_trivials
    from .corpus import stream
    preserved = 0
    total = 1000
    for idx in range(total):
        rng = stream(131, idx)
        base, inserted = random_drawing_with_trivials(rng)
        before = base.crossing_total
        cleaned = eliminate_trivial(inserted)
        if trivial_crossings(cleaned) == [] and cleaned.crossing_total == before:
            preserved += 1
    return preserved == total, f"{preserved}/{total} preserved the non-trivial count", {}


def _check_induced_bulk() -> tuple:
    from .random_drawings import random_subdivision_pair
    from .corpus import stream
    good_count = 0
    total = 100
    for idx in range(total):
        rng = stream(1733, idx)
        host_drawing, cert = random_subdivision_pair(rng)
        out = induced_drawing(host_drawing, cert)
        if out.crossing_total == host_drawing.crossing_total and is_good(out):
            good_count += 1
    return good_count == total, \
        f"{good_count}/{total} preserved the crossing count and stayed good", {}


CLAIMS = (
    Claim("nu-k5", "K5 has crossing number 1", _check_nu_k5),
    Claim("nu-k6", "K6 has crossing number 3", _check_nu_k6),
    Claim("nu-k35", "K(3,5) has crossing number 4", _check_nu_k35),
    Claim("nu-c3c5-bounds", "join(C3,C5): lower bound 5, drawn with 6",
          _check_nu_c3c5_bounds),
    Claim("k5-parity", "good K5 drawings have odd crossing counts (k<=4)",
          _check_k5_parity),
    Claim("k6-two-crossed-edges",
          "optimal K6 drawings: every vertex meets exactly 2 crossed edges",
          _check_k6_two_crossed_edges),
    Claim("five-color-nu2", "corpus with <=2 crossings is 5-colorable",
          _check_five_color_nu2),
    Claim("main-theorem", "corpus with <=3 crossings, clique<=5 is 5-colorable",
          _check_main_theorem),
    Claim("four-connected", "4-connected corpus (not K6, <=3 crossings) "
          "is 5-colorable", _check_four_connected),
    Claim("obstruction-soundness",
          "K6 and join(C3,C5) yield verified immersion obstructions",
          _check_obstruction_soundness),
    Claim("solver-vs-oracle", "solver equals unpruned enumeration (n<=6)",
          _check_solver_vs_oracle),
    Claim("structural-oracles", "clique and connectivity match brute force",
          _check_structural_oracles),
    Claim("eliminate-trivial-1000",
          "trivial-crossing surgery preserves non-trivial counts",
          _check_eliminate_trivial_bulk),
    Claim("induced-100", "induced drawings preserve crossing counts",
          _check_induced_bulk),
    Claim("nu-c3c5-exact", "join(C3,C5) admits no drawing with 5 crossings",
          _check_nu_c3c5_exact, extended=True),
)


def run_claims(only: list | None = None, extended: bool = False,
               echo=None) -> list:
    results = []
    for claim in CLAIMS:
        if claim.extended and not extended:
            continue
        if only and claim.claim_id not in only:
            continue
        start = time.time()
        try:
            passed, detail, payload = claim.runner()
        except Exception as exc:  # claim crashes count as failures
            passed, detail, payload = False, f"error: {exc!r}", {}
        result = ClaimResult(claim.claim_id, claim.title, passed, detail,
                             time.time() - start, payload)
        results.append(result)
        if echo:
            echo(result)
    return results


def write_csv(results: list, path: str) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["claim_id", "status", "elapsed_s", "title", "detail"])
        for r in results:
            writer.writerow([r.claim_id, "pass" if r.passed else "FAIL",
                             f"{r.elapsed:.2f}", r.title, r.detail])


def results_json(results: list) -> dict:
    return {
        "all_passed": all(r.passed for r in results),
        "claims": [
            {"id": r.claim_id, "title": r.title,
             "passed": r.passed, "detail": r.detail,
             "elapsed_s": round(r.elapsed, 3)}
            for r in results
        ],
    }


def render_figures(results: list, out_dir: str) -> list:
    """Render summary figures to PNG files; returns the paths written."""
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    os.makedirs(out_dir, exist_ok=True)
    written = []

    ids = [r.claim_id for r in results]
    times = [r.elapsed for r in results]
    colors = ["#2a9d2a" if r.passed else "#cc3333" for r in results]
    fig, ax = plt.subplots(figsize=(8, 0.45 * len(results) + 1.2))
    ax.barh(range(len(results)), times, color=colors)
    ax.set_yticks(range(len(results)))
    ax.set_yticklabels(ids, fontsize=8)
    ax.invert_yaxis()
    ax.set_xlabel("seconds")
    ax.set_title("claim runtimes (green = pass)")
    fig.tight_layout()
    path = os.path.join(out_dir, "claim_runtimes.png")
    fig.savefig(path, dpi=150)
    plt.close(fig)
    written.append(path)

    parity = next((r for r in results if "k5_counts" in r.payload), None)
    if parity:
        counts = parity.payload["k5_counts"]
        ks = sorted(counts)
        fig, ax = plt.subplots(figsize=(5, 3.2))
        ax.bar([str(k) for k in ks], [counts[k] for k in ks], color="#33557f")
        ax.set_xlabel("crossings")
        ax.set_ylabel("good drawings of K5")
        ax.set_title("even counts are empty")
        fig.tight_layout()
        path = os.path.join(out_dir, "k5_parity.png")
        fig.savefig(path, dpi=150)
        plt.close(fig)
        written.append(path)

    corpora = [r for r in results if "nus" in r.payload and r.payload["nus"]]
    if corpora:
        fig, axes = plt.subplots(1, len(corpora),
                                 figsize=(3.2 * len(corpora), 3.0), squeeze=False)
        for ax, r in zip(axes[0], corpora):
            nus = r.payload["nus"]
            ks = sorted(set(nus))
            ax.bar([str(k) for k in ks], [nus.count(k) for k in ks],
                   color="#7f5533")
            ax.set_title(r.payload.get("label", r.claim_id), fontsize=8)
            ax.set_xlabel("crossing number")
        axes[0][0].set_ylabel("graphs")
        fig.tight_layout()
        path = os.path.join(out_dir, "corpus_distribution.png")
        fig.savefig(path, dpi=150)
        plt.close(fig)
        written.append(path)

    return written


def write_report(results: list, out_dir: str, with_figures: bool = True) -> dict:
    os.makedirs(out_dir, exist_ok=True)
    csv_path = os.path.join(out_dir, "claims.csv")
    write_csv(results, csv_path)
    json_path = os.path.join(out_dir, "claims.json")
    with open(json_path, "w", encoding="utf-8") as fh:
        json.dump(results_json(results), fh, indent=2)
        fh.write("\n")
    figures = render_figures(results, out_dir) if with_figures else []
    return {"csv": csv_path, "json": json_path, "figures": figures}
