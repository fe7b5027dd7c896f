"""Seeded random graph corpora with solver-verified crossing numbers.

Randomness comes from SplitMix64 with one independent stream per corpus
index, so a spec reproduces the same corpus byte for byte on any platform.
Every accepted graph carries its exact crossing number, a witness drawing,
its clique number, and its exact vertex connectivity; rejected candidates
consume their stream deterministically.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from .drawings import Drawing, drawing_from_json_dict, drawing_to_json_dict, validate_drawing
from .graphs import (Graph, are_isomorphic, clique_number, from_graph6,
                     is_connected, to_graph6, vertex_connectivity_at_least)
from .solver import BudgetExceededError, crossing_number, decide_crossing_number

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


def _mix64(z: int) -> int:
    z &= _MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return z ^ (z >> 31)


class SplitMix64:
    """Deterministic 64-bit generator; streams split by index."""

    def __init__(self, seed: int):
        self._state = seed & _MASK

    def next_u64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK
        return _mix64(self._state)

    def randrange(self, n: int) -> int:
        if n <= 0:
            raise ValueError("randrange needs a positive bound")
        # rejection sampling for an unbiased draw
        limit = (_MASK + 1) - ((_MASK + 1) % n)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % n

    def randint(self, a: int, b: int) -> int:
        return a + self.randrange(b - a + 1)

    def sample(self, seq, k: int) -> list:
        pool = list(seq)
        out = []
        for _ in range(k):
            out.append(pool.pop(self.randrange(len(pool))))
        return out


def stream(seed: int, index: int) -> SplitMix64:
    return SplitMix64(_mix64(seed ^ _mix64(index * _GAMMA)))


@dataclass(frozen=True)
class CorpusSpec:
    seed: int
    count: int
    n_min: int = 6
    n_max: int = 9
    crossing_cap: int = 2
    omega_max: int | None = None
    connectivity_min: int | None = None
    exclude: tuple = ()  # graphs; isomorphic candidates are skipped
    per_graph_budget: int = 400_000
    max_attempts: int = 100_000
    density_offset: int = 0  # raises the lower end of the sampled edge count


@dataclass(frozen=True)
class CorpusEntry:
    graph: Graph
    nu: int
    witness: Drawing
    omega: int
    connectivity: int


def exact_connectivity(g: Graph) -> int:
    k = 0
    while k < g.vertex_count and vertex_connectivity_at_least(g, k + 1):
        k += 1
    return k


def annotate(g: Graph, crossing_cap: int, budget: int) -> CorpusEntry | None:
    """Solver-verified annotations, or None if nu(g) is not within the cap."""
    try:
        sat = decide_crossing_number(g, crossing_cap, budget=budget)
    except BudgetExceededError:  # pragma: no cover - decide returns outcomes
        return None
    if sat.status != "sat":
        return None
    result = crossing_number(g, budget=budget)
    if not result.exact or result.value > crossing_cap:
        return None
    return CorpusEntry(g, result.value, result.witness,
                       clique_number(g), exact_connectivity(g))


def random_graph(rng: SplitMix64, n: int, m: int) -> Graph:
    pool = [(i, j) for i in range(n) for j in range(i + 1, n)]
    return Graph(n, tuple(sorted(rng.sample(pool, m))))


def gen_corpus(spec: CorpusSpec) -> list:
    """Random graphs filtered to solver-verified nu <= cap plus the requested
    structural filters.  Deterministic in spec."""
    entries = []
    for index in range(spec.max_attempts):
        if len(entries) >= spec.count:
            break
        rng = stream(spec.seed, index)
        n = rng.randint(spec.n_min, spec.n_max)
        max_m = n * (n - 1) // 2
        hi = min(max_m, 3 * n - 6 + spec.crossing_cap)
        lo = n + 1 + spec.density_offset
        if spec.connectivity_min is not None:
            lo = max(lo, (spec.connectivity_min * n + 1) // 2)
        if lo > hi:
            continue
        lo = min(lo, hi)
        m = rng.randint(lo, hi)
        g = random_graph(rng, n, m)
        if not is_connected(g):
            continue
        if spec.omega_max is not None and clique_number(g) > spec.omega_max:
            continue
        if spec.connectivity_min is not None and \
                not vertex_connectivity_at_least(g, spec.connectivity_min):
            continue
        if any(are_isomorphic(g, ex) for ex in spec.exclude):
            continue
        entry = annotate(g, spec.crossing_cap, spec.per_graph_budget)
        if entry is None:
            continue
        entries.append(entry)
    if len(entries) < spec.count:
        raise RuntimeError(
            f"corpus generation exhausted {spec.max_attempts} attempts with "
            f"{len(entries)} of {spec.count} graphs")
    return entries


# ---------------------------------------------------------------------------
# Serialization and bundled fixtures
# ---------------------------------------------------------------------------


def corpus_to_json_dict(spec: CorpusSpec | None, entries: list) -> dict:
    obj: dict = {"entries": []}
    if spec is not None:
        obj["spec"] = {
            "seed": spec.seed, "count": spec.count, "n_min": spec.n_min,
            "n_max": spec.n_max, "crossing_cap": spec.crossing_cap,
            "omega_max": spec.omega_max,
            "connectivity_min": spec.connectivity_min,
            "per_graph_budget": spec.per_graph_budget,
        }
    for e in entries:
        obj["entries"].append({
            "graph6": to_graph6(e.graph),
            "nu": e.nu,
            "omega": e.omega,
            "connectivity": e.connectivity,
            "witness": drawing_to_json_dict(e.witness),
        })
    return obj


def corpus_from_json_dict(obj: dict) -> list:
    entries = []
    for raw in obj["entries"]:
        g = from_graph6(raw["graph6"])
        witness = drawing_from_json_dict(raw["witness"])
        entries.append(CorpusEntry(g, int(raw["nu"]), witness,
                                   int(raw["omega"]), int(raw["connectivity"])))
    return entries


def save_corpus(path: str, spec: CorpusSpec | None, entries: list) -> None:
    with open(path, "w", encoding="ascii") as fh:
        json.dump(corpus_to_json_dict(spec, entries), fh, sort_keys=True,
                  separators=(",", ":"))
        fh.write("\n")


def load_corpus(path: str) -> list:
    with open(path, encoding="ascii") as fh:
        return corpus_from_json_dict(json.load(fh))


def bundled_corpus(name: str) -> list:
    """Load a corpus shipped with the package (e.g. "corpus_nu2")."""
    text = resources.files("cross5.data").joinpath(f"{name}.json").read_text("ascii")
    return corpus_from_json_dict(json.loads(text))


def verify_entry(entry: CorpusEntry) -> bool:
    """Re-check the stored witness: valid drawing of the right graph with
    exactly the recorded number of crossings (an upper-bound certificate)."""
    if entry.witness.base != entry.graph:
        return False
    if entry.witness.crossing_total != entry.nu:
        return False
    return validate_drawing(entry.witness).valid


# ---------------------------------------------------------------------------
# Named seeds for the 4-connected corpus
# ---------------------------------------------------------------------------


def icosahedron() -> Graph:
    edges = [
        (0, 1), (0, 2), (0, 3), (0, 4), (0, 5),
        (1, 2), (2, 3), (3, 4), (4, 5), (5, 1),
        (1, 6), (1, 7), (2, 7), (2, 8), (3, 8), (3, 9),
        (4, 9), (4, 10), (5, 10), (5, 6), (6, 7), (7, 8),
        (8, 9), (9, 10), (10, 6),
        (11, 6), (11, 7), (11, 8), (11, 9), (11, 10),
    ]
    return Graph.make(12, edges)


def four_connected_seed_graphs() -> list:
    """Hand-picked 4-connected graphs with small crossing number: the
    complete graph K5, the octahedron, the octahedron plus one or two
    diagonals, and the icosahedron."""
    from .graphs import complete_graph, complete_multipartite
    octa = complete_multipartite(2, 2, 2)
    octa_plus = Graph.make(6, list(octa.edges) + [(0, 1)])
    octa_plus2 = Graph.make(6, list(octa.edges) + [(0, 1), (2, 3)])
    return [complete_graph(5), octa, octa_plus, octa_plus2, icosahedron()]


BUNDLED_SPECS = {
    "corpus_nu2": CorpusSpec(seed=20260801, count=205, n_min=6, n_max=9,
                             crossing_cap=2, density_offset=8),
    "corpus_nu3_omega5": CorpusSpec(seed=20260802, count=205, n_min=6, n_max=9,
                                    crossing_cap=3, omega_max=5,
                                    density_offset=8,
                                    per_graph_budget=150_000),
    "corpus_4conn_random": CorpusSpec(seed=20260803, count=30, n_min=6, n_max=9,
                                      crossing_cap=3, connectivity_min=4,
                                      per_graph_budget=150_000),
}


def build_bundled_fixtures(out_dir: str) -> None:
    """Regenerate the corpora and witness files shipped under cross5/data
    (slow, minutes)."""
    import os
    from .drawings import drawing_to_json
    from .graphs import complete_graph
    from .solver import decide_crossing_number
    from .witnesses import (c3_join_c5_six_crossing_drawing,
                            k35_four_crossing_drawing)
    os.makedirs(out_dir, exist_ok=True)
    for name in ("corpus_nu2", "corpus_nu3_omega5"):
        spec = BUNDLED_SPECS[name]
        save_corpus(os.path.join(out_dir, f"{name}.json"), spec, gen_corpus(spec))
    spec = BUNDLED_SPECS["corpus_4conn_random"]
    spec = CorpusSpec(**{**spec.__dict__, "exclude": (complete_graph(6),)})
    entries = []
    for g in four_connected_seed_graphs():
        entry = annotate(g, spec.crossing_cap, spec.per_graph_budget)
        assert entry is not None and entry.connectivity >= 4
        entries.append(entry)
    entries.extend(gen_corpus(spec))
    save_corpus(os.path.join(out_dir, "corpus_4conn.json"), None, entries)

    k6_witness = decide_crossing_number(complete_graph(6), 3).witness
    for name, drawing in (("witness_k6_3", k6_witness),
                          ("witness_k35_4", k35_four_crossing_drawing()),
                          ("witness_c3c5_6", c3_join_c5_six_crossing_drawing())):
        with open(os.path.join(out_dir, f"{name}.json"), "w", encoding="ascii") as fh:
            fh.write(drawing_to_json(drawing))
            fh.write("\n")
