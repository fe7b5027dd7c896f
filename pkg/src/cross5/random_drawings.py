"""Seeded generators for valid drawings and immersion test pairs.

Drawings are grown by attempted insertion: a candidate crossing is kept only
if the drawing still validates, so every generated object is valid by
construction.  Trivial crossings are inserted right at the shared endpoint
of two edge-disjoint adjacent pairs, the one pattern whose surgery provably
restores the original drawing.
"""

from __future__ import annotations

from .corpus import SplitMix64
from .drawings import Drawing, validate_drawing
from .graphs import Graph, complete_graph
from .immersions import ImmersionCertificate
from .planarity import is_planar


def random_planar_graph(rng: SplitMix64, n: int, tries: int = 60) -> Graph:
    edges: list = []
    seen: set = set()
    g = Graph(n, ())
    for _ in range(tries):
        u = rng.randrange(n)
        v = rng.randrange(n)
        if u == v:
            continue
        e = (min(u, v), max(u, v))
        if e in seen:
            continue
        cand = Graph(n, tuple(sorted(edges + [e])))
        if is_planar(cand):
            edges.append(e)
            seen.add(e)
            g = cand
    return g


def _try_insert(d: Drawing, a: int, b: int, pa: int, pb: int) -> Drawing | None:
    cid = len(d.crossings)
    pairs = d.crossings + ((min(a, b), max(a, b)),)
    order = [list(s) for s in d.order]
    order[a].insert(pa, cid)
    order[b].insert(pb, cid)
    cand = Drawing(d.base, pairs, tuple(tuple(s) for s in order))
    return cand if validate_drawing(cand).valid else None


def add_random_crossings(rng: SplitMix64, d: Drawing, want: int,
                         tries: int = 80, good_only: bool = True) -> Drawing:
    """Attempt to add `want` crossings, keeping only insertions that stay
    valid (and good when good_only)."""
    base = d.base
    m = base.edge_count
    added = 0
    existing = set(d.crossings)
    for _ in range(tries):
        if added >= want:
            break
        a = rng.randrange(m)
        b = rng.randrange(m)
        if a == b:
            continue
        if good_only:
            if set(base.edges[a]) & set(base.edges[b]):
                continue
            if (min(a, b), max(a, b)) in existing:
                continue
        pa = rng.randrange(len(d.order[a]) + 1)
        pb = rng.randrange(len(d.order[b]) + 1)
        cand = _try_insert(d, a, b, pa, pb)
        if cand is not None:
            d = cand
            existing = set(d.crossings)
            added += 1
    return d


def random_good_drawing(rng: SplitMix64) -> Drawing:
    """A valid good drawing: planar base (mostly) or K5, with up to three
    non-trivial crossings inserted."""
    if rng.randrange(4) == 0:
        base = complete_graph(5)
        d = _try_insert(Drawing.make(base, []), 1, 5, 0, 0)  # (0,2) x (1,3)
        assert d is not None
    else:
        n = rng.randint(5, 8)
        base = random_planar_graph(rng, n)
        d = Drawing.make(base, [])
    return add_random_crossings(rng, d, rng.randrange(4))


def _position_at_vertex(d: Drawing, e: int, u: int) -> int:
    """Stored index for "first crossing met when leaving u along e"."""
    lo, hi = d.base.edges[e]
    return 0 if u == lo else len(d.order[e])


def insert_trivial_at_vertex(d: Drawing, e: int, f: int) -> Drawing | None:
    """Insert a crossing of adjacent edges e, f right at their shared vertex.

    Not every adjacent pair admits this: other edges at the shared vertex may
    separate e from f in every embedding, so the insertion is validated and
    None is returned when it cannot be drawn."""
    shared = set(d.base.edges[e]) & set(d.base.edges[f])
    u = min(shared)
    return _try_insert(d, e, f, _position_at_vertex(d, e, u),
                       _position_at_vertex(d, f, u))


def random_drawing_with_trivials(rng: SplitMix64) -> tuple:
    """(good drawing, same drawing plus trivial crossings on edge-disjoint
    adjacent pairs inserted at the shared endpoints).  Cleanup of the second
    must reproduce the first's crossing count."""
    while True:
        base_drawing = random_good_drawing(rng)
        g = base_drawing.base
        m = g.edge_count
        adjacent_pairs = [(a, b) for a in range(m) for b in range(a + 1, m)
                          if set(g.edges[a]) & set(g.edges[b])]
        rng_order = rng.sample(adjacent_pairs, len(adjacent_pairs))
        used_edges: set = set()
        inserted = 0
        want = 1 + rng.randrange(3)
        d = base_drawing
        for a, b in rng_order:
            if inserted >= want:
                break
            if a in used_edges or b in used_edges:
                continue
            cand = insert_trivial_at_vertex(d, a, b)
            if cand is None:
                continue
            d = cand
            used_edges.update((a, b))
            inserted += 1
        if inserted:
            return base_drawing, d


def subdivide_drawing(rng: SplitMix64, d: Drawing, cuts: int) -> tuple:
    """Subdivide `cuts` random base edges of a drawn graph, splitting each
    edge's crossing sequence across its segments.

    Returns (host drawing, immersion certificate of the original onto it).
    """
    base = d.base
    n = base.vertex_count
    next_vertex = n
    host_edges: list = []
    host_paths: dict = {}  # base edge index -> host vertex path
    cut_edges = set(rng.sample(range(base.edge_count), min(cuts, base.edge_count)))
    for idx, (u, v) in enumerate(base.edges):
        if idx in cut_edges:
            pieces = 1 + rng.randint(1, 2)
            inner = [next_vertex + i for i in range(pieces - 1)]
            next_vertex += pieces - 1
            path = [u] + inner + [v]
        else:
            path = [u, v]
        host_paths[idx] = tuple(path)
        for x, y in zip(path, path[1:]):
            host_edges.append((min(x, y), max(x, y)))
    host = Graph(next_vertex, tuple(sorted(host_edges)))

    # distribute each base edge's crossing sequence over its host segments
    host_order: dict = {}
    crossing_edge: dict = {}
    for idx in range(base.edge_count):
        path = host_paths[idx]
        seq = list(d.order[idx])
        pieces = len(path) - 1
        boundaries = sorted(rng.randrange(len(seq) + 1) for _ in range(pieces - 1))
        boundaries = [0] + boundaries + [len(seq)]
        for p in range(pieces):
            x, y = path[p], path[p + 1]
            h = host.edge_index[(min(x, y), max(x, y))]
            part = seq[boundaries[p]:boundaries[p + 1]]
            if x > y:
                part = list(reversed(part))
            host_order[h] = tuple(part)
            for cid in part:
                crossing_edge.setdefault(cid, []).append(h)

    pairs = []
    for cid in range(len(d.crossings)):
        ea, eb = crossing_edge[cid]
        pairs.append((min(ea, eb), max(ea, eb)))
    order = tuple(host_order.get(h, ()) for h in range(host.edge_count))
    host_drawing = Drawing(host, tuple(pairs), order)
    assert validate_drawing(host_drawing).valid

    cert = ImmersionCertificate(
        small=base,
        host=host,
        vertex_map=tuple(range(n)),
        edge_paths=tuple(host_paths[idx] for idx in range(base.edge_count)),
        center=None,
    )
    return host_drawing, cert


def random_subdivision_pair(rng: SplitMix64) -> tuple:
    d = random_good_drawing(rng)
    return subdivide_drawing(rng, d, 1 + rng.randrange(3))
