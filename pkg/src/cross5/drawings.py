"""Combinatorial drawings: a set of pairwise edge crossings plus the order of
crossings along each edge.  A drawing is valid exactly when replacing every
crossing by a degree-4 dummy vertex (the planarization) yields a planar
graph; a planar planarization can be realized in the plane with the dummies
as its only crossings, so validity certifies an upper bound on the crossing
number.

Orders are stored along each edge from its smaller endpoint to its larger.
Crossing ids are dense integers; canonical relabeling (first appearance while
scanning edges in index order) is used for equality and deduplication.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .graphs import Graph
from .immersions import CertificateError, ImmersionCertificate, explain_immersion
from .planarity import planar_adjacency


class DrawingError(ValueError):
    pass


class InvalidDrawingError(DrawingError):
    """An operation with a validity precondition was given an invalid drawing."""


@dataclass(frozen=True)
class Drawing:
    base: Graph
    crossings: tuple  # crossing id -> (edge_index_a, edge_index_b), a < b
    order: tuple      # edge index -> tuple of crossing ids along the edge

    @staticmethod
    def make(base: Graph, crossing_pairs, order=None) -> "Drawing":
        """Build a drawing.  crossing_pairs may use edge indices or vertex
        pairs; order maps edge index -> sequence of crossing ids and may omit
        edges carrying at most one crossing."""
        pairs = []
        for a, b in crossing_pairs:
            ia = a if isinstance(a, int) else base.edge_index[(min(a), max(a))]
            ib = b if isinstance(b, int) else base.edge_index[(min(b), max(b))]
            pairs.append((min(ia, ib), max(ia, ib)))
        m = base.edge_count
        by_edge = [[] for _ in range(m)]
        for cid, (ia, ib) in enumerate(pairs):
            by_edge[ia].append(cid)
            by_edge[ib].append(cid)
        given = dict(order) if order else {}
        full = []
        for e in range(m):
            if e in given:
                full.append(tuple(given[e]))
            elif len(by_edge[e]) <= 1:
                full.append(tuple(by_edge[e]))
            else:
                raise DrawingError(
                    f"edge {e} carries {len(by_edge[e])} crossings; "
                    "an explicit order is required")
        return Drawing(base, tuple(pairs), tuple(full))

    @property
    def crossing_total(self) -> int:
        return len(self.crossings)


def structural_problem(d: Drawing) -> str | None:
    """First structural invariant violated, or None."""
    m = d.base.edge_count
    if len(d.order) != m:
        return f"order table has {len(d.order)} entries for {m} edges"
    for cid, pair in enumerate(d.crossings):
        if len(pair) != 2:
            return f"crossing {cid} is not a pair"
        a, b = pair
        if not (0 <= a < m and 0 <= b < m):
            return f"crossing {cid} references a missing edge"
        if a == b:
            return f"crossing {cid} crosses an edge with itself"
    appearances: dict = {}
    for e in range(m):
        for cid in d.order[e]:
            if not (0 <= cid < len(d.crossings)):
                return f"edge {e} order references unknown crossing {cid}"
            appearances.setdefault(cid, []).append(e)
    for cid, pair in enumerate(d.crossings):
        occur = sorted(appearances.get(cid, []))
        if occur != sorted(pair):
            return (f"crossing {cid} on edges {pair} appears in order "
                    f"sequences of edges {occur}")
    return None


@dataclass(frozen=True)
class Planarization:
    graph: Graph
    segment_paths: tuple  # edge index -> vertex path (endpoints + dummies)
    base: Graph
    parallel_merged: int  # segments merged because two edges crossed twice in a row


def planarize(d: Drawing) -> Planarization:
    """Replace each crossing by a new vertex splitting both of its edges."""
    problem = structural_problem(d)
    if problem is not None:
        raise DrawingError(problem)
    n = d.base.vertex_count
    paths = []
    seg_edges = set()
    merged = 0
    for e, (u, v) in enumerate(d.base.edges):
        path = [u] + [n + cid for cid in d.order[e]] + [v]
        paths.append(tuple(path))
        for x, y in zip(path, path[1:]):
            key = (min(x, y), max(x, y))
            if key in seg_edges:
                merged += 1
            else:
                seg_edges.add(key)
    graph = Graph(n + len(d.crossings), tuple(sorted(seg_edges)))
    return Planarization(graph, tuple(paths), d.base, merged)


def _planarization_adjacency(d: Drawing) -> tuple:
    """(vertex count, adjacency lists) of the planarization, built directly."""
    n = d.base.vertex_count
    total = n + len(d.crossings)
    adj = [[] for _ in range(total)]
    seen = set()
    for e, (u, v) in enumerate(d.base.edges):
        path = [u] + [n + cid for cid in d.order[e]] + [v]
        for x, y in zip(path, path[1:]):
            key = (x, y) if x < y else (y, x)
            if key not in seen:
                seen.add(key)
                adj[x].append(y)
                adj[y].append(x)
    return total, adj


@dataclass(frozen=True)
class ValidationResult:
    valid: bool
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.valid


def gadget_adjacency(n: int, edges, order) -> tuple:
    """(vertex count, adjacency lists) of the alternation-forced expansion.

    Each crossing becomes a 4-wheel: hub plus rim r0-r1-r2-r3, with the two
    strands of the first edge attached at r0/r2 and of the second at r1/r3.
    The wheel's unique embedding pins the cyclic order of the four strands to
    e,f,e,f (up to reflection), so planarity of this expansion holds exactly
    when every listed crossing can be drawn as a genuine transversal crossing.
    A planar planarization alone does not guarantee that: the two edges may
    merely touch at the dummy and such a configuration realizes with fewer
    crossings than it claims.
    """
    crossing_edges: dict = {}
    for e in range(len(edges)):
        for cid in order[e]:
            crossing_edges.setdefault(cid, []).append(e)
    k = len(crossing_edges)
    total = n + 5 * k
    adj = [[] for _ in range(total)]

    def link(a: int, b: int) -> None:
        adj[a].append(b)
        adj[b].append(a)

    cid_list = sorted(crossing_edges)
    block = {cid: n + 5 * i for i, cid in enumerate(cid_list)}
    for cid in cid_list:
        h = block[cid]
        r = [h + 1, h + 2, h + 3, h + 4]
        link(r[0], r[1])
        link(r[1], r[2])
        link(r[2], r[3])
        link(r[3], r[0])
        for x in r:
            link(h, x)

    def ports(cid: int, e: int) -> tuple:
        h = block[cid]
        owners = crossing_edges[cid]
        if e == min(owners):
            return h + 1, h + 3  # r0, r2
        return h + 2, h + 4      # r1, r3

    for e, (u, v) in enumerate(edges):
        prev = u
        for cid in order[e]:
            rin, rout = ports(cid, e)
            link(prev, rin)
            prev = rout
        link(prev, v)
    return total, adj


def is_realizable(d: Drawing) -> bool:
    """Planarity of the alternation-forced expansion (structure assumed ok)."""
    total, adj = gadget_adjacency(d.base.vertex_count, d.base.edges, d.order)
    return planar_adjacency(total, adj)


def validate_drawing(d: Drawing) -> ValidationResult:
    """Valid iff the structural invariants hold, the planarization is planar,
    and every crossing can be realized transversally (wheel-gadget test)."""
    problem = structural_problem(d)
    if problem is not None:
        return ValidationResult(False, problem)
    total, adj = _planarization_adjacency(d)
    if not planar_adjacency(total, adj):
        return ValidationResult(False, "planarization is not planar")
    if not is_realizable(d):
        return ValidationResult(
            False, "crossings cannot all be drawn transversally in this order")
    return ValidationResult(True)


def _require_valid(d: Drawing) -> None:
    res = validate_drawing(d)
    if not res.valid:
        raise InvalidDrawingError(res.reason)


def crossing_count(d: Drawing) -> int:
    _require_valid(d)
    return len(d.crossings)


def trivial_crossings(d: Drawing) -> list:
    """Ids of crossings whose two edges share an endpoint."""
    _require_valid(d)
    return _trivial_ids(d)


def _trivial_ids(d: Drawing) -> list:
    out = []
    for cid, (a, b) in enumerate(d.crossings):
        if set(d.base.edges[a]) & set(d.base.edges[b]):
            out.append(cid)
    return out


def is_good(d: Drawing) -> bool:
    """No crossing joins adjacent edges and no edge pair crosses twice."""
    _require_valid(d)
    if _trivial_ids(d):
        return False
    return len(set(d.crossings)) == len(d.crossings)


def crossed_edges_at(d: Drawing, v: int) -> list:
    """Edges incident to v that participate in at least one crossing."""
    _require_valid(d)
    if not (0 <= v < d.base.vertex_count):
        raise ValueError(f"vertex {v} out of range")
    crossed = set()
    for a, b in d.crossings:
        crossed.add(a)
        crossed.add(b)
    return [d.base.edges[e] for e in sorted(crossed) if v in d.base.edges[e]]


# ---------------------------------------------------------------------------
# Canonical form
# ---------------------------------------------------------------------------


def canonical_key(d: Drawing) -> tuple:
    """Order table with crossing ids relabeled by first appearance.

    Two drawings of the same base are the same drawing iff their keys match.
    """
    relabel: dict = {}
    for e in range(d.base.edge_count):
        for cid in d.order[e]:
            if cid not in relabel:
                relabel[cid] = len(relabel)
    return tuple(tuple(relabel[c] for c in seq) for seq in d.order)


def canonicalize(d: Drawing) -> Drawing:
    relabel: dict = {}
    for seq in d.order:
        for cid in seq:
            if cid not in relabel:
                relabel[cid] = len(relabel)
    new_pairs = [None] * len(d.crossings)
    for cid, pair in enumerate(d.crossings):
        new_pairs[relabel[cid]] = pair
    new_order = tuple(tuple(relabel[c] for c in seq) for seq in d.order)
    return Drawing(d.base, tuple(new_pairs), new_order)


def drawings_equal(d1: Drawing, d2: Drawing) -> bool:
    return d1.base == d2.base and canonical_key(d1) == canonical_key(d2)


# ---------------------------------------------------------------------------
# Trivial-crossing elimination
# ---------------------------------------------------------------------------


def _oriented(seq: list, edge, from_vertex: int) -> list:
    u, v = edge
    return list(seq) if from_vertex == u else list(reversed(seq))


def _store_back(seq: list, edge, from_vertex: int) -> list:
    u, v = edge
    return list(seq) if from_vertex == u else list(reversed(seq))


def eliminate_trivial(d: Drawing) -> Drawing:
    """Remove all trivial crossings by local surgery.

    At a trivial crossing of edges e and f meeting at u, the two curve pieces
    between u and the crossing are exchanged and the crossing deleted; the
    crossings riding on the exchanged pieces change owner.  If an exchange
    leaves some crossing with both passages on one edge, the enclosed loop is
    excised (dropping the crossings on it).  The result is valid, has no
    trivial crossings, and never has more non-trivial crossings than the
    input; the count is preserved whenever no exchanged piece carries a
    crossing whose new edge pair turns out adjacent.
    """
    _require_valid(d)
    edges = d.base.edges
    # live state: order per edge as list; crossing records derived from orders
    order = [list(seq) for seq in d.order]

    def records() -> dict:
        rec: dict = {}
        for e in range(len(edges)):
            for cid in order[e]:
                rec.setdefault(cid, []).append(e)
        return rec

    while True:
        rec = records()
        trivial = sorted(
            cid for cid, es in rec.items()
            if len(es) == 2 and es[0] != es[1]
            and set(edges[es[0]]) & set(edges[es[1]]))
        self_pairs = sorted(cid for cid, es in rec.items() if es[0] == es[1])
        if self_pairs:
            cid = self_pairs[0]
            e = rec[cid][0]
            positions = [i for i, c in enumerate(order[e]) if c == cid]
            p1, p2 = positions[0], positions[-1]
            loop = order[e][p1 + 1:p2]
            order[e] = order[e][:p1] + order[e][p2 + 1:]
            # crossings on the excised loop disappear entirely (including any
            # passage they had outside the loop)
            for z in set(loop):
                for e2 in range(len(edges)):
                    order[e2] = [c for c in order[e2] if c != z]
            continue
        if not trivial:
            break
        x = trivial[0]
        ea, eb = rec[x]
        shared = set(edges[ea]) & set(edges[eb])
        u = min(shared)
        seq_a = _oriented(order[ea], edges[ea], u)
        seq_b = _oriented(order[eb], edges[eb], u)
        pa = seq_a.index(x)
        pb = seq_b.index(x)
        new_a = seq_b[:pb] + seq_a[pa + 1:]
        new_b = seq_a[:pa] + seq_b[pb + 1:]
        order[ea] = _store_back(new_a, edges[ea], u)
        order[eb] = _store_back(new_b, edges[eb], u)

    rec = records()
    live = sorted(rec)
    relabel = {cid: i for i, cid in enumerate(live)}
    pairs = tuple((min(rec[cid]), max(rec[cid])) for cid in live)
    new_order = tuple(tuple(relabel[c] for c in seq) for seq in order)
    result = canonicalize(Drawing(d.base, pairs, new_order))
    check = validate_drawing(result)
    if not check.valid:  # pragma: no cover - surgery mirrors a plane operation
        raise AssertionError(f"surgery produced an invalid drawing: {check.reason}")
    return result


# ---------------------------------------------------------------------------
# Drawings induced along an immersion
# ---------------------------------------------------------------------------


class InducedDrawingError(DrawingError):
    pass


def induced_drawing(d: Drawing, cert: ImmersionCertificate) -> Drawing:
    """Drawing of cert.small obtained by routing each of its edges along its
    image path in a drawing of cert.host, then clearing the trivial crossings
    created where paths of adjacent edges meet.

    Requires d valid and good, and cert an essential immersion onto d.base.
    Preserves the crossing count; a host crossing whose two edges are carried
    by the same or by adjacent small edges has no good counterpart and raises.
    """
    _require_valid(d)
    if not is_good(d):
        raise InvalidDrawingError("host drawing must be good")
    if cert.host != d.base:
        raise CertificateError("certificate host differs from the drawn graph")
    problem = explain_immersion(cert, essential=True, onto=True)
    if problem is not None:
        raise CertificateError(problem)

    host = d.base
    small = cert.small
    carrier = {}
    for idx in range(small.edge_count):
        path = cert.edge_paths[idx]
        for x, y in zip(path, path[1:]):
            carrier[(min(x, y), max(x, y))] = idx

    # events[s] = list of tokens along small edge s: ("x", host crossing id)
    # or ("v", host vertex) for an interior vertex visit
    events = []
    interior_visits: dict = {}
    for idx in range(small.edge_count):
        path = cert.edge_paths[idx]
        toks = []
        for step, (x, y) in enumerate(zip(path, path[1:])):
            h = host.edge_index[(min(x, y), max(x, y))]
            seq = d.order[h] if x == min(x, y) else tuple(reversed(d.order[h]))
            toks.extend(("x", cid) for cid in seq)
            if step < len(path) - 2:
                toks.append(("v", y))
                interior_visits.setdefault(y, []).append(idx)
        events.append(toks)

    for cid, (ha, hb) in enumerate(d.crossings):
        sa = carrier[host.edges[ha]]
        sb = carrier[host.edges[hb]]
        if sa == sb:
            raise InducedDrawingError(
                f"host crossing {cid} lies on one edge path; the induced edge "
                "would cross itself")
        if set(small.edges[sa]) & set(small.edges[sb]):
            raise InducedDrawingError(
                f"host crossing {cid} joins paths of adjacent edges; the "
                "crossing count would not be preserved")

    new_pairs = []
    for cid, (ha, hb) in enumerate(d.crossings):
        sa, sb = carrier[host.edges[ha]], carrier[host.edges[hb]]
        new_pairs.append((min(sa, sb), max(sa, sb)))
    inserted: dict = {}
    for w, visitors in sorted(interior_visits.items()):
        uniq = sorted(set(visitors))
        for i in range(len(uniq)):
            for j in range(i + 1, len(uniq)):
                new_pairs.append((uniq[i], uniq[j]))
                inserted[(w, uniq[i], uniq[j])] = len(new_pairs) - 1

    new_order = []
    for idx in range(small.edge_count):
        seq = []
        for tok in events[idx]:
            if tok[0] == "x":
                seq.append(tok[1])
            else:
                w = tok[1]
                for other in sorted(set(interior_visits[w])):
                    if other == idx:
                        continue
                    key = (w, min(idx, other), max(idx, other))
                    seq.append(inserted[key])
        new_order.append(tuple(seq))

    raw = Drawing(small, tuple(new_pairs), tuple(new_order))
    check = validate_drawing(raw)
    if not check.valid:
        raise InducedDrawingError(
            f"routed drawing failed validation ({check.reason}); the meeting "
            "pattern at a shared vertex admits no consistent resolution")
    out = eliminate_trivial(raw)
    if out.crossing_total != d.crossing_total or not is_good(out):
        raise InducedDrawingError(
            "trivial-crossing cleanup did not preserve the crossing count")
    return out


# ---------------------------------------------------------------------------
# JSON
# ---------------------------------------------------------------------------


def drawing_to_json_dict(d: Drawing) -> dict:
    by_edge: dict = {}
    for e in range(d.base.edge_count):
        if len(d.order[e]) >= 2:
            by_edge[str(e)] = list(d.order[e])
    return {
        "n": d.base.vertex_count,
        "edges": [list(e) for e in d.base.edges],
        "crossings": [{"a": a, "b": b} for a, b in d.crossings],
        "order": by_edge,
    }


def drawing_from_json_dict(obj: dict) -> Drawing:
    try:
        base = Graph.make(obj["n"], obj["edges"])
        pairs = [(int(c["a"]), int(c["b"])) for c in obj["crossings"]]
        order = {int(k): [int(x) for x in v] for k, v in obj.get("order", {}).items()}
    except (KeyError, TypeError, ValueError) as exc:
        raise DrawingError(f"malformed drawing JSON: {exc}") from exc
    return Drawing.make(base, pairs, order)


def drawing_to_json(d: Drawing) -> str:
    return json.dumps(drawing_to_json_dict(d), sort_keys=True, separators=(",", ":"))


def drawing_from_json(text: str) -> Drawing:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DrawingError(f"not JSON: {exc}") from exc
    return drawing_from_json_dict(obj)
