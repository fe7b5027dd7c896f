"""Simple undirected graphs with dense integer vertices, plus the structural
queries the coloring and crossing machinery conditions on.

Vertices are always 0..n-1.  Edges are stored as a sorted tuple of sorted
pairs, so two graphs compare equal iff they are identical labelled graphs.
Graph values are immutable and hashable; every function here is pure.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import cached_property


class GraphFormatError(ValueError):
    """Malformed textual graph input (carries line number when known)."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        n = self.vertex_count
        if n < 0:
            raise ValueError("vertex_count must be non-negative")
        seen = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"loop at vertex {u} not allowed")
            if not (0 <= u < v < n):
                raise ValueError(f"edge ({u},{v}) not sorted or out of range for n={n}")
            if (u, v) in seen:
                raise ValueError(f"duplicate edge ({u},{v})")
            seen.add((u, v))
        if tuple(sorted(self.edges)) != self.edges:
            raise ValueError("edges must be sorted")

    @staticmethod
    def make(vertex_count: int, edges) -> "Graph":
        """Build a Graph from any iterable of (u, v) pairs, normalizing order."""
        normalized = []
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"loop at vertex {u} not allowed")
            normalized.append((min(u, v), max(u, v)))
        if len(set(normalized)) != len(normalized):
            _dup_error(normalized)
        return Graph(vertex_count, tuple(sorted(normalized)))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[frozenset, ...]:
        adj = [set() for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(a) for a in adj)

    @cached_property
    def adjacency_masks(self) -> tuple[int, ...]:
        masks = [0] * self.vertex_count
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    @cached_property
    def edge_index(self) -> dict:
        return {e: i for i, e in enumerate(self.edges)}

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edge_index

    def neighbors(self, v: int) -> frozenset:
        return self.adjacency[v]

    def adjacency_lists(self) -> list:
        """Mutable sorted adjacency lists (for algorithms that want raw lists)."""
        adj = [[] for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        for a in adj:
            a.sort()
        return adj

    def without_edge(self, u: int, v: int) -> "Graph":
        e = (min(u, v), max(u, v))
        return Graph(self.vertex_count, tuple(x for x in self.edges if x != e))


def _dup_error(normalized):
    counts = {}
    for e in normalized:
        counts[e] = counts.get(e, 0) + 1
    dups = sorted(e for e, c in counts.items() if c > 1)
    raise ValueError(f"duplicate edge {dups[0]}")


# ---------------------------------------------------------------------------
# Named constructions
# ---------------------------------------------------------------------------


def complete_graph(k: int) -> Graph:
    if k < 1:
        raise ValueError("K_n needs n >= 1")
    return Graph(k, tuple((i, j) for i in range(k) for j in range(i + 1, k)))


def cycle_graph(k: int) -> Graph:
    if k < 3:
        raise ValueError("C_n needs n >= 3")
    edges = [(i, i + 1) for i in range(k - 1)] + [(0, k - 1)]
    return Graph(k, tuple(sorted(edges)))


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise ValueError("K_{a,b} needs positive part sizes")
    return Graph(a + b, tuple((i, a + j) for i in range(a) for j in range(b)))


def graph_join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus every g-vertex adjacent to every h-vertex.

    g keeps its vertex ids; h's vertices are shifted up by g.vertex_count.
    """
    off = g.vertex_count
    edges = list(g.edges)
    edges += [(u + off, v + off) for u, v in h.edges]
    edges += [(i, off + j) for i in range(g.vertex_count) for j in range(h.vertex_count)]
    return Graph(off + h.vertex_count, tuple(sorted(edges)))


def complete_multipartite(*parts: int) -> Graph:
    if not parts or any(p < 1 for p in parts):
        raise ValueError("part sizes must be positive")
    offsets = [0]
    for p in parts:
        offsets.append(offsets[-1] + p)
    n = offsets[-1]
    edges = []
    for pi in range(len(parts)):
        for pj in range(pi + 1, len(parts)):
            for i in range(offsets[pi], offsets[pi + 1]):
                for j in range(offsets[pj], offsets[pj + 1]):
                    edges.append((i, j))
    return Graph(n, tuple(sorted(edges)))


_NAME_RE = re.compile(r"^(K|C)_?\{?(\d+)(?:,(\d+))?\}?$")


def construct_named(name: str) -> Graph:
    """Parse a graph name: K<n>, C<n>, K<a>,<b>, or join(NAME, NAME).

    Accepts e.g. "K6", "K_6", "C5", "K3,5", "K_{3,5}", "join(C3,C5)".
    A bare K followed by exactly two digits ("K35") reads as the complete
    bipartite graph on those part sizes; complete graphs on ten or more
    vertices need an underscore ("K_10").
    """
    s = name.strip()
    if s.lower().startswith("join"):
        inner = s[4:].strip()
        if not (inner.startswith("(") and inner.endswith(")")):
            raise ValueError(f"cannot parse graph name {name!r}")
        depth = 0
        split_at = None
        body = inner[1:-1]
        for i, ch in enumerate(body):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            elif ch == "," and depth == 0:
                if "{" in body[:i] and "}" not in body[:i]:
                    continue
                split_at = i
                break
        if split_at is None:
            raise ValueError(f"cannot parse graph name {name!r}")
        return graph_join(construct_named(body[:split_at]), construct_named(body[split_at + 1:]))
    compact = s.replace(" ", "")
    if re.fullmatch(r"K[1-9][1-9]", compact):
        return complete_bipartite(int(compact[1]), int(compact[2]))
    m = _NAME_RE.match(compact)
    if not m:
        raise ValueError(f"cannot parse graph name {name!r}")
    kind, a, b = m.group(1), int(m.group(2)), m.group(3)
    if kind == "C":
        if b is not None:
            raise ValueError(f"cannot parse graph name {name!r}")
        return cycle_graph(a)
    if b is None:
        return complete_graph(a)
    return complete_bipartite(a, int(b))


# ---------------------------------------------------------------------------
# Text formats
# ---------------------------------------------------------------------------


def from_edge_list_text(text: str) -> Graph:
    """Parse the edge-list format: first line n, then one "u v" per line."""
    n = None
    edges = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if n is None:
            try:
                n = int(line)
            except ValueError:
                raise GraphFormatError(f"expected vertex count, got {line!r}", lineno)
            if n < 0:
                raise GraphFormatError("vertex count must be non-negative", lineno)
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"expected 'u v', got {line!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"non-integer endpoint in {line!r}", lineno)
        if u == v:
            raise GraphFormatError(f"loop at vertex {u} rejected", lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"endpoint out of range in ({u}, {v})", lineno)
        e = (min(u, v), max(u, v))
        if e in seen:
            raise GraphFormatError(f"duplicate edge ({u}, {v})", lineno)
        seen.add(e)
        edges.append(e)
    if n is None:
        raise GraphFormatError("empty input: missing vertex count header")
    return Graph(n, tuple(sorted(edges)))


def to_edge_list_text(g: Graph) -> str:
    lines = [str(g.vertex_count)]
    lines += [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def from_graph6(text: str) -> Graph:
    """Decode a graph6 string (optionally prefixed with '>>graph6<<')."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):].strip()
    if not s:
        raise GraphFormatError("empty graph6 string")
    data = [ord(c) - 63 for c in s]
    if any(b < 0 or b > 63 for b in data):
        raise GraphFormatError("graph6 character out of range")
    if data[0] == 63:  # 0x7e marker: extended sizes
        if len(data) >= 4 and data[1] != 63:
            n = (data[1] << 12) | (data[2] << 6) | data[3]
            body = data[4:]
        else:
            raise GraphFormatError("graph6 size header too large (n > 258047 unsupported)")
    else:
        n = data[0]
        body = data[1:]
    nbits = n * (n - 1) // 2
    expected = (nbits + 5) // 6
    if len(body) != expected:
        raise GraphFormatError(
            f"graph6 body length {len(body)} != expected {expected} for n={n}")
    bits = []
    for b in body:
        for shift in range(5, -1, -1):
            bits.append((b >> shift) & 1)
    if any(bits[nbits:]):
        raise GraphFormatError("nonzero padding bits in graph6 body")
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.append((i, j))
            idx += 1
    return Graph(n, tuple(sorted(edges)))


def to_graph6(g: Graph) -> str:
    n = g.vertex_count
    if n <= 62:
        header = [n]
    elif n <= 258047:
        header = [63, (n >> 12) & 63, (n >> 6) & 63, n & 63]
    else:
        raise ValueError("graph6 encoding supported for n <= 258047")
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    body = []
    for k in range(0, len(bits), 6):
        val = 0
        for bit in bits[k:k + 6]:
            val = (val << 1) | bit
        body.append(val)
    return "".join(chr(63 + b) for b in header + body)


FORMATS = ("edge-list", "graph6")


def parse_graph(text: str, fmt: str = "edge-list") -> Graph:
    if fmt == "edge-list":
        return from_edge_list_text(text)
    if fmt == "graph6":
        return from_graph6(text)
    raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")


def serialize_graph(g: Graph, fmt: str = "edge-list") -> str:
    if fmt == "edge-list":
        return to_edge_list_text(g)
    if fmt == "graph6":
        return to_graph6(g)
    raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")


# ---------------------------------------------------------------------------
# Structural queries
# ---------------------------------------------------------------------------


def clique_number(g: Graph) -> int:
    """Largest k such that the complete graph on k vertices is a subgraph.

    Exact Bron-Kerbosch search with pivoting over bitmask vertex sets.
    """
    n = g.vertex_count
    if n == 0:
        raise ValueError("clique number undefined for the empty graph")
    masks = g.adjacency_masks
    best = 1

    def expand(size: int, candidates: int, excluded: int) -> None:
        nonlocal best
        if candidates == 0:
            if excluded == 0:
                best = max(best, size)
            return
        if size + bin(candidates).count("1") <= best:
            return
        pool = candidates | excluded
        pivot = -1
        pivot_cover = -1
        p = pool
        while p:
            v = (p & -p).bit_length() - 1
            p &= p - 1
            cover = bin(candidates & masks[v]).count("1")
            if cover > pivot_cover:
                pivot_cover, pivot = cover, v
        branch = candidates & ~masks[pivot]
        while branch:
            v = (branch & -branch).bit_length() - 1
            branch &= branch - 1
            bit = 1 << v
            expand(size + 1, candidates & masks[v], excluded & masks[v])
            candidates &= ~bit
            excluded |= bit

    expand(0, (1 << n) - 1, 0)
    return best


def min_degree_vertex(g: Graph) -> int:
    """Smallest-id vertex of minimum degree."""
    if g.vertex_count == 0:
        raise ValueError("empty graph has no vertices")
    return min(range(g.vertex_count), key=lambda v: (g.degree(v), v))


def _local_connectivity_at_least(g: Graph, s: int, t: int, k: int) -> bool:
    """Menger check: at least k internally vertex-disjoint s-t paths.

    Unit-capacity max-flow on the vertex-split digraph, BFS augmentation,
    stopping as soon as k paths are found.
    """
    n = g.vertex_count
    # Node 2v = "in" copy, 2v+1 = "out" copy. Arc capacity is implicit:
    # each arc can carry at most one unit; we store residual adjacency.
    succ = [set() for _ in range(2 * n)]
    for v in range(n):
        succ[2 * v].add(2 * v + 1)
    for u, v in g.edges:
        succ[2 * u + 1].add(2 * v)
        succ[2 * v + 1].add(2 * u)
    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while flow < k:
        prev = {source: None}
        queue = [source]
        qi = 0
        while qi < len(queue) and sink not in prev:
            x = queue[qi]
            qi += 1
            for y in sorted(succ[x]):
                if y not in prev:
                    prev[y] = x
                    queue.append(y)
        if sink not in prev:
            return False
        y = sink
        while prev[y] is not None:
            x = prev[y]
            succ[x].discard(y)
            succ[y].add(x)
            y = x
        flow += 1
    return True


def vertex_connectivity_at_least(g: Graph, k: int) -> bool:
    """True iff no vertex cut of size < k exists and the graph has > k vertices."""
    if k < 1:
        raise ValueError("k must be >= 1")
    n = g.vertex_count
    if n <= k:
        return False
    if any(g.degree(v) < k for v in range(n)):
        return False
    nonadjacent = [(u, v) for u in range(n) for v in range(u + 1, n) if not g.has_edge(u, v)]
    if not nonadjacent:
        return True  # complete graph: connectivity n-1 >= k since n > k
    return all(_local_connectivity_at_least(g, u, v, k) for u, v in nonadjacent)


def connected_components(g: Graph) -> list:
    seen = [False] * g.vertex_count
    comps = []
    for root in range(g.vertex_count):
        if seen[root]:
            continue
        comp = [root]
        seen[root] = True
        stack = [root]
        while stack:
            x = stack.pop()
            for y in g.adjacency[x]:
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    stack.append(y)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return g.vertex_count <= 1 or len(connected_components(g)) == 1


# ---------------------------------------------------------------------------
# Isomorphism helpers (brute force; intended for small n only)
# ---------------------------------------------------------------------------


def _edge_mask(n: int, edges) -> int:
    mask = 0
    for u, v in edges:
        mask |= 1 << _pair_index(n, u, v)
    return mask


def _pair_index(n: int, u: int, v: int) -> int:
    if u > v:
        u, v = v, u
    return v * (v - 1) // 2 + u


def canonical_edge_tuple(g: Graph) -> tuple:
    """Lexicographically least edge tuple over all vertex relabelings.

    Brute force over all n! permutations; guarded to n <= 8.
    """
    n = g.vertex_count
    if n > 8:
        raise ValueError("canonical form via brute force is limited to n <= 8")
    best = None
    for perm in itertools.permutations(range(n)):
        relabeled = tuple(sorted(
            (min(perm[u], perm[v]), max(perm[u], perm[v])) for u, v in g.edges))
        if best is None or relabeled < best:
            best = relabeled
    return best if best is not None else ()


def find_isomorphism(g: Graph, h: Graph):
    """A vertex map realizing g ≅ h (tuple indexed by g's vertices), or None."""
    if g.vertex_count != h.vertex_count or g.edge_count != h.edge_count:
        return None
    if sorted(g.degree(v) for v in range(g.vertex_count)) != \
            sorted(h.degree(v) for v in range(h.vertex_count)):
        return None
    n = g.vertex_count
    gm = g.adjacency_masks
    hm = h.adjacency_masks
    gdeg = [g.degree(v) for v in range(n)]
    hdeg = [h.degree(v) for v in range(n)]
    assignment = [-1] * n

    def backtrack(i: int, used: int) -> bool:
        if i == n:
            return True
        for w in range(n):
            bit = 1 << w
            if used & bit or gdeg[i] != hdeg[w]:
                continue
            ok = True
            for j in range(i):
                if ((gm[i] >> j) & 1) != ((hm[w] >> assignment[j]) & 1):
                    ok = False
                    break
            if ok:
                assignment[i] = w
                if backtrack(i + 1, used | bit):
                    return True
                assignment[i] = -1
        return False

    if backtrack(0, 0):
        return tuple(assignment)
    return None


def are_isomorphic(g: Graph, h: Graph) -> bool:
    return find_isomorphism(g, h) is not None


def all_graphs_up_to_iso(n: int) -> list:
    """All simple graphs on exactly n vertices, one per isomorphism class.

    Grown vertex by vertex with canonical-form deduplication; n <= 7 is the
    practical range (counts 1, 2, 4, 11, 34, 156, 1044 for n = 1..7).
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    reps = [Graph(0, ())]
    for size in range(1, n + 1):
        seen = set()
        nxt = []
        for g in reps:
            for nbr_mask in range(1 << (size - 1)):
                edges = list(g.edges)
                for w in range(size - 1):
                    if (nbr_mask >> w) & 1:
                        edges.append((w, size - 1))
                cand = Graph(size, tuple(sorted(edges)))
                key = canonical_edge_tuple(cand)
                if key not in seen:
                    seen.add(key)
                    nxt.append(cand)
        reps = nxt
    return reps
