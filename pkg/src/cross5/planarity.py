"""Planarity decision (left-right test), Kuratowski-subdivision witnesses,
and the Euler-formula crossing lower bound.

The left-right test follows Brandes' formulation: a first DFS orients the
graph and computes lowpoints and a nesting order, a second DFS maintains a
stack of conflict pairs of back-edge intervals and fails exactly when two
back edges are forced to the same side but interleave.  Only the boolean
answer is extracted (no embedding), which keeps the inner loop small; the
solver may call this millions of times.
"""

from __future__ import annotations

import itertools
import sys
from dataclasses import dataclass

from .graphs import Graph


class _Interval:
    __slots__ = ("low", "high")

    def __init__(self, low=None, high=None):
        self.low = low
        self.high = high

    def empty(self) -> bool:
        return self.low is None and self.high is None


class _ConflictPair:
    __slots__ = ("left", "right")

    def __init__(self, left=None, right=None):
        self.left = left if left is not None else _Interval()
        self.right = right if right is not None else _Interval()

    def swap(self) -> None:
        self.left, self.right = self.right, self.left


class _NonPlanar(Exception):
    pass


def is_planar(g: Graph) -> bool:
    return planar_adjacency(g.vertex_count, g.adjacency_lists())


def planar_adjacency(n: int, adj: list) -> bool:
    """Planarity of a simple graph given as adjacency lists over 0..n-1."""
    m = sum(len(a) for a in adj) // 2
    if n <= 4 or m <= 8:
        # Every nonplanar graph contains a subdivision of a 9-edge or
        # 10-edge graph, so it has at least 9 edges.  (A bound in terms of
        # n alone would be wrong: isolated vertices raise n at will.)
        return True
    if m > 3 * n - 6:
        return False
    try:
        _LRTest(n, adj).run()
    except _NonPlanar:
        return False
    return True


class _LRTest:
    def __init__(self, n: int, adj: list):
        self.n = n
        self.adj = adj
        self.height = [-1] * n
        self.parent_edge: list = [None] * n
        self.oriented: list = [[] for _ in range(n)]  # outgoing oriented edges
        self.lowpt: dict = {}
        self.lowpt2: dict = {}
        self.nesting: dict = {}
        self.ref: dict = {}
        self.lowpt_edge: dict = {}
        self.stack_bottom: dict = {}
        self.stack: list = []

    def run(self) -> None:
        limit = sys.getrecursionlimit()
        if limit < 2 * self.n + 100:
            sys.setrecursionlimit(2 * self.n + 100)
        for root in range(self.n):
            if self.height[root] == -1:
                self.height[root] = 0
                self._dfs_orient(root)
        for v in range(self.n):
            self.oriented[v].sort(key=lambda e: self.nesting[e])
        for root in range(self.n):
            if self.parent_edge[root] is None:
                self._dfs_test(root)

    # -- phase 1: orientation ------------------------------------------------

    def _dfs_orient(self, v: int) -> None:
        e = self.parent_edge[v]
        hv = self.height[v]
        for w in self.adj[v]:
            ei = (v, w)
            if ei in self.lowpt or (w, v) in self.lowpt:
                continue  # already oriented (covers the parent edge too)
            self.lowpt[ei] = hv
            self.lowpt2[ei] = hv
            if self.height[w] == -1:
                self.parent_edge[w] = ei
                self.height[w] = hv + 1
                self._dfs_orient(w)
            else:
                self.lowpt[ei] = self.height[w]
            self.oriented[v].append(ei)
            self.nesting[ei] = 2 * self.lowpt[ei]
            if self.lowpt2[ei] < hv:
                self.nesting[ei] += 1
            if e is not None:
                if self.lowpt[ei] < self.lowpt[e]:
                    self.lowpt2[e] = min(self.lowpt[e], self.lowpt2[ei])
                    self.lowpt[e] = self.lowpt[ei]
                elif self.lowpt[ei] > self.lowpt[e]:
                    self.lowpt2[e] = min(self.lowpt2[e], self.lowpt[ei])
                else:
                    self.lowpt2[e] = min(self.lowpt2[e], self.lowpt2[ei])

    # -- phase 2: testing ----------------------------------------------------

    def _dfs_test(self, v: int) -> None:
        e = self.parent_edge[v]
        for idx, ei in enumerate(self.oriented[v]):
            self.stack_bottom[ei] = self.stack[-1] if self.stack else None
            if self.parent_edge[ei[1]] == ei:
                self._dfs_test(ei[1])
            else:
                self.lowpt_edge[ei] = ei
                self.stack.append(_ConflictPair(right=_Interval(ei, ei)))
            if self.lowpt[ei] < self.height[v]:  # ei has a return edge
                if idx == 0 and e is not None:
                    self.lowpt_edge[e] = self.lowpt_edge[ei]
                elif idx > 0:
                    self._add_constraints(ei, e)
        if e is not None:
            u = e[0]
            self._trim_back_edges(u)
            if self.lowpt[e] < self.height[u]:  # e has a return edge
                top = self.stack[-1] if self.stack else _ConflictPair()
                hl = top.left.high
                hr = top.right.high
                if hl is not None and (hr is None or self.lowpt[hl] > self.lowpt[hr]):
                    self.ref[e] = hl
                else:
                    self.ref[e] = hr

    def _conflicting(self, interval: _Interval, b) -> bool:
        return not interval.empty() and self.lowpt[interval.high] > self.lowpt[b]

    def _add_constraints(self, ei, e) -> None:
        pair = _ConflictPair()
        # merge return edges of ei into pair.right
        bottom = self.stack_bottom[ei]
        while self.stack and self.stack[-1] is not bottom:
            q = self.stack.pop()
            if not q.left.empty():
                q.swap()
            if not q.left.empty():
                raise _NonPlanar
            if self.lowpt[q.right.low] > self.lowpt[e]:
                if pair.right.empty():
                    pair.right.high = q.right.high
                else:
                    self.ref[pair.right.low] = q.right.high
                pair.right.low = q.right.low
            else:
                self.ref[q.right.low] = self.lowpt_edge[e]
        # merge conflicting return edges of previous siblings into pair.left
        while self.stack and (self._conflicting(self.stack[-1].left, ei)
                              or self._conflicting(self.stack[-1].right, ei)):
            q = self.stack.pop()
            if self._conflicting(q.right, ei):
                q.swap()
            if self._conflicting(q.right, ei):
                raise _NonPlanar
            if pair.right.empty():
                pair.right.high = q.right.high
            else:
                self.ref[pair.right.low] = q.right.high
            if q.right.low is not None:
                pair.right.low = q.right.low
            if pair.left.empty():
                pair.left.high = q.left.high
            else:
                self.ref[pair.left.low] = q.left.high
            pair.left.low = q.left.low
        if not (pair.left.empty() and pair.right.empty()):
            self.stack.append(pair)

    def _lowest(self, pair: _ConflictPair) -> int:
        if pair.left.empty():
            return self.lowpt[pair.right.low]
        if pair.right.empty():
            return self.lowpt[pair.left.low]
        return min(self.lowpt[pair.left.low], self.lowpt[pair.right.low])

    def _trim_back_edges(self, u: int) -> None:
        hu = self.height[u]
        while self.stack and self._lowest(self.stack[-1]) == hu:
            self.stack.pop()
        if self.stack:
            pair = self.stack.pop()
            while pair.left.high is not None and pair.left.high[1] == u:
                pair.left.high = self.ref.get(pair.left.high)
            if pair.left.high is None and pair.left.low is not None:
                self.ref[pair.left.low] = pair.right.low
                pair.left.low = None
            while pair.right.high is not None and pair.right.high[1] == u:
                pair.right.high = self.ref.get(pair.right.high)
            if pair.right.high is None and pair.right.low is not None:
                self.ref[pair.right.low] = pair.left.low
                pair.right.low = None
            self.stack.append(pair)


# ---------------------------------------------------------------------------
# Kuratowski witnesses
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class KuratowskiWitness:
    kind: str  # "K5-subdivision" or "K33-subdivision"
    branch_vertices: tuple
    paths: tuple  # tuple of vertex tuples, one per subdivision edge


def minimal_nonplanar_edges(n: int, edges: list) -> list:
    """Edge set of an edge-minimal nonplanar subgraph (a Kuratowski subdivision).

    One ordered pass: an edge is dropped if the rest stays nonplanar.  Later
    removals cannot resurrect a dropped edge's necessity, so a single pass
    suffices.
    """
    current = list(edges)
    i = 0
    while i < len(current):
        trial = current[:i] + current[i + 1:]
        adj = [[] for _ in range(n)]
        for u, v in trial:
            adj[u].append(v)
            adj[v].append(u)
        if not planar_adjacency(n, adj):
            current = trial
        else:
            i += 1
    return current


def find_kuratowski(g: Graph) -> KuratowskiWitness:
    """Extract a Kuratowski subdivision witness from a nonplanar graph."""
    if is_planar(g):
        raise ValueError("find_kuratowski called on a planar graph")
    core = minimal_nonplanar_edges(g.vertex_count, list(g.edges))
    deg: dict = {}
    nbr: dict = {}
    for u, v in core:
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
        nbr.setdefault(u, []).append(v)
        nbr.setdefault(v, []).append(u)
    branch = sorted(v for v, d in deg.items() if d >= 3)
    degrees = sorted(deg[v] for v in branch)
    if degrees == [4] * 5:
        kind = "K5-subdivision"
    elif degrees == [3] * 6:
        kind = "K33-subdivision"
    else:  # pragma: no cover - minimality guarantees one of the two shapes
        raise AssertionError(f"unexpected core degrees {degrees}")
    branch_set = set(branch)
    paths = []
    used = set()
    for b in branch:
        for w in sorted(nbr[b]):
            first = (b, w)
            if first in used:
                continue
            path = [b, w]
            used.add(first)
            used.add((w, b))
            prev, cur = b, w
            while cur not in branch_set:
                nxt = [x for x in nbr[cur] if x != prev]
                assert len(nxt) == 1
                prev, cur = cur, nxt[0]
                used.add((prev, cur))
                used.add((cur, prev))
                path.append(cur)
            if path[0] > path[-1]:
                path.reverse()
            paths.append(tuple(path))
    paths = sorted(set(paths))
    expected = 10 if kind == "K5-subdivision" else 9
    assert len(paths) == expected, (kind, len(paths))
    return KuratowskiWitness(kind, tuple(branch), tuple(paths))


def verify_kuratowski(g: Graph, w: KuratowskiWitness) -> bool:
    """Structural check: path system realizes the claimed subdivision in g."""
    if w.kind == "K5-subdivision":
        if len(w.branch_vertices) != 5 or len(w.paths) != 10:
            return False
        wanted = {frozenset(p) for p in itertools.combinations(w.branch_vertices, 2)}
    elif w.kind == "K33-subdivision":
        if len(w.branch_vertices) != 6 or len(w.paths) != 9:
            return False
        wanted = None  # checked via degrees below
    else:
        return False
    interior = []
    endpoints = []
    for path in w.paths:
        if len(path) < 2:
            return False
        for a, b in zip(path, path[1:]):
            if not g.has_edge(a, b):
                return False
        if len(set(path)) != len(path):
            return False
        inner = set(path[1:-1])
        if inner & set(w.branch_vertices):
            return False
        interior.append(inner)
        endpoints.append(frozenset((path[0], path[-1])))
    for i in range(len(w.paths)):
        for j in range(i + 1, len(w.paths)):
            if interior[i] & interior[j]:
                return False
            if interior[i] & set(endpoints[j]) or interior[j] & set(endpoints[i]):
                return False
    if wanted is not None:
        return set(endpoints) == wanted
    # K33: endpoints must form a complete bipartite pattern on the branch set
    deg: dict = {}
    for ep in endpoints:
        for v in ep:
            deg[v] = deg.get(v, 0) + 1
    if sorted(deg.get(v, 0) for v in w.branch_vertices) != [3] * 6:
        return False
    pairs = set(endpoints)
    if len(pairs) != 9:
        return False
    side = {w.branch_vertices[0]: 0}
    changed = True
    while changed:
        changed = False
        for ep in endpoints:
            a, b = tuple(ep)
            for x, y in ((a, b), (b, a)):
                if x in side and y not in side:
                    side[y] = 1 - side[x]
                    changed = True
    if len(side) != 6:
        return False
    return all(side[a] != side[b] for ep in endpoints for a, b in [tuple(ep)])


def euler_lower_bound(g: Graph) -> int:
    """max(0, m - 3n + 6): crossings forced by the planar edge bound."""
    if g.vertex_count < 3:
        raise ValueError("lower bound formula requires at least 3 vertices")
    return max(0, g.edge_count - 3 * g.vertex_count + 6)
