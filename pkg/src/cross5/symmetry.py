"""Vertex automorphisms and the edge-pair orbits they induce.

Used by the crossing solver to branch on one representative first crossing
per orbit.  Reduction with any subset of the automorphism group is sound
(orbits may merely split), so enumeration is capped.
"""

from __future__ import annotations

from .graphs import Graph


def automorphisms(g: Graph, limit: int = 5040) -> list:
    """Vertex permutations preserving adjacency, as tuples, at most `limit`."""
    n = g.vertex_count
    if n == 0:
        return [()]
    masks = g.adjacency_masks
    degs = [g.degree(v) for v in range(n)]
    found = []
    image = [-1] * n

    def backtrack(i: int, used: int) -> bool:
        if len(found) >= limit:
            return False
        if i == n:
            found.append(tuple(image))
            return len(found) < limit
        for w in range(n):
            bit = 1 << w
            if used & bit or degs[i] != degs[w]:
                continue
            ok = True
            for j in range(i):
                if ((masks[i] >> j) & 1) != ((masks[w] >> image[j]) & 1):
                    ok = False
                    break
            if ok:
                image[i] = w
                if not backtrack(i + 1, used | bit):
                    return False
                image[i] = -1
        return True

    backtrack(0, 0)
    return found


def edge_pair_orbits(g: Graph, pairs: list, autos: list | None = None) -> list:
    """Partition unordered edge-index pairs into orbits; returns sorted
    representatives (the minimum of each orbit)."""
    if autos is None:
        autos = automorphisms(g)
    index = g.edge_index
    pair_ids = {p: i for i, p in enumerate(pairs)}
    parent = list(range(len(pairs)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a: int, b: int) -> None:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    edges = g.edges
    for sigma in autos:
        edge_image = []
        for u, v in edges:
            a, b = sigma[u], sigma[v]
            edge_image.append(index[(min(a, b), max(a, b))])
        for i, (e, f) in enumerate(pairs):
            ie, if_ = edge_image[e], edge_image[f]
            target = (min(ie, if_), max(ie, if_))
            j = pair_ids.get(target)
            if j is not None:
                union(i, j)
    reps = sorted({find(i) for i in range(len(pairs))})
    return [pairs[r] for r in reps]
