"""Kempe-chain 5-coloring with explicit obstructions.

Extending a 5-coloring over a degree-5 vertex either finds a color pair
whose two-colored subgraph separates two neighbors (swap one component and
a color is freed) or, if all ten pairs connect, produces a machine-checkable
certificate: the vertex, its five neighbors, and ten alternating paths form
a v-immersion of K6 into the graph.

The full procedure deletes low-degree vertices greedily and backtracks over
degree-5 candidate vertices, falling back to exhaustive search so the
operation stays total outside the guaranteed regime.
"""

from __future__ import annotations

from dataclasses import dataclass

from .drawings import crossed_edges_at  # re-exported: incident crossed edges
from .graphs import Graph, complete_graph
from .immersions import (ImmersionCertificate, explain_immersion,
                         verify_immersion)

__all__ = [
    "Coloring", "ColorOutcome", "ColorPolicy", "Obstruction",
    "verify_coloring", "kempe_components", "kempe_swap", "extend_coloring",
    "five_color", "find_coloring_exhaustive", "crossed_edges_at",
    "verify_immersion", "ImmersionCertificate",
]


class ColoringError(ValueError):
    pass


@dataclass(frozen=True)
class Coloring:
    assignment: tuple  # vertex -> color, colors in 1..palette
    palette: int

    def color_classes(self) -> dict:
        classes: dict = {}
        for v, c in enumerate(self.assignment):
            classes.setdefault(c, set()).add(v)
        return classes


def verify_coloring(g: Graph, c: Coloring) -> bool:
    """True iff c is a proper coloring of g within its palette."""
    if len(c.assignment) != g.vertex_count:
        raise ColoringError(
            f"assignment covers {len(c.assignment)} of {g.vertex_count} vertices")
    if any(col is None for col in c.assignment):
        raise ColoringError("partial assignment")
    if any(not (1 <= col <= c.palette) for col in c.assignment):
        return False
    return all(c.assignment[u] != c.assignment[v] for u, v in g.edges)


def kempe_components(g: Graph, c: Coloring, i: int, j: int) -> list:
    """Connected components of the subgraph induced by color classes i and j,
    as vertex frozensets sorted by smallest member."""
    members = [v for v in range(g.vertex_count) if c.assignment[v] in (i, j)]
    member_set = set(members)
    seen: set = set()
    comps = []
    for root in members:
        if root in seen:
            continue
        comp = {root}
        seen.add(root)
        stack = [root]
        while stack:
            x = stack.pop()
            for y in sorted(g.adjacency[x]):
                if y in member_set and y not in seen:
                    seen.add(y)
                    comp.add(y)
                    stack.append(y)
        comps.append(frozenset(comp))
    return sorted(comps, key=min)


def kempe_swap(g: Graph, c: Coloring, pair: tuple, component_id: int) -> Coloring:
    """Exchange the two colors of `pair` on one component of their subgraph."""
    i, j = pair
    comps = kempe_components(g, c, i, j)
    if not (0 <= component_id < len(comps)):
        raise ColoringError(f"no component {component_id} for colors {{{i},{j}}}")
    comp = comps[component_id]
    swapped = list(c.assignment)
    for v in comp:
        swapped[v] = j if swapped[v] == i else i
    out = Coloring(tuple(swapped), c.palette)
    assert verify_coloring(g, out), "swap broke properness"
    return out


@dataclass(frozen=True)
class ExtendOutcome:
    coloring: Coloring | None
    certificate: ImmersionCertificate | None

    @property
    def extended(self) -> bool:
        return self.coloring is not None


def _bfs_alternating_path(adjacency, allowed: set, start: int, goal: int) -> tuple:
    """Shortest path from start to goal inside `allowed`, smallest-id first."""
    parent = {start: None}
    queue = [start]
    qi = 0
    while qi < len(queue):
        x = queue[qi]
        qi += 1
        if x == goal:
            break
        for y in sorted(adjacency[x]):
            if y in allowed and y not in parent:
                parent[y] = x
                queue.append(y)
    if goal not in parent:
        raise AssertionError("endpoints reported connected but no path found")
    path = [goal]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])
    path.reverse()
    return tuple(path)


def _extend_masked(g: Graph, live: set, v: int, colors: dict,
                   palette: int = 5) -> ExtendOutcome:
    """Extend a proper coloring of the induced subgraph on live-{v} to v.

    colors maps every vertex of live except v to 1..palette.  Certificates
    are hosted in the full graph g (its edge set contains the subgraph's).
    """
    nbrs = sorted(w for w in g.adjacency[v] if w in live)
    if len(nbrs) > 5:
        raise ColoringError(f"vertex {v} has degree {len(nbrs)} > 5")
    used = {colors[w] for w in nbrs}
    free = [col for col in range(1, palette + 1) if col not in used]
    if free:
        full = dict(colors)
        full[v] = free[0]
        return ExtendOutcome(_as_coloring(full, live, palette), None)

    # Five neighbors showing all five colors; v_i is the neighbor colored i.
    by_color = {colors[w]: w for w in nbrs}
    adjacency = g.adjacency
    paths = {}
    for i in range(1, palette + 1):
        for j in range(i + 1, palette + 1):
            allowed = {w for w in live if w != v and colors[w] in (i, j)}
            vi, vj = by_color[i], by_color[j]
            component = {vi}
            stack = [vi]
            while stack:
                x = stack.pop()
                for y in adjacency[x]:
                    if y in allowed and y not in component:
                        component.add(y)
                        stack.append(y)
            if vj not in component:
                swapped = dict(colors)
                for w in component:
                    swapped[w] = j if swapped[w] == i else i
                swapped[v] = i
                return ExtendOutcome(_as_coloring(swapped, live, palette), None)
            paths[(i, j)] = _bfs_alternating_path(adjacency, allowed, vi, vj)

    # All ten pairs connect: the alternating paths assemble a v-immersion of
    # K6 (small vertex i-1 -> neighbor colored i; small vertex 5 -> v).
    small = complete_graph(6)
    vmap = tuple(by_color[i] for i in range(1, 6)) + (v,)
    edge_paths = []
    for a, b in small.edges:
        if b == 5:
            edge_paths.append((vmap[a], v))
        else:
            edge_paths.append(paths[(a + 1, b + 1)])
    cert = ImmersionCertificate(small, g, vmap, tuple(edge_paths), center=v)
    problem = explain_immersion(cert, essential=True, v_immersion=True)
    assert problem is None, f"constructed certificate failed verification: {problem}"
    return ExtendOutcome(None, cert)


def _as_coloring(colors: dict, live: set, palette: int) -> Coloring:
    # Coloring objects returned for subgraphs are padded with color 1 outside
    # the live set only when live is the whole vertex range.
    n = max(live) + 1 if live else 0
    assignment = tuple(colors.get(v, 0) for v in range(n))
    return Coloring(assignment, palette)


def extend_coloring(g: Graph, v: int, c, palette: int = 5) -> ExtendOutcome:
    """Extend a proper coloring of g-v (mapping or Coloring) to all of g.

    Either returns a proper coloring of g, or the v-immersion certificate of
    K6 that witnesses why every Kempe exchange fails.
    """
    if not (0 <= v < g.vertex_count):
        raise ColoringError(f"vertex {v} out of range")
    if isinstance(c, Coloring):
        colors = {w: c.assignment[w] for w in range(g.vertex_count) if w != v}
    else:
        colors = dict(c)
    expected = set(range(g.vertex_count)) - {v}
    if set(colors) != expected:
        raise ColoringError("coloring must cover exactly the other vertices")
    if any(not (1 <= colors[w] <= palette) for w in colors):
        raise ColoringError("colors out of palette range")
    for a, b in g.edges:
        if a != v and b != v and colors[a] == colors[b]:
            raise ColoringError(f"input coloring is not proper on edge ({a},{b})")
    live = set(range(g.vertex_count))
    out = _extend_masked(g, live, v, colors, palette)
    if out.extended:
        assert verify_coloring(g, out.coloring)
    return out


# ---------------------------------------------------------------------------
# The full coloring procedure
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Obstruction:
    vertex: int
    certificate: ImmersionCertificate


@dataclass(frozen=True)
class ColorOutcome:
    coloring: Coloring | None
    obstruction: Obstruction | None
    max_candidates_used: int = 0

    @property
    def colored(self) -> bool:
        return self.coloring is not None


@dataclass(frozen=True)
class ColorPolicy:
    max_candidates: int = 8
    exhaustive_node_cap: int = 2_000_000


class FiveColorFallbackError(RuntimeError):
    """No coloring found and no certificate producible.

    Reachable only outside the guaranteed regime (needs minimum degree >= 6,
    hence at least 3n edges and crossing number >= 6) when even the
    exhaustive fallback gives out."""


def find_coloring_exhaustive(g: Graph, palette: int = 5,
                             node_cap: int | None = None) -> Coloring | None:
    """Exhaustive proper-coloring search; None when no coloring exists.

    Raises FiveColorFallbackError if node_cap is hit before an answer.
    """
    n = g.vertex_count
    if n == 0:
        return Coloring((), palette)
    masks = g.adjacency_masks
    by_degree = sorted(range(n), key=lambda v: (-bin(masks[v]).count("1"), v))
    colors = [0] * n
    nodes = 0

    def dfs(i: int) -> bool:
        nonlocal nodes
        nodes += 1
        if node_cap is not None and nodes > node_cap:
            raise FiveColorFallbackError("exhaustive search cap exceeded")
        if i == n:
            return True
        v = by_degree[i]
        used = {colors[w] for w in range(n) if (masks[v] >> w) & 1 and colors[w]}
        limit = min(palette, max((colors[by_degree[j]] for j in range(i)), default=0) + 1)
        for col in range(1, limit + 1):
            if col in used:
                continue
            colors[v] = col
            if dfs(i + 1):
                return True
            colors[v] = 0
        return False

    if dfs(0):
        return Coloring(tuple(colors), palette)
    return None


def _k6_subgraph_certificate(g: Graph, mask: int) -> ImmersionCertificate | None:
    import itertools as it
    masks = g.adjacency_masks
    verts = [v for v in range(g.vertex_count) if (mask >> v) & 1]
    for combo in it.combinations(verts, 6):
        if all((masks[a] >> b) & 1 for a, b in it.combinations(combo, 2)):
            small = complete_graph(6)
            vmap = tuple(combo)
            paths = tuple((vmap[a], vmap[b]) for a, b in small.edges)
            return ImmersionCertificate(small, g, vmap, paths, center=combo[0])
    return None


def five_color(g: Graph, policy: ColorPolicy | None = None) -> ColorOutcome:
    """5-color the graph, or explain the failure with a K6 v-immersion.

    Recursive: delete a minimum-degree vertex and extend greedily while the
    degree stays below five; at minimum degree five, try degree-5 candidate
    vertices in id order (extend via Kempe exchanges), keeping the first
    failure certificate.  Results are memoized per remaining vertex set.
    """
    policy = policy or ColorPolicy()
    n = g.vertex_count
    masks = g.adjacency_masks
    memo: dict = {}
    max_used = 0

    def deg_in(v: int, mask: int) -> int:
        return bin(masks[v] & mask).count("1")

    def induced(mask: int) -> Graph:
        verts = [v for v in range(n) if (mask >> v) & 1]
        label = {v: i for i, v in enumerate(verts)}
        edges = tuple(sorted((label[a], label[b]) for a, b in g.edges
                             if (mask >> a) & 1 and (mask >> b) & 1))
        return Graph(len(verts), edges)

    def exhaustive_on(mask: int) -> dict | None:
        sub = induced(mask)
        verts = [v for v in range(n) if (mask >> v) & 1]
        col = find_coloring_exhaustive(sub, 5, policy.exhaustive_node_cap)
        if col is None:
            return None
        return {verts[i]: col.assignment[i] for i in range(len(verts))}

    def solve(mask: int):
        nonlocal max_used
        if mask in memo:
            return memo[mask]
        verts = [v for v in range(n) if (mask >> v) & 1]
        result: dict | Obstruction
        if len(verts) <= 5:
            result = {v: i + 1 for i, v in enumerate(verts)}
        else:
            v = min(verts, key=lambda x: (deg_in(x, mask), x))
            if deg_in(v, mask) <= 4:
                sub = solve(mask ^ (1 << v))
                if isinstance(sub, Obstruction):
                    result = sub
                else:
                    used = {sub[w] for w in verts
                            if w != v and (masks[v] >> w) & 1}
                    free = next(c for c in range(1, 6) if c not in used)
                    result = dict(sub)
                    result[v] = free
            else:
                live = set(verts)
                candidates = [u for u in verts if deg_in(u, mask) == 5]
                candidates = candidates[:policy.max_candidates]
                failures = []
                result = None
                used_here = 0
                for cand in candidates:
                    used_here += 1
                    sub = solve(mask ^ (1 << cand))
                    if isinstance(sub, Obstruction):
                        failures.append(sub)
                        continue
                    out = _extend_masked(g, live, cand, sub)
                    if out.extended:
                        result = {w: out.coloring.assignment[w] for w in verts}
                        break
                    failures.append(Obstruction(cand, out.certificate))
                max_used = max(max_used, used_here)
                if result is None:
                    try:
                        result = exhaustive_on(mask)
                    except FiveColorFallbackError:
                        result = None
                    if result is None:
                        if failures:
                            result = failures[0]
                        else:
                            cert = _k6_subgraph_certificate(g, mask)
                            if cert is None:
                                raise FiveColorFallbackError(
                                    "no degree-5 candidates, no coloring, and "
                                    "no complete subgraph on six vertices")
                            result = Obstruction(cert.center, cert)
        memo[mask] = result
        return result

    if n == 0:
        return ColorOutcome(Coloring((), 5), None, 0)
    res = solve((1 << n) - 1)
    if isinstance(res, Obstruction):
        return ColorOutcome(None, res, max_used)
    coloring = Coloring(tuple(res[v] for v in range(n)), 5)
    assert verify_coloring(g, coloring)
    return ColorOutcome(coloring, None, max_used)
