"""Exact crossing numbers of small graphs by complete search over crossing
configurations.

A node of the search is a partial configuration (which edge pairs cross, in
which order along each edge).  Its planarization being planar means the
configuration is realizable, so the node is satisfying.  Otherwise a
Kuratowski subdivision of the planarization is extracted; any realizable
extension must add a crossing on an edge that carries part of the witness,
which gives a complete branching rule.  Iterative deepening over k produces
an independent infeasibility record for every level below the answer.

The budget is measured in planarity calls so runs are machine-independent.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass

from .drawings import Drawing, validate_drawing
from .graphs import Graph, find_isomorphism
from .planarity import euler_lower_bound, planar_adjacency
from .symmetry import automorphisms, edge_pair_orbits

DEFAULT_BUDGET = 10_000_000

MODE_GOOD = "good-only"
MODE_ANY = "any-drawing"


class BudgetExceededError(RuntimeError):
    pass


class _Budget:
    __slots__ = ("remaining",)

    def __init__(self, remaining: int):
        self.remaining = remaining

    def spend(self) -> None:
        self.remaining -= 1
        if self.remaining < 0:
            raise BudgetExceededError("planarity-call budget exceeded")


def resolve_budget(budget: int | None) -> int:
    if budget is not None:
        return budget
    env = os.environ.get("CROSS5_BUDGET")
    if env:
        return int(env)
    return DEFAULT_BUDGET


@dataclass
class SolverStats:
    nodes: int = 0
    planarity_calls: int = 0


@dataclass(frozen=True)
class DecideOutcome:
    status: str  # "sat" | "unsat" | "budget"
    witness: Drawing | None
    nodes: int
    planarity_calls: int

    @property
    def is_sat(self) -> bool:
        return self.status == "sat"


@dataclass(frozen=True)
class SolverResult:
    value: int | None           # exact crossing number, or None if budget ran out
    witness: Drawing | None
    lower_bound: int
    upper_bound: int | None
    infeasible_trace: tuple     # one {"k", "nodes", "planarity_calls"} per unsat level
    nodes: int
    planarity_calls: int

    @property
    def exact(self) -> bool:
        return self.value is not None


class _Search:
    def __init__(self, g: Graph, mode: str, budget: _Budget, stats: SolverStats):
        if mode not in (MODE_GOOD, MODE_ANY):
            raise ValueError(f"unknown mode {mode!r}")
        self.g = g
        self.mode = mode
        self.budget = budget
        self.stats = stats
        self.n = g.vertex_count
        self.edges = g.edges
        self.m = len(self.edges)
        self.edge_sets = [set(e) for e in self.edges]
        # mutable configuration
        self.order = [[] for _ in range(self.m)]
        self.pairs = []  # crossing id -> (edge a, edge b)
        self.seen: set = set()

    # -- configuration bookkeeping ----------------------------------------

    def key(self) -> tuple:
        relabel: dict = {}
        out = []
        for seq in self.order:
            row = []
            for cid in seq:
                if cid not in relabel:
                    relabel[cid] = len(relabel)
                row.append(relabel[cid])
            out.append(tuple(row))
        return tuple(out)

    def planar(self) -> bool:
        self.budget.spend()
        self.stats.planarity_calls += 1
        total = self.n + len(self.pairs)
        adj = [[] for _ in range(total)]
        seen = set()
        for e in range(self.m):
            prev = self.edges[e][0]
            for cid in self.order[e]:
                x = self.n + cid
                k = (prev, x) if prev < x else (x, prev)
                if k not in seen:
                    seen.add(k)
                    adj[prev].append(x)
                    adj[x].append(prev)
                prev = x
            last = self.edges[e][1]
            k = (prev, last) if prev < last else (last, prev)
            if k not in seen:
                seen.add(k)
                adj[prev].append(last)
                adj[last].append(prev)
        return planar_adjacency(total, adj)

    def realizable(self) -> bool:
        from .drawings import gadget_adjacency
        self.budget.spend()
        self.stats.planarity_calls += 1
        total, adj = gadget_adjacency(self.n, self.edges, self.order)
        return planar_adjacency(total, adj)

    def witness_edges(self) -> list:
        """Base edges carrying part of a Kuratowski witness of the current
        (nonplanar) planarization."""
        total = self.n + len(self.pairs)
        seg_owner: dict = {}
        seg_list = []
        for e in range(self.m):
            path = [self.edges[e][0]] + [self.n + c for c in self.order[e]] + [self.edges[e][1]]
            for x, y in zip(path, path[1:]):
                k = (x, y) if x < y else (y, x)
                if k not in seg_owner:
                    seg_owner[k] = {e}
                    seg_list.append(k)
                else:
                    seg_owner[k].add(e)

        counting = _CountingBudget(self.budget, self.stats)
        core = minimal_nonplanar_edges_counted(total, seg_list, counting)
        out = set()
        for k in core:
            out |= seg_owner[k]
        return sorted(out)

    def insert(self, e: int, f: int, pe: int, pf: int) -> int:
        cid = len(self.pairs)
        self.pairs.append((min(e, f), max(e, f)))
        self.order[e].insert(pe, cid)
        self.order[f].insert(pf, cid)
        return cid

    def remove(self, e: int, f: int, cid: int) -> None:
        self.order[e].remove(cid)
        self.order[f].remove(cid)
        self.pairs.pop()

    def partners_for(self, e: int) -> list:
        out = []
        crossing_pairs = set(self.pairs)
        for f in range(self.m):
            if f == e:
                continue
            if self.mode == MODE_GOOD:
                if self.edge_sets[e] & self.edge_sets[f]:
                    continue
                if (min(e, f), max(e, f)) in crossing_pairs:
                    continue
            out.append(f)
        return out

    def to_drawing(self) -> Drawing:
        from .drawings import canonicalize
        return canonicalize(Drawing(self.g, tuple(self.pairs),
                                    tuple(tuple(s) for s in self.order)))

    # -- search -------------------------------------------------------------

    def decide(self, k: int, symmetry: bool) -> Drawing | None:
        self.seen.clear()
        return self._dfs(k, root=True, symmetry=symmetry)

    def _dfs(self, k: int, root: bool = False, symmetry: bool = False) -> Drawing | None:
        self.stats.nodes += 1
        if self.planar():
            if self.realizable():
                return self.to_drawing()
            # The planarization is planar but some crossing cannot be drawn
            # transversally: this configuration realizes with fewer crossings,
            # so a smaller satisfying configuration exists elsewhere in the
            # tree.  Nothing below this node can help (no Kuratowski witness
            # to branch on), so it is a dead end.
            return None
        if len(self.pairs) >= k:
            return None
        if root and symmetry:
            candidates = self._root_representatives()
            for e, f in candidates:
                cid = self.insert(e, f, 0, 0)
                key = self.key()
                if key not in self.seen:
                    self.seen.add(key)
                    found = self._dfs(k)
                    if found is not None:
                        return found
                self.remove(e, f, cid)
            return None
        for e in self.witness_edges():
            for f in self.partners_for(e):
                for pe in range(len(self.order[e]) + 1):
                    for pf in range(len(self.order[f]) + 1):
                        cid = self.insert(e, f, pe, pf)
                        key = self.key()
                        if key in self.seen:
                            self.remove(e, f, cid)
                            continue
                        self.seen.add(key)
                        found = self._dfs(k)
                        if found is not None:
                            return found
                        self.remove(e, f, cid)
        return None

    def _root_representatives(self) -> list:
        pairs = []
        for a in range(self.m):
            for b in range(a + 1, self.m):
                if self.mode == MODE_GOOD and (self.edge_sets[a] & self.edge_sets[b]):
                    continue
                pairs.append((a, b))
        return edge_pair_orbits(self.g, pairs, automorphisms(self.g))


class _CountingBudget:
    """Adapter so witness extraction draws from the same budget and stats."""

    def __init__(self, budget: _Budget, stats: SolverStats):
        self.budget = budget
        self.stats = stats

    def spend(self) -> None:
        self.budget.spend()
        self.stats.planarity_calls += 1


def minimal_nonplanar_edges_counted(n: int, edges: list, counter) -> list:
    current = list(edges)
    i = 0
    while i < len(current):
        trial = current[:i] + current[i + 1:]
        adj = [[] for _ in range(n)]
        for u, v in trial:
            adj[u].append(v)
            adj[v].append(u)
        counter.spend()
        if not planar_adjacency(n, adj):
            current = trial
        else:
            i += 1
    return current


# ---------------------------------------------------------------------------
# Public operations
# ---------------------------------------------------------------------------


def decide_crossing_number(g: Graph, k: int, mode: str = MODE_GOOD,
                           budget: int | None = None,
                           symmetry: bool = True) -> DecideOutcome:
    """Is there a valid drawing of g with at most k crossings?

    Complete search; "sat" returns a verified witness, "unsat" is a proof by
    exhaustion, "budget" means the planarity-call budget ran out first.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    stats = SolverStats()
    search = _Search(g, mode, _Budget(resolve_budget(budget)), stats)
    try:
        witness = search.decide(k, symmetry)
    except BudgetExceededError:
        return DecideOutcome("budget", None, stats.nodes, stats.planarity_calls)
    if witness is None:
        return DecideOutcome("unsat", None, stats.nodes, stats.planarity_calls)
    assert validate_drawing(witness).valid
    assert witness.crossing_total <= k
    return DecideOutcome("sat", witness, stats.nodes, stats.planarity_calls)


def crossing_number(g: Graph, budget: int | None = None,
                    symmetry: bool = True) -> SolverResult:
    """Exact crossing number with witness and per-level infeasibility trace.

    Iterates k upward from the Euler-formula lower bound; on budget
    exhaustion returns the bracket established so far, with the upper end
    taken from a stored certificate when one is known for this graph.
    """
    total_budget = resolve_budget(budget)
    lb = euler_lower_bound(g) if g.vertex_count >= 3 else 0
    hint = _known_upper_bound(g)
    trace = []
    nodes = planarity_calls = 0
    k = lb
    while True:
        outcome = decide_crossing_number(
            g, k, MODE_GOOD, budget=total_budget - planarity_calls, symmetry=symmetry)
        nodes += outcome.nodes
        planarity_calls += outcome.planarity_calls
        if outcome.status == "sat":
            witness = outcome.witness
            value = witness.crossing_total
            assert g.vertex_count < 3 or value >= euler_lower_bound(g)
            return SolverResult(value, witness, value, value, tuple(trace),
                                nodes, planarity_calls)
        if outcome.status == "budget":
            upper = hint[0] if hint else None
            witness = hint[1] if hint else None
            return SolverResult(None, witness, k, upper, tuple(trace),
                                nodes, planarity_calls)
        trace.append({"k": k, "nodes": outcome.nodes,
                      "planarity_calls": outcome.planarity_calls})
        k += 1


def enumerate_good_drawings(g: Graph, k: int, budget: int | None = None) -> list:
    """All valid good drawings of g with exactly k crossings, canonically
    sorted.  Exhaustive over k-subsets of non-adjacent edge pairs and over
    the per-edge orders of edges carrying several crossings."""
    if k < 0:
        raise ValueError("k must be non-negative")
    stats = SolverStats()
    bud = _Budget(resolve_budget(budget))
    edges = g.edges
    m = len(edges)
    edge_sets = [set(e) for e in edges]
    independent = [(a, b) for a in range(m) for b in range(a + 1, m)
                   if not (edge_sets[a] & edge_sets[b])]
    found = {}
    for combo in itertools.combinations(independent, k):
        by_edge: dict = {}
        for cid, (a, b) in enumerate(combo):
            by_edge.setdefault(a, []).append(cid)
            by_edge.setdefault(b, []).append(cid)
        multi = [e for e in sorted(by_edge) if len(by_edge[e]) > 1]
        orderings = [itertools.permutations(by_edge[e]) for e in multi]
        for perm_choice in itertools.product(*orderings):
            order = []
            chosen = dict(zip(multi, perm_choice))
            for e in range(m):
                if e in chosen:
                    order.append(tuple(chosen[e]))
                else:
                    order.append(tuple(by_edge.get(e, ())))
            d = Drawing(g, tuple(combo), tuple(order))
            bud.spend()
            stats.planarity_calls += 1
            res = validate_drawing(d)
            if res.valid:
                from .drawings import canonical_key, canonicalize
                can = canonicalize(d)
                found[canonical_key(can)] = can
    return [found[key] for key in sorted(found)]


def crossing_number_exhaustive(g: Graph, cap: int = 6) -> int | None:
    """Independent oracle: unpruned enumeration of good configurations by
    increasing size; returns the first size admitting a valid drawing."""
    if is_planar_counted(g):
        return 0
    edges = g.edges
    m = len(edges)
    edge_sets = [set(e) for e in edges]
    independent = [(a, b) for a in range(m) for b in range(a + 1, m)
                   if not (edge_sets[a] & edge_sets[b])]
    for k in range(1, cap + 1):
        for combo in itertools.combinations(independent, k):
            by_edge: dict = {}
            for cid, (a, b) in enumerate(combo):
                by_edge.setdefault(a, []).append(cid)
                by_edge.setdefault(b, []).append(cid)
            multi = [e for e in sorted(by_edge) if len(by_edge[e]) > 1]
            orderings = [itertools.permutations(by_edge[e]) for e in multi]
            for perm_choice in itertools.product(*orderings):
                chosen = dict(zip(multi, perm_choice))
                order = tuple(
                    tuple(chosen.get(e, by_edge.get(e, ())))
                    for e in range(m))
                if validate_drawing(Drawing(g, tuple(combo), order)).valid:
                    return k
    return None


def is_planar_counted(g: Graph) -> bool:
    return planar_adjacency(g.vertex_count, g.adjacency_lists())


# ---------------------------------------------------------------------------
# Stored certificates (validated before use, never trusted)
# ---------------------------------------------------------------------------


def _known_upper_bound(g: Graph):
    from .witnesses import known_certificates
    for host, drawing in known_certificates():
        if g.vertex_count != host.vertex_count or g.edge_count != host.edge_count:
            continue
        iso = find_isomorphism(host, g)
        if iso is None:
            continue
        relabeled = _relabel_drawing(drawing, iso, g)
        if validate_drawing(relabeled).valid:
            return relabeled.crossing_total, relabeled
    return None


def _relabel_drawing(d: Drawing, vertex_map, new_base: Graph) -> Drawing:
    edge_map = {}
    for idx, (u, v) in enumerate(d.base.edges):
        a, b = vertex_map[u], vertex_map[v]
        edge_map[idx] = new_base.edge_index[(min(a, b), max(a, b))]
    pairs = tuple((min(edge_map[a], edge_map[b]), max(edge_map[a], edge_map[b]))
                  for a, b in d.crossings)
    order = [()] * new_base.edge_count
    for idx in range(d.base.edge_count):
        order[edge_map[idx]] = d.order[idx]
    return Drawing(new_base, pairs, tuple(order))
