import pytest

from cross5.corpus import stream
from cross5.graphs import (Graph, all_graphs_up_to_iso, complete_bipartite,
                           complete_graph, complete_multipartite, cycle_graph)
from cross5.planarity import (euler_lower_bound, find_kuratowski, is_planar,
                              verify_kuratowski)
from oracles import oracle_is_planar


def _subdivide_edge(g, idx, rng):
    n = g.vertex_count
    edges = list(g.edges)
    u, v = edges.pop(idx)
    edges += [(min(u, n), max(u, n)), (min(v, n), max(v, n))]
    return Graph(n + 1, tuple(sorted(edges)))


class TestIsPlanar:
    def test_k4(self, k4):
        assert is_planar(k4)

    def test_kuratowski_graphs(self, k5, k33):
        assert not is_planar(k5)
        assert not is_planar(k33)

    def test_octahedron(self):
        assert is_planar(complete_multipartite(2, 2, 2))

    def test_k6(self, k6):
        assert not is_planar(k6)

    def test_disconnected(self):
        two_k4 = Graph.make(8, list(complete_graph(4).edges)
                            + [(a + 4, b + 4) for a, b in complete_graph(4).edges])
        assert is_planar(two_k4)
        k5_plus_iso = Graph(7, complete_graph(5).edges)
        assert not is_planar(k5_plus_iso)

    def test_sparse_nonplanar_with_isolated_vertices(self):
        # a spanning K33 subdivision has only n + 3 edges; padding with
        # isolated vertices must not fool any edge-count shortcut
        core = ((0, 3), (0, 4), (1, 3), (1, 5), (1, 6), (2, 3), (2, 5),
                (2, 6), (4, 5), (4, 6))
        for pad in range(0, 6):
            g = Graph(7 + pad, core)
            assert not is_planar(g), f"pad={pad}"
        assert not is_planar(Graph(9, complete_bipartite(3, 3).edges))

    def test_exhaustive_vs_minor_oracle(self):
        checked = 0
        for n in range(1, 7):
            for g in all_graphs_up_to_iso(n):
                assert is_planar(g) == oracle_is_planar(g), g.edges
                checked += 1
        assert checked == 208

    @pytest.mark.parametrize("seed", range(4))
    def test_random_larger_vs_oracle(self, seed):
        rng = stream(4100 + seed, 0)
        pool7 = [(i, j) for i in range(7) for j in range(i + 1, 7)]
        pool8 = [(i, j) for i in range(8) for j in range(i + 1, 8)]
        for trial in range(40):
            n, pool = (7, pool7) if rng.randrange(2) else (8, pool8)
            m = rng.randrange(min(len(pool), 3 * n - 2) + 1)
            g = Graph(n, tuple(sorted(rng.sample(pool, m))))
            assert is_planar(g) == oracle_is_planar(g), g.edges

    def test_edge_bound_direction(self):
        # any graph beyond the planar edge bound must be reported nonplanar
        rng = stream(4200, 0)
        for trial in range(30):
            n = rng.randint(5, 9)
            pool = [(i, j) for i in range(n) for j in range(i + 1, n)]
            lo = 3 * n - 5
            if lo > len(pool):
                continue
            m = rng.randint(lo, len(pool))
            g = Graph(n, tuple(sorted(rng.sample(pool, m))))
            assert not is_planar(g)

    @pytest.mark.parametrize("base_name", ["k5", "k33", "k4", "k6"])
    def test_subdivision_invariance(self, base_name, request):
        g = request.getfixturevalue(base_name)
        expected = is_planar(g)
        rng = stream(4300, hash(base_name) % 1000)
        for rounds in range(5):
            g = _subdivide_edge(g, rng.randrange(g.edge_count), rng)
            assert is_planar(g) == expected


class TestKuratowski:
    def test_k5_witness(self, k5):
        w = find_kuratowski(k5)
        assert w.kind == "K5-subdivision"
        assert len(w.branch_vertices) == 5 and len(w.paths) == 10
        assert all(len(p) == 2 for p in w.paths)
        assert verify_kuratowski(k5, w)

    def test_k33_witness(self, k33):
        w = find_kuratowski(k33)
        assert w.kind == "K33-subdivision"
        assert len(w.branch_vertices) == 6 and len(w.paths) == 9
        assert verify_kuratowski(k33, w)

    def test_subdivided_k5(self, k5):
        rng = stream(4400, 0)
        g = _subdivide_edge(k5, 0, rng)
        w = find_kuratowski(g)
        assert w.kind == "K5-subdivision"
        assert sorted(len(p) for p in w.paths) == [2] * 9 + [3]
        assert verify_kuratowski(g, w)

    def test_planar_input_rejected(self, k4):
        with pytest.raises(ValueError):
            find_kuratowski(k4)

    def test_k6_witness_verifies(self, k6):
        w = find_kuratowski(k6)
        assert verify_kuratowski(k6, w)

    def test_random_nonplanar_witnesses(self):
        rng = stream(4500, 0)
        found = 0
        while found < 10:
            n = rng.randint(6, 9)
            pool = [(i, j) for i in range(n) for j in range(i + 1, n)]
            m = rng.randint(2 * n, min(len(pool), 3 * n))
            g = Graph(n, tuple(sorted(rng.sample(pool, m))))
            if is_planar(g):
                continue
            found += 1
            w = find_kuratowski(g)
            assert verify_kuratowski(g, w), (g.edges, w)
            # dropping any path's edges destroys this witness
            first = w.paths[0]
            gone = {(min(a, b), max(a, b)) for a, b in zip(first, first[1:])}
            trimmed = Graph(n, tuple(e for e in g.edges if e not in gone))
            assert not verify_kuratowski(trimmed, w)


class TestEulerLowerBound:
    def test_k6(self, k6):
        assert euler_lower_bound(k6) == 3

    def test_k5(self, k5):
        assert euler_lower_bound(k5) == 1

    def test_join(self, c3_join_c5):
        assert euler_lower_bound(c3_join_c5) == 5

    def test_clamps_at_zero(self):
        assert euler_lower_bound(cycle_graph(5)) == 0

    def test_small_graphs_rejected(self):
        with pytest.raises(ValueError):
            euler_lower_bound(Graph.make(2, [(0, 1)]))
