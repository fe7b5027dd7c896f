import pytest

from cross5.corpus import stream
from cross5.drawings import drawings_equal, is_good, validate_drawing
from cross5.graphs import Graph, all_graphs_up_to_iso, construct_named
from cross5.planarity import euler_lower_bound
from cross5.solver import (crossing_number, crossing_number_exhaustive,
                           decide_crossing_number, enumerate_good_drawings)


class TestDecide:
    def test_k5(self, k5):
        assert decide_crossing_number(k5, 0).status == "unsat"
        out = decide_crossing_number(k5, 1)
        assert out.status == "sat"
        assert validate_drawing(out.witness).valid
        assert out.witness.crossing_total <= 1

    def test_k6(self, k6):
        assert decide_crossing_number(k6, 2).status == "unsat"
        out = decide_crossing_number(k6, 3)
        assert out.status == "sat" and out.witness.crossing_total == 3

    def test_planar_graph_immediate(self, k4):
        out = decide_crossing_number(k4, 0)
        assert out.status == "sat" and out.witness.crossing_total == 0

    def test_budget_outcome(self, k6):
        out = decide_crossing_number(k6, 3, budget=5)
        assert out.status == "budget"
        assert out.witness is None

    def test_any_drawing_mode(self, k5):
        out = decide_crossing_number(k5, 1, mode="any-drawing")
        assert out.status == "sat"
        assert decide_crossing_number(k5, 0, mode="any-drawing").status == "unsat"

    def test_without_symmetry_same_answers(self, k5, k6):
        for g, k, status in [(k5, 0, "unsat"), (k5, 1, "sat"), (k6, 2, "unsat")]:
            assert decide_crossing_number(g, k, symmetry=False).status == status

    def test_negative_k_rejected(self, k4):
        with pytest.raises(ValueError):
            decide_crossing_number(k4, -1)


class TestCrossingNumber:
    def test_planar(self, k4):
        res = crossing_number(k4)
        assert res.value == 0 and res.witness.crossing_total == 0

    def test_k5(self, k5):
        res = crossing_number(k5)
        assert res.value == 1
        assert validate_drawing(res.witness).valid

    def test_k6_with_trace(self, k6):
        res = crossing_number(k6)
        assert res.value == 3
        # iteration starts at the edge-count bound, which is already tight
        assert res.lower_bound == 3 and res.infeasible_trace == ()

    def test_trace_records_unsat_levels(self, k33):
        res = crossing_number(k33)
        assert res.value == 1
        assert [t["k"] for t in res.infeasible_trace] == [0]
        assert all(t["planarity_calls"] > 0 for t in res.infeasible_trace)

    def test_value_at_least_euler_bound(self):
        rng = stream(6100, 0)
        for _ in range(15):
            n = rng.randint(5, 7)
            pool = [(i, j) for i in range(n) for j in range(i + 1, n)]
            m = rng.randint(n, min(len(pool), 3 * n - 4))
            g = Graph(n, tuple(sorted(rng.sample(pool, m))))
            res = crossing_number(g)
            assert res.value >= euler_lower_bound(g)

    def test_budget_gives_bracket_with_stored_certificate(self, c3_join_c5):
        res = crossing_number(c3_join_c5, budget=3000)
        assert res.value is None
        assert res.lower_bound == 5
        assert res.upper_bound == 6
        assert res.witness is not None and res.witness.crossing_total == 6
        assert validate_drawing(res.witness).valid

    def test_monotone_under_edge_deletion(self, k5, k6):
        for g in (k5, k6, construct_named("K3,3")):
            base_value = crossing_number(g).value
            for idx in range(g.edge_count):
                u, v = g.edges[idx]
                sub = g.without_edge(u, v)
                assert crossing_number(sub).value <= base_value

    def test_monotone_along_immersions(self):
        # an essentially immersed graph never needs more crossings than its
        # host; checked on solver-verified subdivision pairs
        from cross5.random_drawings import random_subdivision_pair
        for idx in range(5):
            rng = stream(6300, idx)
            host_drawing, cert = random_subdivision_pair(rng)
            small_value = crossing_number(cert.small).value
            host_value = crossing_number(cert.host).value
            assert small_value is not None and host_value is not None
            assert small_value <= host_value


class TestOracleAgreement:
    def test_all_graphs_up_to_5(self):
        for n in range(1, 6):
            for g in all_graphs_up_to_iso(n):
                assert crossing_number(g).value == crossing_number_exhaustive(g)

    def test_spot_checks_n6(self, k6):
        assert crossing_number_exhaustive(k6) == 3
        minus_edge = k6.without_edge(0, 1)
        assert crossing_number(minus_edge).value == \
            crossing_number_exhaustive(minus_edge) == 2


class TestEnumerateGoodDrawings:
    def test_k5_none_planar(self, k5):
        assert enumerate_good_drawings(k5, 0) == []

    def test_k5_single_crossing_complete_scan(self, k5):
        ds = enumerate_good_drawings(k5, 1)
        # one valid drawing per pair of non-adjacent edges, and K5's
        # edge-transitive symmetry makes all fifteen valid
        assert len(ds) == 15
        assert all(validate_drawing(d).valid and is_good(d) for d in ds)

    def test_k5_even_counts_empty(self, k5):
        assert enumerate_good_drawings(k5, 2) == []

    def test_deterministic_order(self, k5):
        first = enumerate_good_drawings(k5, 1)
        second = enumerate_good_drawings(k5, 1)
        assert all(drawings_equal(a, b) for a, b in zip(first, second))

    def test_unique_canonical_keys(self, k5):
        from cross5.drawings import canonical_key
        ds = enumerate_good_drawings(k5, 3)
        keys = [canonical_key(d) for d in ds]
        assert len(keys) == len(set(keys))

    def test_negative_k_rejected(self, k5):
        with pytest.raises(ValueError):
            enumerate_good_drawings(k5, -1)


class TestWitnessQuality:
    def test_sat_witnesses_validate(self):
        rng = stream(6200, 0)
        for _ in range(10):
            n = rng.randint(5, 7)
            pool = [(i, j) for i in range(n) for j in range(i + 1, n)]
            m = rng.randint(n, min(len(pool), 3 * n - 5))
            g = Graph(n, tuple(sorted(rng.sample(pool, m))))
            out = decide_crossing_number(g, 2)
            if out.status == "sat":
                assert validate_drawing(out.witness).valid
                assert out.witness.crossing_total <= 2

    def test_single_worker_deterministic_witness(self, k6):
        w1 = decide_crossing_number(k6, 3).witness
        w2 = decide_crossing_number(k6, 3).witness
        assert drawings_equal(w1, w2)
