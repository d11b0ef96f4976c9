"""Enumeration, seeded random graphs, and the property harness."""

import pytest

from bipancert.graphs import is_connected
from bipancert.hunt import (GraphConstraints, NTooLargeForExhaustive,
                            enumerate_graphs, property_suite, random_graph,
                            run_hunt)


class TestEnumeration:
    def test_n2_all(self):
        assert sum(1 for _ in enumerate_graphs(GraphConstraints(2))) == 16

    def test_n2_min_degree(self):
        # 2 perfect matchings + 4 paths + K_{2,2}
        gs = list(enumerate_graphs(GraphConstraints(2, min_degree=1)))
        assert len(gs) == 7

    def test_n2_min_degree_connected(self):
        # the 4 paths and K_{2,2}; both matchings are disconnected
        gs = list(enumerate_graphs(GraphConstraints(2, min_degree=1,
                                                    require_connected=True)))
        assert len(gs) == 5
        assert all(is_connected(g) and g.min_degree >= 1 for g in gs)

    def test_min_edges(self):
        gs = list(enumerate_graphs(GraphConstraints(2, min_edges=4)))
        assert len(gs) == 1 and gs[0].edge_count == 4

    def test_too_large(self):
        with pytest.raises(NTooLargeForExhaustive):
            next(enumerate_graphs(GraphConstraints(6)))

    def test_dedup_shrinks_and_keeps_fixpoints(self):
        full = sum(1 for _ in enumerate_graphs(GraphConstraints(2)))
        deduped = list(enumerate_graphs(GraphConstraints(2), dedup=True))
        assert 0 < len(deduped) < full
        # every isomorphism class with a sorted representative survives:
        # the single-edge class must still be there
        assert any(g.edge_count == 1 for g in deduped)


class TestRandomGraph:
    def test_p_one_is_complete(self):
        g = random_graph(4, 1.0, seed=123)
        assert g.edge_count == 16

    def test_p_zero_is_empty(self):
        assert random_graph(4, 0.0, seed=123).edge_count == 0

    def test_determinism(self):
        a = random_graph(5, 0.4, seed=99)
        b = random_graph(5, 0.4, seed=99)
        assert a == b

    def test_seed_sensitivity(self):
        a = random_graph(5, 0.5, seed=1)
        b = random_graph(5, 0.5, seed=2)
        assert a != b

    def test_bad_probability(self):
        with pytest.raises(ValueError):
            random_graph(4, 1.5, seed=0)


class TestPropertySuite:
    def test_lemma2_on_random_sample(self):
        graphs = [random_graph(5, 0.7, seed=42 + i) for i in range(200)]
        report = property_suite(graphs, checks=("l2",))
        assert report.properties["l2"].passed
        assert report.graphs_examined == 200

    def test_t2_unsatisfiable_at_n4(self):
        report = run_hunt(GraphConstraints(4, require_connected=True, min_degree=2),
                          checks=("t2",), mode="exhaustive")
        assert report.properties["t2"].premise_satisfied == 0
        assert report.properties["t2"].passed

    def test_unknown_check_rejected(self):
        with pytest.raises(ValueError):
            property_suite([random_graph(4, 0.5, seed=0)], checks=("bogus",))

    def test_parallel_merge_matches_serial(self):
        kwargs = dict(checks=("l2", "l4"), mode="random", count=60, p=0.5, seed=7)
        serial = run_hunt(GraphConstraints(4), jobs=1, **kwargs)
        parallel = run_hunt(GraphConstraints(4), jobs=4, **kwargs)
        assert serial.graphs_passing_filters == parallel.graphs_passing_filters
        for c in kwargs["checks"]:
            a, b = serial.properties[c], parallel.properties[c]
            assert (a.checked, a.premise_satisfied, a.counterexamples) == \
                   (b.checked, b.premise_satisfied, b.counterexamples)

    def test_counts_deterministic(self):
        kwargs = dict(checks=("l5",), mode="random", count=40, p=0.6, seed=3)
        a = run_hunt(GraphConstraints(5), **kwargs)
        b = run_hunt(GraphConstraints(5), **kwargs)
        assert a.properties["l5"].checked == b.properties["l5"].checked
