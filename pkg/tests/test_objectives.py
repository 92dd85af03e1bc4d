import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import evocd
from evocd.errors import ContractViolation

from oracles import modularity_double_sum, objectives_bruteforce, random_graph_text


def fig1_internal_truth(fig1, fig1_truth):
    g, table, _ = fig1
    labels = np.empty(12, dtype=np.int64)
    for v in range(1, 13):
        labels[table.internal(str(v))] = fig1_truth[v - 1]
    return g, labels


def test_fig1_ground_truth_objectives(fig1, fig1_truth):
    g, labels = fig1_internal_truth(fig1, fig1_truth)
    f1, f2 = evocd.evaluate_objectives(g, labels)
    assert f1 == pytest.approx(1 / 7, abs=1e-12)
    assert f2 == pytest.approx(1 / 3, abs=1e-12)
    assert evocd.modularity(g, labels) == pytest.approx(11 / 21, abs=1e-12)


def test_degenerate_partitions(triangle):
    assert evocd.evaluate_objectives(triangle, np.zeros(3, int)) == (0.0, 1.0)
    f1, f2 = evocd.evaluate_objectives(triangle, np.arange(3))
    assert f1 == 1.0
    assert f2 == pytest.approx(3 * (2 / 6) ** 2, abs=1e-12)
    assert evocd.modularity(triangle, np.zeros(3, int)) == pytest.approx(0.0, abs=1e-12)


def test_triangle_split_modularity(triangle):
    q = evocd.modularity(triangle, np.array([0, 1, 1]))
    assert q == pytest.approx(1 / 3 - (2 / 6) ** 2 - (4 / 6) ** 2, abs=1e-12)


def test_label_length_mismatch(triangle):
    with pytest.raises(ContractViolation):
        evocd.evaluate_objectives(triangle, np.zeros(4, int))
    with pytest.raises(ContractViolation):
        evocd.modularity(triangle, np.zeros(2, int))


def test_scalarized_quality():
    assert evocd.scalarized_quality(1 / 7, 1 / 3) == pytest.approx(11 / 21, abs=1e-12)
    assert evocd.scalarized_quality(0.0, 1.0) == 0.0
    assert evocd.scalarized_quality(1.0, 0.25) == -0.25


def test_canonicalize():
    assert evocd.canonicalize(np.array([7, 7, 2, 9])).tolist() == [0, 0, 1, 2]
    already = np.array([0, 0, 1, 2])
    assert evocd.canonicalize(already).tolist() == already.tolist()
    assert evocd.canonicalize(np.array([1, 0, 1])).tolist() == [0, 1, 0]
    twice = evocd.canonicalize(evocd.canonicalize(np.array([5, 3, 5, 8])))
    assert twice.tolist() == evocd.canonicalize(np.array([5, 3, 5, 8])).tolist()


@pytest.mark.parametrize("seed", range(20))
def test_quality_equals_modularity(seed):
    gen = np.random.default_rng(seed)
    lg = evocd.load_edge_list(random_graph_text(20, 0.2, seed + 1000))
    g = lg.graph
    labels = gen.integers(0, 5, size=g.node_count)
    f1, f2 = evocd.evaluate_objectives(g, labels)
    assert evocd.scalarized_quality(f1, f2) == pytest.approx(
        evocd.modularity(g, labels), abs=1e-12)


@pytest.mark.parametrize("seed", range(10))
def test_objectives_match_bruteforce(seed):
    gen = np.random.default_rng(seed)
    lg = evocd.load_edge_list(random_graph_text(8, 0.4, seed + 2000))
    g = lg.graph
    labels = gen.integers(0, 4, size=g.node_count)
    edges = list(zip(g.edge_u.tolist(), g.edge_v.tolist()))
    f1o, f2o = objectives_bruteforce(edges, g.degrees.tolist(), g.edge_count,
                                     labels.tolist())
    f1, f2 = evocd.evaluate_objectives(g, labels)
    assert f1 == pytest.approx(f1o, abs=1e-12)
    assert f2 == pytest.approx(f2o, abs=1e-12)


def test_modularity_matches_double_sum(fig1, fig1_truth):
    g, labels = fig1_internal_truth(fig1, fig1_truth)
    adj = {v: set(g.neighbors(v).tolist()) for v in range(g.node_count)}
    q = modularity_double_sum(adj, g.degrees.tolist(), g.edge_count, labels.tolist())
    assert evocd.modularity(g, labels) == pytest.approx(q, abs=1e-12)


@given(st.integers(0, 10_000), st.integers(2, 6))
@settings(max_examples=40, deadline=None)
def test_objectives_invariant_under_canonicalize(seed, k):
    gen = np.random.default_rng(seed)
    lg = evocd.load_edge_list(random_graph_text(12, 0.3, seed % 17))
    g = lg.graph
    labels = gen.integers(0, k, size=g.node_count) * 13 + 5  # odd label names
    raw = evocd.evaluate_objectives(g, labels)
    canon = evocd.evaluate_objectives(g, evocd.canonicalize(labels))
    assert raw == pytest.approx(canon, abs=1e-12)


def test_merge_monotonicity(fig1, fig1_truth):
    """Merging two edge-connected communities weakly lowers f1 and raises f2."""
    g, labels = fig1_internal_truth(fig1, fig1_truth)
    f1, f2 = evocd.evaluate_objectives(g, labels)
    merged = labels.copy()
    merged[merged == 1] = 0  # communities 0 and 1 share bridge edges
    f1m, f2m = evocd.evaluate_objectives(g, merged)
    assert f1m <= f1
    assert f2m >= f2
