import random

import pytest

from modlab import (
    FamilyParams,
    IncompatibleClusteringError,
    LoopRejectedError,
    MalformedEdgeError,
    MalformedInputError,
    build_graph,
    clustering_from_blocks,
    degree_sum,
    extracluster_edge_count,
    intracluster_edge_counts,
    new_clustering,
    new_graph,
    single_cluster,
    singleton_clusters,
)
from helpers import random_clustering, random_graph

TRIANGLE = [(1, 2), (2, 3), (1, 3)]
PATH5 = [(1, 2), (2, 3), (3, 4), (4, 5)]


def test_triangle_construction():
    g = new_graph(3, TRIANGLE)
    assert g.m == 3
    assert g.degrees[1:] == (2, 2, 2)


def test_path_degree_pattern():
    g = new_graph(5, PATH5)
    assert g.degrees[1:] == (1, 2, 2, 2, 1)


def test_loop_rejected():
    with pytest.raises(LoopRejectedError):
        new_graph(2, [(1, 1)])


def test_endpoint_out_of_range():
    with pytest.raises(MalformedEdgeError):
        new_graph(3, [(1, 4)])
    with pytest.raises(MalformedEdgeError):
        new_graph(3, [(0, 2)])


def test_duplicate_edges_merge_silently():
    g = new_graph(3, [(1, 2), (2, 1), (1, 2)])
    assert g.m == 1
    assert g.degrees[1:] == (1, 1, 0)


def test_node_count_must_be_positive():
    with pytest.raises(MalformedInputError):
        new_graph(0, [])


def test_degree_sum_triangle():
    g = new_graph(3, TRIANGLE)
    assert degree_sum(g, {1, 2, 3}) == 6
    assert degree_sum(g, set()) == 0


def test_degree_sum_family_block():
    # one 3-path plus one 4-path; the 3-path's ends have degree 1, middle 2
    g = build_graph(FamilyParams("G", 1, 3, 4))
    assert degree_sum(g, {1, 2, 3}) == 4


def test_degree_sum_rejects_unknown_node():
    g = new_graph(3, TRIANGLE)
    with pytest.raises(MalformedInputError):
        degree_sum(g, {1, 7})


def test_intracluster_counts_triangle():
    g = new_graph(3, TRIANGLE)
    assert intracluster_edge_counts(g, single_cluster(3)) == [3]
    assert intracluster_edge_counts(g, singleton_clusters(3)) == [0, 0, 0]


def test_intracluster_counts_path_split():
    g = new_graph(5, PATH5)
    c = clustering_from_blocks(5, [{1, 2, 3}, {4, 5}])
    assert intracluster_edge_counts(g, c) == [2, 1]
    assert extracluster_edge_count(g, c) == 1


def test_incompatible_sizes_rejected():
    g = new_graph(3, TRIANGLE)
    with pytest.raises(IncompatibleClusteringError):
        intracluster_edge_counts(g, single_cluster(4))


def test_degree_sum_matches_edge_count():
    rng = random.Random(101)
    for _ in range(50):
        g = random_graph(rng, rng.randint(1, 12), require_edge=False)
        assert sum(g.degrees[1:]) == 2 * g.m


def test_intra_plus_extra_is_m():
    rng = random.Random(102)
    for _ in range(50):
        n = rng.randint(2, 12)
        g = random_graph(rng, n, require_edge=False)
        c = random_clustering(rng, n)
        assert sum(intracluster_edge_counts(g, c)) + extracluster_edge_count(g, c) == g.m


def test_canonicalisation_idempotent_and_membership_preserving():
    rng = random.Random(103)
    for _ in range(50):
        n = rng.randint(1, 12)
        raw = [rng.randint(-3, 3) for _ in range(n)]
        c = new_clustering(raw)
        assert new_clustering(c.labels) == c
        assert set(c.labels) == set(range(1, c.k + 1))
        for u in range(n):
            for v in range(n):
                assert (raw[u] == raw[v]) == (c.labels[u] == c.labels[v])


def test_labels_follow_first_appearance():
    c = new_clustering(["b", "a", "b", "c"])
    assert c.labels == (1, 2, 1, 3)
    assert c.k == 3
    assert c.cluster_sizes == (2, 1, 1)
    assert c.clusters() == [(1, 3), (2,), (4,)]


def test_blocks_constructor_drops_empty_blocks():
    c = clustering_from_blocks(4, [[], {1, 2}, [], {3, 4}])
    assert c.k == 2


def test_blocks_constructor_requires_partition():
    with pytest.raises(MalformedInputError):
        clustering_from_blocks(3, [{1, 2}])
    with pytest.raises(MalformedInputError):
        clustering_from_blocks(3, [{1, 2}, {2, 3}])
    with pytest.raises(MalformedInputError):
        clustering_from_blocks(3, [{1, 2, 3, 4}])
