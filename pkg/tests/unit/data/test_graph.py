import numpy as np
import pytest

from data.graph import contains_keys, encode_keys
from tools.errors import DataError


def test_single_triple_indices(make_graph):
    graph = make_graph([(0, 0, 1)], 3, 1)
    assert graph.out_index(0).tolist() == [0]
    assert graph.in_index(1).tolist() == [0]
    assert graph.in_index(0).tolist() == []
    assert graph.out_index(1).tolist() == []
    assert graph.out_index(2).tolist() == []
    assert graph.in_index(2).tolist() == []


def test_self_loop_is_in_both_indices(make_graph):
    graph = make_graph([(0, 0, 0)], 1, 1)
    assert graph.out_index(0).tolist() == [0]
    assert graph.in_index(0).tolist() == [0]
    assert graph.degree(0) == 2


def test_indices_hold_exactly_incident_triples(random_graph):
    for seed in range(20):
        graph = random_graph(seed)
        assert graph.out_degrees().sum() == len(graph)
        assert graph.in_degrees().sum() == len(graph)
        for u in range(graph.num_entities):
            out = set(graph.out_index(u).tolist())
            incoming = set(graph.in_index(u).tolist())
            assert out == set(np.flatnonzero(graph.heads == u).tolist())
            assert incoming == set(np.flatnonzero(graph.tails == u).tolist())
            assert graph.degree(u) == int(
                (graph.heads == u).sum() + (graph.tails == u).sum()
            )


def test_out_index_keeps_file_order(make_graph):
    graph = make_graph([(1, 0, 0), (0, 0, 1), (1, 1, 2), (0, 1, 2)], 3, 2)
    assert graph.out_index(1).tolist() == [0, 2]
    assert graph.out_index(0).tolist() == [1, 3]


def test_neighborhood(make_graph):
    graph = make_graph([(0, 0, 1), (2, 0, 1), (2, 0, 3), (4, 0, 4)], 5, 1)
    assert graph.neighbors(1) == {0, 2}
    assert graph.neighborhood(0, 0) == {0}
    assert graph.neighborhood(0, 2) == {0, 1, 2}
    assert graph.neighborhood(0, 5) == {0, 1, 2, 3}


def test_out_of_range_ids_are_rejected(make_graph):
    with pytest.raises(DataError):
        make_graph([(0, 0, 3)], 3, 1)

    with pytest.raises(DataError):
        make_graph([(0, 1, 2)], 3, 1)


def test_known_keys_are_deduplicated(make_graph):
    graph = make_graph([(0, 0, 1), (0, 0, 1), (1, 0, 0)], 2, 1)
    keys = graph.known_keys()
    assert len(keys) == 2
    queries = encode_keys(np.array([(0, 0, 1), (1, 0, 1)]), 2, 1)
    mask = contains_keys(keys, np.sort(queries))
    assert mask.tolist() == [True, False]
