import numpy as np
import pytest

from data.triple import Triple
from hif.config import DpConfig
from hif.dp import dp_step, identity_matrix
from hif.matrix import HifMatrix
from hif.oracle import (
    MAX_WALKS,
    aggregate_paths,
    count_walks,
    enumerate_paths,
    reference_recursion,
)
from hif.semiring import Semiring
from tools.errors import ConfigError, OracleScaleError

MAX_T = 4


def iterations(graph, config, weights=None):
    """Yield (t, matrix) for t from 1 to MAX_T."""
    matrix = HifMatrix(identity_matrix(graph), 1, config)
    yield 1, matrix
    for t in range(2, MAX_T + 1):
        matrix = dp_step(graph, matrix, config, weights=weights)
        yield t, matrix


def end_of(u, feature):
    if not feature.path:
        return u

    last, side = feature.path[-1], feature.sides[-1]
    return last.tail if side == "out" else last.head


@pytest.mark.parametrize(
    "semiring, identity_each_step, graphs",
    [
        (semiring, flag, 100 if flag else 40)
        for semiring in Semiring
        for flag in (True, False)
    ],
)
def test_dp_matches_recursion(
    random_graph, semiring, identity_each_step, graphs
):
    config = DpConfig.build(
        alpha=0.7,
        semiring=semiring,
        include_identity_each_step=identity_each_step,
    )
    for seed in range(graphs):
        graph = random_graph(seed)
        for t, matrix in iterations(graph, config):
            for u in range(graph.num_entities):
                expected = reference_recursion(graph, u, t, config)
                np.testing.assert_allclose(
                    matrix.row(u), expected, rtol=1e-9, atol=1e-9
                )


@pytest.mark.parametrize("semiring", list(Semiring))
def test_dp_matches_recursion_with_vector_weights(random_graph, semiring):
    config = DpConfig.build(semiring=semiring)
    for seed in range(20):
        graph = random_graph(seed)
        rng = np.random.default_rng(seed)
        weights = rng.uniform(0.1, 1.0, (len(graph), graph.num_relations))
        for t, matrix in iterations(graph, config, weights):
            for u in range(graph.num_entities):
                expected = reference_recursion(graph, u, t, config, weights)
                np.testing.assert_allclose(
                    matrix.row(u), expected, rtol=1e-9, atol=1e-9
                )


@pytest.mark.parametrize("identity_each_step", [True, False])
def test_path_features_add_up_to_sum_product(
    random_graph, identity_each_step
):
    config = DpConfig.build(
        alpha=0.6,
        semiring=Semiring.SUM_PRODUCT,
        include_identity_each_step=identity_each_step,
    )
    for seed in range(50):
        graph = random_graph(seed)
        for t, matrix in iterations(graph, config):
            for u in range(graph.num_entities):
                total = aggregate_paths(graph, u, t, config)
                np.testing.assert_allclose(
                    matrix.row(u), total, rtol=1e-9, atol=1e-9
                )


def test_path_features_decay_with_length(random_graph):
    config = DpConfig.build(alpha=0.5, semiring=Semiring.SUM_PRODUCT)
    for seed in range(10):
        graph = random_graph(seed)
        identity = identity_matrix(graph)
        for u in range(graph.num_entities):
            for feature in enumerate_paths(graph, u, 3, config):
                end = end_of(u, feature)
                expected = 0.5 ** len(feature.path) * identity[end]
                np.testing.assert_allclose(feature.value, expected)
                assert len(feature.path) == len(feature.sides)
                assert feature.seed in ("base", "in", "out")


def test_single_triple_has_one_feature_per_end(make_graph):
    graph = make_graph([(0, 0, 1)], 2, 1)
    config = DpConfig.build(
        iterations=2,
        alpha=0.5,
        semiring=Semiring.SUM_PRODUCT,
        include_identity_each_step=False,
    )
    (head,) = enumerate_paths(graph, 0, 2, config)
    assert head.path == (Triple(0, 0, 1),)
    assert head.sides == ("out",)
    assert head.seed == "base"
    assert head.value.tolist() == [-0.5]

    (tail,) = enumerate_paths(graph, 1, 2, config)
    assert tail.sides == ("in",)
    assert tail.value.tolist() == [0.5]


def test_identity_each_step_adds_one_feature_per_side(make_graph):
    graph = make_graph([(0, 0, 1)], 2, 1)
    config = DpConfig.build(
        semiring=Semiring.SUM_PRODUCT, include_identity_each_step=True
    )
    features = list(enumerate_paths(graph, 0, 2, config))
    seeds = sorted(feature.seed for feature in features if not feature.path)
    assert seeds == ["in", "out"]
    assert len(features) == 3


def test_path_features_need_sum_product(make_graph):
    graph = make_graph([(0, 0, 1)], 2, 1)
    config = DpConfig.build(semiring=Semiring.MAX_PRODUCT)
    with pytest.raises(ConfigError):
        list(enumerate_paths(graph, 0, 2, config))


def test_recursion_rejects_t_below_one(make_graph):
    graph = make_graph([(0, 0, 1)], 2, 1)
    with pytest.raises(ConfigError):
        reference_recursion(graph, 0, 0, DpConfig.build())


def test_walk_count(make_graph):
    graph = make_graph([(0, 0, 1), (1, 0, 2)], 3, 1)
    assert count_walks(graph, 0, 1) == 1
    assert count_walks(graph, 0, 2) == 2
    assert count_walks(graph, 0, 3) == 4


def test_recursion_refuses_large_graphs(make_graph):
    triples = [(h, 0, t) for h in range(3) for t in range(3) if h != t]
    graph = make_graph(triples, 3, 1)
    assert count_walks(graph, 0, 12) > MAX_WALKS
    with pytest.raises(OracleScaleError):
        reference_recursion(graph, 0, 12, DpConfig.build())

    with pytest.raises(OracleScaleError):
        list(
            enumerate_paths(
                graph, 0, 12, DpConfig.build(semiring=Semiring.SUM_PRODUCT)
            )
        )
