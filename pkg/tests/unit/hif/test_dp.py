import numpy as np
import pytest

from hif.config import DpConfig
from hif.dp import build_hif_entity, dp_step, entity_identity, identity_matrix
from hif.matrix import HifMatrix
from hif.semiring import Semiring
from tools.errors import ConfigError, ShapeError

CHAIN = [(0, 0, 1), (1, 0, 2)]


def test_identity_of_isolated_entity_is_zero(make_graph):
    graph = make_graph([(0, 0, 1)], 3, 2)
    assert entity_identity(graph, 2).tolist() == [0.0, 0.0]


def test_identity_cancels_out_and_in(make_graph):
    graph = make_graph([(0, 2, 1), (2, 2, 0)], 3, 3)
    assert entity_identity(graph, 0).tolist() == [0.0, 0.0, 0.0]


def test_identity_counts_per_relation(make_graph):
    graph = make_graph([(0, 0, 1), (0, 0, 2), (3, 1, 0)], 4, 2)
    assert entity_identity(graph, 0).tolist() == [2.0, -1.0]


def test_identity_matrix_matches_rows(random_graph):
    for seed in range(10):
        graph = random_graph(seed)
        matrix = identity_matrix(graph)
        for u in range(graph.num_entities):
            assert np.array_equal(matrix[u], entity_identity(graph, u))


def test_single_iteration_is_identity(random_graph):
    graph = random_graph(3)
    hif = build_hif_entity(graph, DpConfig.build(iterations=1))
    assert hif.iterations_used == 1
    assert np.array_equal(hif.data, identity_matrix(graph))


def test_chain_with_identity_each_step(make_graph):
    graph = make_graph(CHAIN, 3, 1)
    config = DpConfig.build(
        iterations=2,
        alpha=0.5,
        semiring=Semiring.CONCRETE,
        include_identity_each_step=True,
    )
    hif = build_hif_entity(graph, config)
    np.testing.assert_allclose(hif.data[:, 0], [0.0, -0.5, -1.0])


def test_chain_without_identity_each_step(make_graph):
    graph = make_graph(CHAIN, 3, 1)
    config = DpConfig.build(
        iterations=2,
        alpha=0.5,
        semiring=Semiring.CONCRETE,
        include_identity_each_step=False,
    )
    hif = build_hif_entity(graph, config)

    # b: 0.5 * e(c) out, minus 0.5 * e(a) in.
    np.testing.assert_allclose(hif.data[:, 0], [-1.0, -1.0, -1.0])


def test_star_center_takes_the_max_of_its_leaves(make_graph):
    triples = [(0, 0, 1), (0, 1, 2), (0, 0, 3), (0, 2, 4)]
    graph = make_graph(triples, 5, 3)
    config = DpConfig.build(
        iterations=2,
        alpha=0.9,
        semiring=Semiring.CONCRETE,
        include_identity_each_step=False,
    )
    hif = build_hif_entity(graph, config)
    identity = identity_matrix(graph)
    expected = 0.9 * identity[1:].max(axis=0) - identity[0]
    np.testing.assert_allclose(hif.row(0), expected)


def test_sum_product_on_a_single_triple(make_graph):
    graph = make_graph([(0, 0, 1)], 2, 1)
    config = DpConfig.build(
        iterations=2,
        alpha=0.25,
        semiring=Semiring.SUM_PRODUCT,
        include_identity_each_step=False,
    )
    hif = build_hif_entity(graph, config)
    np.testing.assert_allclose(hif.data[:, 0], [-0.25, 0.25])


@pytest.mark.parametrize("semiring", list(Semiring))
def test_result_does_not_depend_on_jobs(random_graph, semiring):
    config = DpConfig.build(iterations=4, alpha=0.8, semiring=semiring)
    for seed in range(10):
        graph = random_graph(seed, max_entities=40, max_triples=120)
        single = build_hif_entity(graph, config, jobs=1)
        several = build_hif_entity(graph, config, jobs=4)
        again = build_hif_entity(graph, config, jobs=3)
        assert np.array_equal(single.data, several.data)
        assert np.array_equal(single.data, again.data)


def test_rows_only_depend_on_their_neighborhood(random_graph, make_graph):
    config = DpConfig.build(iterations=3, alpha=0.7)
    for seed in range(20):
        graph = random_graph(seed)
        hif = build_hif_entity(graph, config)
        for u in range(graph.num_entities):
            near = graph.neighborhood(u, config.iterations - 1)
            far = sorted(set(range(graph.num_entities)) - near)
            if not far:
                continue

            x = far[0]
            triples = np.vstack([graph.triples, [(x, 0, x)]])
            changed = make_graph(
                triples, graph.num_entities, graph.num_relations
            )
            other = build_hif_entity(changed, config)
            assert np.array_equal(hif.row(u), other.row(u))


@pytest.mark.parametrize("alpha", [0.05, 0.5, 1.0])
def test_values_stay_finite(random_graph, alpha):
    for semiring in Semiring:
        config = DpConfig.build(iterations=5, alpha=alpha, semiring=semiring)
        hif = build_hif_entity(random_graph(11, max_triples=60), config)
        assert np.isfinite(hif.data).all()


def test_step_counts_iterations(make_graph):
    graph = make_graph(CHAIN, 3, 1)
    config = DpConfig.build(iterations=3)
    first = HifMatrix(identity_matrix(graph), 1, config)
    second = dp_step(graph, first, config)
    assert second.iterations_used == 2
    assert dp_step(graph, second, config).iterations_used == 3


def test_step_rejects_mismatched_shapes(make_graph):
    graph = make_graph(CHAIN, 3, 1)
    with pytest.raises(ShapeError):
        dp_step(graph, np.zeros((2, 1)), DpConfig.build())


def test_step_rejects_mismatched_weights(make_graph):
    graph = make_graph(CHAIN, 3, 1)
    with pytest.raises(ShapeError):
        dp_step(
            graph, identity_matrix(graph), DpConfig.build(), weights=[1.0]
        )


def test_zero_iterations_is_rejected():
    with pytest.raises(ConfigError):
        DpConfig.build(iterations=0)
