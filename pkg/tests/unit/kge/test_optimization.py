import numpy as np
import pytest
import torch

from data.triple import Triple
from kge.loss import margin_loss
from kge.sampling import NegativeSampler, negative_sample
from tools.errors import ConfigError


def test_margin_loss():
    assert float(margin_loss(0.5, 2.0, 1.0)) == 0.0
    assert float(margin_loss(2.0, 2.5, 1.0)) == 0.5
    np.testing.assert_allclose(
        margin_loss(np.array([0.0, 3.0]), np.array([0.5, 1.0]), 1.0),
        [0.5, 3.0],
    )


def test_margin_loss_reductions():
    pos = np.array([0.0, 0.0, 5.0, 1.0])
    neg = np.array([3.0, 0.5, 1.0, 1.5])
    mean = (0.0 + 0.5 + 5.0 + 0.5) / 4
    assert float(margin_loss(pos, neg, 1.0, "mean")) == pytest.approx(mean)
    assert float(margin_loss(pos, neg, 1.0, "sum")) == pytest.approx(6.0)


def test_margin_loss_matches_the_ranking_criterion():
    rng = np.random.default_rng(0)
    pos = torch.from_numpy(rng.uniform(0, 3, 50))
    neg = torch.from_numpy(rng.uniform(0, 3, 50))
    criterion = torch.nn.MarginRankingLoss(margin=2.0)
    expected = criterion(neg, pos, torch.ones_like(pos))
    assert float(margin_loss(pos, neg, 2.0, "mean")) == pytest.approx(
        float(expected)
    )


def test_only_active_pairs_have_a_gradient():
    pos = torch.tensor([0.0, 0.0, 5.0, 1.0], requires_grad=True)
    neg = torch.tensor([3.0, 0.5, 1.0, 1.5], requires_grad=True)
    margin_loss(pos, neg, 1.0, "mean").backward()
    assert pos.grad.tolist() == [0.0, 0.25, 0.25, 0.25]
    assert neg.grad.tolist() == [0.0, -0.25, -0.25, -0.25]


def test_corruptions_are_unknown(make_graph):
    triples = [(0, 0, 1), (1, 0, 2), (2, 1, 3), (3, 1, 0), (0, 1, 2)]
    graph = make_graph(triples, 10, 2)
    sampler = NegativeSampler.for_graph(graph, np.random.default_rng(0))
    batch = np.repeat(graph.triples, 2000, axis=0)
    corrupted = sampler.corrupt(batch)
    known = set(map(tuple, graph.triples.tolist()))
    assert not known & set(map(tuple, corrupted.tolist()))
    assert ((corrupted != batch).sum(axis=1) == 1).all()
    assert (corrupted[:, 1] == batch[:, 1]).all()
    assert sampler.exhausted == 0
    assert 4750 <= sampler.heads_corrupted <= 5250
    assert sampler.heads_corrupted + sampler.tails_corrupted == 10_000


def test_corruption_is_seeded(make_graph):
    graph = make_graph([(0, 0, 1), (1, 0, 2)], 6, 1)
    first = NegativeSampler.for_graph(graph, np.random.default_rng(3))
    second = NegativeSampler.for_graph(graph, np.random.default_rng(3))
    batch = np.repeat(graph.triples, 10, axis=0)
    assert np.array_equal(first.corrupt(batch), second.corrupt(batch))


def test_saturated_graph_exhausts_corruptions(make_graph):
    triples = [(h, 0, t) for h in range(2) for t in range(2)]
    graph = make_graph(triples, 2, 1)
    sampler = NegativeSampler.for_graph(graph, np.random.default_rng(0))
    sampler.corrupt(graph.triples)
    assert sampler.exhausted == 4


def test_sampling_needs_two_entities(make_graph):
    graph = make_graph([(0, 0, 0)], 1, 1)
    with pytest.raises(ConfigError):
        NegativeSampler.for_graph(graph, np.random.default_rng(0))


def test_single_negative_sample(make_graph):
    graph = make_graph([(0, 0, 1)], 3, 1)
    rng = np.random.default_rng(1)
    for _ in range(20):
        negative = negative_sample(Triple(0, 0, 1), graph, rng)
        assert isinstance(negative, Triple)
        assert negative != Triple(0, 0, 1)
        assert negative.relation == 0
