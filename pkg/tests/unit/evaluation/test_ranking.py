import numpy as np
import pytest

from evaluation.ranking import (
    FilterIndex,
    RankingReport,
    evaluate,
    filtered_rank,
)
from kge.embedding import EmbeddingSet
from kge.models import create_model
from tools.errors import ConfigError, DataError

MODELS = (("TransE", 3), ("TransH", 3), ("TransR", 2))


def brute_force_rank(embeddings, model, triple, side, known):
    """Score every candidate, sort them, then scan down to the target."""
    h, r, t = triple
    target = t if side == "tail" else h
    candidates = []
    for entity in range(embeddings.num_entities):
        candidate = (h, r, entity) if side == "tail" else (entity, r, t)
        if entity != target and candidate in known:
            continue

        candidates.append((model.score(embeddings, *candidate), entity))

    target_score = model.score(embeddings, h, r, t)
    rank = 1
    for score, entity in sorted(candidates):
        if entity != target and score <= target_score:
            rank += 1

    return rank


def random_case(seed):
    rng = np.random.default_rng(seed)
    name, dim_relation = MODELS[seed % len(MODELS)]
    model = create_model(name, 1 + seed % 2)
    num_entities = int(rng.integers(2, 15))
    num_relations = int(rng.integers(1, 4))
    embeddings = model.init_embeddings(
        num_entities, num_relations, 3, dim_relation, rng
    )
    size = int(rng.integers(1, 30))
    triples = np.column_stack(
        [
            rng.integers(0, num_entities, size),
            rng.integers(0, num_relations, size),
            rng.integers(0, num_entities, size),
        ]
    )
    return rng, model, embeddings, triples


def test_rank_matches_brute_force():
    for seed in range(200):
        rng, model, embeddings, triples = random_case(seed)
        index = FilterIndex(triples, *embeddings_sizes(embeddings))
        known = set(map(tuple, triples.tolist()))
        triple = tuple(triples[rng.integers(len(triples))].tolist())
        for side in ("head", "tail"):
            assert filtered_rank(
                embeddings, model, triple, side, index
            ) == brute_force_rank(embeddings, model, triple, side, known)


def embeddings_sizes(embeddings):
    return embeddings.num_entities, embeddings.num_relations


def test_filtering_never_worsens_ranks():
    for seed in range(50):
        rng, model, embeddings, triples = random_case(seed)
        sizes = embeddings_sizes(embeddings)
        triple = tuple(triples[0].tolist())
        raw = FilterIndex(triples[:1], *sizes)
        full = FilterIndex(triples, *sizes)
        for side in ("head", "tail"):
            unfiltered = filtered_rank(embeddings, model, triple, side, None)
            partial = filtered_rank(embeddings, model, triple, side, raw)
            filtered = filtered_rank(embeddings, model, triple, side, full)
            assert unfiltered == partial
            assert filtered <= partial


def test_ties_count_against_the_target():
    model = create_model("TransE")
    embeddings = EmbeddingSet(np.zeros((5, 2)), np.zeros((1, 2)))
    index = FilterIndex(np.array([[0, 0, 1], [0, 0, 2]]), 5, 1)
    assert filtered_rank(embeddings, model, (0, 0, 1), "tail", index) == 4
    assert filtered_rank(embeddings, model, (0, 0, 1), "tail", None) == 5


def test_filter_index_lookups():
    index = FilterIndex(np.array([[0, 0, 1], [0, 0, 2], [3, 0, 2]]), 4, 1)
    assert len(index) == 3
    assert (0, 0, 2) in index
    assert (2, 0, 0) not in index
    assert index.known(0, 0, 9, "tail").tolist() == [1, 2]
    assert index.known(9, 0, 2, "head").tolist() == [0, 3]
    with pytest.raises(ConfigError):
        index.known(0, 0, 1, "middle")


def test_report_of_two_ranks():
    report = RankingReport.from_ranks([1, 10], hits_at=[1, 3, 10])
    assert report.mr == 5.5
    assert report.mrr == pytest.approx(0.55)
    assert report.hits == {1: 0.5, 3: 0.5, 10: 1.0}
    assert report.count == 2
    assert report.as_dict()["H@10"] == 1.0


def test_report_needs_ranks():
    with pytest.raises(DataError):
        RankingReport.from_ranks([])


def test_evaluation_metrics_are_consistent(make_dataset):
    rng = np.random.default_rng(9)
    train = rng.integers(0, 8, size=(30, 3)) % [8, 2, 8]
    test = rng.integers(0, 8, size=(10, 3)) % [8, 2, 8]
    dataset = make_dataset(train, 8, 2, test=test)
    model = create_model("TransE")
    embeddings = model.init_embeddings(8, 2, 4, 4, rng)
    index = FilterIndex.from_dataset(dataset)
    report = evaluate(embeddings, model, dataset.test, index, jobs=1)
    ranks = report.all_ranks()
    assert report.count == 20
    assert len(report.per_triple_ranks) == 10
    assert abs(report.mrr - (1.0 / ranks).mean()) <= 1e-12
    assert report.mr == pytest.approx(ranks.mean())
    assert 1 <= ranks.min() and ranks.max() <= 8

    parallel = evaluate(embeddings, model, dataset.test, index, jobs=3)
    assert np.array_equal(parallel.all_ranks(), ranks)


def test_evaluation_without_kept_ranks(make_dataset):
    dataset = make_dataset([(0, 0, 1)], 3, 1, test=[(1, 0, 2)])
    model = create_model("TransE")
    embeddings = model.init_embeddings(3, 1, 2, 2, np.random.default_rng(0))
    report = evaluate(
        embeddings, model, dataset.test, None, keep_ranks=False
    )
    assert report.per_triple_ranks is None
    with pytest.raises(DataError):
        report.all_ranks()


def test_evaluation_needs_triples():
    model = create_model("TransE")
    embeddings = EmbeddingSet(np.zeros((2, 2)), np.zeros((1, 2)))
    with pytest.raises(DataError):
        evaluate(embeddings, model, np.empty((0, 3)), None)
