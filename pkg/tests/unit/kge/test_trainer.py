import numpy as np
import pytest

from kge.config import TrainConfig
from kge.models import create_model
from kge.trainer import train
from tools.errors import ConfigError, DivergenceError

TRAIN = [
    (0, 0, 1),
    (1, 0, 2),
    (2, 0, 3),
    (3, 1, 0),
    (4, 1, 1),
    (5, 1, 2),
    (0, 2, 5),
    (2, 2, 4),
]
VALID = [(3, 0, 4), (1, 2, 3)]


def config(**options):
    values = dict(
        model="TransE",
        norm_p=1,
        dim_entity=4,
        dim_relation=4,
        margin=1.0,
        lr=0.01,
        batch_size=4,
        epochs=10,
        negatives_per_positive=2,
        seed=0,
        eval_every=0,
        patience=0,
        valid_sample=0,
    )
    values.update(options)
    return TrainConfig.build(**values)


@pytest.fixture
def dataset(make_dataset):
    return make_dataset(TRAIN, 6, 3, valid=VALID)


def start(model, dataset, settings):
    rng = np.random.default_rng(settings.seed)
    return model.init_embeddings(
        dataset.num_entities,
        dataset.num_relations,
        settings.dim_entity,
        settings.dim_relation,
        rng,
    )


def test_training_lowers_the_loss(dataset):
    settings = config(epochs=60)
    model = create_model("TransE")
    result = train(dataset, model, settings, start(model, dataset, settings))
    losses = result.log.losses()
    assert len(losses) == 60
    assert losses[-1] < losses[0]
    assert result.stop_reason == "epochs"
    assert result.best_epoch == 60
    assert result.best_mrr is None


@pytest.mark.parametrize("name", ["TransE", "TransH", "TransR"])
def test_frozen_entities_do_not_move(dataset, name):
    settings = config(model=name, dim_relation=3 if name == "TransR" else 4)
    settings = settings.update(freeze_entities=True)
    model = create_model(name, 2)
    initial = start(model, dataset, settings)
    result = train(dataset, model, settings, initial)
    assert np.array_equal(result.embeddings.entities, initial.entities)
    assert not np.array_equal(
        result.embeddings.relations, initial.relations
    )


def test_initial_embeddings_are_not_modified(dataset):
    settings = config()
    model = create_model("TransE")
    initial = start(model, dataset, settings)
    saved = initial.copy()
    result = train(dataset, model, settings, initial)
    assert np.array_equal(initial.entities, saved.entities)
    assert np.array_equal(initial.relations, saved.relations)
    assert not np.array_equal(result.embeddings.entities, saved.entities)


def test_training_is_deterministic(dataset):
    settings = config()
    model = create_model("TransH")
    first = train(dataset, model, settings, start(model, dataset, settings))
    second = train(dataset, model, settings, start(model, dataset, settings))
    assert np.array_equal(
        first.embeddings.entities, second.embeddings.entities
    )
    assert first.log.losses() == second.log.losses()


def test_validation_schedule(dataset):
    settings = config(epochs=7, eval_every=3)
    model = create_model("TransE")
    seen = []
    result = train(
        dataset,
        model,
        settings,
        start(model, dataset, settings),
        callbacks=[lambda record, embeddings: seen.append(record.epoch)],
    )
    evaluated = [record.epoch for record in result.log.evaluated()]
    assert evaluated == [3, 6, 7]
    assert seen == [3, 6, 7]
    assert result.best_epoch in evaluated
    assert 0 < result.best_mrr <= 1
    assert set(result.log.evaluated()[0].metrics) >= {"MR", "MRR", "H@10"}


def test_plateau_stops_training(dataset):
    settings = config(epochs=50, plateau_window=2, plateau_tolerance=10.0)
    model = create_model("TransE")
    result = train(dataset, model, settings, start(model, dataset, settings))
    assert result.stop_reason == "plateau"
    assert result.epochs_run == 3


def test_empty_training_split(make_dataset):
    dataset = make_dataset([], 3, 1, test=[(0, 0, 1)])
    settings = config()
    model = create_model("TransE")
    with pytest.raises(ConfigError):
        train(dataset, model, settings, start(model, dataset, settings))


def test_non_finite_loss_is_a_divergence(dataset):
    settings = config()
    model = create_model("TransE")
    initial = start(model, dataset, settings)
    initial.entities[0, 0] = np.nan
    with pytest.raises(DivergenceError):
        train(dataset, model, settings, initial)


def test_transe_and_transh_need_equal_dimensions():
    with pytest.raises(ConfigError):
        config(dim_relation=3)

    assert config(model="TransR", dim_relation=3).dim_relation == 3


@pytest.mark.parametrize("name", ["TransE", "TransH"])
def test_norm_constraints_hold_after_every_update(dataset, name):
    # One batch per epoch, so the callback sees every update.
    settings = config(
        model=name,
        batch_size=len(TRAIN),
        epochs=30,
        lr=0.05,
        plateau_window=0,
    )
    model = create_model(name, 2)
    checked = []

    def check(record, embeddings):
        norms = np.linalg.norm(embeddings.entities, axis=1)
        assert (norms <= 1 + 1e-9).all()
        if embeddings.normals is not None:
            norms = np.linalg.norm(embeddings.normals, axis=1)
            np.testing.assert_allclose(norms, 1.0, rtol=0, atol=1e-9)
        checked.append(record.epoch)

    initial = start(model, dataset, settings)
    initial.entities *= 3
    train(dataset, model, settings, initial, callbacks=[check])
    assert checked == list(range(1, 31))
