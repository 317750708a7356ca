import numpy as np
import pytest

from hif.relation import (
    HifRelationResult,
    bootstrap_config,
    build_hif_relation,
)
from kge.checkpoint import save_checkpoint
from kge.config import TrainConfig
from kge.models import create_model
from tools.errors import ConfigError


def small_config(model="TransE", dim_entity=4, dim_relation=4, **options):
    base = TrainConfig.build(
        model=model,
        norm_p=1,
        dim_entity=dim_entity,
        dim_relation=dim_relation,
        margin=1.0,
        lr=0.01,
        batch_size=8,
        negatives_per_positive=1,
        seed=7,
    )
    return bootstrap_config(base, **options)


def test_bootstrap_config_freezes_entities():
    config = small_config(epochs=12, freeze_entities=False)
    assert config.freeze_entities
    assert config.epochs == 12
    assert config.eval_every == 0
    assert config.patience == 0
    assert config.init == "hif"


def test_bootstrap_config_ignores_unset_overrides():
    base = TrainConfig.build(epochs=999)
    config = bootstrap_config(base, epochs=None, relation_init=None)
    assert config.epochs != 999


@pytest.mark.parametrize(
    "model, dim_relation", [("TransE", 4), ("TransH", 4), ("TransR", 3)]
)
def test_entities_stay_bit_identical(make_dataset, model, dim_relation):
    rng = np.random.default_rng(0)
    train = [(0, 0, 1), (1, 1, 2), (2, 0, 3), (3, 1, 0), (4, 0, 2)]
    dataset = make_dataset(train, 5, 2)
    squeezed = rng.normal(size=(5, 4))
    config = small_config(
        model, dim_relation=dim_relation, epochs=20, plateau_window=0
    )
    before = squeezed.copy()
    result = build_hif_relation(
        dataset, create_model(model, 1), squeezed, config
    )
    assert np.array_equal(result.embeddings.entities, before)
    assert np.array_equal(squeezed, before)
    assert result.epochs == 20
    assert result.relations.shape == (2, dim_relation)
    assert not np.array_equal(result.relations, np.zeros((2, dim_relation)))


def test_single_triple_recovers_the_translation(make_dataset):
    dataset = make_dataset([(0, 0, 1)], 2, 1)
    head, tail = np.array([0.0, 0.0]), np.array([0.4, -0.3])
    config = small_config(
        dim_entity=2,
        dim_relation=2,
        lr=0.0002,
        batch_size=1,
        epochs=3000,
        plateau_window=0,
        relation_init="zeros",
    )
    result = build_hif_relation(
        dataset, create_model("TransE", 1), np.stack([head, tail]), config
    )
    np.testing.assert_allclose(result.relations[0], tail - head, atol=1e-2)


def test_bootstrap_loss_goes_down(toy_dataset):
    rng = np.random.default_rng(2)
    squeezed = rng.uniform(-0.3, 0.3, size=(toy_dataset.num_entities, 8))
    config = small_config(
        dim_entity=8,
        dim_relation=8,
        lr=0.005,
        batch_size=64,
        negatives_per_positive=10,
        epochs=50,
        plateau_window=0,
        relation_init="random",
    )
    result = build_hif_relation(
        toy_dataset, create_model("TransE", 1), squeezed, config
    )
    losses = np.array(result.log.losses())
    assert len(losses) == 50
    averages = np.convolve(losses, np.ones(10) / 10, "valid")
    assert (averages[10:] <= averages[:-10] + 0.05).all()
    assert averages[-1] < averages[0]


def test_planted_translations_are_recovered(make_dataset):
    rng = np.random.default_rng(3)
    planted = np.array([[0.3, -0.2, 0.1], [-0.1, 0.25, -0.2]])
    heads = rng.uniform(-0.3, 0.3, size=(8, 3))
    tails = heads + np.repeat(planted, 4, axis=0)
    train = [(index, index // 4, 8 + index) for index in range(8)]
    dataset = make_dataset(train, 16, 2)
    config = small_config(
        dim_entity=3,
        dim_relation=3,
        margin=4.0,
        lr=0.0005,
        batch_size=8,
        epochs=3000,
        plateau_window=0,
        relation_init="zeros",
    )
    result = build_hif_relation(
        dataset,
        create_model("TransE", 1),
        np.concatenate([heads, tails]),
        config,
    )
    distances = np.linalg.norm(result.relations - planted, axis=1)
    assert (distances <= 1e-2).all()


def test_squeezed_shape_must_fit(make_dataset):
    dataset = make_dataset([(0, 0, 1)], 2, 1)
    config = small_config(epochs=1)
    with pytest.raises(ConfigError):
        build_hif_relation(
            dataset, create_model("TransE"), np.zeros((2, 3)), config
        )


def test_save_and_load(tmp_path, make_dataset):
    dataset = make_dataset([(0, 0, 1), (1, 0, 2)], 3, 1)
    config = small_config(epochs=3, plateau_window=0)
    result = build_hif_relation(
        dataset, create_model("TransE"), np.eye(3, 4), config
    )
    path = result.save(tmp_path / "bootstrap.bin", config.config_hash())
    loaded = HifRelationResult.load(path)
    assert np.array_equal(loaded.relations, result.relations)
    assert loaded.epochs == 3
    assert loaded.model.name == "TransE"


def test_load_rejects_plain_checkpoints(tmp_path, make_dataset):
    dataset = make_dataset([(0, 0, 1)], 2, 1)
    config = small_config(epochs=1)
    result = build_hif_relation(
        dataset, create_model("TransE"), np.eye(2, 4), config
    )
    path = save_checkpoint(
        tmp_path / "checkpoint.bin", result.model, result.embeddings, 1
    )
    with pytest.raises(ConfigError):
        HifRelationResult.load(path)
