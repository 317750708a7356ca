import numpy as np
import pytest

from kge.checkpoint import load_checkpoint, save_checkpoint
from kge.config import TrainConfig
from kge.embedding import EmbeddingSet
from kge.history import TrainingLog
from kge.initialization import init_embeddings
from kge.models import create_model
from tools.binary import Kind, write_artifact
from tools.errors import ConfigError, DataError, ShapeError


@pytest.mark.parametrize(
    "name, dim_relation", [("TransE", 4), ("TransH", 4), ("TransR", 2)]
)
def test_checkpoint_round_trip(tmp_path, name, dim_relation):
    model = create_model(name, 2)
    rng = np.random.default_rng(0)
    embeddings = model.init_embeddings(5, 3, 4, dim_relation, rng)
    digest = bytes(range(16))
    path = save_checkpoint(
        tmp_path / "model.bin", model, embeddings, 17, digest
    )
    checkpoint = load_checkpoint(path)
    assert checkpoint.model.name == name
    assert checkpoint.model.norm_p == 2
    assert checkpoint.epoch == 17
    assert checkpoint.config_hash == digest
    assert not checkpoint.bootstrap
    for key, value in embeddings.parameters().items():
        assert np.array_equal(checkpoint.embeddings.parameters()[key], value)


def test_checkpoint_rejects_other_artifacts(tmp_path):
    path = write_artifact(
        tmp_path / "hif.bin",
        Kind.HIF,
        {
            "num_entities": 1,
            "dim": 1,
            "iterations": 1,
            "alpha": 0.5,
            "semiring": 1,
            "identity_each_step": 1,
        },
        [np.zeros((1, 1))],
    )
    with pytest.raises(DataError):
        load_checkpoint(path)


def test_checkpoint_rejects_garbage(tmp_path):
    path = tmp_path / "garbage.bin"
    path.write_bytes(b"not an artifact at all")
    with pytest.raises(DataError):
        load_checkpoint(path)


def test_training_log_round_trip(tmp_path):
    log = TrainingLog()
    log.add(1, 0.75)
    log.add(2, 0.5, {"MR": 12.0, "MRR": 0.25, "H@1": 0.1, "H@10": 0.5})
    log.add(3, 0.25)
    loaded = TrainingLog.from_csv(log.to_csv(tmp_path / "training.csv"))
    assert loaded.losses() == [0.75, 0.5, 0.25]
    assert [record.epoch for record in loaded.evaluated()] == [2]
    assert loaded.series("MRR") == [(2, 0.25)]
    assert loaded.records[1].metrics == log.records[1].metrics


def test_training_log_series_errors():
    log = TrainingLog()
    log.add(1, 1.0)
    with pytest.raises(DataError):
        log.series("H@10")

    with pytest.raises(DataError):
        log.series("accuracy")


def test_training_log_rejects_other_files(tmp_path):
    path = tmp_path / "other.csv"
    path.write_text("a,b\n1,2\n")
    with pytest.raises(DataError):
        TrainingLog.from_csv(path)

    with pytest.raises(DataError):
        TrainingLog.from_csv(tmp_path / "missing.csv")


def test_random_init_is_seeded(make_dataset):
    dataset = make_dataset([(0, 0, 1), (1, 1, 2)], 3, 2)
    config = TrainConfig.build(dim_entity=4, dim_relation=4, seed=5)
    model = create_model("TransE")
    first = init_embeddings(model, dataset, config)
    second = init_embeddings(model, dataset, config)
    other = init_embeddings(model, dataset, config, seed=6)
    assert np.array_equal(first.entities, second.entities)
    assert not np.array_equal(first.entities, other.entities)


def test_hif_init_copies_the_matrices(make_dataset):
    dataset = make_dataset([(0, 0, 1), (1, 1, 2)], 3, 2)
    config = TrainConfig.build(
        model="TransH", dim_entity=2, dim_relation=2, init="hif"
    )
    model = create_model("TransH")
    entities = np.arange(6.0).reshape(3, 2)
    bootstrap = EmbeddingSet(
        np.zeros((3, 2)),
        np.ones((2, 2)),
        normals=np.array([[1.0, 0.0], [0.0, 1.0]]),
    )
    embeddings = init_embeddings(model, dataset, config, entities, bootstrap)
    assert np.array_equal(embeddings.entities, entities)
    assert np.array_equal(embeddings.relations, bootstrap.relations)
    assert np.array_equal(embeddings.normals, bootstrap.normals)
    embeddings.entities[0, 0] = 42.0
    assert entities[0, 0] == 0.0


def test_hif_init_checks_its_inputs(make_dataset):
    dataset = make_dataset([(0, 0, 1)], 2, 1)
    config = TrainConfig.build(dim_entity=2, dim_relation=2, init="hif")
    model = create_model("TransE")
    with pytest.raises(ConfigError):
        init_embeddings(model, dataset, config, np.zeros((2, 2)))

    with pytest.raises(ShapeError):
        init_embeddings(
            model, dataset, config, np.zeros((2, 3)), np.zeros((1, 2))
        )
