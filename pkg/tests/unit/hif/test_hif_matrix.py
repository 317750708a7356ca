import csv

import numpy as np
import pytest

from hif.config import DpConfig
from hif.dp import build_hif_entity
from hif.matrix import HifMatrix, cosine, hif_cosine
from hif.semiring import Semiring
from tools.binary import Kind, read_artifact, write_artifact
from tools.errors import DataError, ShapeError, UndefinedSimilarityError


@pytest.fixture
def hif(random_graph):
    config = DpConfig.build(
        iterations=3,
        alpha=0.4,
        semiring=Semiring.MAX_PRODUCT,
        include_identity_each_step=False,
    )
    return build_hif_entity(random_graph(5), config)


def test_save_and_load(tmp_path, hif):
    path = hif.save(tmp_path / "hif.bin")
    loaded = HifMatrix.load(path)
    assert np.array_equal(loaded.data, hif.data)
    assert loaded.iterations_used == 3
    assert loaded.config.alpha == 0.4
    assert loaded.config.semiring is Semiring.MAX_PRODUCT
    assert loaded.config.include_identity_each_step is False


def test_save_is_deterministic(tmp_path, hif):
    first = hif.save(tmp_path / "first.bin").read_bytes()
    second = hif.save(tmp_path / "second.bin").read_bytes()
    assert first == second


def test_load_rejects_other_kinds(tmp_path):
    path = write_artifact(
        tmp_path / "bootstrap.bin",
        Kind.SQUEEZE,
        {
            "dim_entity": 2,
            "num_relations": 3,
            "seed": 0,
            "initial_loss": 1.0,
            "final_loss": 0.5,
            "iterations": 10,
            "converged": 1,
        },
        [np.zeros((3, 2))],
    )
    with pytest.raises(DataError):
        HifMatrix.load(path)

    kind, _, _ = read_artifact(path)
    assert kind is Kind.SQUEEZE


def test_matrix_must_be_two_dimensional():
    with pytest.raises(ShapeError):
        HifMatrix(np.zeros(3), 1)


def test_csv_export(tmp_path, make_graph):
    graph = make_graph([(0, 0, 1), (1, 1, 2)], 3, 2)
    hif = build_hif_entity(graph, DpConfig.build(iterations=1))
    path = hif.to_csv(tmp_path / "hif.csv", graph.vocab)
    with path.open(newline="") as file:
        rows = list(csv.reader(file))

    assert rows[0] == ["entity", "r0", "r1"]
    assert rows[1] == ["e0", "1.0", "0.0"]
    assert rows[2] == ["e1", "-1.0", "1.0"]
    assert rows[3] == ["e2", "0.0", "-1.0"]


def test_cosine_bounds():
    vector = np.array([1.0, -2.0, 0.5])
    assert cosine(vector, vector) == pytest.approx(1.0)
    assert cosine(vector, -vector) == pytest.approx(-1.0)
    assert cosine(np.array([1.0, 0.0]), np.array([0.0, 3.0])) == 0.0


def test_hif_cosine_of_an_entity_with_itself():
    matrix = HifMatrix(np.array([[1.0, 2.0], [-1.0, -2.0]]), 1)
    assert hif_cosine(matrix, 0, 0) == 1.0
    assert hif_cosine(matrix, 0, 1) == pytest.approx(-1.0)


def test_hif_cosine_of_a_zero_row():
    matrix = HifMatrix(np.array([[1.0, 2.0], [0.0, 0.0]]), 1)
    with pytest.raises(UndefinedSimilarityError):
        hif_cosine(matrix, 0, 1)

    with pytest.raises(UndefinedSimilarityError):
        hif_cosine(matrix, 1, 1)
