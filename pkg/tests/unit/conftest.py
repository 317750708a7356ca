from pathlib import Path

import numpy as np
import pytest

from data.dataset import Dataset, load_dataset_directory
from data.graph import KnowledgeGraph
from data.vocabulary import Vocabularies, Vocabulary

TOY_DIRECTORY = Path(__file__).resolve().parents[2] / "data" / "toy"


def vocabularies(num_entities: int, num_relations: int) -> Vocabularies:
    """Return vocabularies named e0, e1... and r0, r1..."""
    return Vocabularies(
        Vocabulary(f"e{index}" for index in range(num_entities)),
        Vocabulary(f"r{index}" for index in range(num_relations)),
    )


def graph_of(
    triples, num_entities: int, num_relations: int
) -> KnowledgeGraph:
    return KnowledgeGraph(vocabularies(num_entities, num_relations), triples)


def random_triples(
    rng: np.random.Generator,
    num_entities: int,
    num_relations: int,
    num_triples: int,
) -> np.ndarray:
    return np.column_stack(
        [
            rng.integers(0, num_entities, num_triples),
            rng.integers(0, num_relations, num_triples),
            rng.integers(0, num_entities, num_triples),
        ]
    ).astype(np.int64)


@pytest.fixture
def make_graph():
    """Build a graph from id triples and vocabulary sizes."""
    return graph_of


@pytest.fixture
def random_graph():
    """Build a seeded random graph of at most 12 entities and 3 relations."""

    def build(
        seed: int,
        max_entities: int = 12,
        max_relations: int = 3,
        max_triples: int = 25,
    ) -> KnowledgeGraph:
        rng = np.random.default_rng(seed)
        num_entities = int(rng.integers(2, max_entities + 1))
        num_relations = int(rng.integers(1, max_relations + 1))
        num_triples = int(rng.integers(1, max_triples + 1))
        triples = random_triples(rng, num_entities, num_relations, num_triples)
        return graph_of(triples, num_entities, num_relations)

    return build


@pytest.fixture
def make_dataset():
    """Build a dataset from id triples, with names e0... and r0..."""

    def build(
        train, num_entities: int, num_relations: int, valid=(), test=()
    ) -> Dataset:
        def as_array(triples):
            return np.asarray(triples, dtype=np.int64).reshape(-1, 3)

        return Dataset(
            vocabularies(num_entities, num_relations),
            as_array(train),
            as_array(valid),
            as_array(test),
        )

    return build


@pytest.fixture(scope="session")
def toy_directory() -> Path:
    return TOY_DIRECTORY


@pytest.fixture
def toy_dataset() -> Dataset:
    return load_dataset_directory(TOY_DIRECTORY)
