import numpy as np
import pytest

from data.dataset import (
    load_dataset,
    load_dataset_directory,
    load_triples,
    parse_triple_line,
    split_dataset,
    write_dataset,
)
from data.triple import Triple
from data.vocabulary import Vocabularies
from tools.errors import ConfigError, DataError, ParseError


def test_parse_assigns_ids_in_first_seen_order():
    vocab = Vocabularies()
    assert parse_triple_line("A\tlikes\tB", vocab) == Triple(0, 0, 1)
    assert (len(vocab.entities), len(vocab.relations)) == (2, 1)
    assert parse_triple_line("B\tlikes\tA\n", vocab) == Triple(1, 0, 0)
    assert (len(vocab.entities), len(vocab.relations)) == (2, 1)


def test_parse_rejects_spaces():
    with pytest.raises(ParseError) as info:
        parse_triple_line("A likes B", Vocabularies(), line_number=7)

    assert info.value.line_number == 7
    assert "line 7" in str(info.value)


@pytest.mark.parametrize(
    "line", ["A\tlikes", "A\tlikes\tB\tC", "A\t\tB", "\tlikes\tB"]
)
def test_parse_rejects_bad_field_counts(line):
    with pytest.raises(ParseError):
        parse_triple_line(line, Vocabularies())


def test_load_reports_line_number_and_path(tmp_path):
    path = tmp_path / "train.txt"
    path.write_text("a\tr\tb\n\nb r c\n", encoding="utf-8")
    with pytest.raises(ParseError) as info:
        load_triples(path, Vocabularies())

    assert info.value.line_number == 3
    assert str(path) in str(info.value)


def test_missing_file_is_a_data_error(tmp_path):
    with pytest.raises(DataError):
        load_triples(tmp_path / "absent.txt", Vocabularies())


def test_single_file_dataset_has_empty_splits(tmp_path):
    path = tmp_path / "train.txt"
    path.write_text("a\tr\tb\nb\tr\tc\n", encoding="utf-8")
    dataset = load_dataset(path)
    assert len(dataset.train) == 2
    assert dataset.valid.shape == (0, 3)
    assert dataset.test.shape == (0, 3)
    assert dataset.report.sizes == {"train": 2, "valid": 0, "test": 0}


def test_orphans_are_kept_and_reported(tmp_path):
    (tmp_path / "train.txt").write_text("a\tr\tb\n", encoding="utf-8")
    (tmp_path / "valid.txt").write_text("a\ts\tc\n", encoding="utf-8")
    (tmp_path / "test.txt").write_text("b\tr\ta\n", encoding="utf-8")
    dataset = load_dataset_directory(tmp_path)
    assert dataset.num_entities == 3
    assert dataset.num_relations == 2
    assert dataset.report.orphan_entities == ["c"]
    assert dataset.report.orphan_relations == ["s"]
    assert "orphan entities" in dataset.report.as_table()
    c = dataset.vocab.entities["c"]
    assert dataset.graph.degree(c) == 0


def test_graph_is_built_from_train_only(toy_dataset):
    assert len(toy_dataset.graph) == len(toy_dataset.train)
    total = sum(
        len(toy_dataset.graph.out_index(u))
        for u in range(toy_dataset.num_entities)
    )
    assert total == len(toy_dataset.train)


def test_duplicates_are_counted(make_dataset):
    dataset = make_dataset([(0, 0, 1), (0, 0, 1), (1, 0, 0)], 2, 1)
    assert dataset.report.duplicates == 1
    assert len(dataset.graph.out_index(0)) == 2
    assert len(dataset.filter_keys()) == 2


def test_write_and_reload_round_trip(toy_dataset, tmp_path):
    write_dataset(toy_dataset, tmp_path)
    reloaded = load_dataset_directory(tmp_path)
    assert list(reloaded.vocab.entities) == list(toy_dataset.vocab.entities)
    assert list(reloaded.vocab.relations) == list(
        toy_dataset.vocab.relations
    )
    for name in ("train", "valid", "test"):
        np.testing.assert_array_equal(
            reloaded.split(name), toy_dataset.split(name)
        )


def test_split_cardinalities():
    vocab = Vocabularies()
    for index in range(101):
        vocab.entities.add(f"e{index}")
    vocab.relations.add("r")
    triples = np.array([(i, 0, i + 1) for i in range(100)], dtype=np.int64)
    dataset = split_dataset(triples, vocab, 0.75, seed=5)
    sizes = sorted([len(dataset.valid), len(dataset.test)])
    assert len(dataset.train) == 75
    assert sizes == [12, 13]
    parts = np.concatenate([dataset.train, dataset.valid, dataset.test])
    assert sorted(map(tuple, parts.tolist())) == sorted(
        map(tuple, triples.tolist())
    )


def test_split_is_deterministic():
    vocab = Vocabularies()
    for index in range(30):
        vocab.entities.add(f"e{index}")
    vocab.relations.add("r")
    triples = np.array([(i, 0, i + 1) for i in range(29)], dtype=np.int64)
    first = split_dataset(triples, vocab, 0.5, 0.25, seed=3)
    second = split_dataset(triples, vocab, 0.5, 0.25, seed=3)
    for name in ("train", "valid", "test"):
        np.testing.assert_array_equal(first.split(name), second.split(name))


@pytest.mark.parametrize(
    "train_frac, valid_frac", [(1.5, None), (0.0, None), (0.8, 0.3)]
)
def test_split_rejects_bad_fractions(train_frac, valid_frac):
    triples = np.array([(0, 0, 1)], dtype=np.int64)
    with pytest.raises(ConfigError):
        split_dataset(triples, Vocabularies(), train_frac, valid_frac)
