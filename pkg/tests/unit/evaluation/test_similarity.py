import numpy as np
import pytest

from evaluation.similarity import load_groups, similarity_report
from tools.errors import (
    LookupFailure,
    ParseError,
    UndefinedSimilarityError,
    UsageError,
)

HIF = np.array(
    [
        [1.0, 0.0, 0.0],
        [1.0, 1.0, 0.0],
        [0.0, 1.0, 0.0],
        [0.0, 0.0, 2.0],
        [0.0, 0.0, 0.0],
    ]
)


@pytest.fixture
def vocab(make_dataset):
    return make_dataset([(0, 0, 1)], 5, 1).vocab


def test_groups_file(tmp_path):
    path = tmp_path / "groups.tsv"
    path.write_text("a\te0\na\te1\n\nb\te3\na\te0\n")
    assert load_groups(path) == {"a": ["e0", "e1"], "b": ["e3"]}


def test_groups_file_errors(tmp_path):
    path = tmp_path / "groups.tsv"
    path.write_text("a\te0\nonly-one-field\n")
    with pytest.raises(ParseError) as error:
        load_groups(path)

    assert error.value.line_number == 2
    path.write_text("\n\n")
    with pytest.raises(UsageError):
        load_groups(path)


def test_group_means(vocab):
    groups = {"a": ["e0", "e1", "e2"], "b": ["e3"]}
    report = similarity_report(HIF, groups, vocab)
    half = 1 / np.sqrt(2)
    assert report.names == ["e0", "e1", "e2", "e3"]
    assert report.within_group_means["a"] == pytest.approx(
        (half + 0.0 + half) / 3
    )
    assert report.within_group_means["b"] == 1.0
    assert report.cross_group_mean == pytest.approx(0.0)
    assert np.array_equal(report.matrix, report.matrix.T)
    assert np.diag(report.matrix).tolist() == [1.0] * 4


def test_single_group_has_no_cross_mean(vocab):
    report = similarity_report(HIF, {"a": ["e0", "e1"]}, vocab)
    assert report.cross_group_mean is None
    assert "across" not in "\n".join(report.summary_lines())


def test_unknown_entities(vocab):
    with pytest.raises(LookupFailure) as error:
        similarity_report(HIF, {"a": ["e0", "nope"]}, vocab)

    assert error.value.offenders == ["nope"]


def test_zero_vector(vocab):
    with pytest.raises(UndefinedSimilarityError):
        similarity_report(HIF, {"a": ["e0", "e4"]}, vocab)


def test_matrix_csv(tmp_path, vocab):
    report = similarity_report(HIF, {"a": ["e0"], "b": ["e3"]}, vocab)
    lines = report.to_csv(tmp_path / "similarity.csv").read_text()
    assert lines.splitlines()[0] == "entity,e0,e3"
    assert lines.splitlines()[1] == "e0,1.000000,0.000000"
