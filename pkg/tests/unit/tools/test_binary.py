import numpy as np
import pytest

from tools.binary import MAGIC, Kind, read_artifact, write_artifact
from tools.errors import DataError

HEADER = {
    "num_entities": 2,
    "dim": 3,
    "iterations": 4,
    "alpha": 0.9,
    "semiring": 2,
    "identity_each_step": 0,
}


def write(path, matrices=None):
    matrices = matrices or [np.arange(6.0).reshape(2, 3)]
    return write_artifact(path, Kind.HIF, HEADER, matrices)


def test_round_trip(tmp_path):
    cube = np.arange(24.0).reshape(2, 3, 4)
    path = write(tmp_path / "a.bin", [np.eye(2, 3), cube])
    kind, header, matrices = read_artifact(path, Kind.HIF)
    assert kind is Kind.HIF
    assert header == HEADER
    assert np.array_equal(matrices[0], np.eye(2, 3))
    assert np.array_equal(matrices[1], cube)
    assert path.read_bytes().startswith(MAGIC)


def test_same_content_same_bytes(tmp_path):
    first = write(tmp_path / "first.bin").read_bytes()
    second = write(tmp_path / "second.bin").read_bytes()
    assert first == second


def test_kind_mismatch(tmp_path):
    path = write(tmp_path / "a.bin")
    with pytest.raises(DataError, match="expected SQUEEZE"):
        read_artifact(path, Kind.SQUEEZE)


@pytest.mark.parametrize(
    "damage",
    [
        lambda content: content[:3],
        lambda content: b"NOPE" + content[4:],
        lambda content: content[:4] + b"\x09\x00" + content[6:],
        lambda content: content[:-8],
        lambda content: content + b"\x00",
    ],
    ids=["short", "magic", "version", "truncated", "trailing"],
)
def test_damaged_files(tmp_path, damage):
    path = write(tmp_path / "a.bin")
    path.write_bytes(damage(path.read_bytes()))
    with pytest.raises(DataError):
        read_artifact(path)


def test_missing_file(tmp_path):
    with pytest.raises(DataError):
        read_artifact(tmp_path / "missing.bin")
