import argparse
import csv
import sys

import pytest
import yaml

from process.launcher import Launcher, parser, positive_float, positive_int
from service.config import DP_OPTIONS, TRAIN_OPTIONS, options_from


def test_positive_numbers():
    assert positive_int("3") == 3
    assert positive_float("0.5") == 0.5
    for value in ("0", "-2", "x"):
        with pytest.raises(argparse.ArgumentTypeError):
            positive_int(value)

    for value in ("0", "nan", "y"):
        with pytest.raises(argparse.ArgumentTypeError):
            positive_float(value)


@pytest.mark.parametrize(
    "argv",
    [
        ["build-hif", "--T", "0"],
        ["build-hif", "--semiring", "min-plus"],
        ["train", "--norm", "3"],
        ["evaluate"],
        ["split", "--input", "triples.txt"],
    ],
)
def test_usage_errors(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        parser.parse_args(argv)

    assert exc.value.code == 2


def test_pipeline_options():
    args = parser.parse_args(
        [
            "pipeline",
            "--dataset",
            "toy",
            "--T",
            "3",
            "--no-identity-each-step",
            "--model",
            "TransH",
            "--norm",
            "2",
            "--baseline",
        ]
    )
    assert (args.service, args.action) == ("pipeline", "pipeline")
    assert args.directory == "toy"
    assert args.baseline and not args.grid and not args.resume
    assert options_from(args, DP_OPTIONS) == {
        "iterations": 3,
        "alpha": None,
        "semiring": None,
        "include_identity_each_step": False,
    }
    train = options_from(args, TRAIN_OPTIONS)
    assert (train["model"], train["norm_p"]) == ("TransH", 2)
    assert train["lr"] is None


def launch(monkeypatch, *argv) -> int:
    monkeypatch.setattr(sys, "argv", ["kghait", *argv])
    with pytest.raises(SystemExit) as exc:
        Launcher().run()

    return exc.value.code


def test_pipeline_run(monkeypatch, tmp_path, toy_directory):
    monkeypatch.chdir(tmp_path)
    options = [
        "--T",
        "2",
        "--dim",
        "8",
        "--dim-relation",
        "8",
        "--epochs",
        "3",
        "--eval-every",
        "1",
        "--batch-size",
        "16",
    ]
    code = launch(
        monkeypatch,
        "pipeline",
        "--dataset",
        str(toy_directory),
        *options,
        "--baseline",
        "--groups",
        str(toy_directory / "groups.tsv"),
        "--out",
        "run",
    )
    assert code == 0

    run = tmp_path / "run"
    for name in (
        "manifest.yaml",
        "hif.bin",
        "squeeze.bin",
        "bootstrap.bin",
        "with_hif/checkpoint.bin",
        "without_hif/training.csv",
        "report.csv",
        "paired.txt",
        "curves.csv",
        "similarity.csv",
    ):
        assert (run / name).exists(), name

    manifest = yaml.safe_load((run / "manifest.yaml").read_text("utf-8"))
    assert manifest["stage_order"][-1] == "evaluate"
    assert all(
        stage["status"] == "done" for stage in manifest["stages"].values()
    )
    with (run / "curves.csv").open(newline="", encoding="utf-8") as file:
        curves = {
            (row["label"], row["metric"]) for row in csv.DictReader(file)
        }

    for label in ("with_hif", "without_hif"):
        for metric in ("H@10", "MR", "MRR"):
            assert (f"{label}:{metric}", metric) in curves

    code = launch(
        monkeypatch,
        "pipeline",
        "--dataset",
        str(toy_directory),
        *options,
        "--baseline",
        "--groups",
        str(toy_directory / "groups.tsv"),
        "--out",
        "run",
        "--resume",
    )
    assert code == 0
    manifest = yaml.safe_load((run / "manifest.yaml").read_text("utf-8"))
    assert manifest["stages"]["build-hif"]["status"] == "resumed"
    assert manifest["stages"]["evaluate"]["status"] == "done"


def test_exit_codes(monkeypatch, tmp_path, toy_directory):
    monkeypatch.chdir(tmp_path)
    assert launch(monkeypatch, "squeeze", "--dim", "4") == 2

    bad = tmp_path / "bad.txt"
    bad.write_text("a\tb\n", encoding="utf-8")
    assert launch(monkeypatch, "build-hif", "--train", str(bad)) == 3

    code = launch(
        monkeypatch,
        "build-hif",
        "--dataset",
        str(toy_directory),
        "--T",
        "2",
        "--out",
        "toy.bin",
    )
    assert code == 0
    assert (tmp_path / "toy.bin").exists()
