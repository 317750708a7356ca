import csv

import pytest

from evaluation.curves import (
    convergence_curves,
    epochs_to_within,
    write_curves_csv,
)
from kge.history import TrainingLog
from tools.errors import ConfigError, DataError


def log_of(points, metric="H@10"):
    log = TrainingLog()
    for epoch in range(1, points[-1][0] + 1):
        values = dict(points)
        metrics = {metric: values[epoch]} if epoch in values else {}
        log.add(epoch, 1.0 / epoch, metrics)

    return log


def test_monotone_curve_converges_at_its_end():
    points = [(25, 0.1), (50, 0.2), (75, 0.21)]
    assert epochs_to_within(points, 0.05) == 75


def test_curve_reaching_its_plateau():
    points = [(10, 0.0), (20, 0.5), (30, 0.99), (40, 1.0)]
    assert epochs_to_within(points, 0.05) == 30


def test_constant_curve_converges_at_first_evaluation():
    assert epochs_to_within([(5, 0.3), (10, 0.3), (15, 0.3)], 0.05) == 5


def test_empty_curve():
    with pytest.raises(DataError):
        epochs_to_within([])


def test_curve_from_log():
    log = log_of([(25, 0.1), (50, 0.2), (75, 0.21)])
    curve = convergence_curves(log, "H@10", tolerance=0.05)
    assert curve.points == [(25, 0.1), (50, 0.2), (75, 0.21)]
    assert curve.converged_at == 75
    assert curve.final == 0.21


def test_curve_subsampling():
    log = log_of([(25, 0.1), (50, 0.2), (75, 0.21), (100, 0.21)])
    curve = convergence_curves(log, "H@10", every=50)
    assert [epoch for epoch, _ in curve.points] == [50, 100]
    with pytest.raises(ConfigError):
        convergence_curves(log, "H@10", every=0)

    with pytest.raises(DataError):
        convergence_curves(log, "H@10", every=1000)


def test_missing_metric():
    with pytest.raises(DataError):
        convergence_curves(log_of([(5, 0.5)]), "MRR")


def test_curves_csv(tmp_path):
    curves = {
        "with_hif": convergence_curves(log_of([(1, 0.5), (2, 0.75)]), "H@10")
    }
    with write_curves_csv(tmp_path / "curves.csv", curves).open() as file:
        rows = list(csv.reader(file))

    assert rows == [
        ["label", "metric", "epoch", "value"],
        ["with_hif", "H@10", "1", "0.5"],
        ["with_hif", "H@10", "2", "0.75"],
    ]
