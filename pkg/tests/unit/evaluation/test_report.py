import csv

from evaluation.ranking import RankingReport
from evaluation.report import (
    format_metric,
    paired_table,
    ranking_table,
    relative_change,
    render_table,
    write_ranking_csv,
)


def report(*ranks):
    return RankingReport.from_ranks(ranks, hits_at=[1, 10])


def test_metric_format():
    assert format_metric("MR", 135.04) == "135.0"
    assert format_metric("MRR", 0.32912) == "0.329"
    assert format_metric("H@10", None) == "-"


def test_relative_change():
    assert relative_change(186.0, 135.0) == (135.0 - 186.0) / 186.0
    assert relative_change(0.0, 1.0) is None


def test_ranking_table_has_one_row_per_run():
    text = ranking_table({"with_hif": report(1, 2), "without": report(3)})
    assert "with_hif" in text
    assert "without" in text
    assert "MRR" in text
    assert "0.750" in text


def test_table_cells_are_printed_as_given():
    text = render_table(["run", "MR", "MRR"], [["a", "12.0", "0.750"]])
    assert "12.0" in text
    assert "0.750" in text


def test_paired_table_shows_changes():
    text = paired_table(report(4, 4), report(2, 2))
    assert "w/o HIF" in text
    assert "-50.0%" in text


def test_ranking_csv(tmp_path):
    path = write_ranking_csv(
        tmp_path / "report.csv", {"a": report(1, 10), "b": report(2)}
    )
    with path.open(newline="") as file:
        rows = list(csv.reader(file))

    assert rows[0] == ["run", "ranks", "MR", "MRR", "H@1", "H@10"]
    assert rows[1][:3] == ["a", "2", "5.5"]
    assert float(rows[1][3]) == 0.55
    assert rows[2][:3] == ["b", "1", "2.0"]
