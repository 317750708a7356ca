# Copyright (c) 2026, kghait contributors
# All rights reserved.

# Redistribution and use in source and binary forms, with or without
# modification, are permitted provided that the following conditions are met:

# 1. Redistributions of source code must retain the above copyright notice,
#    this list of conditions and the following disclaimer.

# 2. Redistributions in binary form must reproduce the above copyright notice,
#    this list of conditions and the following disclaimer in the documentation
#    and/or other materials provided with the distribution.

# 3. Neither the name of the copyright holder nor the names of its
#    contributors may be used to endorse or promote products derived from
#    this software without specific prior written permission.

# THIS SOFTWARE IS PROVIDED BY THE COPYRIGHT HOLDERS AND CONTRIBUTORS "AS IS"
# AND ANY EXPRESS OR IMPLIED WARRANTIES, INCLUDING, BUT NOT LIMITED TO, THE
# IMPLIED WARRANTIES OF MERCHANTABILITY AND FITNESS FOR A PARTICULAR PURPOSE
# ARE DISCLAIMED. IN NO EVENT SHALL THE COPYRIGHT HOLDER OR CONTRIBUTORS
# BE LIABLE FOR ANY DIRECT, INDIRECT, INCIDENTAL, SPECIAL, EXEMPLARY,
# OR CONSEQUENTIAL DAMAGES (INCLUDING, BUT NOT LIMITED TO, PROCUREMENT OF
# SUBSTITUTE GOODS OR SERVICES; LOSS OF USE, DATA, OR PROFITS; OR BUSINESS
# INTERRUPTION) HOWEVER CAUSED AND ON ANY THEORY OF LIABILITY, WHETHER IN
# CONTRACT, STRICT LIABILITY, OR TORT (INCLUDING NEGLIGENCE OR OTHERWISE)
# ARISING IN ANY WAY OUT OF THE USE OF THIS SOFTWARE, EVEN IF ADVISED
# OF THE POSSIBILITY OF SUCH DAMAGE.

"""Text tables and CSV files for evaluation results."""

import csv
from pathlib import Path
from typing import Any, Sequence

from beautifultable import BeautifulTable

from evaluation.ranking import RankingReport
from tools.settings import settings


def format_metric(name: str, value: float | None) -> str:
    """Format a metric value: MR with 1 decimal, others with 3."""
    if value is None:
        return "-"

    if name == "MR":
        return f"{value:.1f}"

    return f"{value:.3f}"


def render_table(
    header: Sequence[str], rows: Sequence[Sequence[Any]]
) -> str:
    """Render rows as an aligned table, first column to the left.

    Cells are printed as given, numbers aren't reformatted.

    """
    table = BeautifulTable(maxwidth=160, detect_numerics=False)
    table.columns.header = tuple(header)
    table.columns.header.alignment = BeautifulTable.ALIGN_LEFT
    for index, name in enumerate(header):
        alignment = BeautifulTable.ALIGN_RIGHT
        if index == 0:
            alignment = BeautifulTable.ALIGN_LEFT
        table.columns.alignment[name] = alignment

    table.set_style(BeautifulTable.STYLE_COMPACT)
    for row in rows:
        table.rows.append([str(value) for value in row])

    return str(table)


def write_rows_csv(
    path: str | Path, header: Sequence[str], rows: Sequence[Sequence[Any]]
) -> Path:
    """Write a header and rows as CSV."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open(
        "w", newline="", encoding=settings.DEFAULT_ENCODING
    ) as file:
        writer = csv.writer(file)
        writer.writerow(header)
        writer.writerows(rows)

    return path


def _metric_names(reports: dict[str, RankingReport]) -> list[str]:
    names = []
    for report in reports.values():
        for name in report.as_dict():
            if name not in names:
                names.append(name)

    return names


def ranking_table(reports: dict[str, RankingReport]) -> str:
    """Render labelled ranking reports, one row per label."""
    names = _metric_names(reports)
    rows = []
    for label, report in reports.items():
        values = report.as_dict()
        rows.append(
            [label, *(format_metric(name, values.get(name)) for name in names)]
        )

    return render_table(["Run", *names], rows)


def write_ranking_csv(
    path: str | Path, reports: dict[str, RankingReport]
) -> Path:
    """Write labelled ranking reports as CSV, full precision."""
    names = _metric_names(reports)
    rows = [
        [label, report.count, *(report.as_dict().get(name) for name in names)]
        for label, report in reports.items()
    ]
    return write_rows_csv(path, ["run", "ranks", *names], rows)


def relative_change(before: float, after: float) -> float | None:
    """Return (after - before) / before, `None` if before is 0."""
    if before == 0:
        return None

    return (after - before) / before


def paired_table(without: RankingReport, with_hif: RankingReport) -> str:
    """Render a side-by-side comparison of runs without and with HIF."""
    before, after = without.as_dict(), with_hif.as_dict()
    rows = []
    for name in _metric_names({"w/o": without, "w/": with_hif}):
        change = None
        if name in before and name in after:
            change = relative_change(before[name], after[name])
        rows.append(
            [
                name,
                format_metric(name, before.get(name)),
                format_metric(name, after.get(name)),
                "-" if change is None else f"{change:+.1%}",
            ]
        )

    return render_table(["Metric", "w/o HIF", "w/ HIF", "Change"], rows)
