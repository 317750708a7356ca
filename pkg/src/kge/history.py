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

"""The training log: one record per epoch, saved as CSV."""

import csv
from dataclasses import dataclass, field
from pathlib import Path

from tools.errors import DataError
from tools.settings import settings

METRICS = ("MR", "MRR", "H@1", "H@3", "H@10")
COLUMNS = ("epoch", "loss", "val_mr", "val_mrr", "val_h1", "val_h3", "val_h10")


@dataclass
class EpochRecord:

    """The mean train loss of an epoch and its validation metrics.

    `metrics` is empty for epochs without validation.

    """

    epoch: int
    loss: float
    metrics: dict[str, float] = field(default_factory=dict)

    @property
    def evaluated(self) -> bool:
        return bool(self.metrics)

    def as_row(self) -> list[str]:
        row = [str(self.epoch), repr(self.loss)]
        row.extend(
            repr(self.metrics[name]) if name in self.metrics else ""
            for name in METRICS
        )
        return row


@dataclass
class TrainingLog:

    """The records of a training run, in epoch order."""

    records: list[EpochRecord] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.records)

    def __iter__(self):
        return iter(self.records)

    def add(
        self, epoch: int, loss: float, metrics: dict[str, float] | None = None
    ) -> EpochRecord:
        record = EpochRecord(epoch, loss, dict(metrics or {}))
        self.records.append(record)
        return record

    def losses(self) -> list[float]:
        return [record.loss for record in self.records]

    def evaluated(self) -> list[EpochRecord]:
        """Return the records holding validation metrics."""
        return [record for record in self.records if record.evaluated]

    def series(self, metric: str) -> list[tuple[int, float]]:
        """Return the (epoch, value) points of a validation metric.

        Raises:
            DataError: the metric is unknown or never recorded.

        """
        if metric not in METRICS:
            raise DataError(
                f"unknown metric {metric!r}, expected one of {METRICS}"
            )

        points = [
            (record.epoch, record.metrics[metric])
            for record in self.records
            if metric in record.metrics
        ]
        if not points:
            raise DataError(f"the training log holds no {metric} value")

        return points

    def to_csv(self, path: str | Path) -> Path:
        """Write the log as CSV."""
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        with path.open(
            "w", newline="", encoding=settings.DEFAULT_ENCODING
        ) as file:
            writer = csv.writer(file)
            writer.writerow(COLUMNS)
            writer.writerows(record.as_row() for record in self.records)

        return path

    @classmethod
    def from_csv(cls, path: str | Path) -> "TrainingLog":
        """Read a log written by `to_csv`."""
        path = Path(path)
        try:
            file = path.open(
                "r", newline="", encoding=settings.DEFAULT_ENCODING
            )
        except OSError as err:
            raise DataError(f"cannot open {path}: {err}") from None

        log = cls()
        with file:
            reader = csv.reader(file)
            header = next(reader, None)
            if header is None or tuple(header[:2]) != COLUMNS[:2]:
                raise DataError(f"{path} is not a training log")

            for number, row in enumerate(reader, start=2):
                try:
                    epoch, loss = int(row[0]), float(row[1])
                    metrics = {
                        name: float(value)
                        for name, value in zip(METRICS, row[2:])
                        if value
                    }
                except (IndexError, ValueError):
                    raise DataError(f"{path}:{number}: bad row") from None

                log.add(epoch, loss, metrics)

        return log
