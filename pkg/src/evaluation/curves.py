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

"""Convergence curves extracted from training logs."""

import csv
from dataclasses import dataclass
from pathlib import Path

from kge.history import TrainingLog
from tools.errors import ConfigError, DataError
from tools.settings import settings


@dataclass
class Curve:

    """The (epoch, value) points of one validation metric.

    Attributes:
        metric: the metric name, like "H@10" or "MR".
        points: the points, in epoch order.
        converged_at: the first epoch from which every later value
                stays within the tolerance of the final one.

    """

    metric: str
    points: list[tuple[int, float]]
    converged_at: int

    @property
    def final(self) -> float:
        return self.points[-1][1]


def epochs_to_within(
    points: list[tuple[int, float]], tolerance: float | None = None
) -> int:
    """Return the epoch from which a curve stays close to its end.

    A point is close when it differs from the final value by at most
    `tolerance` times the total change of the curve (final minus
    first value).  A constant curve converges at its first epoch.

    Args:
        points (list): (epoch, value) points in epoch order.
        tolerance (float, optional): the relative tolerance, the
                `convergence_tolerance` setting if not set.

    """
    if not points:
        raise DataError("an empty curve has no convergence point")

    if tolerance is None:
        tolerance = settings.CONVERGENCE_TOLERANCE

    final = points[-1][1]
    band = tolerance * abs(final - points[0][1])
    converged = points[-1][0]
    for epoch, value in reversed(points):
        if abs(value - final) > band:
            break

        converged = epoch

    return converged


def convergence_curves(
    log: TrainingLog,
    metric: str,
    every: int | None = None,
    tolerance: float | None = None,
) -> Curve:
    """Extract the curve of a validation metric from a training log.

    Args:
        log (TrainingLog): the log.
        metric (str): one of "MR", "MRR", "H@1", "H@3", "H@10".
        every (int, optional): keep only epochs multiple of `every`.
        tolerance (float, optional): see `epochs_to_within`.

    Raises:
        DataError: the log holds no value of this metric.

    """
    points = log.series(metric)
    if every is not None:
        if every < 1:
            raise ConfigError(f"every must be >= 1, got {every}")

        points = [point for point in points if point[0] % every == 0]
        if not points:
            raise DataError(f"no {metric} value at a multiple of {every}")

    return Curve(metric, points, epochs_to_within(points, tolerance))


def write_curves_csv(path: str | Path, curves: dict[str, Curve]) -> Path:
    """Write labelled curves as `label,metric,epoch,value` rows."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open(
        "w", newline="", encoding=settings.DEFAULT_ENCODING
    ) as file:
        writer = csv.writer(file)
        writer.writerow(["label", "metric", "epoch", "value"])
        for label, curve in curves.items():
            for epoch, value in curve.points:
                writer.writerow([label, curve.metric, epoch, repr(value)])

    return path
