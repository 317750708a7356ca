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

"""Cosine similarity between groups of entities.

Groups come from a two-column file, `group<TAB>entity` per line.
The report holds the cosine matrix over every named entity, ordered
by group, plus the mean within each group and across groups.

"""

import csv
from dataclasses import dataclass
from itertools import combinations
from pathlib import Path

import numpy as np

from data.vocabulary import Vocabularies
from evaluation.log import logger
from hif.matrix import HifMatrix
from tools.errors import (
    DataError,
    LookupFailure,
    ParseError,
    UndefinedSimilarityError,
    UsageError,
)
from tools.settings import settings


def load_groups(path: str | Path) -> dict[str, list[str]]:
    """Read entity groups from a two-column TSV file.

    Groups keep the order they first appear in, entities too.  An
    entity listed twice in a group is kept once, with a warning.

    Raises:
        UsageError: the file holds no group.
        ParseError: a line doesn't hold two fields.

    """
    path = Path(path)
    try:
        content = path.read_text(encoding=settings.DEFAULT_ENCODING)
    except OSError as err:
        raise DataError(f"cannot open {path}: {err}") from None

    groups: dict[str, list[str]] = {}
    for number, line in enumerate(content.splitlines(), start=1):
        if not line.strip():
            continue

        fields = line.split("\t")
        if len(fields) != 2 or not all(fields):
            raise ParseError(
                "expected a group and an entity", number, str(path)
            )

        group, entity = fields
        members = groups.setdefault(group, [])
        if entity in members:
            logger.warning("duplicate entity", group=group, entity=entity)
            continue

        members.append(entity)

    if not groups:
        raise UsageError(f"{path} holds no group")

    return groups


@dataclass
class SimilarityReport:

    """Pairwise cosines over groups of entities.

    Attributes:
        groups: entity names by group.
        names: the entities of the matrix, in order.
        matrix: the symmetric cosine matrix.
        within_group_means: the mean cosine between distinct entities
                of a group (1.0 for a single entity).
        cross_group_mean: the mean cosine between entities of
                different groups, `None` with a single group.

    """

    groups: dict[str, list[str]]
    names: list[str]
    matrix: np.ndarray
    within_group_means: dict[str, float]
    cross_group_mean: float | None

    def to_csv(self, path: str | Path) -> Path:
        """Write the matrix as CSV, named rows and columns."""
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        with path.open(
            "w", newline="", encoding=settings.DEFAULT_ENCODING
        ) as file:
            writer = csv.writer(file)
            writer.writerow(["entity", *self.names])
            for name, row in zip(self.names, self.matrix.tolist()):
                writer.writerow([name, *(f"{value:.6f}" for value in row)])

        return path

    def summary_lines(self) -> list[str]:
        """Return the means as text lines."""
        lines = [
            f"within {group} ({len(self.groups[group])} entities): "
            f"{mean:.4f}"
            for group, mean in self.within_group_means.items()
        ]
        if self.cross_group_mean is not None:
            lines.append(f"across groups: {self.cross_group_mean:.4f}")

        return lines


def similarity_report(
    hif: HifMatrix | np.ndarray,
    groups: dict[str, list[str]],
    vocab: Vocabularies,
) -> SimilarityReport:
    """Compute the cosine matrix and group means of named entities.

    Args:
        hif (HifMatrix or array): one vector per entity.
        groups (dict): entity names by group name.
        vocab (Vocabularies): the vocabularies to resolve names.

    Raises:
        LookupFailure: names absent from the vocabulary.
        UndefinedSimilarityError: an entity has a zero vector.

    """
    data = np.asarray(getattr(hif, "data", hif), dtype=np.float64)
    names = list(
        dict.fromkeys(name for group in groups.values() for name in group)
    )
    if missing := [name for name in names if name not in vocab.entities]:
        raise LookupFailure("unknown entities", missing)

    rows = data[[vocab.entities[name] for name in names]]
    norms = np.linalg.norm(rows, axis=1)
    if zeros := [name for name, norm in zip(names, norms) if norm == 0]:
        raise UndefinedSimilarityError(
            "zero vector for " + ", ".join(repr(name) for name in zeros)
        )

    unit = rows / norms[:, None]
    matrix = np.clip(unit @ unit.T, -1.0, 1.0)
    matrix = (matrix + matrix.T) / 2
    np.fill_diagonal(matrix, 1.0)
    position = {name: index for index, name in enumerate(names)}

    within = {}
    for group, members in groups.items():
        indices = [position[name] for name in members]
        pairs = list(combinations(indices, 2))
        if pairs:
            within[group] = float(np.mean([matrix[i, j] for i, j in pairs]))
        else:
            within[group] = 1.0

    cross = []
    for first, second in combinations(groups.values(), 2):
        cross.extend(
            matrix[position[left], position[right]]
            for left in first
            for right in second
        )

    cross_mean = float(np.mean(cross)) if cross else None
    logger.debug("similarity report", entities=len(names), groups=len(groups))
    return SimilarityReport(groups, names, matrix, within, cross_mean)
