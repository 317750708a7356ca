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

"""The HIF matrix, its persistence and row cosines."""

import csv
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from data.vocabulary import Vocabularies
from hif.config import DpConfig
from hif.semiring import Semiring
from tools.binary import Kind, read_artifact, write_artifact
from tools.errors import DataError, ShapeError, UndefinedSimilarityError
from tools.settings import settings


@dataclass
class HifMatrix:

    """HIF-entity vectors, one row per entity and one column per relation.

    Args:
        data (array): the |E| x |R| matrix.
        iterations_used (int): the number of DP iterations applied.
        config (DpConfig, optional): the configuration it was built with.

    """

    data: np.ndarray
    iterations_used: int
    config: DpConfig | None = None

    def __post_init__(self):
        self.data = np.asarray(self.data, dtype=np.float64)
        if self.data.ndim != 2:
            raise ShapeError(
                f"a HIF matrix is 2-dimensional, got {self.data.ndim}"
            )

    def __len__(self) -> int:
        return self.data.shape[0]

    @property
    def num_entities(self) -> int:
        return self.data.shape[0]

    @property
    def dim(self) -> int:
        return self.data.shape[1]

    def row(self, entity: int) -> np.ndarray:
        return self.data[entity]

    def save(self, path: str | Path) -> Path:
        """Write the matrix with the binary artifact layout."""
        config = self.config or DpConfig.build()
        header = {
            "num_entities": self.num_entities,
            "dim": self.dim,
            "iterations": self.iterations_used,
            "alpha": config.alpha,
            "semiring": config.semiring.code,
            "identity_each_step": int(config.include_identity_each_step),
        }
        return write_artifact(path, Kind.HIF, header, [self.data])

    @classmethod
    def load(cls, path: str | Path) -> "HifMatrix":
        """Read a matrix written by `save`."""
        _, header, matrices = read_artifact(path, Kind.HIF)
        (data,) = matrices
        if data.shape != (header["num_entities"], header["dim"]):
            raise DataError(f"{path}: header and matrix shapes disagree")

        config = DpConfig.build(
            iterations=header["iterations"],
            alpha=header["alpha"],
            semiring=Semiring.from_code(header["semiring"]),
            include_identity_each_step=bool(header["identity_each_step"]),
        )
        return cls(data, header["iterations"], config)

    def to_csv(
        self, path: str | Path, vocab: Vocabularies | None = None
    ) -> Path:
        """Export the matrix as CSV, one named row per entity.

        Args:
            path (str or Path): the file to write.
            vocab (Vocabularies, optional): names for rows and columns,
                    identifiers are used if not set.

        """
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        if vocab is None:
            rows = [str(index) for index in range(self.num_entities)]
            columns = [str(index) for index in range(self.dim)]
        else:
            rows = list(vocab.entities)
            columns = list(vocab.relations)

        with path.open(
            "w", newline="", encoding=settings.DEFAULT_ENCODING
        ) as file:
            writer = csv.writer(file)
            writer.writerow(["entity", *columns])
            for name, values in zip(rows, self.data.tolist()):
                writer.writerow([name, *(repr(value) for value in values)])

        return path


def cosine(left: np.ndarray, right: np.ndarray) -> float:
    """Return the cosine of two non-zero vectors, clipped to [-1, 1].

    Raises:
        UndefinedSimilarityError: one of the vectors is zero.

    """
    norms = np.linalg.norm(left) * np.linalg.norm(right)
    if norms == 0:
        raise UndefinedSimilarityError("cosine of a zero vector")

    return float(np.clip(np.dot(left, right) / norms, -1.0, 1.0))


def hif_cosine(matrix: HifMatrix, u: int, v: int) -> float:
    """Return the cosine between the HIF rows of two entities.

    Raises:
        UndefinedSimilarityError: one of the rows is the zero vector.

    """
    left, right = matrix.row(u), matrix.row(v)
    if not left.any() or not right.any():
        zero = u if not left.any() else v
        raise UndefinedSimilarityError(
            f"the HIF row of entity {zero} is the zero vector"
        )

    if u == v:
        return 1.0

    return cosine(left, right)
