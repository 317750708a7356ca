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

"""The filtered link prediction protocol.

For every test triple (h, r, t), every entity is tried in place of the
tail, then of the head.  Candidates forming a triple known in any
split are discarded, except the test triple itself, and the rank of
the true entity is one plus the number of remaining candidates scoring
as well or better.  Ties count against the true entity.

"""

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from data.dataset import Dataset
from data.graph import encode_keys
from data.triple import Triple
from evaluation.log import logger
from kge.embedding import EmbeddingSet
from kge.models.base import TranslationalModel
from tools.errors import ConfigError, DataError
from tools.settings import settings
from tools.workers import map_chunks


class FilterIndex:

    """The deduplicated set of known triples, searchable by side.

    Args:
        triples (array): known triples (n x 3), duplicates allowed.
        num_entities (int): the number of entities.
        num_relations (int): the number of relations.

    """

    def __init__(
        self, triples: np.ndarray, num_entities: int, num_relations: int
    ):
        triples = np.asarray(triples, dtype=np.int64).reshape(-1, 3)
        self.num_entities = num_entities
        self.num_relations = num_relations
        self.tail_keys = encode_keys(triples, num_entities, num_relations)
        self.head_keys = encode_keys(
            triples[:, ::-1], num_entities, num_relations
        )

    def __len__(self) -> int:
        return len(self.tail_keys)

    @classmethod
    def from_dataset(cls, dataset: Dataset) -> "FilterIndex":
        """Build the index of the union of the three splits."""
        return cls(
            dataset.all_triples(), dataset.num_entities, dataset.num_relations
        )

    def __contains__(self, triple: Sequence[int]) -> bool:
        head, relation, tail = triple
        key = (head * self.num_relations + relation) * self.num_entities
        key += tail
        position = np.searchsorted(self.tail_keys, key)
        return bool(
            position < len(self.tail_keys)
            and self.tail_keys[position] == key
        )

    def known(self, h: int, r: int, t: int, side: str) -> np.ndarray:
        """Return the entities forming a known triple on one side.

        With `side` "tail", these are the entities e such that
        (h, r, e) is known; with "head", those such that (e, r, t) is.

        """
        match side:
            case "tail":
                keys, anchor = self.tail_keys, h
            case "head":
                keys, anchor = self.head_keys, t
            case _:
                raise ConfigError(f"side must be head or tail, got {side!r}")

        base = (anchor * self.num_relations + r) * self.num_entities
        begin, end = np.searchsorted(keys, [base, base + self.num_entities])
        return keys[begin:end] - base


def filtered_rank(
    embeddings: EmbeddingSet,
    model: TranslationalModel,
    triple: Sequence[int],
    side: str,
    filter_index: FilterIndex | None,
) -> int:
    """Return the filtered rank of the true entity on one side.

    Args:
        embeddings (EmbeddingSet): the trained parameters.
        model (TranslationalModel): the model.
        triple (Triple): the test triple.
        side (str): "head" or "tail", the side to predict.
        filter_index (FilterIndex, optional): the known triples, no
                filtering is applied if `None`.

    Returns:
        rank (int): the rank, 1 being the best.

    """
    h, r, t = (int(value) for value in triple)
    scores = model.score_candidates(embeddings, h, r, t, side)
    target = t if side == "tail" else h
    keep = np.ones(len(scores), dtype=bool)
    if filter_index is not None:
        keep[filter_index.known(h, r, t, side)] = False
    keep[target] = False
    return 1 + int(np.count_nonzero(scores[keep] <= scores[target]))


@dataclass
class RankingReport:

    """Link prediction metrics over a set of ranks.

    Attributes:
        mr: the mean rank.
        mrr: the mean reciprocal rank.
        hits: the fraction of ranks at most k, by k.
        count: the number of ranks.
        per_triple_ranks: (triple, head rank, tail rank) tuples, when
                kept by `evaluate`.

    """

    mr: float
    mrr: float
    hits: dict[int, float]
    count: int
    per_triple_ranks: list[tuple[Triple, int, int]] | None = field(
        default=None, repr=False
    )

    @classmethod
    def from_ranks(
        cls,
        ranks: Iterable[int],
        hits_at: Sequence[int] | None = None,
        per_triple_ranks: list[tuple[Triple, int, int]] | None = None,
    ) -> "RankingReport":
        """Compute the metrics of a sequence of ranks."""
        ranks = np.asarray(list(ranks), dtype=np.float64)
        if ranks.size == 0:
            raise DataError("no rank to report on")

        if hits_at is None:
            hits_at = settings.HITS_AT

        return cls(
            mr=float(ranks.mean()),
            mrr=float((1.0 / ranks).mean()),
            hits={int(k): float((ranks <= k).mean()) for k in hits_at},
            count=int(ranks.size),
            per_triple_ranks=per_triple_ranks,
        )

    def all_ranks(self) -> np.ndarray:
        """Return the head and tail ranks kept, interleaved per triple."""
        if self.per_triple_ranks is None:
            raise DataError("this report kept no rank")

        return np.array(
            [
                rank
                for _, head, tail in self.per_triple_ranks
                for rank in (head, tail)
            ],
            dtype=np.float64,
        )

    def as_dict(self) -> dict[str, float]:
        """Return the metrics as a flat dictionary."""
        values = {"MR": self.mr, "MRR": self.mrr}
        values.update({f"H@{k}": value for k, value in self.hits.items()})
        return values


def _rank_chunk(embeddings, model, triples, filter_index, begin, end):
    heads = np.empty(end - begin, dtype=np.int64)
    tails = np.empty(end - begin, dtype=np.int64)
    for index, triple in enumerate(triples[begin:end]):
        heads[index] = filtered_rank(
            embeddings, model, triple, "head", filter_index
        )
        tails[index] = filtered_rank(
            embeddings, model, triple, "tail", filter_index
        )

    return heads, tails


def rank_triples(
    embeddings: EmbeddingSet,
    model: TranslationalModel,
    triples: np.ndarray,
    filter_index: FilterIndex | None,
    jobs: int | None = None,
) -> tuple[np.ndarray, np.ndarray]:
    """Return the head and tail ranks of every triple, in order."""
    triples = np.asarray(triples, dtype=np.int64).reshape(-1, 3)
    chunks = map_chunks(
        lambda begin, end: _rank_chunk(
            embeddings, model, triples, filter_index, begin, end
        ),
        len(triples),
        jobs,
    )
    heads = np.concatenate([chunk[0] for chunk in chunks])
    tails = np.concatenate([chunk[1] for chunk in chunks])
    return heads, tails


def evaluate(
    embeddings: EmbeddingSet,
    model: TranslationalModel,
    test: np.ndarray,
    filter_index: FilterIndex | None,
    jobs: int | None = None,
    hits_at: Sequence[int] | None = None,
    keep_ranks: bool = True,
) -> RankingReport:
    """Evaluate link prediction on test triples, both sides averaged.

    Args:
        embeddings (EmbeddingSet): the trained parameters.
        model (TranslationalModel): the model.
        test (array): the test triples.
        filter_index (FilterIndex, optional): the known triples.
        jobs (int, optional): the number of workers.
        hits_at (sequence of int, optional): the k of H@k.
        keep_ranks (bool): whether to keep ranks per triple.

    Returns:
        report (RankingReport): the metrics over 2 x |test| ranks.

    Raises:
        DataError: there is no test triple.

    """
    test = np.asarray(test, dtype=np.int64).reshape(-1, 3)
    if len(test) == 0:
        raise DataError("no triple to evaluate")

    heads, tails = rank_triples(embeddings, model, test, filter_index, jobs)
    per_triple = None
    if keep_ranks:
        per_triple = [
            (Triple(*triple), int(head), int(tail))
            for triple, head, tail in zip(
                test.tolist(), heads.tolist(), tails.tolist()
            )
        ]

    ranks = np.stack([heads, tails], axis=1).ravel()
    report = RankingReport.from_ranks(ranks, hits_at, per_triple)
    logger.debug(
        "evaluated",
        triples=len(test),
        mr=round(report.mr, 3),
        mrr=round(report.mrr, 4),
    )
    return report

