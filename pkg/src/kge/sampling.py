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

"""Filtered uniform negative sampling.

A negative is a training triple whose head or tail (chosen by a fair
coin) is replaced by an entity drawn uniformly.  Draws forming a known
training triple are redrawn on the same side, up to `MAX_ATTEMPTS`
times; past that the last draw is kept and counted as exhausted.

"""

import numpy as np

from data.graph import KnowledgeGraph, contains_keys
from data.triple import Triple
from kge.log import logger
from tools.errors import ConfigError

MAX_ATTEMPTS = 100


class NegativeSampler:

    """Corrupt batches of triples against a set of known triples.

    Args:
        known (array): the sorted keys of known triples (see
                `data.graph.encode_keys`).
        num_entities (int): the number of entities.
        num_relations (int): the number of relations.
        rng (Generator): the random stream.

    """

    def __init__(
        self,
        known: np.ndarray,
        num_entities: int,
        num_relations: int,
        rng: np.random.Generator,
    ):
        if num_entities < 2:
            raise ConfigError("negative sampling needs 2 entities or more")

        self.known = known
        self.num_entities = num_entities
        self.num_relations = num_relations
        self.rng = rng
        self.exhausted = 0
        self.heads_corrupted = 0
        self.tails_corrupted = 0

    @classmethod
    def for_graph(
        cls, graph: KnowledgeGraph, rng: np.random.Generator
    ) -> "NegativeSampler":
        return cls(
            graph.known_keys(), graph.num_entities, graph.num_relations, rng
        )

    def keys(self, triples: np.ndarray) -> np.ndarray:
        triples = np.asarray(triples, dtype=np.int64)
        return (
            triples[:, 0] * self.num_relations + triples[:, 1]
        ) * self.num_entities + triples[:, 2]

    def corrupt(self, triples: np.ndarray) -> np.ndarray:
        """Return one corruption of every triple of a batch."""
        triples = np.asarray(triples, dtype=np.int64).reshape(-1, 3)
        size = len(triples)
        columns = np.where(self.rng.random(size) < 0.5, 0, 2)
        corrupted = triples.copy()
        rows = np.arange(size)
        corrupted[rows, columns] = self.rng.integers(
            0, self.num_entities, size
        )
        pending = np.flatnonzero(
            contains_keys(self.known, self.keys(corrupted))
        )
        attempts = 1
        while pending.size and attempts < MAX_ATTEMPTS:
            corrupted[pending, columns[pending]] = self.rng.integers(
                0, self.num_entities, pending.size
            )
            found = contains_keys(self.known, self.keys(corrupted[pending]))
            pending = pending[found]
            attempts += 1

        heads = int((columns == 0).sum())
        self.heads_corrupted += heads
        self.tails_corrupted += size - heads
        if pending.size:
            self.exhausted += pending.size
            logger.warning(
                "no unknown corruption found",
                triples=int(pending.size),
                attempts=MAX_ATTEMPTS,
            )

        return corrupted


def negative_sample(
    triple: Triple,
    graph: KnowledgeGraph,
    rng: np.random.Generator,
    sampler: NegativeSampler | None = None,
) -> Triple:
    """Return one filtered corruption of a triple.

    Args:
        triple (Triple): the triple to corrupt.
        graph (KnowledgeGraph): the training graph.
        rng (Generator): the random stream.
        sampler (NegativeSampler, optional): a sampler to reuse, so
                that the known keys aren't rebuilt for every call.

    """
    if sampler is None:
        sampler = NegativeSampler.for_graph(graph, rng)

    head, relation, tail = sampler.corrupt(np.array([triple]))[0].tolist()
    return Triple(head, relation, tail)
