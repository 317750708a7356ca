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

"""Knowledge graph with in-coming and out-going triple indices.

Triples are stored as an (n, 3) int64 array.  The indices are kept in
compressed form: `out_order` lists triple positions sorted by head (the
sort is stable, so file order is kept among equal heads) and
`out_offsets[u]:out_offsets[u + 1]` is the slice of `out_order` holding
the out-going triples of `u`.  `in_order` and `in_offsets` do the same
with tails.

"""

from typing import Iterable, Sequence

import numpy as np

from data.triple import Triple
from data.vocabulary import Vocabularies
from tools.errors import DataError


class KnowledgeGraph:

    """Entity and relation vocabularies plus adjacency over triples.

    The vocabularies may hold entities that appear in no triple (they
    were seen in another split); such entities have empty indices.

    """

    def __init__(
        self,
        vocab: Vocabularies,
        triples: np.ndarray | Sequence[Triple] = (),
    ):
        self.vocab = vocab
        self.triples = np.asarray(triples, dtype=np.int64).reshape(-1, 3)
        _check_ranges(self)
        build_indices(self)

    def __repr__(self):
        return (
            f"<KnowledgeGraph |E|={self.num_entities} "
            f"|R|={self.num_relations} |T|={len(self)}>"
        )

    def __len__(self) -> int:
        return len(self.triples)

    @property
    def num_entities(self) -> int:
        return len(self.vocab.entities)

    @property
    def num_relations(self) -> int:
        return len(self.vocab.relations)

    @property
    def heads(self) -> np.ndarray:
        return self.triples[:, 0]

    @property
    def relations(self) -> np.ndarray:
        return self.triples[:, 1]

    @property
    def tails(self) -> np.ndarray:
        return self.triples[:, 2]

    def triple(self, position: int) -> Triple:
        """Return the triple at this position."""
        head, relation, tail = self.triples[position]
        return Triple(int(head), int(relation), int(tail))

    def out_index(self, entity: int) -> np.ndarray:
        """Return the positions of triples whose head is `entity`."""
        begin, end = self.out_offsets[entity], self.out_offsets[entity + 1]
        return self.out_order[begin:end]

    def in_index(self, entity: int) -> np.ndarray:
        """Return the positions of triples whose tail is `entity`."""
        begin, end = self.in_offsets[entity], self.in_offsets[entity + 1]
        return self.in_order[begin:end]

    def out_degrees(self) -> np.ndarray:
        return np.diff(self.out_offsets)

    def in_degrees(self) -> np.ndarray:
        return np.diff(self.in_offsets)

    def degree(self, entity: int) -> int:
        """Return the degree, self-loops counting twice."""
        return len(self.out_index(entity)) + len(self.in_index(entity))

    def neighbors(self, entity: int) -> set[int]:
        """Return the entities one triple away, in either direction."""
        found = set(self.tails[self.out_index(entity)].tolist())
        found.update(self.heads[self.in_index(entity)].tolist())
        return found

    def neighborhood(self, entity: int, distance: int) -> set[int]:
        """Return the entities at undirected distance `distance` or less."""
        seen = {entity}
        frontier = {entity}
        for _ in range(distance):
            frontier = {
                other for node in frontier for other in self.neighbors(node)
            } - seen
            if not frontier:
                break

            seen |= frontier

        return seen

    def known_keys(self) -> np.ndarray:
        """Return the sorted, deduplicated integer keys of the triples."""
        return encode_keys(self.triples, self.num_entities, self.num_relations)


def encode_keys(
    triples: np.ndarray, num_entities: int, num_relations: int
) -> np.ndarray:
    """Encode triples as unique sorted int64 keys.

    The key of (h, r, t) is `(h * |R| + r) * |E| + t`.

    """
    triples = np.asarray(triples, dtype=np.int64).reshape(-1, 3)
    keys = (triples[:, 0] * num_relations + triples[:, 1]) * num_entities
    keys += triples[:, 2]
    return np.unique(keys)


def contains_keys(known: np.ndarray, keys: np.ndarray) -> np.ndarray:
    """Return a boolean mask of the keys present in the sorted `known`."""
    keys = np.asarray(keys, dtype=np.int64)
    if len(known) == 0:
        return np.zeros(keys.shape, dtype=bool)

    positions = np.searchsorted(known, keys)
    positions = np.minimum(positions, len(known) - 1)
    return known[positions] == keys


def _check_ranges(graph: KnowledgeGraph) -> None:
    if len(graph.triples) == 0:
        return

    entities = graph.triples[:, [0, 2]]
    if entities.min() < 0 or entities.max() >= graph.num_entities:
        raise DataError("triple entity identifier out of range")

    relations = graph.triples[:, 1]
    if relations.min() < 0 or relations.max() >= graph.num_relations:
        raise DataError("triple relation identifier out of range")


def _compress(column: np.ndarray, size: int) -> tuple[np.ndarray, np.ndarray]:
    order = np.argsort(column, kind="stable")
    offsets = np.zeros(size + 1, dtype=np.int64)
    np.cumsum(np.bincount(column, minlength=size), out=offsets[1:])
    return order, offsets


def build_indices(graph: KnowledgeGraph) -> KnowledgeGraph:
    """Build the in-coming and out-going indices of a graph.

    After this call, `graph.out_index(u)` holds exactly the triples
    whose head is `u` and `graph.in_index(u)` those whose tail is `u`.
    Duplicate triples are kept as distinct entries.

    Args:
        graph (KnowledgeGraph): the graph, with triples and vocabularies.

    Returns:
        graph (KnowledgeGraph): the same graph, indexed.

    """
    size = graph.num_entities
    graph.out_order, graph.out_offsets = _compress(graph.heads, size)
    graph.in_order, graph.in_offsets = _compress(graph.tails, size)
    return graph


def triples_from(rows: Iterable[Sequence[int]]) -> np.ndarray:
    """Return an (n, 3) int64 array from any iterable of triples."""
    array = np.array([tuple(row) for row in rows], dtype=np.int64)
    return array.reshape(-1, 3)
