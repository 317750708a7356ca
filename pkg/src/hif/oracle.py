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

"""Naive evaluation of the HIF recurrence, for testing.

Nothing here uses the compressed indices of `KnowledgeGraph`: the
adjacency lists are rebuilt by scanning the triples, and the recurrence
is evaluated by direct recursion without memoization.  The cost is
exponential in the number of iterations, so both entry points refuse
to run when the number of walks to visit exceeds `MAX_WALKS`.

"""

from typing import Iterator, NamedTuple

import numpy as np

from data.graph import KnowledgeGraph
from data.triple import Triple
from hif.config import DpConfig
from hif.dp import triple_weights
from hif.semiring import Semiring
from tools.errors import ConfigError, OracleScaleError

MAX_WALKS = 10**6


class PathFeature(NamedTuple):

    """The contribution of one walk to a sum-product HIF vector.

    Attributes:
        value: the product of the triple weights along the walk, times
                the identity vector of the entity the walk ends on.
        path: the triples followed, in order from the start entity.
        sides: for every triple, "out" when it was followed from head
                to tail, "in" when followed from tail to head.
        seed: "base" when the walk used up every iteration, otherwise
                the side ("in" or "out") whose re-injected identity
                the walk ends on.

    """

    value: np.ndarray
    path: tuple[Triple, ...]
    sides: tuple[str, ...]
    seed: str


class _Adjacency:

    """Adjacency lists rebuilt from the triple list."""

    def __init__(
        self,
        graph: KnowledgeGraph,
        config: DpConfig,
        weights: np.ndarray | None = None,
    ):
        self.config = config
        self.dim = graph.num_relations
        self.outgoing = [[] for _ in range(graph.num_entities)]
        self.incoming = [[] for _ in range(graph.num_entities)]
        self.triples = [Triple(*row) for row in graph.triples.tolist()]
        for position, triple in enumerate(self.triples):
            self.outgoing[triple.head].append((position, triple.tail))
            self.incoming[triple.tail].append((position, triple.head))

        weights = triple_weights(graph, config, weights)
        self.weights = [
            np.broadcast_to(row, (self.dim,)).astype(np.float64)
            for row in weights
        ]

    def identity(self, entity: int) -> np.ndarray:
        vector = np.zeros(self.dim, dtype=np.float64)
        for position, _ in self.outgoing[entity]:
            vector[self.triples[position].relation] += 1.0
        for position, _ in self.incoming[entity]:
            vector[self.triples[position].relation] -= 1.0
        return vector


def count_walks(graph: KnowledgeGraph, u: int, t: int) -> int:
    """Return the number of walks of length below `t` starting at `u`.

    Triples can be followed in both directions.  This is the number of
    calls the naive recursion makes.

    """
    size = graph.num_entities
    heads, tails = graph.heads, graph.tails
    counts = np.zeros(size, dtype=np.float64)
    counts[u] = 1.0
    total = 1.0
    for _ in range(t - 1):
        forward = np.bincount(tails, weights=counts[heads], minlength=size)
        backward = np.bincount(heads, weights=counts[tails], minlength=size)
        counts = forward + backward
        total += counts.sum()
        if total > MAX_WALKS:
            break

    return int(total)


def _check_scale(graph: KnowledgeGraph, u: int, t: int) -> None:
    if (walks := count_walks(graph, u, t)) > MAX_WALKS:
        raise OracleScaleError(
            f"entity {u} at t={t} needs {walks} walks, "
            f"the limit is {MAX_WALKS}"
        )


def _recurse(adjacency: _Adjacency, u: int, t: int) -> np.ndarray:
    identity = adjacency.identity(u)
    if t == 1:
        return identity

    config = adjacency.config
    semiring = config.semiring

    def side(links):
        terms = [
            adjacency.weights[position] * _recurse(adjacency, other, t - 1)
            for position, other in links
        ]
        if config.include_identity_each_step:
            total = identity
        elif terms:
            total, terms = terms[0], terms[1:]
        elif semiring.seeds_empty_with_identity:
            return identity
        else:
            return np.zeros_like(identity)

        for term in terms:
            total = semiring.plus(total, term)

        return total

    incoming = side(adjacency.incoming[u])
    outgoing = side(adjacency.outgoing[u])
    return semiring.merge(incoming, outgoing)


def reference_recursion(
    graph: KnowledgeGraph,
    u: int,
    t: int,
    config: DpConfig,
    weights: np.ndarray | None = None,
) -> np.ndarray:
    """Evaluate the HIF vector of `u` at iteration `t` by recursion.

    Args:
        graph (KnowledgeGraph): a tiny graph.
        u (int): the entity.
        t (int): the iteration, at least 1.
        config (DpConfig): the DP configuration.
        weights (array, optional): per-triple vector weights.

    Returns:
        vector (array): the |R| vector.

    Raises:
        OracleScaleError: the recursion would visit too many walks.

    """
    if t < 1:
        raise ConfigError(f"t must be >= 1, got {t}")

    _check_scale(graph, u, t)
    return _recurse(_Adjacency(graph, config, weights), u, t)


def enumerate_paths(
    graph: KnowledgeGraph,
    u: int,
    t: int,
    config: DpConfig,
    weights: np.ndarray | None = None,
) -> Iterator[PathFeature]:
    """Yield the path features whose sum is the sum-product HIF vector.

    A walk of length k < t from `u` ends on entity n with the
    remaining iteration count s = t - k.  When s is 1 the walk
    contributes its weight product times e(n) once.  When s is larger,
    it contributes the same value once per side if the identity is
    re-injected at every step, not at all otherwise.

    Raises:
        ConfigError: the semiring isn't sum-product.
        OracleScaleError: there are too many walks.

    """
    if config.semiring is not Semiring.SUM_PRODUCT:
        raise ConfigError("path features only add up under sum-product")

    if t < 1:
        raise ConfigError(f"t must be >= 1, got {t}")

    _check_scale(graph, u, t)
    adjacency = _Adjacency(graph, config, weights)
    ones = np.ones(adjacency.dim, dtype=np.float64)
    stack = [(u, ones, (), ())]
    while stack:
        entity, product, path, sides = stack.pop()
        remaining = t - len(path)
        value = product * adjacency.identity(entity)
        if remaining == 1:
            yield PathFeature(value, path, sides, "base")
            continue

        if config.include_identity_each_step:
            for seed in ("in", "out"):
                yield PathFeature(value, path, sides, seed)

        for links, direction in (
            (adjacency.outgoing[entity], "out"),
            (adjacency.incoming[entity], "in"),
        ):
            for position, other in links:
                stack.append(
                    (
                        other,
                        product * adjacency.weights[position],
                        path + (adjacency.triples[position],),
                        sides + (direction,),
                    )
                )


def aggregate_paths(
    graph: KnowledgeGraph,
    u: int,
    t: int,
    config: DpConfig,
    weights: np.ndarray | None = None,
) -> np.ndarray:
    """Return the sum of the path features of `u` at iteration `t`."""
    total = np.zeros(graph.num_relations, dtype=np.float64)
    for feature in enumerate_paths(graph, u, t, config, weights):
        total += feature.value

    return total
