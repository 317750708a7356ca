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

"""The HIF-entity dynamic program.

The first iteration gives every entity its identity vector e(u), the
signed count of its out-going minus in-coming triples per relation.
Each further iteration aggregates the previous vectors of the
neighbours, weighted by the triple weights v(p), separately over the
out-going and the in-coming triples of every entity, then merges both
sides (see `hif.semiring`).

Rows of an iteration only read the previous matrix, so the entities
are split in contiguous chunks handled by a worker pool.  Each row is
computed the same way whatever the chunking, so the result doesn't
depend on the number of workers.

"""

from time import perf_counter

import numpy as np

from data.graph import KnowledgeGraph
from hif.config import DpConfig
from hif.log import logger
from hif.matrix import HifMatrix
from tools.errors import ConfigError, ShapeError
from tools.workers import map_chunks


def entity_identity(graph: KnowledgeGraph, u: int) -> np.ndarray:
    """Return the identity vector of an entity.

    Dimension r holds the number of out-going triples of `u` with
    relation r, minus the number of in-coming ones.

    """
    size = graph.num_relations
    out = np.bincount(graph.relations[graph.out_index(u)], minlength=size)
    into = np.bincount(graph.relations[graph.in_index(u)], minlength=size)
    return (out - into).astype(np.float64)


def identity_matrix(graph: KnowledgeGraph) -> np.ndarray:
    """Return the identity vectors of all entities as an |E| x |R| matrix."""
    shape = (graph.num_entities, graph.num_relations)
    identity = np.zeros(shape, dtype=np.float64)
    np.add.at(identity, (graph.heads, graph.relations), 1.0)
    np.add.at(identity, (graph.tails, graph.relations), -1.0)
    return identity


def triple_weights(
    graph: KnowledgeGraph,
    config: DpConfig,
    weights: np.ndarray | None = None,
) -> np.ndarray:
    """Return the weight of every triple, broadcastable to |T| x |R|.

    Args:
        graph (KnowledgeGraph): the graph.
        config (DpConfig): the configuration, for the constant alpha.
        weights (array, optional): per-triple vector weights, |T| x |R|.

    Returns:
        weights (array): a |T| x 1 column of alpha, or the given weights.

    """
    if weights is None:
        return np.full((len(graph), 1), config.alpha, dtype=np.float64)

    weights = np.asarray(weights, dtype=np.float64)
    if weights.shape != (len(graph), graph.num_relations):
        raise ShapeError(
            f"triple weights must be {len(graph)} x {graph.num_relations}, "
            f"got {weights.shape}"
        )

    return weights


def _aggregate_side(
    terms: np.ndarray,
    offsets: np.ndarray,
    identity: np.ndarray,
    config: DpConfig,
) -> np.ndarray:
    """Aggregate sorted terms per owning entity.

    `terms` holds the terms of the entities `offsets` covers, grouped
    by entity, and `offsets` is relative to `terms`.

    """
    semiring = config.semiring
    counts = np.diff(offsets)
    nonempty = counts > 0
    if config.include_identity_each_step or semiring.seeds_empty_with_identity:
        result = identity.copy()
    else:
        result = np.zeros_like(identity)

    if not nonempty.any():
        return result

    starts = offsets[:-1][nonempty]
    reduced = semiring.aggregate.reduceat(terms, starts, axis=0)
    if config.include_identity_each_step:
        result[nonempty] = semiring.plus(identity[nonempty], reduced)
    else:
        result[nonempty] = reduced

    return result


def _step_rows(
    graph: KnowledgeGraph,
    prev: np.ndarray,
    identity: np.ndarray,
    weights: np.ndarray,
    config: DpConfig,
    begin: int,
    end: int,
) -> np.ndarray:
    """Compute the rows `begin:end` of the next iteration."""
    sides = []
    for order, offsets, neighbours in (
        (graph.out_order, graph.out_offsets, graph.tails),
        (graph.in_order, graph.in_offsets, graph.heads),
    ):
        first, last = offsets[begin], offsets[end]
        positions = order[first:last]
        terms = weights[positions] * prev[neighbours[positions]]
        local = offsets[begin : end + 1] - first
        sides.append(
            _aggregate_side(terms, local, identity[begin:end], config)
        )

    outgoing, incoming = sides
    return config.semiring.merge(incoming, outgoing)


def dp_step(
    graph: KnowledgeGraph,
    prev: HifMatrix | np.ndarray,
    config: DpConfig,
    identity: np.ndarray | None = None,
    weights: np.ndarray | None = None,
    jobs: int | None = None,
) -> HifMatrix:
    """Apply one DP iteration.

    Args:
        graph (KnowledgeGraph): the indexed graph.
        prev (HifMatrix or array): the previous iteration, read only.
        config (DpConfig): the DP configuration.
        identity (array, optional): the identity matrix, computed if
                not given.
        weights (array, optional): per-triple vector weights, alpha
                is used if not set.
        jobs (int, optional): the number of workers.

    Returns:
        matrix (HifMatrix): the next iteration.

    """
    iterations = getattr(prev, "iterations_used", 0)
    prev = prev.data if isinstance(prev, HifMatrix) else np.asarray(prev)
    expected = (graph.num_entities, graph.num_relations)
    if prev.shape != expected:
        raise ShapeError(
            f"previous matrix is {prev.shape}, the graph needs {expected}"
        )

    if identity is None:
        identity = identity_matrix(graph)

    weights = triple_weights(graph, config, weights)
    blocks = map_chunks(
        lambda begin, end: _step_rows(
            graph, prev, identity, weights, config, begin, end
        ),
        graph.num_entities,
        jobs,
    )
    if blocks:
        data = np.concatenate(blocks)
    else:
        data = np.zeros(expected, dtype=np.float64)

    return HifMatrix(data, iterations + 1, config)


def build_hif_entity(
    graph: KnowledgeGraph,
    config: DpConfig,
    weights: np.ndarray | None = None,
    jobs: int | None = None,
) -> HifMatrix:
    """Build the HIF-entity matrix of a graph.

    The graph should be built from the training split only.

    Args:
        graph (KnowledgeGraph): the indexed graph.
        config (DpConfig): the DP configuration.
        weights (array, optional): per-triple vector weights.
        jobs (int, optional): the number of workers.

    Returns:
        matrix (HifMatrix): the rows after `config.iterations` steps.

    Raises:
        ConfigError: the number of iterations is below 1.

    """
    if config.iterations < 1:
        raise ConfigError(f"iterations must be >= 1, got {config.iterations}")

    identity = identity_matrix(graph)
    matrix = HifMatrix(identity, 1, config)
    for _ in range(2, config.iterations + 1):
        begin = perf_counter()
        matrix = dp_step(graph, matrix, config, identity, weights, jobs)
        logger.debug(
            "DP iteration done",
            iteration=matrix.iterations_used,
            seconds=round(perf_counter() - begin, 3),
        )

    if not np.isfinite(matrix.data).all():
        logger.warning("non-finite values in the HIF matrix")

    logger.info(
        "HIF-entity matrix built",
        entities=matrix.num_entities,
        dim=matrix.dim,
        iterations=matrix.iterations_used,
        semiring=config.semiring.value,
    )
    return matrix
