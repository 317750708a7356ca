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

"""Base class of translational models.

A translational model projects the head and tail embeddings with a
relation-specific map f_r, then measures the distance

    score(h, r, t) = || f_r(h) + r - f_r(t) ||_p

so that lower scores mean more plausible triples.  Scores are torch
expressions of the parameters, so training gets its gradients from
autograd.  Subclasses only define the projection; the distance, batch
and candidate scoring live here.

Models are registered by name when their class is created, see
`ModelMetaclass`.

"""

from typing import Any, ClassVar

import numpy as np
import torch

from kge.embedding import EmbeddingSet, Parameters, clip_to_unit_ball
from tools.errors import ConfigError, ShapeError

SIDES = ("head", "tail")


class ModelMetaclass(type):

    """Metaclass registering every model having a name."""

    models: ClassVar[dict[str, type]] = {}

    def __new__(
        cls, name: str, bases: tuple[type], attrs: dict[str, Any]
    ) -> type:
        new_cls = super().__new__(cls, name, bases, attrs)
        if model_name := attrs.get("name"):
            cls.models[model_name] = new_cls

        return new_cls


class TranslationalModel(metaclass=ModelMetaclass):

    """Abstract translational model.

    Class attributes:
        name (str): the model name, as used in configurations.
        code (int): the tag stored in checkpoint headers.
        same_dimensions (bool): whether d_r must equal d_e.

    """

    name: ClassVar[str] = ""
    code: ClassVar[int] = 0
    same_dimensions: ClassVar[bool] = True

    def __init__(self, norm_p: int = 1):
        if norm_p not in (1, 2):
            raise ConfigError(f"norm_p must be 1 or 2, got {norm_p}")

        self.norm_p = norm_p

    def __repr__(self):
        return f"<{self.name} L{self.norm_p}>"

    # Parameters

    def init_embeddings(
        self,
        num_entities: int,
        num_relations: int,
        dim_entity: int,
        dim_relation: int,
        rng: np.random.Generator,
        relation_init: str = "random",
    ) -> EmbeddingSet:
        """Draw initial parameters.

        Entity and relation rows are uniform in +/- 6 / sqrt(d), relation
        rows are then scaled to unit norm and entity rows clipped to the
        unit ball.  With `relation_init` set to "zeros", relations start
        at the origin.

        """
        self.check_dimensions(dim_entity, dim_relation)
        bound = 6 / np.sqrt(dim_entity)
        entities = rng.uniform(-bound, bound, (num_entities, dim_entity))
        clip_to_unit_ball(entities)
        bound = 6 / np.sqrt(dim_relation)
        relations = rng.uniform(-bound, bound, (num_relations, dim_relation))
        relations /= np.linalg.norm(relations, axis=1, keepdims=True)
        if relation_init == "zeros":
            relations[:] = 0.0

        embeddings = EmbeddingSet(entities, relations)
        self.init_extra(embeddings, rng)
        return embeddings

    def init_extra(self, embeddings: EmbeddingSet, rng) -> None:
        """Add model-specific parameters to fresh embeddings."""

    def check_dimensions(self, dim_entity: int, dim_relation: int) -> None:
        if self.same_dimensions and dim_entity != dim_relation:
            raise ConfigError(
                f"{self.name} needs dim_relation == dim_entity, "
                f"got {dim_relation} and {dim_entity}"
            )

    def check_embeddings(self, embeddings: EmbeddingSet) -> None:
        """Raise `ShapeError` if embeddings don't fit the model."""
        try:
            self.check_dimensions(
                embeddings.dim_entity, embeddings.dim_relation
            )
        except ConfigError as err:
            raise ShapeError(str(err)) from None

    def constrain(self, embeddings: EmbeddingSet, entities: bool = True):
        """Apply the norm constraints after an update, in place."""
        if entities:
            embeddings.constrain_entities()
        embeddings.normalize_normals()

    # Forward

    def project(
        self,
        parameters: Parameters,
        entities: torch.Tensor,
        relations: torch.Tensor,
    ) -> torch.Tensor:
        """Return f_r of entity vectors, row by row.

        Args:
            parameters (dict): the parameter tensors by name.
            entities (Tensor): n x d_e entity vectors.
            relations (LongTensor): the n relation identifiers.

        """
        raise NotImplementedError

    def forward(
        self, parameters: Parameters, triples: torch.Tensor
    ) -> torch.Tensor:
        """Return the score of every triple of an n x 3 batch.

        The result is differentiable with respect to every parameter
        tensor requiring a gradient.

        """
        heads, relations, tails = triples.unbind(dim=1)
        entities = parameters["entities"]
        delta = entities[heads] - entities[tails]
        residual = (
            self.project(parameters, delta, relations)
            + parameters["relations"][relations]
        )
        return self.distance(residual)

    def distance(self, residual: torch.Tensor) -> torch.Tensor:
        """Return the p-norm of every row."""
        return torch.linalg.vector_norm(residual, ord=self.norm_p, dim=-1)

    def score_batch(
        self, embeddings: EmbeddingSet, triples: np.ndarray
    ) -> np.ndarray:
        """Return the score of every triple of a batch."""
        with torch.no_grad():
            scores = self.forward(embeddings.tensors(), as_triples(triples))

        return scores.numpy()

    def score(
        self, embeddings: EmbeddingSet, h: int, r: int, t: int
    ) -> float:
        """Return the score of one triple, lower is more plausible."""
        return float(self.score_batch(embeddings, [(h, r, t)])[0])

    def score_candidates(
        self, embeddings: EmbeddingSet, h: int, r: int, t: int, side: str
    ) -> np.ndarray:
        """Score every entity in place of the head or the tail.

        Returns:
            scores (array): |E| scores, entry e being the score of the
                    triple with `side` replaced by entity e.

        """
        if side not in SIDES:
            raise ConfigError(f"side must be head or tail, got {side!r}")

        h, r, t = int(h), int(r), int(t)
        parameters = embeddings.tensors()
        relations = torch.full((embeddings.num_entities,), r)
        with torch.no_grad():
            projected = self.project(
                parameters, parameters["entities"], relations
            )
            relation = parameters["relations"][r]
            if side == "tail":
                residual = projected[h] + relation - projected
            else:
                residual = projected + relation - projected[t]

            return self.distance(residual).numpy()


def as_triples(triples) -> torch.Tensor:
    """Return triples as an n x 3 long tensor."""
    array = np.asarray(triples, dtype=np.int64).reshape(-1, 3)
    return torch.from_numpy(np.ascontiguousarray(array))


def group_by_relation(relations: np.ndarray):
    """Yield `(relation, positions)` for every relation of a batch."""
    order = np.argsort(relations, kind="stable")
    values, starts = np.unique(relations[order], return_index=True)
    bounds = list(starts[1:]) + [len(order)]
    for relation, begin, end in zip(values, starts, bounds):
        yield int(relation), order[begin:end]
