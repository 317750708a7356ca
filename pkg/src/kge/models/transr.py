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

"""TransR: entities are mapped to the relation space by a matrix.

Every relation r owns a d_r x d_e matrix M_r and f_r(e) = M_r e.  With
M_r the identity, TransR scores like TransE.

"""

import numpy as np
import torch

from kge.embedding import EmbeddingSet
from kge.models.base import TranslationalModel, group_by_relation


class TransR(TranslationalModel):

    """TransR, score ||M_r h + r - M_r t||_p."""

    name = "TransR"
    code = 3
    same_dimensions = False

    def init_extra(self, embeddings, rng):
        embeddings.projections = identity_projections(
            embeddings.num_relations,
            embeddings.dim_relation,
            embeddings.dim_entity,
        )

    def project(self, parameters, entities, relations):
        matrices = parameters["projections"]
        groups = list(group_by_relation(relations.numpy()))
        if len(groups) == 1:
            relation, _ = groups[0]
            return entities @ matrices[relation].T

        if not groups:
            return entities.new_zeros((0, matrices.shape[1]))

        # One product per relation, then back to the batch order.
        order = torch.from_numpy(np.concatenate([p for _, p in groups]))
        projected = torch.cat(
            [
                entities[torch.from_numpy(positions)] @ matrices[relation].T
                for relation, positions in groups
            ]
        )
        return projected[torch.argsort(order)]

    def inherit_from(self, source: EmbeddingSet) -> EmbeddingSet:
        """Start from trained TransE embeddings, projections at identity."""
        embeddings = EmbeddingSet(
            source.entities.copy(), source.relations.copy()
        )
        self.init_extra(embeddings, None)
        return embeddings


def identity_projections(
    num_relations: int, dim_relation: int, dim_entity: int
) -> np.ndarray:
    """Return one (rectangular) identity matrix per relation."""
    eye = np.eye(dim_relation, dim_entity)
    return np.repeat(eye[None], num_relations, axis=0)
