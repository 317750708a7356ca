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

"""Embedding sets: every trainable matrix of a translational model.

The matrices are numpy arrays.  `EmbeddingSet.tensors` wraps them as
torch tensors sharing their memory, so an optimizer stepping the
tensors updates the arrays.

"""

from collections.abc import Iterable
from dataclasses import dataclass, fields

import numpy as np
import torch

from tools.errors import DivergenceError

Parameters = dict[str, torch.Tensor]


@dataclass
class EmbeddingSet:

    """Entity and relation embeddings plus model-specific parameters.

    Attributes:
        entities: the |E| x d_e entity matrix.
        relations: the |R| x d_r relation matrix.
        normals: the |R| x d_e hyperplane normals (TransH only).
        projections: the |R| x d_r x d_e projections (TransR only).

    """

    entities: np.ndarray
    relations: np.ndarray
    normals: np.ndarray | None = None
    projections: np.ndarray | None = None

    @property
    def num_entities(self) -> int:
        return self.entities.shape[0]

    @property
    def num_relations(self) -> int:
        return self.relations.shape[0]

    @property
    def dim_entity(self) -> int:
        return self.entities.shape[1]

    @property
    def dim_relation(self) -> int:
        return self.relations.shape[1]

    def parameters(self) -> dict[str, np.ndarray]:
        """Return the parameter matrices by name, skipping absent ones."""
        return {
            field.name: value
            for field in fields(self)
            if (value := getattr(self, field.name)) is not None
        }

    def tensors(self, trainable: Iterable[str] = ()) -> Parameters:
        """Return the parameters as torch tensors sharing their memory.

        Parameters are first turned into contiguous float64 arrays,
        in place.

        Args:
            trainable (iterable): names of the parameters to wrap as
                    `torch.nn.Parameter`, the others don't require a
                    gradient.

        """
        trainable = set(trainable)
        tensors = {}
        for name, value in self.parameters().items():
            value = np.ascontiguousarray(value, np.float64)
            setattr(self, name, value)
            tensor = torch.from_numpy(value)
            if name in trainable:
                tensor = torch.nn.Parameter(tensor)
            tensors[name] = tensor

        return tensors

    def copy(self) -> "EmbeddingSet":
        """Return a deep copy."""
        return EmbeddingSet(
            **{name: value.copy() for name, value in self.parameters().items()}
        )

    def check_finite(self) -> None:
        """Raise `DivergenceError` if a parameter isn't finite."""
        for name, value in self.parameters().items():
            if not np.isfinite(value).all():
                raise DivergenceError(f"non-finite values in {name}")

    def constrain_entities(self) -> None:
        """Scale entity rows down to the unit L2 ball, in place."""
        clip_to_unit_ball(self.entities)

    def normalize_normals(self) -> None:
        """Scale hyperplane normals to unit L2 norm, in place."""
        if self.normals is not None:
            norms = np.linalg.norm(self.normals, axis=1, keepdims=True)
            np.divide(self.normals, norms, out=self.normals, where=norms > 0)


def clip_to_unit_ball(matrix: np.ndarray) -> np.ndarray:
    """Scale rows whose L2 norm exceeds 1 back to norm 1, in place."""
    norms = np.linalg.norm(matrix, axis=1, keepdims=True)
    np.divide(matrix, norms, out=matrix, where=norms > 1)
    return matrix
