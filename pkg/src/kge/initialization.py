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

"""Initial parameters of a training run."""

import numpy as np

from data.dataset import Dataset
from kge.config import TrainConfig
from kge.embedding import EmbeddingSet
from kge.models import TranslationalModel
from tools.errors import ConfigError, ShapeError


def init_embeddings(
    model: TranslationalModel,
    dataset: Dataset,
    config: TrainConfig,
    hif_entities: np.ndarray | None = None,
    hif_relations: np.ndarray | EmbeddingSet | None = None,
    seed: int | None = None,
) -> EmbeddingSet:
    """Return the parameters a run starts from.

    With `config.init` set to "random", parameters are drawn by the
    model (see `TranslationalModel.init_embeddings`).  With "hif", the
    squeezed HIF-entity matrix and the HIF-relation matrix are copied
    as starting values.  If `hif_relations` is a bootstrap embedding
    set, its relation-side parameters (normals or projections) are
    copied too, otherwise they are drawn like for a random start.

    Args:
        model (TranslationalModel): the model.
        dataset (Dataset): the dataset, for vocabulary sizes.
        config (TrainConfig): the run configuration.
        hif_entities (array, optional): the |E| x d_e squeezed matrix.
        hif_relations (array or EmbeddingSet, optional): the HIF
                relations, |R| x d_r.
        seed (int, optional): the seed, `config.seed` if not set.

    Raises:
        ConfigError: HIF matrices are missing with init "hif".
        ShapeError: a HIF matrix has the wrong shape.

    """
    seed = config.seed if seed is None else seed
    rng = np.random.default_rng(seed)
    embeddings = model.init_embeddings(
        dataset.num_entities,
        dataset.num_relations,
        config.dim_entity,
        config.dim_relation,
        rng,
        config.relation_init,
    )
    if config.init == "random":
        return embeddings

    if hif_entities is None or hif_relations is None:
        raise ConfigError("init 'hif' needs HIF entities and relations")

    source = hif_relations if isinstance(hif_relations, EmbeddingSet) else None
    relations = hif_relations if source is None else source.relations
    for name, matrix, expected in (
        ("entities", hif_entities, embeddings.entities.shape),
        ("relations", relations, embeddings.relations.shape),
    ):
        matrix = np.asarray(matrix, dtype=np.float64)
        if matrix.shape != expected:
            raise ShapeError(
                f"HIF {name} are {matrix.shape}, expected {expected}"
            )

        setattr(embeddings, name, matrix.copy())

    if source is not None:
        for name in ("normals", "projections"):
            if (value := getattr(source, name)) is not None:
                setattr(embeddings, name, value.copy())

    return embeddings
