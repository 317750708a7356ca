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

"""HIF-relation: relation embeddings learned against frozen entities.

The chosen model is trained with its entity matrix fixed to the
squeezed HIF-entity vectors; only relation-side parameters (relation
vectors, TransH normals, TransR projections) move.

"""

from dataclasses import dataclass
from pathlib import Path

import numpy as np

from data.dataset import Dataset
from hif.log import logger
from kge.checkpoint import load_checkpoint, save_checkpoint
from kge.config import TrainConfig
from kge.embedding import EmbeddingSet
from kge.history import TrainingLog
from kge.models import TranslationalModel
from kge.trainer import train
from tools.errors import ConfigError
from tools.settings import settings


@dataclass
class HifRelationResult:

    """The outcome of a HIF-relation bootstrap.

    Attributes:
        embeddings: the entities (unchanged) and relation-side
                parameters after the bootstrap.
        model: the model trained.
        epochs: the number of bootstrap epochs run.
        final_loss: the mean train loss of the last epoch.
        log: the training log, empty when loaded from a file.

    """

    embeddings: EmbeddingSet
    model: TranslationalModel
    epochs: int
    final_loss: float
    log: TrainingLog | None = None

    @property
    def relations(self) -> np.ndarray:
        return self.embeddings.relations

    def save(self, path: str | Path, config_hash: bytes = bytes(16)) -> Path:
        """Write the bootstrap with the checkpoint layout."""
        return save_checkpoint(
            path,
            self.model,
            self.embeddings,
            self.epochs,
            config_hash,
            bootstrap=True,
        )

    @classmethod
    def load(cls, path: str | Path) -> "HifRelationResult":
        checkpoint = load_checkpoint(path)
        if not checkpoint.bootstrap:
            raise ConfigError(f"{path} is not a HIF-relation bootstrap")

        return cls(
            checkpoint.embeddings,
            checkpoint.model,
            checkpoint.epoch,
            float("nan"),
        )


def bootstrap_config(
    base: TrainConfig | None = None, **overrides
) -> TrainConfig:
    """Return a training configuration suited to a bootstrap.

    Starting from `base` (or the settings), the number of epochs and
    the plateau stop come from the bootstrap settings, validation is
    disabled and entities are frozen.  Keyword arguments override
    anything but the freeze, `None` values are ignored.

    """
    values = dict(
        epochs=settings.BOOTSTRAP_EPOCHS,
        plateau_window=settings.BOOTSTRAP_PLATEAU_WINDOW,
        plateau_tolerance=settings.BOOTSTRAP_PLATEAU_TOLERANCE,
        relation_init=settings.BOOTSTRAP_RELATION_INIT,
        eval_every=0,
        patience=0,
        init="hif",
    )
    values.update(
        {key: value for key, value in overrides.items() if value is not None}
    )
    values["freeze_entities"] = True
    base = base or TrainConfig.build()
    return base.update(**values)


def build_hif_relation(
    dataset: Dataset,
    model: TranslationalModel,
    squeezed_entities: np.ndarray,
    bootstrap_config: TrainConfig,
    jobs: int | None = None,
) -> HifRelationResult:
    """Train relation embeddings against frozen HIF-entity vectors.

    Args:
        dataset (Dataset): the dataset, only the training split is used.
        model (TranslationalModel): the model to train.
        squeezed_entities (array): the |E| x d_e squeezed HIF matrix.
        bootstrap_config (TrainConfig): the configuration, its
                `freeze_entities` flag is forced on.
        jobs (int, optional): the number of workers.

    Returns:
        result (HifRelationResult): the relation-side parameters.

    Raises:
        ConfigError: the entity matrix doesn't fit the dataset or
                the configuration.

    """
    squeezed_entities = np.asarray(squeezed_entities, dtype=np.float64)
    config = bootstrap_config.update(freeze_entities=True)
    expected = (dataset.num_entities, config.dim_entity)
    if squeezed_entities.shape != expected:
        raise ConfigError(
            f"squeezed entities are {squeezed_entities.shape}, "
            f"expected {expected}"
        )

    rng = np.random.default_rng(config.seed)
    embeddings = model.init_embeddings(
        dataset.num_entities,
        dataset.num_relations,
        config.dim_entity,
        config.dim_relation,
        rng,
        config.relation_init,
    )
    embeddings.entities = squeezed_entities.copy()
    result = train(dataset, model, config, embeddings, jobs=jobs)
    logger.info(
        "HIF-relation bootstrapped",
        model=model.name,
        epochs=result.epochs_run,
        loss=round(result.final_loss, 6),
        stop=result.stop_reason,
    )
    return HifRelationResult(
        result.embeddings,
        model,
        result.epochs_run,
        result.final_loss,
        result.log,
    )
