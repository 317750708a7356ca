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

"""Training service, running and saving KGE training runs.

A training directory holds the best parameters (`checkpoint.bin`) and
the per-epoch log (`training.csv`).

"""

from pathlib import Path

from data.dataset import Dataset
from evaluation.ranking import FilterIndex
from hif.matrix import HifMatrix
from hif.relation import HifRelationResult
from kge.checkpoint import Checkpoint, load_checkpoint, save_checkpoint
from kge.config import TrainConfig
from kge.embedding import EmbeddingSet
from kge.history import TrainingLog
from kge.initialization import init_embeddings
from kge.models import TranslationalModel, create_model
from kge.trainer import TrainResult, train
from service.base import BaseService
from service.config import TRAIN_OPTIONS, options_from
from squeeze.transform import SqueezeTransform
from tools.errors import UsageError

CHECKPOINT = "checkpoint.bin"
TRAINING_LOG = "training.csv"


class Service(BaseService):

    """Training service."""

    name = "train"

    def init(self):
        """Initialize the service."""
        pass

    def fit(
        self,
        dataset: Dataset,
        model: TranslationalModel,
        config: TrainConfig,
        init_emb: EmbeddingSet,
        directory: str | Path,
        filter_index: FilterIndex | None = None,
        jobs: int | None = None,
        stage: str = "train",
    ) -> TrainResult:
        """Train a model and write its checkpoint and log.

        Args:
            dataset (Dataset): the dataset.
            model (TranslationalModel): the model.
            config (TrainConfig): the run configuration.
            init_emb (EmbeddingSet): the starting parameters.
            directory (str or Path): where to write the results.
            filter_index (FilterIndex, optional): the known triples.
            jobs (int, optional): the number of workers.
            stage (str): the stage name to tag log messages with.

        Returns:
            result (TrainResult): the outcome of the training.

        """
        logger = self.stage(stage)
        directory = Path(directory)
        result = train(
            dataset,
            model,
            config,
            init_emb,
            filter_index=filter_index,
            jobs=jobs,
        )
        if result.negatives_exhausted:
            logger.warning(
                "negatives kept although known",
                count=result.negatives_exhausted,
            )

        save_checkpoint(
            directory / CHECKPOINT,
            model,
            result.embeddings,
            result.best_epoch,
            config.config_hash(),
        )
        result.log.to_csv(directory / TRAINING_LOG)
        logger.info(
            "model written",
            directory=str(directory),
            best_epoch=result.best_epoch,
            stop=result.stop_reason,
        )
        return result

    @staticmethod
    def artifacts(directory: str | Path) -> list[Path]:
        """Return the files a training directory should hold."""
        directory = Path(directory)
        return [directory / CHECKPOINT, directory / TRAINING_LOG]

    def restore(self, directory: str | Path) -> tuple[Checkpoint, TrainingLog]:
        """Read back the checkpoint and log of a training directory."""
        directory = Path(directory)
        checkpoint = load_checkpoint(directory / CHECKPOINT)
        log = TrainingLog.from_csv(directory / TRAINING_LOG)
        return checkpoint, log

    def action_train(self, args):
        """Train a model from random, HIF or inherited parameters."""
        dataset = self.sibling("dataset").from_args(args)
        config = TrainConfig.build(
            **options_from(args, TRAIN_OPTIONS), init=args.init
        )
        model = create_model(config.model, config.norm_p)
        if args.inherit is not None:
            if model.name != "TransR":
                raise UsageError("--inherit is only valid for TransR")

            source = load_checkpoint(args.inherit)
            init_emb = model.inherit_from(source.embeddings)
        elif config.init == "hif":
            if None in (args.hif, args.squeeze, args.bootstrap):
                raise UsageError(
                    "--init hif needs --hif, --squeeze and --bootstrap"
                )

            transform = SqueezeTransform.load(args.squeeze)
            squeezed = self.sibling("squeeze").squeezed_entities(
                transform, HifMatrix.load(args.hif)
            )
            bootstrap = HifRelationResult.load(args.bootstrap)
            init_emb = init_embeddings(
                model, dataset, config, squeezed, bootstrap.embeddings
            )
        else:
            init_emb = init_embeddings(model, dataset, config)

        self.fit(dataset, model, config, init_emb, args.out, jobs=args.jobs)
