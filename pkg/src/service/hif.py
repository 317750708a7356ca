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

"""HIF service, building HIF-entity vectors and bootstrapping relations."""

from pathlib import Path

import numpy as np

from data.dataset import Dataset
from hif.config import DpConfig
from hif.dp import build_hif_entity
from hif.matrix import HifMatrix
from hif.relation import (
    HifRelationResult,
    bootstrap_config,
    build_hif_relation,
)
from kge.config import TrainConfig
from kge.models import TranslationalModel, create_model
from service.base import BaseService
from service.config import DP_OPTIONS, TRAIN_OPTIONS, options_from
from squeeze.transform import SqueezeTransform


class Service(BaseService):

    """HIF service."""

    name = "hif"

    def init(self):
        """Initialize the service."""
        pass

    def build(
        self, dataset: Dataset, config: DpConfig, jobs: int | None = None
    ) -> HifMatrix:
        """Build the HIF-entity matrix of the training graph."""
        logger = self.stage("build-hif")
        logger.info(
            "building HIF-entity vectors",
            entities=dataset.num_entities,
            relations=dataset.num_relations,
            T=config.iterations,
            alpha=config.alpha,
            semiring=config.semiring.value,
        )
        hif = build_hif_entity(dataset.graph, config, jobs=jobs)
        zero_rows = int((~hif.data.any(axis=1)).sum())
        if zero_rows:
            logger.warning("entities with a zero HIF vector", count=zero_rows)

        return hif

    def bootstrap(
        self,
        dataset: Dataset,
        model: TranslationalModel,
        squeezed: np.ndarray,
        config: TrainConfig,
        jobs: int | None = None,
    ) -> HifRelationResult:
        """Train relations against the frozen squeezed HIF-entity matrix."""
        logger = self.stage("bootstrap-relations")
        logger.info(
            "bootstrapping HIF-relation vectors",
            model=model.name,
            epochs=config.epochs,
            relation_init=config.relation_init,
        )
        return build_hif_relation(dataset, model, squeezed, config, jobs)

    def action_build_hif(self, args):
        """Build and save the HIF-entity matrix of a dataset."""
        dataset = self.sibling("dataset").from_args(args)
        config = DpConfig.build(**options_from(args, DP_OPTIONS))
        hif = self.build(dataset, config, args.jobs)
        path = hif.save(args.out)
        if args.csv:
            hif.to_csv(args.csv, dataset.vocab)

        self.stage("build-hif").info(
            "HIF-entity matrix written",
            path=str(path),
            shape=f"{hif.num_entities}x{hif.dim}",
        )

    def action_bootstrap_relations(self, args):
        """Bootstrap HIF-relation vectors from saved HIF and squeeze files."""
        dataset = self.sibling("dataset").from_args(args)
        hif = HifMatrix.load(args.hif)
        transform = SqueezeTransform.load(args.squeeze)
        squeezed = self.sibling("squeeze").squeezed_entities(transform, hif)
        options = options_from(args, TRAIN_OPTIONS)
        options["dim_entity"] = transform.dim_entity
        if options.get("model") != "TransR":
            options["dim_relation"] = transform.dim_entity

        base = TrainConfig.build(**options)
        config = bootstrap_config(
            base, epochs=args.epochs, relation_init=args.relation_init
        )
        model = create_model(config.model, config.norm_p)
        result = self.bootstrap(dataset, model, squeezed, config, args.jobs)
        path = result.save(Path(args.out), config.config_hash())
        self.stage("bootstrap-relations").info(
            "HIF-relation bootstrap written",
            path=str(path),
            loss=round(result.final_loss, 6),
        )
