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

"""Squeeze service, optimizing and applying the dimension transform."""

import numpy as np

from hif.matrix import HifMatrix
from kge.embedding import clip_to_unit_ball
from service.base import BaseService
from squeeze.transform import (
    SqueezeConfig,
    SqueezeTransform,
    apply_squeeze,
    cosine_distortion,
    optimize_transform,
)
from tools.errors import ShapeError, UsageError


class Service(BaseService):

    """Squeeze service."""

    name = "squeeze"

    def init(self):
        """Initialize the service."""
        pass

    def optimize(
        self, num_relations: int, config: SqueezeConfig
    ) -> SqueezeTransform:
        """Optimize a transform for `num_relations` columns."""
        logger = self.stage("squeeze")
        transform = optimize_transform(
            config.dim_entity, num_relations, config=config
        )
        logger.info(
            "transform optimized",
            dim=transform.dim_entity,
            relations=transform.num_relations,
            loss=round(transform.final_mcs_loss, 4),
            welch=round(transform.welch_floor, 4),
            iterations=transform.iterations,
        )
        if not transform.converged:
            logger.warning(
                "target coherence not reached",
                target=config.target_loss,
                loss=round(transform.final_mcs_loss, 4),
            )

        return transform

    def squeezed_entities(
        self, transform: SqueezeTransform, hif: HifMatrix
    ) -> np.ndarray:
        """Project HIF-entity vectors and clip them to the unit ball."""
        squeezed = apply_squeeze(transform, hif)
        try:
            distortion = cosine_distortion(transform, hif)
        except ShapeError:
            self.stage("squeeze").debug("too few rows for the distortion")
        else:
            self.stage("squeeze").info(
                "angle preservation", median_distortion=round(distortion, 4)
            )

        return clip_to_unit_ball(squeezed)

    def action_squeeze(self, args):
        """Optimize and save a transform."""
        num_relations = args.relations
        if args.hif is not None:
            num_relations = HifMatrix.load(args.hif).dim

        if num_relations is None:
            raise UsageError("give either --relations or --hif")

        config = SqueezeConfig.build(
            dim_entity=args.dim_entity,
            seed=args.seed,
            lr=args.lr,
            max_iters=args.max_iters,
            target_loss=args.target_loss,
        )
        transform = self.optimize(num_relations, config)
        path = transform.save(args.out)
        self.stage("squeeze").info("transform written", path=str(path))
