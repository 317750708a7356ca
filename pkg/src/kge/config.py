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

"""Configuration of KGE training."""

from typing import Literal

from pydantic import Field, root_validator

from tools.config import ConfigModel, setting


class TrainConfig(ConfigModel):

    """Settings of `kge.trainer.train`.

    Evaluation on the validation split happens every `eval_every`
    epochs (0 disables it).  Training stops early after `patience`
    evaluations without MRR improvement (0 disables early stopping),
    or when the mean train loss improved by less than
    `plateau_tolerance` over `plateau_window` epochs (0 disables).

    """

    model: Literal["TransE", "TransH", "TransR"] = Field(
        default_factory=setting("MODEL")
    )
    norm_p: Literal[1, 2] = Field(default_factory=setting("NORM_P"))
    dim_entity: int = Field(default_factory=setting("DIM_ENTITY"), ge=1)
    dim_relation: int = Field(default_factory=setting("DIM_RELATION"), ge=1)
    margin: float = Field(default_factory=setting("MARGIN"), gt=0)
    lr: float = Field(default_factory=setting("LEARNING_RATE"), gt=0)
    batch_size: int = Field(default_factory=setting("BATCH_SIZE"), ge=1)
    epochs: int = Field(default_factory=setting("EPOCHS"), ge=1)
    negatives_per_positive: int = Field(
        default_factory=setting("NEGATIVES_PER_POSITIVE"), ge=1
    )
    seed: int = Field(default_factory=setting("SEED"), ge=0)
    freeze_entities: bool = False
    init: Literal["random", "hif"] = "random"
    relation_init: Literal["random", "zeros"] = "random"
    eval_every: int = Field(default_factory=setting("EVAL_EVERY"), ge=0)
    patience: int = Field(default_factory=setting("PATIENCE"), ge=0)
    valid_sample: int = Field(default_factory=setting("VALID_SAMPLE"), ge=0)
    plateau_window: int = Field(0, ge=0)
    plateau_tolerance: float = Field(0.0, ge=0)

    @root_validator(skip_on_failure=True)
    def check_dimensions(cls, values):
        if values["model"] in ("TransE", "TransH"):
            if values["dim_entity"] != values["dim_relation"]:
                raise ValueError(
                    f"{values['model']} needs dim_relation == dim_entity"
                )

        return values
