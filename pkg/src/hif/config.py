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

"""Configuration of the HIF dynamic program."""

from pydantic import Field

from hif.semiring import Semiring
from tools.config import ConfigModel, setting


class DpConfig(ConfigModel):

    """Settings of `build_hif_entity`.

    Attributes:
        iterations: the number of DP iterations T, at least 1.
        alpha: the decay applied along every triple, in (0, 1].
        semiring: the operator pair (see `hif.semiring`).
        include_identity_each_step: whether both side aggregates
                start from the identity vector at every step.

    """

    iterations: int = Field(default_factory=setting("HIF_ITERATIONS"), ge=1)
    alpha: float = Field(default_factory=setting("HIF_ALPHA"), gt=0, le=1)
    semiring: Semiring = Field(default_factory=setting("HIF_SEMIRING"))
    include_identity_each_step: bool = Field(
        default_factory=setting("HIF_IDENTITY_EACH_STEP")
    )
