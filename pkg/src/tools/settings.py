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

"""Project settings, loaded through dynaconf.

Settings are read from `config/settings.toml`, then
`config/settings.local.toml`, then environment variables prefixed
with `KGHAIT_`.  Access them in upper case:

```python
from tools.settings import settings

settings.HIF_ITERATIONS  # 4
```

"""

from pathlib import Path

from dynaconf import Dynaconf, Validator

CONFIG_DIRECTORY = Path(__file__).resolve().parents[2] / "config"

settings = Dynaconf(
    envvar_prefix="KGHAIT",
    environments=True,
    settings_files=[
        str(CONFIG_DIRECTORY / "settings.toml"),
        str(CONFIG_DIRECTORY / "settings.local.toml"),
    ],
    validators=[
        Validator(
            "DATA_DIR", "LOG_DIRECTORY", "RUN_DIRECTORY", must_exist=True
        ),
        Validator("SEED", must_exist=True, gte=0),
        Validator("JOBS", must_exist=True, gte=0),
        Validator("HIF_ITERATIONS", must_exist=True, gte=1),
        Validator("HIF_ALPHA", must_exist=True, gt=0, lte=1),
        Validator(
            "HIF_SEMIRING",
            is_in=["concrete-max-decay", "sum-product", "max-product"],
        ),
        Validator("SQUEEZE_MAX_ITERS", "SQUEEZE_PLATEAU_WINDOW", gt=0),
        Validator("SQUEEZE_LR", "SQUEEZE_BETA_START", gt=0),
        Validator("MODEL", is_in=["TransE", "TransH", "TransR"]),
        Validator("NORM_P", is_in=[1, 2]),
        Validator("MARGIN", "LEARNING_RATE", gt=0),
        Validator("BATCH_SIZE", "EPOCHS", "NEGATIVES_PER_POSITIVE", gte=1),
        Validator("DIM_ENTITY", "DIM_RELATION", gte=1),
        Validator("EVAL_EVERY", gte=1),
        Validator("BOOTSTRAP_EPOCHS", gte=1),
        Validator("CONVERGENCE_TOLERANCE", gt=0, lt=1),
    ],
)
