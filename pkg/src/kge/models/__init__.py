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

"""The translational models, registered by name.

```python
from kge.models import create_model

model = create_model("TransH", norm_p=2)
```

"""

from kge.models.base import ModelMetaclass, TranslationalModel
from kge.models.transe import TransE
from kge.models.transh import TransH
from kge.models.transr import TransR
from tools.errors import ConfigError

__all__ = ["TranslationalModel", "TransE", "TransH", "TransR"]

MODELS = ModelMetaclass.models


def create_model(name: str, norm_p: int = 1) -> TranslationalModel:
    """Create a model from its name.

    Raises:
        ConfigError: no model has this name.

    """
    try:
        model_class = MODELS[name]
    except KeyError:
        raise ConfigError(
            f"unknown model {name!r}, expected one of {sorted(MODELS)}"
        ) from None

    return model_class(norm_p)


def model_from_code(code: int, norm_p: int = 1) -> TranslationalModel:
    """Create a model from the tag stored in checkpoints."""
    for model_class in MODELS.values():
        if model_class.code == code:
            return model_class(norm_p)

    raise ConfigError(f"unknown model code {code}")
