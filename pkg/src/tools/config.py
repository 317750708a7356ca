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

"""Base class for run configurations.

Run configurations are pydantic models.  Their defaults are read from
the dynaconf settings when the model is created, so that the local
settings file and `KGHAIT_` environment variables apply to every run.
Invalid values raise `ConfigError`, never pydantic's own exception.

"""

from hashlib import blake2b
import json
from typing import Any

from pydantic import BaseModel, ValidationError
import yaml

from tools.errors import ConfigError
from tools.settings import settings


def setting(key: str):
    """Return a default factory reading a setting when called."""

    def factory():
        value = settings[key]
        if isinstance(value, (list, tuple)):
            value = list(value)

        return value

    return factory


class ConfigModel(BaseModel):

    """Pydantic model shared by all run configurations."""

    @classmethod
    def build(cls, **kwargs: Any) -> "ConfigModel":
        """Create a configuration, ignoring `None` values.

        `None` values stand for options absent from the command line,
        so the default (read from the settings) applies.

        Raises:
            ConfigError: a value is invalid.

        """
        kwargs = {
            key: value for key, value in kwargs.items() if value is not None
        }
        try:
            return cls(**kwargs)
        except ValidationError as err:
            raise ConfigError(_describe(cls, err)) from None

    def update(self, **kwargs: Any) -> "ConfigModel":
        """Return a validated copy with some values replaced."""
        values = self.as_plain()
        values.update(
            {key: value for key, value in kwargs.items() if value is not None}
        )
        return type(self).build(**values)

    def as_plain(self) -> dict[str, Any]:
        """Return the configuration as plain JSON-compatible values."""
        return json.loads(self.json())

    def as_yaml(self) -> str:
        """Return the configuration as a YAML document with sorted keys."""
        return yaml.safe_dump(self.as_plain(), sort_keys=True)

    def config_hash(self) -> bytes:
        """Return a 16-byte digest identifying this configuration."""
        return blake2b(self.as_yaml().encode("utf-8"), digest_size=16).digest()

    class Config:

        extra = "forbid"
        validate_all = True
        validate_assignment = True


def _describe(cls: type, err: ValidationError) -> str:
    """Turn a pydantic validation error into one line per field."""
    lines = []
    for error in err.errors():
        field = ".".join(str(part) for part in error["loc"])
        lines.append(f"{field}: {error['msg']}")

    return f"invalid {cls.__name__}: " + "; ".join(lines)
