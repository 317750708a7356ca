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

"""The manifest of a run directory.

The manifest is a YAML file (`manifest.yaml`) written at the root of
every pipeline run.  It records the resolved configuration and its
hash, the order in which stages ran, and for each stage its status,
its duration and the artifacts it produced.  It is rewritten after
every stage, so an interrupted run can be resumed.

"""

from datetime import datetime
from pathlib import Path
import time
from typing import Any, Literal, Optional

from pydantic import BaseModel, Field
import yaml

from tools.errors import ConfigError
from tools.settings import settings

MANIFEST = "manifest.yaml"


def _now() -> str:
    return datetime.now().isoformat(timespec="seconds")


class StageRecord(BaseModel):

    """What happened to one stage."""

    status: Literal["running", "done", "failed", "resumed"] = "running"
    seconds: float = 0.0
    artifacts: list[str] = Field(default_factory=list)
    error: Optional[str] = None


class Manifest(BaseModel):

    """The manifest of a run directory."""

    config: dict[str, Any]
    config_hash: str
    created: str = Field(default_factory=_now)
    stage_order: list[str] = Field(default_factory=list)
    stages: dict[str, StageRecord] = Field(default_factory=dict)

    class Config:

        extra = "forbid"
        validate_assignment = True

    @classmethod
    def read(cls, directory: str | Path) -> Optional["Manifest"]:
        """Read the manifest of a run directory, if any."""
        path = Path(directory) / MANIFEST
        if not path.exists():
            return None

        with path.open("r", encoding=settings.DEFAULT_ENCODING) as file:
            content = yaml.safe_load(file)

        try:
            return cls(**content)
        except (TypeError, ValueError) as err:
            raise ConfigError(f"{path} isn't a valid manifest: {err}")

    def write(self, directory: str | Path) -> Path:
        """Write the manifest in a run directory."""
        path = Path(directory) / MANIFEST
        path.parent.mkdir(parents=True, exist_ok=True)
        content = yaml.safe_dump(self.dict(), sort_keys=False)
        path.write_text(content, encoding=settings.DEFAULT_ENCODING)
        return path

    def is_done(self, name: str, directory: str | Path) -> bool:
        """Return whether a stage finished and its artifacts still exist."""
        record = self.stages.get(name)
        if record is None or record.status not in ("done", "resumed"):
            return False

        directory = Path(directory)
        return all((directory / path).exists() for path in record.artifacts)

    def begin(self, name: str) -> float:
        """Record the start of a stage, return the start time."""
        if name in self.stage_order:
            self.stage_order.remove(name)

        self.stage_order.append(name)
        self.stages[name] = StageRecord()
        return time.perf_counter()

    def finish(
        self,
        name: str,
        began: float,
        artifacts: list[str],
        status: str = "done",
    ) -> None:
        """Record the end of a stage."""
        self.stages[name] = StageRecord(
            status=status,
            seconds=round(time.perf_counter() - began, 3),
            artifacts=artifacts,
        )

    def fail(self, name: str, began: float, error: str) -> None:
        """Record the failure of a stage."""
        self.stages[name] = StageRecord(
            status="failed",
            seconds=round(time.perf_counter() - began, 3),
            error=error,
        )
