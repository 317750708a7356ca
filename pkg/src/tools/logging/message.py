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

"""Structured message representation."""

from dataclasses import dataclass, field
from datetime import datetime
from typing import Any, TYPE_CHECKING

from tools.logging.level import Level

if TYPE_CHECKING:
    from tools.logging.logger import Logger


@dataclass
class Message:

    """A log record, with time parts split for formatting.

    The `fields` are the keyword arguments given to the log call.
    They are rendered in `extra` as space-separated `key=value` pairs,
    floats with six significant digits.

    """

    time: datetime
    level: str
    message: str
    logger: str
    stage: str
    year: str
    month: str
    day: str
    hour: str
    minute: str
    second: str
    ms: str
    fields: dict[str, Any] = field(default_factory=dict)

    @property
    def tag(self) -> str:
        """Return the stage tag, `[stage] ` or an empty string."""
        return f"[{self.stage}] " if self.stage else ""

    @property
    def extra(self) -> str:
        """Return the rendered fields, prefixed by a space if any."""
        if not self.fields:
            return ""

        parts = []
        for key, value in self.fields.items():
            if isinstance(value, float):
                value = f"{value:.6g}"
            parts.append(f"{key}={value}")

        return " " + " ".join(parts)

    def as_format_args(self) -> dict[str, Any]:
        """Return the keyword arguments usable in a format string."""
        return {
            "time": self.time,
            "level": self.level,
            "message": self.message,
            "logger": self.logger,
            "stage": self.stage,
            "tag": self.tag,
            "extra": self.extra,
            "year": self.year,
            "month": self.month,
            "day": self.day,
            "hour": self.hour,
            "minute": self.minute,
            "second": self.second,
            "ms": self.ms,
        }

    @classmethod
    def create_for(
        cls,
        logger: "Logger",
        level: Level,
        message: str,
        fields: dict[str, Any] | None = None,
    ):
        """Create a new Message instance."""
        time = datetime.now()
        return cls(
            time=time,
            level=level.name,
            message=message,
            logger=logger.name,
            stage=logger.stage_name or "",
            year=time.strftime("%Y"),
            month=time.strftime("%m"),
            day=time.strftime("%d"),
            hour=time.strftime("%H"),
            minute=time.strftime("%M"),
            second=time.strftime("%S"),
            ms=f"{time.microsecond // 1000:03}",
            fields=dict(fields or {}),
        )
