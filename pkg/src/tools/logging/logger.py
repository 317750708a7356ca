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

"""Loggers and their stage sub-loggers."""

from functools import partialmethod
from pathlib import Path
from typing import Any

from tools.logging.handler.base import Handler
from tools.logging.level import Level
from tools.logging.message import Message
from tools.logging.stage import Stage


class Logger:

    """A named logger, sending messages to its handlers.

    Stage sub-loggers (see `stage`) share the handlers of their parent
    and only differ by the stage tag they add to messages.

    """

    def __init__(
        self,
        name: str,
        directory: str | Path | None = None,
        stage_name: str | None = None,
    ):
        self.name = name
        self.directory = None
        if directory is not None:
            self.directory = Path(directory).resolve()
        self.stage_name = stage_name
        self.handlers: list[Handler] = []
        self.stages: dict[str, "Logger"] = {}

    def add_handler(
        self,
        handler_class: type[Handler],
        level: Level | str,
        batched: bool = False,
        format: str | None = None,
        **options,
    ) -> Handler:
        """Create a handler and attach it to this logger.

        Args:
            handler_class (subclass of Handler): the handler to create.
            level (Level or str): the lowest level written.  Names
                    like "warning" or "INFO" are accepted.
            batched (bool): write a header line when the stage changes.
            format (str, optional): the line format, the handler's
                    default if not set.

        Other keyword arguments are given to the handler's `bind`.

        Returns:
            handler (Handler): the new handler.

        """
        handler = handler_class(self, Level.parse(level), format)
        if batched:
            handler.batch = Stage()

        handler.bind(**options)
        self.handlers.append(handler)
        return handler

    def setup(self) -> None:
        """Create the log directory, if any."""
        if self.directory is not None:
            self.directory.mkdir(parents=True, exist_ok=True)

    def log(self, level: Level, message: str, **fields: Any) -> None:
        """Send a message with its keyword fields to every handler."""
        record = Message.create_for(self, level, message, fields)
        for handler in self.handlers:
            handler.handle(level, record)

    debug = partialmethod(log, Level.DEBUG)
    info = partialmethod(log, Level.INFO)
    warning = partialmethod(log, Level.WARNING)
    error = partialmethod(log, Level.ERROR)

    def stage(self, name: str) -> "Logger":
        """Return the sub-logger tagging messages with a stage name.

        Args:
            name (str): the stage name, like "build-hif".

        """
        if (sub := self.stages.get(name)) is None:
            sub = Logger(self.name, self.directory, stage_name=name)
            sub.handlers = self.handlers
            self.stages[name] = sub

        return sub
