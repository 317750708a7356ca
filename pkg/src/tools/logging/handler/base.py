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

"""Base handler."""

from abc import ABC, abstractmethod
from typing import TYPE_CHECKING

from tools.logging.level import Level
from tools.logging.message import Message
from tools.logging.stage import Stage

if TYPE_CHECKING:
    from tools.logging.logger import Logger


class Handler(ABC):

    """Write the messages of a logger somewhere.

    A handler writes the messages of at least its level, formatted
    with its format string.  With a stage batch, a header line comes
    before the first message of every new stage.

    """

    default_format = "[{level}] {tag}{message}{extra}"

    def __init__(
        self, logger: "Logger", level: Level, format: str | None = None
    ):
        self.logger = logger
        self.level = level
        self.format = format or self.default_format
        self.batch: Stage | None = None

    @abstractmethod
    def bind(self, **options) -> None:
        """Connect the handler to its output."""

    @abstractmethod
    def write_line(self, line: str) -> None:
        """Write one line, the line break excluded."""

    def handle(self, level: Level, message: Message) -> None:
        """Write a message if its level is high enough."""
        if level < self.level:
            return

        if self.batch is not None:
            if (header := self.batch.header_for(message)) is not None:
                self.write_line(header)

        self.write_line(self.format.format(**message.as_format_args()))
