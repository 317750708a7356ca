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

"""File handler."""

from pathlib import Path

from tools.logging.handler.base import Handler
from tools.settings import settings


class File(Handler):

    """Handler appending lines to a file.

    A relative file name is placed in the directory of the logger, so
    the file follows the logger when it is redirected.

    """

    default_format = (
        "{year}-{month}-{day} {hour}:{minute}:{second},{ms} [{level}] "
        "{tag}{message}{extra}"
    )

    def bind(self, filename: str | Path) -> None:
        """Set the file name."""
        self.filename = Path(filename)

    @property
    def path(self) -> Path:
        """Return the path of the log file."""
        directory = self.logger.directory
        if self.filename.is_absolute() or directory is None:
            return self.filename

        return directory / self.filename

    def write_line(self, line: str) -> None:
        with self.path.open("a", encoding=settings.DEFAULT_ENCODING) as file:
            file.write(line + "\n")
