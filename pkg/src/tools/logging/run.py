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

"""The preconfigured logger used by processes and library packages."""

from pathlib import Path
import sys

from tools.logging import File, Level, Logger, Stream
from tools.settings import settings

FILE_FORMAT = "{minute}:{second},{ms} {level} {tag}{message}{extra}"
STREAM_FORMAT = "{tag}{message}{extra}"


class RunLogger(Logger):

    """Logger writing DEBUG to a file and INFO to stdout.

    The file is `<directory>/<name>.log`, the directory defaulting
    to the `log_directory` setting.  A process can send its logs in
    a run directory by giving it explicitly.

    """

    def __init__(self, name: str, directory=None, quiet: bool = False):
        directory = settings.LOG_DIRECTORY if directory is None else directory
        super().__init__(name, directory)
        self.quiet = quiet

    def setup(self):
        """Create the log directory and the handlers."""
        super().setup()
        self.add_handler(
            File,
            Level.DEBUG,
            batched=True,
            format=FILE_FORMAT,
            filename=f"{self.name}.log",
        )
        if not self.quiet:
            self.add_handler(
                Stream, Level.INFO, format=STREAM_FORMAT, output=sys.stdout
            )

    def redirect(self, directory) -> None:
        """Send file output to another directory from now on."""
        self.directory = Path(directory).resolve()
        super().setup()
