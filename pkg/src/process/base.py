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

"""The abstract process class.

A process owns a logger and a set of services, loaded by name from the
`service` package when the process starts.  Processes run synchronously:
`run` starts the services, calls `setup`, stops the services and exits
with the code `setup` left in `exit_code`.

"""

from abc import ABCMeta, abstractmethod
from importlib import import_module
import os
import sys

from tools.logging.run import RunLogger


class Process(metaclass=ABCMeta):

    """Abstract class for a process.

    Class variables:
        name: the process name, also the name of its log file.
        services: the names of the services to load, in order.

    """

    name: str
    services: tuple[str, ...] = ()

    def __init__(self):
        self.pid = os.getpid()
        self.services = {}
        self.exit_code = 0
        self.logger = RunLogger(self.name)
        self.logger.setup()

    def __repr__(self):
        return f"<Process {self.name} (PID={self.pid})>"

    def start(self):
        """Load and start the services."""
        self.logger.debug(f"Starting process (PID={self.pid})...")
        for name in type(self).services:
            module = import_module(f"service.{name}")
            service = module.Service(process=self)
            self.services[name] = service
            service.start()

        self.logger.debug("... process started.")

    def stop(self):
        """Stop the services, in reverse order."""
        self.logger.debug("Stopping process...")
        for service in reversed(list(self.services.values())):
            service.stop()

        self.logger.debug("... process stopped.")

    @abstractmethod
    def setup(self):
        """Called when services have all been started."""
        pass

    @abstractmethod
    def cleanup(self):
        """Called when the process is about to be stopped."""
        pass

    def run(self):
        """Run the process and exit with its exit code."""
        self.start()
        try:
            self.setup()
        finally:
            self.cleanup()
            self.stop()

        sys.exit(self.exit_code)
