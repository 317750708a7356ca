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

"""Abstract class for pipeline services.

A service is in charge of one stage of the pipeline (building
HIF-entity vectors, squeezing, training, evaluating...).  It exposes
methods doing the work on objects already loaded, used by the pipeline,
and `action_<command>` methods called by the launcher with the parsed
command-line arguments.

Services of the same process reach each other with `sibling`: the
pipeline service, for one, calls every stage service in turn.

"""

from abc import ABCMeta, abstractmethod

from process.base import Process
from tools.logging import Logger


class BaseService(metaclass=ABCMeta):

    """Abstract service, from which all services should inherit.

    Class variables:
        name: the service name, also its key in the process services.

    Methods:
        init: when the service starts.
        cleanup: when the service is about to stop.

    """

    name: str

    def __init__(self, process: Process):
        self.process = process
        self.logger = process.logger
        self.started = False

    def __repr__(self):
        state = "running" if self.started else "not running"
        return f"<Service {self.name}, {state}>"

    def start(self):
        """Start the service."""
        self.logger.debug(f"Starting service {self.name}.")
        self.init()
        self.started = True

    def stop(self):
        """Stop the service."""
        self.cleanup()
        self.started = False

    def sibling(self, name: str) -> "BaseService":
        """Return another service of the same process."""
        return self.process.services[name]

    def stage(self, name: str) -> Logger:
        """Return the logger tagging messages with this stage."""
        return self.logger.stage(name)

    @abstractmethod
    def init(self):
        """Initialize the service."""
        pass

    def cleanup(self):
        """Clean the service up before it stops."""
        pass
