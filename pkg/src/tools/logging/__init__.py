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

"""Package containing the project logging system.

Loggers, handlers and batches are defined in sub-modules.  Log calls
accept keyword fields that are rendered after the message, which keeps
numeric diagnostics greppable:

```python
from tools.logging.run import RunLogger

logger = RunLogger("train")
logger.setup()
logger.info("epoch done", epoch=3, loss=0.4127)
# stdout: epoch done epoch=3 loss=0.4127
# logs/train.log: 12:04,221 INFO epoch done epoch=3 loss=0.4127
```

A stage sub-logger tags every message with the stage name, and the
`Stage` batch writes a header line in files whenever the stage changes:

```python
stage = logger.stage("squeeze")
stage.info("converged", loss=0.142)
# logs/train.log:
# -- Stage squeeze:
# 12:05,003 INFO [squeeze] converged loss=0.142
```

"""

from tools.logging.handler import File, Stream  # noqa: F401
from tools.logging.level import Level  # noqa: F401
from tools.logging.logger import Logger  # noqa: F401
from tools.logging.stage import Stage  # noqa: F401
