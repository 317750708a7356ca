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

"""Worker count and chunked parallel map."""

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Sequence, TypeVar

import psutil

from tools.settings import settings

T = TypeVar("T")


def resolve_jobs(jobs: int | None = None) -> int:
    """Return the number of workers to use.

    Args:
        jobs (int, optional): the requested count.  `None` uses the
                `jobs` setting, 0 means one worker per physical core.

    """
    if jobs is None:
        jobs = settings.JOBS

    if jobs <= 0:
        jobs = psutil.cpu_count(logical=False) or psutil.cpu_count() or 1

    return jobs


def chunk_bounds(size: int, chunks: int) -> list[tuple[int, int]]:
    """Split `range(size)` into at most `chunks` contiguous bounds."""
    chunks = max(1, min(chunks, size))
    step, remainder = divmod(size, chunks)
    bounds = []
    begin = 0
    for index in range(chunks):
        end = begin + step + (1 if index < remainder else 0)
        if end > begin:
            bounds.append((begin, end))
        begin = end

    return bounds


def map_chunks(
    function: Callable[[int, int], T], size: int, jobs: int | None = None
) -> Sequence[T]:
    """Apply `function(begin, end)` to contiguous chunks of `range(size)`.

    Results are returned in chunk order, whatever the completion
    order, so that merging them is deterministic.  With one worker
    the function runs in the calling thread.

    """
    jobs = resolve_jobs(jobs)
    bounds = chunk_bounds(size, jobs)
    if jobs == 1 or len(bounds) <= 1:
        return [function(begin, end) for begin, end in bounds]

    with ThreadPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(function, begin, end) for begin, end in bounds]
        return [future.result() for future in futures]
