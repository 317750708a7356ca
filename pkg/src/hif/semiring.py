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

"""Operator pairs of the HIF dynamic program.

Every semiring combines a neighbour's previous vector with the triple
weight by elementwise product.  They differ by how terms are aggregated
on each side (in-coming and out-going triples) and by how both sides
are merged into the new vector:

| Semiring           | Side aggregate | Merge        | Empty side |
| ------------------ | -------------- | ------------ | ---------- |
| concrete-max-decay | max            | out - in     | e(u)       |
| sum-product        | sum            | in + out     | 0          |
| max-product        | max            | max(in, out) | e(u)       |

The empty-side value only applies when the identity vector isn't
re-injected at every step (with re-injection, both sides start from
e(u) anyway).

"""

from enum import Enum

import numpy as np


class Semiring(str, Enum):

    """The available (aggregate, combine) operator pairs."""

    CONCRETE = "concrete-max-decay"
    SUM_PRODUCT = "sum-product"
    MAX_PRODUCT = "max-product"

    @property
    def code(self) -> int:
        """Return the integer tag stored in artifact headers."""
        return list(type(self)).index(self) + 1

    @classmethod
    def from_code(cls, code: int) -> "Semiring":
        return list(cls)[code - 1]

    @property
    def aggregate(self) -> np.ufunc:
        """Return the ufunc aggregating terms of one side."""
        return np.add if self is Semiring.SUM_PRODUCT else np.maximum

    @property
    def seeds_empty_with_identity(self) -> bool:
        """Return whether an empty side falls back to e(u)."""
        return self is not Semiring.SUM_PRODUCT

    def plus(self, left, right):
        """Aggregate two terms."""
        return self.aggregate(left, right)

    def merge(self, incoming, outgoing):
        """Merge the in-coming and out-going aggregates."""
        match self:
            case Semiring.CONCRETE:
                return outgoing - incoming
            case Semiring.SUM_PRODUCT:
                return incoming + outgoing
            case Semiring.MAX_PRODUCT:
                return np.maximum(incoming, outgoing)
