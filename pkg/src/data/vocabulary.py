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

"""Bidirectional name/identifier maps."""

from dataclasses import dataclass, field
from typing import Iterable, Iterator


class Vocabulary:

    """Bijection between names and dense identifiers.

    Identifiers are assigned in first-seen order, starting at 0.

    """

    def __init__(self, names: Iterable[str] = ()):
        self.names: list[str] = []
        self.ids: dict[str, int] = {}
        for name in names:
            self.add(name)

    def __repr__(self):
        return f"<Vocabulary of {len(self)} names>"

    def __len__(self) -> int:
        return len(self.names)

    def __contains__(self, name: str) -> bool:
        return name in self.ids

    def __iter__(self) -> Iterator[str]:
        return iter(self.names)

    def __getitem__(self, name: str) -> int:
        return self.ids[name]

    def add(self, name: str) -> int:
        """Return the identifier of a name, assigning the next one if new."""
        if (identifier := self.ids.get(name)) is None:
            identifier = len(self.names)
            self.ids[name] = identifier
            self.names.append(name)

        return identifier

    def get(self, name: str, default: int | None = None) -> int | None:
        """Return the identifier of a name or a default."""
        return self.ids.get(name, default)

    def name(self, identifier: int) -> str:
        """Return the name of an identifier."""
        return self.names[identifier]


@dataclass
class Vocabularies:

    """The entity and relation vocabularies of a knowledge graph."""

    entities: Vocabulary = field(default_factory=Vocabulary)
    relations: Vocabulary = field(default_factory=Vocabulary)
