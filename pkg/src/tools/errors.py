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

"""Exception hierarchy shared by every stage.

Each exception class carries the exit code the launcher should
return when it escapes a command.  Stages raise the most specific
class they can, the launcher only catches `KgHaitError`.

"""

from typing import Sequence


class KgHaitError(Exception):

    """Base class for all errors raised by the pipeline."""

    exit_code = 1


class ConfigError(KgHaitError):

    """A configuration value is invalid or missing."""

    exit_code = 2


class UsageError(ConfigError):

    """The command line was used incorrectly."""


class DataError(KgHaitError):

    """Input data is malformed or inconsistent."""

    exit_code = 3


class ParseError(DataError):

    """A triple line couldn't be parsed."""

    def __init__(self, message: str, line_number: int, path: str = ""):
        self.line_number = line_number
        self.path = path
        where = f"{path}:{line_number}" if path else f"line {line_number}"
        super().__init__(f"{where}: {message}")


class LookupFailure(DataError):

    """One or more names couldn't be resolved in a vocabulary."""

    def __init__(self, message: str, offenders: Sequence[str]):
        self.offenders = list(offenders)
        listed = ", ".join(repr(name) for name in self.offenders)
        super().__init__(f"{message}: {listed}")


class NumericError(KgHaitError):

    """A numerical routine failed or received degenerate input."""

    exit_code = 4


class ShapeError(NumericError):

    """Matrix dimensions do not agree."""


class DegenerateMatrixError(NumericError):

    """A matrix has a zero column where cosines are required."""


class UndefinedSimilarityError(NumericError):

    """A cosine similarity was requested on a zero vector."""


class OracleScaleError(NumericError):

    """The reference recursion was asked to enumerate too many paths."""


class DivergenceError(NumericError):

    """Training produced a non-finite loss."""
