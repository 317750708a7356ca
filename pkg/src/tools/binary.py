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

"""Binary artifact codec.

Every persisted matrix artifact (HIF matrices, squeeze transforms,
checkpoints) shares one layout, all little-endian:

    magic        4 bytes, b"KGHA"
    version      uint16
    kind         uint16 (see `Kind`)
    header       fixed struct, one layout per kind (see `HEADERS`)
    count        uint16, number of matrices
    for each matrix:
        ndim     uint8
        shape    ndim x uint64
        data     row-major float64

Writing the same content twice produces the same bytes.

"""

from enum import IntEnum
from pathlib import Path
import struct
from typing import Any, Sequence

import numpy as np

from tools.errors import DataError

MAGIC = b"KGHA"
VERSION = 1
_PREAMBLE = struct.Struct("<4sHH")
_COUNT = struct.Struct("<H")
_NDIM = struct.Struct("<B")


class Kind(IntEnum):

    """Artifact kinds."""

    HIF = 1
    SQUEEZE = 2
    CHECKPOINT = 3
    BOOTSTRAP = 4


HEADERS = {
    Kind.HIF: (
        struct.Struct("<QQIdBB"),
        (
            "num_entities",
            "dim",
            "iterations",
            "alpha",
            "semiring",
            "identity_each_step",
        ),
    ),
    Kind.SQUEEZE: (
        struct.Struct("<QQqddQB"),
        (
            "dim_entity",
            "num_relations",
            "seed",
            "initial_loss",
            "final_loss",
            "iterations",
            "converged",
        ),
    ),
    Kind.CHECKPOINT: (
        struct.Struct("<BBQQQQQ16s"),
        (
            "model",
            "norm_p",
            "dim_entity",
            "dim_relation",
            "num_entities",
            "num_relations",
            "epoch",
            "config_hash",
        ),
    ),
}
HEADERS[Kind.BOOTSTRAP] = HEADERS[Kind.CHECKPOINT]


def write_artifact(
    path: str | Path,
    kind: Kind,
    header: dict[str, Any],
    matrices: Sequence[np.ndarray],
) -> Path:
    """Write an artifact.

    Args:
        path (str or Path): the file to write, parents are created.
        kind (Kind): the artifact kind.
        header (dict): the header fields, see `HEADERS`.
        matrices (sequence of arrays): the matrices to store.

    Returns:
        path (Path): the written path.

    """
    path = Path(path)
    layout, names = HEADERS[kind]
    values = [header[name] for name in names]
    chunks = [
        _PREAMBLE.pack(MAGIC, VERSION, int(kind)),
        layout.pack(*values),
        _COUNT.pack(len(matrices)),
    ]
    for matrix in matrices:
        array = np.ascontiguousarray(matrix, dtype="<f8")
        chunks.append(_NDIM.pack(array.ndim))
        chunks.append(struct.pack(f"<{array.ndim}Q", *array.shape))
        chunks.append(array.tobytes(order="C"))

    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_bytes(b"".join(chunks))
    return path


def read_artifact(
    path: str | Path, kind: Kind | None = None
) -> tuple[Kind, dict[str, Any], list[np.ndarray]]:
    """Read an artifact written by `write_artifact`.

    Args:
        path (str or Path): the file to read.
        kind (Kind, optional): the expected kind.

    Returns:
        (kind, header, matrices).

    Raises:
        DataError: the file isn't a valid artifact, or of another kind.

    """
    path = Path(path)
    try:
        content = path.read_bytes()
    except OSError as err:
        raise DataError(f"cannot read {path}: {err}") from None

    try:
        magic, version, raw_kind = _PREAMBLE.unpack_from(content, 0)
    except struct.error:
        raise DataError(f"{path} is too short to be an artifact") from None

    if magic != MAGIC:
        raise DataError(f"{path} is not an artifact (bad magic {magic!r})")

    if version != VERSION:
        raise DataError(f"{path}: unsupported version {version}")

    try:
        found = Kind(raw_kind)
    except ValueError:
        raise DataError(f"{path}: unknown artifact kind {raw_kind}") from None

    if kind is not None and found is not kind:
        raise DataError(
            f"{path} holds a {found.name} artifact, expected {kind.name}"
        )

    layout, names = HEADERS[found]
    offset = _PREAMBLE.size
    header = dict(zip(names, layout.unpack_from(content, offset)))
    offset += layout.size
    (count,) = _COUNT.unpack_from(content, offset)
    offset += _COUNT.size

    matrices = []
    try:
        for _ in range(count):
            (ndim,) = _NDIM.unpack_from(content, offset)
            offset += _NDIM.size
            shape = struct.unpack_from(f"<{ndim}Q", content, offset)
            offset += 8 * ndim
            size = int(np.prod(shape, dtype=np.int64))
            data = np.frombuffer(
                content, dtype="<f8", count=size, offset=offset
            )
            matrices.append(data.reshape(shape).astype(np.float64))
            offset += 8 * size
    except (struct.error, ValueError):
        raise DataError(f"{path}: truncated artifact") from None

    if offset != len(content):
        raise DataError(f"{path}: {len(content) - offset} trailing bytes")

    return found, header, matrices
