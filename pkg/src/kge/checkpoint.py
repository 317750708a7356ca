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

"""Checkpoints of embedding sets, with the binary artifact layout."""

from dataclasses import dataclass
from pathlib import Path

from kge.embedding import EmbeddingSet
from kge.models import TranslationalModel, model_from_code
from tools.binary import Kind, read_artifact, write_artifact
from tools.errors import DataError

NO_HASH = bytes(16)


@dataclass
class Checkpoint:

    """A loaded checkpoint."""

    model: TranslationalModel
    embeddings: EmbeddingSet
    epoch: int
    config_hash: bytes
    bootstrap: bool


def save_checkpoint(
    path: str | Path,
    model: TranslationalModel,
    embeddings: EmbeddingSet,
    epoch: int,
    config_hash: bytes = NO_HASH,
    bootstrap: bool = False,
) -> Path:
    """Write the parameters of a model.

    Args:
        path (str or Path): the file to write.
        model (TranslationalModel): the model the parameters belong to.
        embeddings (EmbeddingSet): the parameters.
        epoch (int): the epoch they were taken at.
        config_hash (bytes): the 16-byte hash of the configuration.
        bootstrap (bool): whether this is a HIF-relation bootstrap.

    """
    header = {
        "model": model.code,
        "norm_p": model.norm_p,
        "dim_entity": embeddings.dim_entity,
        "dim_relation": embeddings.dim_relation,
        "num_entities": embeddings.num_entities,
        "num_relations": embeddings.num_relations,
        "epoch": epoch,
        "config_hash": config_hash,
    }
    kind = Kind.BOOTSTRAP if bootstrap else Kind.CHECKPOINT
    matrices = list(embeddings.parameters().values())
    return write_artifact(path, kind, header, matrices)


def load_checkpoint(path: str | Path) -> Checkpoint:
    """Read a checkpoint or a bootstrap artifact."""
    kind, header, matrices = read_artifact(path)
    if kind not in (Kind.CHECKPOINT, Kind.BOOTSTRAP):
        raise DataError(f"{path} holds a {kind.name} artifact")

    model = model_from_code(header["model"], header["norm_p"])
    if len(matrices) < 2:
        raise DataError(f"{path}: missing parameter matrices")

    entities, relations, *extra = matrices
    embeddings = EmbeddingSet(entities, relations)
    match model.name, extra:
        case "TransH", [normals]:
            embeddings.normals = normals
        case "TransR", [projections]:
            embeddings.projections = projections
        case "TransE", []:
            pass
        case _:
            raise DataError(f"{path}: unexpected matrices for {model.name}")

    expected = (header["num_entities"], header["dim_entity"])
    if entities.shape != expected:
        raise DataError(f"{path}: header and entity shapes disagree")

    return Checkpoint(
        model,
        embeddings,
        header["epoch"],
        header["config_hash"],
        kind is Kind.BOOTSTRAP,
    )
