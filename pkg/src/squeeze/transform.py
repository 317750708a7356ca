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

"""The squeeze transform: optimization, application and persistence."""

from dataclasses import dataclass
from pathlib import Path

import numpy as np
import torch
from pydantic import Field, root_validator

from hif.matrix import HifMatrix
from squeeze.coherence import (
    mcs_loss,
    normalize_columns,
    surrogate,
    welch_bound,
)
from squeeze.log import logger
from tools.binary import Kind, read_artifact, write_artifact
from tools.config import ConfigModel, setting
from tools.errors import ConfigError, DataError, ShapeError


class SqueezeConfig(ConfigModel):

    """Settings of the squeeze optimizer."""

    dim_entity: int = Field(default_factory=setting("DIM_ENTITY"), ge=2)
    seed: int = Field(default_factory=setting("SEED"), ge=0)
    lr: float = Field(default_factory=setting("SQUEEZE_LR"), gt=0)
    max_iters: int = Field(default_factory=setting("SQUEEZE_MAX_ITERS"), ge=1)
    target_loss: float = Field(
        default_factory=setting("SQUEEZE_TARGET_LOSS"), ge=0, le=1
    )
    plateau_window: int = Field(
        default_factory=setting("SQUEEZE_PLATEAU_WINDOW"), ge=1
    )
    plateau_tolerance: float = Field(
        default_factory=setting("SQUEEZE_PLATEAU_TOLERANCE"), ge=0
    )
    beta_start: float = Field(
        default_factory=setting("SQUEEZE_BETA_START"), gt=0
    )
    beta_end: float = Field(default_factory=setting("SQUEEZE_BETA_END"), gt=0)

    @root_validator(skip_on_failure=True)
    def check_betas(cls, values):
        if values["beta_end"] < values["beta_start"]:
            raise ValueError("beta_end must not be below beta_start")

        return values


@dataclass
class SqueezeTransform:

    """A d_e x |R| matrix with near-orthogonal columns.

    Attributes:
        matrix: the transform, columns of unit norm.
        final_mcs_loss: the coherence of `matrix`.
        initial_loss: the coherence of the initial random draw.
        iterations: the optimizer iterations used.
        converged: whether the target loss was reached.
        seed: the seed of the initial draw.

    """

    matrix: np.ndarray
    final_mcs_loss: float
    initial_loss: float
    iterations: int = 0
    converged: bool = True
    seed: int = 0

    @property
    def dim_entity(self) -> int:
        return self.matrix.shape[0]

    @property
    def num_relations(self) -> int:
        return self.matrix.shape[1]

    @property
    def welch_floor(self) -> float:
        return welch_bound(self.dim_entity, self.num_relations)

    def column(self, index: int) -> np.ndarray:
        return self.matrix[:, index]

    def save(self, path: str | Path) -> Path:
        """Write the transform with the binary artifact layout."""
        header = {
            "dim_entity": self.dim_entity,
            "num_relations": self.num_relations,
            "seed": self.seed,
            "initial_loss": self.initial_loss,
            "final_loss": self.final_mcs_loss,
            "iterations": self.iterations,
            "converged": int(self.converged),
        }
        return write_artifact(path, Kind.SQUEEZE, header, [self.matrix])

    @classmethod
    def load(cls, path: str | Path) -> "SqueezeTransform":
        """Read a transform written by `save`."""
        _, header, matrices = read_artifact(path, Kind.SQUEEZE)
        (matrix,) = matrices
        if matrix.shape != (header["dim_entity"], header["num_relations"]):
            raise DataError(f"{path}: header and matrix shapes disagree")

        return cls(
            matrix,
            header["final_loss"],
            header["initial_loss"],
            header["iterations"],
            bool(header["converged"]),
            header["seed"],
        )


def _orthonormal(dim: int, count: int, rng) -> np.ndarray:
    """Return `count` orthonormal columns of dimension `dim`."""
    basis, _ = np.linalg.qr(rng.standard_normal((dim, count)))
    return basis


def optimize_transform(
    d_e: int,
    num_relations: int,
    seed: int | None = None,
    lr: float | None = None,
    max_iters: int | None = None,
    target_loss: float | None = None,
    config: SqueezeConfig | None = None,
) -> SqueezeTransform:
    """Find a transform whose columns are nearly orthogonal.

    Columns start from a seeded standard normal draw.  Each iteration
    takes a `torch.optim.Adam` step of learning rate `lr` on the
    log-sum-exp surrogate, then renormalizes the columns.  The
    temperature grows geometrically from `beta_start` to `beta_end`.
    The optimizer stops when the true coherence reaches the target,
    after `max_iters`, or when the best coherence improved by less than
    `plateau_tolerance` over `plateau_window` iterations.  The best
    matrix seen is returned.

    Args:
        d_e (int): the embedding dimension, at least 2.
        num_relations (int): the number of columns, at least 2.
        seed, lr, max_iters, target_loss: override `config`.
        config (SqueezeConfig, optional): other settings, read from
                the project settings if not given.

    Returns:
        transform (SqueezeTransform): the best transform found.  Its
                `converged` flag is off if the target wasn't reached.

    """
    config = (config or SqueezeConfig.build(dim_entity=d_e)).update(
        dim_entity=d_e,
        seed=seed,
        lr=lr,
        max_iters=max_iters,
        target_loss=target_loss,
    )
    if num_relations < 2:
        raise ConfigError("squeezing needs at least 2 relations")

    rng = np.random.default_rng(config.seed)
    if d_e >= num_relations:
        matrix = _orthonormal(d_e, num_relations, rng)
        loss = mcs_loss(matrix)
        logger.info("orthonormal transform", dim=d_e, loss=loss)
        return SqueezeTransform(matrix, loss, loss, 0, True, config.seed)

    draw = rng.standard_normal((d_e, num_relations))
    initial = mcs_loss(draw)
    current, _ = normalize_columns(draw)
    best, best_loss = current.copy(), initial
    history = [best_loss]
    # `matrix` shares the memory of `current`.
    matrix = torch.nn.Parameter(torch.from_numpy(current))
    optimizer = torch.optim.Adam([matrix], lr=config.lr)
    ratio = config.beta_end / config.beta_start
    span = max(1, config.max_iters - 1)
    converged = best_loss <= config.target_loss
    iteration = 0
    while not converged and iteration < config.max_iters:
        beta = config.beta_start * ratio ** (iteration / span)
        iteration += 1
        optimizer.zero_grad()
        surrogate(matrix, beta).backward()
        optimizer.step()
        with torch.no_grad():
            matrix /= torch.linalg.vector_norm(matrix, dim=0)

        loss = mcs_loss(current)
        if loss < best_loss:
            best, best_loss = current.copy(), loss

        converged = best_loss <= config.target_loss
        history.append(best_loss)
        window = config.plateau_window
        if len(history) > window:
            if history[-window - 1] - best_loss < config.plateau_tolerance:
                logger.debug("coherence plateau", iteration=iteration)
                break

    transform = SqueezeTransform(
        best, best_loss, initial, iteration, converged, config.seed
    )
    fields = dict(
        initial=round(initial, 6),
        final=round(best_loss, 6),
        welch=round(transform.welch_floor, 6),
        iterations=iteration,
    )
    if converged:
        logger.info("squeeze transform optimized", **fields)
    else:
        logger.warning(
            "squeeze target not reached", target=config.target_loss, **fields
        )

    return transform


def apply_squeeze(
    transform: SqueezeTransform | np.ndarray, hif: HifMatrix | np.ndarray
) -> np.ndarray:
    """Project HIF-entity vectors to the embedding dimension.

    Row u of the result is `M @ w_u`.

    Raises:
        ShapeError: the transform and the HIF matrix don't match.

    """
    matrix = getattr(transform, "matrix", transform)
    data = getattr(hif, "data", hif)
    matrix = np.asarray(matrix, dtype=np.float64)
    data = np.asarray(data, dtype=np.float64)
    if matrix.ndim != 2 or data.ndim != 2 or matrix.shape[1] != data.shape[1]:
        raise ShapeError(
            f"cannot apply a {matrix.shape} transform to {data.shape} rows"
        )

    return data @ matrix.T


def cosine_distortion(
    transform: SqueezeTransform | np.ndarray,
    hif: HifMatrix | np.ndarray,
    pairs: int = 1000,
    seed: int = 0,
) -> float:
    """Return the median cosine change over random pairs of HIF rows.

    Pairs are drawn among distinct rows that stay non-zero after the
    projection.

    Returns:
        distortion (float): the median of
                |cos(M v1, M v2) - cos(v1, v2)| over the pairs.

    """
    data = np.asarray(getattr(hif, "data", hif), dtype=np.float64)
    projected = apply_squeeze(transform, data)
    rows = np.flatnonzero(
        data.any(axis=1) & (np.linalg.norm(projected, axis=1) > 1e-12)
    )
    if len(rows) < 2:
        raise ShapeError("cosine distortion needs two non-zero rows")

    rng = np.random.default_rng(seed)
    left = rng.choice(rows, size=pairs)
    shift = rng.integers(1, len(rows), size=pairs)
    positions = np.searchsorted(rows, left)
    right = rows[(positions + shift) % len(rows)]
    before = _row_cosines(data, left, right)
    after = _row_cosines(projected, left, right)
    return float(np.median(np.abs(after - before)))


def _row_cosines(
    matrix: np.ndarray, left: np.ndarray, right: np.ndarray
) -> np.ndarray:
    first, second = matrix[left], matrix[right]
    dots = np.einsum("ij,ij->i", first, second)
    norms = np.linalg.norm(first, axis=1) * np.linalg.norm(second, axis=1)
    return np.clip(dots / norms, -1.0, 1.0)
