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

"""Mutual coherence of matrix columns and its smooth surrogate.

The coherence of a matrix is the largest absolute cosine between two
of its columns.  It isn't differentiable where several pairs tie, so
the optimizer descends a log-sum-exp over the squared pairwise
cosines instead:

    L_beta(M) = 1 / beta * log(sum over i < j of exp(beta * g_ij ** 2))

where g_ij is the cosine of columns i and j.  As beta grows, L_beta
tends to the squared coherence.

"""

import math

import numpy as np
import torch

from tools.errors import DegenerateMatrixError, ShapeError


def normalize_columns(matrix: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Return the unit-norm columns of a matrix and the column norms.

    Raises:
        DegenerateMatrixError: a column is zero.

    """
    matrix = np.asarray(matrix, dtype=np.float64)
    norms = np.linalg.norm(matrix, axis=0)
    if (zeros := np.flatnonzero(norms == 0)).size:
        raise DegenerateMatrixError(
            f"zero column(s) {zeros.tolist()[:10]}, cosine is undefined"
        )

    return matrix / norms, norms


def cosine_gram(matrix: np.ndarray) -> np.ndarray:
    """Return the matrix of cosines between all pairs of columns."""
    unit, _ = normalize_columns(matrix)
    return unit.T @ unit


def mcs_loss(matrix: np.ndarray) -> float:
    """Return the largest absolute cosine between two distinct columns.

    Raises:
        ShapeError: the matrix has fewer than two columns.
        DegenerateMatrixError: a column is zero.

    """
    matrix = np.asarray(matrix, dtype=np.float64)
    if matrix.ndim != 2 or matrix.shape[1] < 2:
        raise ShapeError("the coherence needs a matrix of 2 columns or more")

    gram = cosine_gram(matrix)
    upper = np.triu_indices(gram.shape[0], k=1)
    return float(min(1.0, np.abs(gram[upper]).max()))


def welch_bound(dim: int, count: int) -> float:
    """Return the lowest coherence `count` vectors of `dim` can reach."""
    if count <= dim:
        return 0.0

    return math.sqrt((count - dim) / (dim * (count - 1)))


def surrogate(matrix: torch.Tensor, beta: float) -> torch.Tensor:
    """Return the log-sum-exp surrogate of a d x n tensor, differentiable.

    Columns are normalized inside the expression, so the gradient
    doesn't move them along their own direction.

    """
    unit = matrix / torch.linalg.vector_norm(matrix, dim=0)
    gram = unit.T @ unit
    rows, columns = torch.triu_indices(*gram.shape, offset=1)
    return torch.logsumexp(beta * gram[rows, columns] ** 2, dim=0) / beta


def surrogate_loss(matrix: np.ndarray, beta: float) -> float:
    """Return the log-sum-exp surrogate of the squared coherence.

    Raises:
        DegenerateMatrixError: a column is zero.

    """
    unit, _ = normalize_columns(matrix)
    with torch.no_grad():
        return float(surrogate(torch.from_numpy(unit), beta))
