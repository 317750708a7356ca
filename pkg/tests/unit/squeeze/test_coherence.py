import math

import numpy as np
import pytest
import torch

from squeeze.coherence import (
    cosine_gram,
    mcs_loss,
    surrogate,
    surrogate_loss,
    welch_bound,
)
from tools.errors import DegenerateMatrixError, ShapeError


def test_orthonormal_columns_have_zero_coherence():
    assert mcs_loss(np.eye(4)[:, :3]) == pytest.approx(0.0, abs=1e-12)


def test_coherence_of_two_columns():
    matrix = np.array([[1.0, 1.0], [0.0, 1.0]])
    assert mcs_loss(matrix) == pytest.approx(1 / math.sqrt(2))


def test_parallel_columns_have_coherence_one():
    column = np.array([1.0, -2.0, 3.0])
    assert mcs_loss(np.column_stack([column, 2 * column])) == 1.0
    assert mcs_loss(np.column_stack([column, -column])) == 1.0


def test_coherence_ignores_column_scale():
    rng = np.random.default_rng(0)
    matrix = rng.normal(size=(5, 7))
    scaled = matrix * rng.uniform(0.1, 10.0, size=7)
    assert mcs_loss(scaled) == pytest.approx(mcs_loss(matrix))


def test_zero_column_is_degenerate():
    with pytest.raises(DegenerateMatrixError):
        mcs_loss(np.array([[1.0, 0.0], [0.0, 0.0]]))


def test_single_column_has_no_coherence():
    with pytest.raises(ShapeError):
        mcs_loss(np.ones((3, 1)))


def test_gram_diagonal_is_one():
    rng = np.random.default_rng(1)
    gram = cosine_gram(rng.normal(size=(6, 9)))
    np.testing.assert_allclose(np.diag(gram), 1.0)
    np.testing.assert_allclose(gram, gram.T)


def test_welch_bound():
    assert welch_bound(100, 237) == pytest.approx(0.0762, abs=1e-4)
    assert welch_bound(10, 10) == 0.0
    assert welch_bound(10, 4) == 0.0


def test_random_columns_stay_above_welch_bound():
    rng = np.random.default_rng(2)
    for _ in range(10):
        matrix = rng.normal(size=(3, 8))
        assert mcs_loss(matrix) >= welch_bound(3, 8)


@pytest.mark.parametrize("beta", [1.0, 50.0, 1000.0])
def test_surrogate_bounds_the_squared_coherence(beta):
    rng = np.random.default_rng(3)
    matrix = rng.normal(size=(5, 7))
    squared = mcs_loss(matrix) ** 2
    pairs = 7 * 6 // 2
    value = surrogate_loss(matrix, beta)
    assert squared <= value + 1e-12
    assert value <= squared + math.log(pairs) / beta + 1e-12


@pytest.mark.parametrize("beta", [2.0, 10.0])
def test_surrogate_passes_gradient_checks(beta):
    rng = np.random.default_rng(4)
    matrix = torch.from_numpy(rng.normal(size=(5, 7))).requires_grad_()
    assert float(surrogate(matrix, beta)) == pytest.approx(
        surrogate_loss(matrix.detach().numpy(), beta)
    )
    assert torch.autograd.gradcheck(
        lambda value: surrogate(value, beta), (matrix,), eps=1e-6
    )


def test_surrogate_gradient_is_orthogonal_to_columns():
    rng = np.random.default_rng(5)
    matrix = torch.from_numpy(rng.normal(size=(4, 6))).requires_grad_()
    surrogate(matrix, 20.0).backward()
    np.testing.assert_allclose(
        (matrix * matrix.grad).sum(dim=0).detach().numpy(), 0.0, atol=1e-12
    )
