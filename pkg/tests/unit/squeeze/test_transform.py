import numpy as np
import pytest

from hif.matrix import HifMatrix
from squeeze.coherence import mcs_loss, normalize_columns, welch_bound
from squeeze.transform import (
    SqueezeConfig,
    SqueezeTransform,
    apply_squeeze,
    cosine_distortion,
    optimize_transform,
)
from tools.errors import ConfigError, ShapeError


@pytest.fixture(scope="module")
def large_transform():
    return optimize_transform(100, 237, seed=0)


def test_large_transform_reaches_target(large_transform):
    assert large_transform.matrix.shape == (100, 237)
    assert large_transform.initial_loss > 0.2
    assert large_transform.final_mcs_loss <= 0.15
    assert large_transform.converged
    assert large_transform.final_mcs_loss >= welch_bound(100, 237)
    assert mcs_loss(large_transform.matrix) == pytest.approx(
        large_transform.final_mcs_loss
    )
    np.testing.assert_allclose(
        np.linalg.norm(large_transform.matrix, axis=0), 1.0
    )


def test_large_transform_preserves_angles(large_transform):
    rng = np.random.default_rng(1)
    rows = rng.normal(size=(500, 237))
    optimized = cosine_distortion(large_transform, rows, pairs=1000)
    random, _ = normalize_columns(
        np.random.default_rng(0).standard_normal((100, 237))
    )
    unoptimized = cosine_distortion(random, rows, pairs=1000)
    assert optimized <= 0.1
    assert optimized < unoptimized


def test_enough_dimensions_give_orthonormal_columns():
    transform = optimize_transform(10, 6, seed=1)
    assert transform.converged
    assert transform.iterations == 0
    assert transform.final_mcs_loss == pytest.approx(0.0, abs=1e-12)
    np.testing.assert_allclose(
        transform.matrix.T @ transform.matrix, np.eye(6), atol=1e-12
    )


def test_optimizer_improves_coherence():
    transform = optimize_transform(8, 20, seed=3, max_iters=300)
    assert transform.final_mcs_loss < transform.initial_loss
    assert 0 < transform.iterations <= 300


def test_optimizer_is_deterministic():
    first = optimize_transform(8, 20, seed=3, max_iters=100)
    second = optimize_transform(8, 20, seed=3, max_iters=100)
    other = optimize_transform(8, 20, seed=4, max_iters=100)
    assert np.array_equal(first.matrix, second.matrix)
    assert not np.array_equal(first.matrix, other.matrix)


def test_unreached_target_is_flagged():
    transform = optimize_transform(4, 12, seed=0, max_iters=5, target_loss=0)
    assert not transform.converged
    assert transform.iterations <= 5


def test_one_relation_cannot_be_squeezed():
    with pytest.raises(ConfigError):
        optimize_transform(4, 1)


def test_config_rejects_inverted_temperatures():
    with pytest.raises(ConfigError):
        SqueezeConfig.build(beta_start=100.0, beta_end=10.0)


def test_save_and_load(tmp_path):
    transform = optimize_transform(4, 9, seed=2, max_iters=20)
    loaded = SqueezeTransform.load(transform.save(tmp_path / "squeeze.bin"))
    assert np.array_equal(loaded.matrix, transform.matrix)
    assert loaded.final_mcs_loss == transform.final_mcs_loss
    assert loaded.initial_loss == transform.initial_loss
    assert loaded.iterations == transform.iterations
    assert loaded.converged == transform.converged
    assert loaded.seed == 2


def test_apply_projects_rows():
    rng = np.random.default_rng(6)
    transform = optimize_transform(3, 5, seed=0, max_iters=10)
    hif = HifMatrix(rng.normal(size=(7, 5)), 2)
    squeezed = apply_squeeze(transform, hif)
    assert squeezed.shape == (7, 3)
    np.testing.assert_allclose(squeezed[2], transform.matrix @ hif.row(2))


def test_apply_rejects_mismatched_shapes():
    with pytest.raises(ShapeError):
        apply_squeeze(np.ones((3, 5)), np.ones((7, 4)))


def test_distortion_needs_two_rows():
    with pytest.raises(ShapeError):
        cosine_distortion(np.eye(3), np.array([[1.0, 0.0, 0.0], [0, 0, 0]]))
