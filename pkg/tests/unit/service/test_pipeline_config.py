import pytest
import yaml

from service.config import (
    DatasetConfig,
    PipelineConfig,
    build_pipeline_config,
    merge_options,
    read_config_file,
)
from tools.errors import ConfigError


def test_dataset_needs_a_source(toy_directory):
    with pytest.raises(ConfigError):
        DatasetConfig.build()

    with pytest.raises(ConfigError):
        DatasetConfig.build(
            directory=toy_directory, train=toy_directory / "train.txt"
        )

    with pytest.raises(ConfigError):
        DatasetConfig.build(test=toy_directory / "test.txt")


def test_dataset_missing_path(tmp_path):
    with pytest.raises(ConfigError):
        DatasetConfig.build(directory=tmp_path / "missing")


def test_dataset_from_files(toy_directory):
    config = DatasetConfig.build(
        train=toy_directory / "train.txt", test=toy_directory / "test.txt"
    )
    dataset = config.load()
    assert len(dataset.train) == 42
    assert len(dataset.valid) == 0
    assert len(dataset.test) == 4


def test_seed_is_propagated(toy_directory):
    config = PipelineConfig.build(
        dataset={"directory": toy_directory},
        train={"dim_entity": 16, "dim_relation": 16, "seed": 9},
        seed=5,
    )
    assert config.train.seed == 5
    assert config.squeeze.seed == 5
    assert config.squeeze.dim_entity == 16


def test_transr_inheritance_needs_equal_dimensions(toy_directory):
    train = {"model": "TransR", "dim_entity": 16, "dim_relation": 8}
    with pytest.raises(ConfigError):
        PipelineConfig.build(dataset={"directory": toy_directory}, train=train)

    config = PipelineConfig.build(
        dataset={"directory": toy_directory},
        train=train,
        transr_inherit=False,
    )
    assert config.train.dim_relation == 8


def test_with_cell(toy_directory):
    config = PipelineConfig.build(dataset={"directory": toy_directory})
    cell = config.with_cell(2, 6, 0.002)
    assert cell.train.norm_p == 2
    assert cell.train.lr == 0.002
    assert cell.dp.iterations == 6
    assert cell.dataset == config.dataset
    assert cell.config_hash() != config.config_hash()


def test_merge_options_ignores_none():
    base = {"dp": {"iterations": 4, "alpha": 0.9}, "seed": 1}
    options = {"dp": {"iterations": 2, "alpha": None}, "seed": None}
    assert merge_options(base, options) == {
        "dp": {"iterations": 2, "alpha": 0.9},
        "seed": 1,
    }
    assert merge_options({}, {"train": {"lr": None}}) == {}


def test_read_config_file(tmp_path):
    path = tmp_path / "run.yaml"
    path.write_text("dp:\n  iterations: 3\n", encoding="utf-8")
    assert read_config_file(path) == {"dp": {"iterations": 3}}

    path.write_text("", encoding="utf-8")
    assert read_config_file(path) == {}

    path.write_text("- 1\n- 2\n", encoding="utf-8")
    with pytest.raises(ConfigError):
        read_config_file(path)

    path.write_text("dp: [1\n", encoding="utf-8")
    with pytest.raises(ConfigError):
        read_config_file(path)

    with pytest.raises(ConfigError):
        read_config_file(tmp_path / "missing.yaml")


def test_read_manifest_as_config(tmp_path):
    path = tmp_path / "manifest.yaml"
    content = {"config": {"seed": 4}, "config_hash": "00", "stages": {}}
    path.write_text(yaml.safe_dump(content), encoding="utf-8")
    assert read_config_file(path) == {"seed": 4}


def test_options_override_file(tmp_path, toy_directory):
    path = tmp_path / "run.yaml"
    content = {
        "dataset": {"directory": str(toy_directory)},
        "dp": {"iterations": 3, "alpha": 0.5},
        "seed": 2,
    }
    path.write_text(yaml.safe_dump(content), encoding="utf-8")
    config = build_pipeline_config(
        path, {"dp": {"iterations": 6, "alpha": None}, "seed": None}
    )
    assert config.dp.iterations == 6
    assert config.dp.alpha == 0.5
    assert config.seed == 2


def test_dataset_options_replace_file_section(tmp_path, toy_directory):
    path = tmp_path / "run.yaml"
    content = {"dataset": {"directory": str(toy_directory)}}
    path.write_text(yaml.safe_dump(content), encoding="utf-8")
    train = toy_directory / "train.txt"
    config = build_pipeline_config(
        path, {"dataset": {"directory": None, "train": str(train)}}
    )
    assert config.dataset.directory is None
    assert config.dataset.train == train.resolve()


def test_invalid_pipeline_options(toy_directory):
    with pytest.raises(ConfigError):
        build_pipeline_config(
            options={
                "dataset": {"directory": str(toy_directory)},
                "dp": {"iterations": 0},
            }
        )
