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

"""Configuration of command-line runs.

A pipeline run is described by one `PipelineConfig`, nesting the
configuration of every stage.  It can be read from a YAML file,
command-line options then override the values of the file.

```yaml
dataset:
  directory: toy
dp:
  iterations: 4
train:
  model: TransE
  norm_p: 1
seed: 3
```

"""

from pathlib import Path
from typing import Any, Literal, Optional

from pydantic import Field, root_validator, validator
import yaml

from data.dataset import Dataset, load_dataset, load_dataset_directory
from hif.config import DpConfig
from kge.config import TrainConfig
from squeeze.transform import SqueezeConfig
from tools.config import ConfigModel, setting
from tools.errors import ConfigError
from tools.settings import settings


def resolve_data_path(path: Path) -> Path:
    """Return an existing path, looking in the data directory if needed.

    Raises:
        ValueError: the path exists neither as given nor in the data
                directory.

    """
    path = Path(path)
    if path.exists():
        return path.resolve()

    if not path.is_absolute():
        candidate = Path(settings.DATA_DIR) / path
        if candidate.exists():
            return candidate.resolve()

    raise ValueError(f"{str(path)!r} doesn't exist")


class DatasetConfig(ConfigModel):

    """Where to read a dataset from.

    Either a `directory` holding `train.txt`, `valid.txt` and
    `test.txt`, or explicit split files.  Relative paths that don't
    exist from the current directory are looked up in the data
    directory (the `data_dir` setting, `KGHAIT_DATA_DIR`).

    """

    directory: Optional[Path] = None
    train: Optional[Path] = None
    valid: Optional[Path] = None
    test: Optional[Path] = None

    @validator("directory", "train", "valid", "test")
    def check_exists(cls, value):
        if value is None:
            return value

        return resolve_data_path(value)

    @root_validator(skip_on_failure=True)
    def check_source(cls, values):
        has_directory = values.get("directory") is not None
        has_files = any(
            values.get(name) is not None for name in ("train", "valid", "test")
        )
        if has_directory == has_files:
            raise ValueError("give either a dataset directory or split files")

        if has_files and values.get("train") is None:
            raise ValueError("a training split file is required")

        return values

    def load(self) -> Dataset:
        """Load the dataset."""
        if self.directory is not None:
            return load_dataset_directory(self.directory)

        return load_dataset(self.train, self.valid, self.test)


class BootstrapConfig(ConfigModel):

    """Settings of the HIF-relation bootstrap stage."""

    epochs: int = Field(default_factory=setting("BOOTSTRAP_EPOCHS"), ge=1)
    plateau_window: int = Field(
        default_factory=setting("BOOTSTRAP_PLATEAU_WINDOW"), ge=0
    )
    plateau_tolerance: float = Field(
        default_factory=setting("BOOTSTRAP_PLATEAU_TOLERANCE"), ge=0
    )
    relation_init: Literal["random", "zeros"] = Field(
        default_factory=setting("BOOTSTRAP_RELATION_INIT")
    )


class EvalConfig(ConfigModel):

    """Settings of the evaluation stage."""

    split: Literal["test", "valid"] = "test"
    hits_at: list[int] = Field(default_factory=setting("HITS_AT"))
    convergence_tolerance: float = Field(
        default_factory=setting("CONVERGENCE_TOLERANCE"), gt=0, lt=1
    )
    groups: Optional[Path] = None

    @validator("hits_at")
    def check_hits(cls, value):
        if not value or min(value) < 1:
            raise ValueError("hits_at needs positive values")

        return sorted(set(value))

    @validator("groups")
    def check_groups(cls, value):
        if value is None:
            return value

        return resolve_data_path(value)


class PipelineConfig(ConfigModel):

    """The full configuration of a pipeline run.

    The global `seed` is propagated to the squeeze and training
    stages, and the squeeze dimension follows the entity dimension of
    the training configuration.

    """

    dataset: DatasetConfig
    dp: DpConfig = Field(default_factory=DpConfig)
    squeeze: SqueezeConfig = Field(default_factory=SqueezeConfig)
    bootstrap: BootstrapConfig = Field(default_factory=BootstrapConfig)
    train: TrainConfig = Field(default_factory=TrainConfig)
    evaluation: EvalConfig = Field(default_factory=EvalConfig)
    seed: int = Field(default_factory=setting("SEED"), ge=0)
    transr_inherit: bool = Field(default_factory=setting("TRANSR_INHERIT"))

    @root_validator(skip_on_failure=True)
    def propagate(cls, values):
        seed = values["seed"]
        train = values["train"]
        values["train"] = train.copy(update=dict(seed=seed))
        values["squeeze"] = values["squeeze"].copy(
            update=dict(seed=seed, dim_entity=train.dim_entity)
        )
        if train.model == "TransR" and values["transr_inherit"]:
            if train.dim_relation != train.dim_entity:
                raise ValueError(
                    "TransR inheriting from TransE needs "
                    "dim_relation == dim_entity"
                )

        return values

    def with_cell(
        self, norm_p: int, iterations: int, lr: float
    ) -> "PipelineConfig":
        """Return the configuration of one grid cell."""
        values = self.as_plain()
        values["train"]["norm_p"] = norm_p
        values["train"]["lr"] = lr
        values["dp"]["iterations"] = iterations
        return type(self).build(**values)


def merge_options(base: dict[str, Any], options: dict[str, Any]) -> dict:
    """Merge nested options into `base`, ignoring `None` values."""
    merged = dict(base)
    for key, value in options.items():
        if value is None:
            continue

        if isinstance(value, dict):
            value = merge_options(merged.get(key) or {}, value)
            if not value and key not in merged:
                continue

        merged[key] = value

    return merged


def read_config_file(path: str | Path) -> dict[str, Any]:
    """Read a YAML run configuration.

    A run manifest can be given too, its `config` section is read.

    Raises:
        ConfigError: the file can't be read or isn't a mapping.

    """
    path = Path(path)
    try:
        with path.open("r", encoding=settings.DEFAULT_ENCODING) as file:
            content = yaml.safe_load(file)
    except OSError as err:
        raise ConfigError(f"cannot read {path}: {err.strerror}") from None
    except yaml.YAMLError as err:
        raise ConfigError(f"{path} isn't valid YAML: {err}") from None

    if content is None:
        return {}

    if not isinstance(content, dict):
        raise ConfigError(f"{path} should hold a mapping")

    if "config" in content and "config_hash" in content:
        return content["config"]

    return content


def build_pipeline_config(
    path: str | Path | None = None, options: dict[str, Any] | None = None
) -> PipelineConfig:
    """Build a pipeline configuration from a file and options.

    Args:
        path (str or Path, optional): a YAML configuration file.
        options (dict, optional): nested options, `None` values are
                ignored.  They override the file.  Dataset options
                replace the dataset section of the file as a whole.

    Raises:
        ConfigError: the resulting configuration is invalid.

    """
    values = read_config_file(path) if path is not None else {}
    options = dict(options or {})
    dataset = options.pop("dataset", None) or {}
    dataset = {key: value for key, value in dataset.items() if value}
    if dataset:
        values["dataset"] = dataset

    values = merge_options(values, options)
    return PipelineConfig.build(**values)


DP_OPTIONS = ("iterations", "alpha", "semiring", "include_identity_each_step")
TRAIN_OPTIONS = (
    "model",
    "norm_p",
    "dim_entity",
    "dim_relation",
    "margin",
    "lr",
    "batch_size",
    "epochs",
    "negatives_per_positive",
    "eval_every",
    "patience",
    "valid_sample",
    "seed",
)
DATASET_OPTIONS = ("directory", "train", "valid", "test")


def options_from(args, names: tuple[str, ...]) -> dict[str, Any]:
    """Return the parsed command-line options among `names`."""
    return {name: getattr(args, name, None) for name in names}
