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

"""Pipeline service, running every stage into one run directory.

Stages run in this order:

1. build-hif: HIF-entity vectors of the training graph (`hif.bin`).
2. squeeze: the transform to the embedding dimension (`squeeze.bin`).
3. bootstrap-relations: relations trained against the frozen squeezed
   HIF-entity vectors (`bootstrap.bin`).
4. train: the main training, started from the HIF vectors
   (`with_hif/`).
5. train-baseline: with `--baseline`, the same training from random
   parameters (`without_hif/`).
6. evaluate: ranking reports, convergence curves and, when a groups
   file is configured, the similarity report.

The run directory also holds `manifest.yaml` and the logs of the run.

"""

from dataclasses import dataclass, field
from datetime import datetime
from itertools import product
from pathlib import Path
from typing import Callable, NamedTuple, TypeVar

import numpy as np
import yaml

from data.dataset import Dataset
from data.log import logger as data_logger
from evaluation.curves import Curve
from evaluation.log import logger as evaluation_logger
from evaluation.ranking import RankingReport
from evaluation.report import render_table, write_rows_csv
from hif.log import logger as hif_logger
from hif.matrix import HifMatrix
from hif.relation import HifRelationResult, bootstrap_config
from kge.embedding import EmbeddingSet
from kge.history import TrainingLog
from kge.initialization import init_embeddings
from kge.log import logger as kge_logger
from kge.models import TranslationalModel, create_model
from service.base import BaseService
from service.config import (
    DATASET_OPTIONS,
    DP_OPTIONS,
    TRAIN_OPTIONS,
    PipelineConfig,
    build_pipeline_config,
    options_from,
)
from service.manifest import Manifest
from squeeze.log import logger as squeeze_logger
from squeeze.transform import SqueezeTransform
from tools.errors import ConfigError, DataError, KgHaitError
from tools.settings import settings

T = TypeVar("T")

HIF_FILE = "hif.bin"
SQUEEZE_FILE = "squeeze.bin"
BOOTSTRAP_FILE = "bootstrap.bin"
WITH_HIF = "with_hif"
WITHOUT_HIF = "without_hif"
CURVE_METRICS = ("H@10", "MR", "MRR")


class Arm(NamedTuple):

    """A trained model of the pipeline."""

    model: TranslationalModel
    embeddings: EmbeddingSet
    log: TrainingLog


@dataclass
class PipelineResult:

    """The outcome of a pipeline run.

    Attributes:
        directory: the run directory.
        config: the configuration of the run.
        manifest: the manifest, as written.
        reports: ranking reports on the evaluation split, by arm.
        valid_reports: ranking reports on the validation split, by
                arm, empty without a validation split.
        curves: convergence curves by `<arm>:<metric>`.

    """

    directory: Path
    config: PipelineConfig
    manifest: Manifest
    reports: dict[str, RankingReport] = field(default_factory=dict)
    valid_reports: dict[str, RankingReport] = field(default_factory=dict)
    curves: dict[str, Curve] = field(default_factory=dict)

    @property
    def selection_mrr(self) -> float | None:
        """Return the validation MRR of the run with HIF, if any."""
        if (report := self.valid_reports.get(WITH_HIF)) is None:
            return None

        return report.mrr


@dataclass
class Run:

    """The state of a run directory while stages execute."""

    directory: Path
    manifest: Manifest
    resume: bool

    def relative(self, paths: list[Path]) -> list[str]:
        return [str(Path(path).relative_to(self.directory)) for path in paths]


class Service(BaseService):

    """Pipeline service."""

    name = "pipeline"

    def init(self):
        """Initialize the service."""
        pass

    def stage_run(
        self,
        run: Run,
        name: str,
        compute: Callable[[], tuple[T, list[Path]]],
        restore: Callable[[], T],
        resumable: bool = True,
    ) -> T:
        """Run a stage, or restore it when resuming.

        Args:
            run (Run): the run state.
            name (str): the stage name.
            compute (callable): runs the stage, returns its value and
                    the artifacts it wrote.
            restore (callable): reads the value back from the artifacts.
            resumable (bool): whether the stage can be skipped at all.

        Errors escaping `compute` are recorded in the manifest and
        tagged with the stage name before they propagate.

        """
        logger = self.stage(name)
        done = run.manifest.is_done(name, run.directory)
        if resumable and run.resume and done:
            logger.info("resuming from existing artifacts")
            value = restore()
            run.manifest.stages[name].status = "resumed"
            run.manifest.write(run.directory)
            return value

        began = run.manifest.begin(name)
        run.manifest.write(run.directory)
        try:
            value, artifacts = compute()
        except KgHaitError as err:
            run.manifest.fail(name, began, str(err))
            run.manifest.write(run.directory)
            err.stage = name
            raise

        run.manifest.finish(name, began, run.relative(artifacts))
        run.manifest.write(run.directory)
        logger.info("stage done", seconds=run.manifest.stages[name].seconds)
        return value

    def open_run(
        self, config: PipelineConfig, directory: Path, resume: bool
    ) -> Run:
        """Prepare a run directory and its manifest."""
        config_hash = config.config_hash().hex()
        manifest = Manifest.read(directory) if resume else None
        if manifest is not None and manifest.config_hash != config_hash:
            raise ConfigError(
                f"{directory} was run with another configuration, "
                "use another output directory or drop --resume"
            )

        if manifest is None:
            manifest = Manifest(
                config=config.as_plain(), config_hash=config_hash
            )

        directory.mkdir(parents=True, exist_ok=True)
        manifest.write(directory)
        for logger in (
            self.process.logger,
            data_logger,
            hif_logger,
            squeeze_logger,
            kge_logger,
            evaluation_logger,
        ):
            logger.redirect(directory / "logs")

        return Run(directory, manifest, resume)

    def run(
        self,
        config: PipelineConfig,
        directory: str | Path,
        baseline: bool = False,
        resume: bool = False,
        jobs: int | None = None,
    ) -> PipelineResult:
        """Run every stage of the pipeline.

        Args:
            config (PipelineConfig): the run configuration.
            directory (str or Path): the run directory.
            baseline (bool): also train from random parameters.
            resume (bool): skip the stages whose artifacts exist.
            jobs (int, optional): the number of workers.

        Returns:
            result (PipelineResult): the reports of the run.

        """
        directory = Path(directory)
        run = self.open_run(config, directory, resume)
        dataset = self.sibling("dataset").load(config.dataset)
        hif = self.stage_run(
            run,
            "build-hif",
            lambda: self._build_hif(run, dataset, config, jobs),
            lambda: HifMatrix.load(directory / HIF_FILE),
        )
        transform = self.stage_run(
            run,
            "squeeze",
            lambda: self._squeeze(run, dataset, config),
            lambda: SqueezeTransform.load(directory / SQUEEZE_FILE),
        )
        squeezed = self.sibling("squeeze").squeezed_entities(transform, hif)
        bootstrap = self.stage_run(
            run,
            "bootstrap-relations",
            lambda: self._bootstrap(run, dataset, config, squeezed, jobs),
            lambda: HifRelationResult.load(directory / BOOTSTRAP_FILE),
        )
        arms = {}
        arms[WITH_HIF] = self.stage_run(
            run,
            "train",
            lambda: self._train_arm(
                run, dataset, config, WITH_HIF, squeezed, bootstrap, jobs
            ),
            lambda: self._restore_arm(run, config, WITH_HIF),
        )
        if baseline:
            arms[WITHOUT_HIF] = self.stage_run(
                run,
                "train-baseline",
                lambda: self._train_arm(
                    run, dataset, config, WITHOUT_HIF, None, None, jobs
                ),
                lambda: self._restore_arm(run, config, WITHOUT_HIF),
            )

        result = PipelineResult(directory, config, run.manifest)
        self.stage_run(
            run,
            "evaluate",
            lambda: self._evaluate(run, dataset, config, hif, arms, result),
            lambda: None,
            resumable=False,
        )
        self._log_timings(run)
        return result

    def _build_hif(self, run, dataset, config, jobs):
        hif = self.sibling("hif").build(dataset, config.dp, jobs)
        return hif, [hif.save(run.directory / HIF_FILE)]

    def _squeeze(self, run, dataset, config):
        transform = self.sibling("squeeze").optimize(
            dataset.num_relations, config.squeeze
        )
        return transform, [transform.save(run.directory / SQUEEZE_FILE)]

    def _bootstrap_train_config(self, config: PipelineConfig):
        base = config.train
        if self._pretrains(config):
            base = base.update(model="TransE")

        return bootstrap_config(base, **config.bootstrap.as_plain())

    @staticmethod
    def _pretrains(config: PipelineConfig) -> bool:
        return config.train.model == "TransR" and config.transr_inherit

    def _bootstrap(self, run, dataset, config, squeezed, jobs):
        train_config = self._bootstrap_train_config(config)
        model = create_model(train_config.model, train_config.norm_p)
        result = self.sibling("hif").bootstrap(
            dataset, model, squeezed, train_config, jobs
        )
        path = result.save(
            run.directory / BOOTSTRAP_FILE, train_config.config_hash()
        )
        return result, [path]

    def _start(
        self,
        dataset: Dataset,
        model: TranslationalModel,
        train_config,
        squeezed: np.ndarray | None,
        bootstrap: HifRelationResult | None,
    ) -> EmbeddingSet:
        if train_config.init == "hif":
            return init_embeddings(
                model, dataset, train_config, squeezed, bootstrap.embeddings
            )

        return init_embeddings(model, dataset, train_config)

    def _train_arm(
        self, run, dataset, config, label, squeezed, bootstrap, jobs
    ):
        trainer = self.sibling("train")
        index = self.sibling("evaluation").filter_index(dataset)
        stage = "train" if label == WITH_HIF else "train-baseline"
        init = "hif" if label == WITH_HIF else "random"
        directory = run.directory / label
        artifacts = []
        train_config = config.train.update(init=init)
        if self._pretrains(config):
            transe_config = train_config.update(model="TransE")
            transe = create_model("TransE", transe_config.norm_p)
            start = self._start(
                dataset, transe, transe_config, squeezed, bootstrap
            )
            pretrained = trainer.fit(
                dataset,
                transe,
                transe_config,
                start,
                directory / "transe",
                index,
                jobs,
                stage,
            )
            artifacts += trainer.artifacts(directory / "transe")
            model = create_model("TransR", train_config.norm_p)
            start = model.inherit_from(pretrained.embeddings)
        else:
            model = create_model(train_config.model, train_config.norm_p)
            start = self._start(
                dataset, model, train_config, squeezed, bootstrap
            )

        result = trainer.fit(
            dataset, model, train_config, start, directory, index, jobs, stage
        )
        artifacts += trainer.artifacts(directory)
        return Arm(model, result.embeddings, result.log), artifacts

    def _restore_arm(self, run, config, label):
        checkpoint, log = self.sibling("train").restore(run.directory / label)
        return Arm(checkpoint.model, checkpoint.embeddings, log)

    def _evaluate(self, run, dataset, config, hif, arms, result):
        evaluation = self.sibling("evaluation")
        eval_config = config.evaluation
        for label, arm in arms.items():
            result.reports[label] = evaluation.rank(
                dataset, arm.model, arm.embeddings, eval_config
            )
            if len(dataset.valid):
                result.valid_reports[label] = evaluation.rank(
                    dataset, arm.model, arm.embeddings, eval_config, "valid"
                )

        paired = None
        if WITHOUT_HIF in arms:
            paired = (WITHOUT_HIF, WITH_HIF)

        artifacts = evaluation.write_reports(
            run.directory, result.reports, paired
        )
        curves_path = run.directory / "curves.csv"
        result.curves = evaluation.curves(
            {label: arm.log for label, arm in arms.items()},
            curves_path,
            CURVE_METRICS,
            tolerance=eval_config.convergence_tolerance,
        )
        if result.curves:
            artifacts.append(curves_path)

        if eval_config.groups is not None:
            evaluation.similarity(
                hif, dataset, eval_config.groups, run.directory
            )
            artifacts += [
                run.directory / "similarity.csv",
                run.directory / "similarity.txt",
            ]

        return None, artifacts

    def _log_timings(self, run: Run):
        rows = [
            [name, record.status, f"{record.seconds:.2f}"]
            for name in run.manifest.stage_order
            if (record := run.manifest.stages.get(name))
        ]
        print(render_table(["Stage", "Status", "Seconds"], rows))

    def grid(
        self,
        config: PipelineConfig,
        directory: str | Path,
        baseline: bool = False,
        resume: bool = False,
        jobs: int | None = None,
    ) -> PipelineResult:
        """Run one pipeline per grid cell and select on validation MRR.

        Cells combine the `grid_norms`, `grid_iterations` and
        `grid_learning_rates` settings.  Each cell has its own run
        directory, named like `p1-T4-lr0.0005`.

        Returns:
            result (PipelineResult): the result of the selected cell.

        Raises:
            DataError: the dataset has no validation split.

        """
        directory = Path(directory)
        dataset = self.sibling("dataset").load(config.dataset)
        if len(dataset.valid) == 0:
            raise DataError("grid search needs a validation split")

        cells = list(
            product(
                settings.GRID_NORMS,
                settings.GRID_ITERATIONS,
                settings.GRID_LEARNING_RATES,
            )
        )
        logger = self.stage("grid")
        logger.info("grid search", cells=len(cells))
        results = {}
        for norm_p, iterations, lr in cells:
            name = f"p{norm_p}-T{iterations}-lr{lr:g}"
            logger.info("running cell", cell=name)
            cell = config.with_cell(norm_p, iterations, lr)
            results[name] = self.run(
                cell, directory / name, baseline, resume, jobs
            )

        selected = max(results, key=lambda name: results[name].selection_mrr)
        header = [
            "Cell",
            "norm_p",
            "T",
            "lr",
            "valid MRR",
            "MR",
            "MRR",
            "H@10",
            "selected",
        ]
        rows = []
        for name, result in results.items():
            test = result.reports[WITH_HIF].as_dict()
            rows.append(
                [
                    name,
                    result.config.train.norm_p,
                    result.config.dp.iterations,
                    result.config.train.lr,
                    round(result.selection_mrr, 4),
                    round(test["MR"], 1),
                    round(test["MRR"], 4),
                    round(test.get("H@10", float("nan")), 4),
                    "*" if name == selected else "",
                ]
            )

        table = render_table(header, rows)
        print(table)
        (directory / "grid.txt").write_text(
            table + "\n", encoding=settings.DEFAULT_ENCODING
        )
        write_rows_csv(directory / "grid.csv", header, rows)
        summary = {
            "selection": "valid MRR",
            "selected": selected,
            "cells": list(results),
        }
        (directory / "grid.yaml").write_text(
            yaml.safe_dump(summary, sort_keys=False),
            encoding=settings.DEFAULT_ENCODING,
        )
        logger.info(
            "selected cell",
            cell=selected,
            valid_mrr=round(results[selected].selection_mrr, 4),
        )
        return results[selected]

    def action_pipeline(self, args):
        """Run the pipeline from the command line."""
        options = {
            "dataset": options_from(args, DATASET_OPTIONS),
            "dp": options_from(args, DP_OPTIONS),
            "train": options_from(args, TRAIN_OPTIONS),
            "evaluation": {"groups": args.groups},
            "seed": args.seed,
        }
        options["train"].pop("seed")
        config = build_pipeline_config(args.config, options)
        directory = Path(args.out) if args.out else self.default_directory()
        if args.grid:
            self.grid(config, directory, args.baseline, args.resume, args.jobs)
        else:
            self.run(config, directory, args.baseline, args.resume, args.jobs)

    @staticmethod
    def default_directory() -> Path:
        """Return a new run directory in the `run_directory` setting."""
        stamp = datetime.now().strftime("%Y%m%d-%H%M%S")
        return Path(settings.RUN_DIRECTORY) / stamp
