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

"""Evaluation service: ranking, similarity and convergence reports."""

from pathlib import Path

from data.dataset import Dataset
from evaluation.curves import Curve, convergence_curves, write_curves_csv
from evaluation.ranking import FilterIndex, RankingReport, evaluate
from evaluation.report import (
    paired_table,
    ranking_table,
    render_table,
    write_ranking_csv,
)
from evaluation.similarity import (
    SimilarityReport,
    load_groups,
    similarity_report,
)
from hif.matrix import HifMatrix
from kge.checkpoint import load_checkpoint
from kge.embedding import EmbeddingSet
from kge.history import METRICS, TrainingLog
from kge.models import TranslationalModel
from service.base import BaseService
from service.config import EvalConfig
from tools.errors import DataError, UsageError
from tools.settings import settings


class Service(BaseService):

    """Evaluation service."""

    name = "evaluation"

    def init(self):
        """Initialize the service."""
        self.filters = {}

    def filter_index(self, dataset: Dataset) -> FilterIndex:
        """Return the filter index of a dataset, built once."""
        if (index := self.filters.get(id(dataset))) is None:
            index = FilterIndex.from_dataset(dataset)
            self.filters[id(dataset)] = index

        return index

    def rank(
        self,
        dataset: Dataset,
        model: TranslationalModel,
        embeddings: EmbeddingSet,
        config: EvalConfig,
        split: str | None = None,
        jobs: int | None = None,
    ) -> RankingReport:
        """Evaluate link prediction on a split of the dataset."""
        split = split or config.split
        triples = dataset.split(split)
        if len(triples) == 0:
            raise DataError(f"the {split} split is empty")

        report = evaluate(
            embeddings,
            model,
            triples,
            self.filter_index(dataset),
            jobs,
            config.hits_at,
        )
        self.stage("evaluate").info(
            "ranked",
            split=split,
            model=model.name,
            mr=round(report.mr, 2),
            mrr=round(report.mrr, 4),
        )
        return report

    def write_reports(
        self,
        directory: str | Path,
        reports: dict[str, RankingReport],
        paired: tuple[str, str] | None = None,
    ) -> list[Path]:
        """Write ranking reports as a text table and CSV.

        Args:
            directory (str or Path): the output directory.
            reports (dict): the reports by label.
            paired (tuple, optional): the labels of the runs without and
                    with HIF, to write a side-by-side comparison.

        Returns:
            paths (list of Path): the written files.

        """
        directory = Path(directory)
        directory.mkdir(parents=True, exist_ok=True)
        table = ranking_table(reports)
        print(table)
        paths = [directory / "report.txt", directory / "report.csv"]
        paths[0].write_text(table + "\n", encoding=settings.DEFAULT_ENCODING)
        write_ranking_csv(paths[1], reports)
        if paired is not None:
            without, with_hif = (reports[label] for label in paired)
            comparison = paired_table(without, with_hif)
            print(comparison)
            path = directory / "paired.txt"
            path.write_text(
                comparison + "\n", encoding=settings.DEFAULT_ENCODING
            )
            paths.append(path)

        return paths

    def similarity(
        self,
        hif: HifMatrix,
        dataset: Dataset,
        groups_path: str | Path,
        directory: str | Path,
    ) -> SimilarityReport:
        """Write the similarity matrix and summary of entity groups."""
        directory = Path(directory)
        groups = load_groups(groups_path)
        report = similarity_report(hif, groups, dataset.vocab)
        report.to_csv(directory / "similarity.csv")
        summary = "\n".join(report.summary_lines())
        (directory / "similarity.txt").write_text(
            summary + "\n", encoding=settings.DEFAULT_ENCODING
        )
        print(summary)
        self.stage("similarity").info(
            "similarity written",
            entities=len(report.names),
            groups=len(report.groups),
        )
        return report

    def curves(
        self,
        logs: dict[str, TrainingLog],
        path: str | Path,
        metrics: tuple[str, ...] = ("H@10",),
        every: int | None = None,
        tolerance: float | None = None,
    ) -> dict[str, Curve]:
        """Write convergence curves and return them by label.

        Labels are `<run>` with one metric, `<run>:<metric>` otherwise.
        Runs whose log holds no validation value are skipped.

        """
        curves = {}
        for label, log in logs.items():
            for metric in metrics:
                name = label if len(metrics) == 1 else f"{label}:{metric}"
                try:
                    curves[name] = convergence_curves(
                        log, metric, every, tolerance
                    )
                except DataError as err:
                    self.stage("curves").warning(
                        "no curve", run=label, reason=str(err)
                    )

        if curves:
            write_curves_csv(path, curves)
            rows = [
                [name, curve.metric, curve.converged_at, f"{curve.final:.4f}"]
                for name, curve in curves.items()
            ]
            print(render_table(["Run", "Metric", "Converged", "Final"], rows))

        return curves

    def action_evaluate(self, args):
        """Evaluate a checkpoint on a split of a dataset."""
        dataset = self.sibling("dataset").from_args(args)
        config = EvalConfig.build(split=args.split, hits_at=args.hits)
        checkpoint = load_checkpoint(args.checkpoint)
        report = self.rank(
            dataset,
            checkpoint.model,
            checkpoint.embeddings,
            config,
            jobs=args.jobs,
        )
        label = Path(args.checkpoint).stem
        if args.out is None:
            print(ranking_table({label: report}))
        else:
            self.write_reports(args.out, {label: report})

    def action_similarity(self, args):
        """Report pairwise HIF cosines over groups of named entities."""
        dataset = self.sibling("dataset").from_args(args)
        hif = HifMatrix.load(args.hif)
        if hif.num_entities != dataset.num_entities:
            raise DataError(
                f"{args.hif} has {hif.num_entities} rows, the dataset "
                f"has {dataset.num_entities} entities"
            )

        self.similarity(hif, dataset, args.groups, args.out)

    def action_curves(self, args):
        """Extract convergence curves from training logs."""
        logs = {}
        for value in args.log:
            label, sep, path = value.partition("=")
            if not sep:
                label, path = Path(value).parent.name or value, value
            logs[label] = TrainingLog.from_csv(path)

        metrics = tuple(args.metric or ("H@10",))
        unknown = [metric for metric in metrics if metric not in METRICS]
        if unknown:
            raise UsageError(f"unknown metric: {', '.join(unknown)}")

        curves = self.curves(
            logs, args.out, metrics, args.every, args.tolerance
        )
        if not curves:
            raise DataError("no training log holds validation values")
