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

"""The training loop of translational models.

Every epoch shuffles the training triples and walks through them by
mini-batches.  Each positive triple gets `negatives_per_positive`
filtered corruptions, the loss is the mean margin ranking loss over
the pairs.  Scores are torch expressions of the parameters and
`torch.optim.Adam` steps every trainable one, after which the norm
constraints are applied.  With `freeze_entities`, the entity matrix
gets neither gradient nor norm constraint, so it is left untouched.

"""

from dataclasses import dataclass
from time import perf_counter
from typing import Callable

import numpy as np
import torch

from data.dataset import Dataset
from evaluation.ranking import FilterIndex, evaluate
from kge.config import TrainConfig
from kge.embedding import EmbeddingSet, Parameters
from kge.history import EpochRecord, TrainingLog
from kge.log import logger
from kge.models import TranslationalModel
from kge.models.base import as_triples
from kge.sampling import NegativeSampler
from tools.errors import ConfigError, DivergenceError

Callback = Callable[[EpochRecord, EmbeddingSet], None]


@dataclass
class TrainResult:

    """The outcome of a training run.

    Attributes:
        model: the trained model.
        embeddings: the parameters with the best validation MRR, or
                the last ones if there was no validation.
        log: the training log.
        epochs_run: the number of epochs run.
        best_epoch: the epoch of `embeddings`.
        best_mrr: the validation MRR of `embeddings`, if evaluated.
        stop_reason: "epochs", "patience" or "plateau".
        negatives_exhausted: corruptions kept although known.

    """

    model: TranslationalModel
    embeddings: EmbeddingSet
    log: TrainingLog
    epochs_run: int
    best_epoch: int
    best_mrr: float | None
    stop_reason: str
    negatives_exhausted: int

    @property
    def final_loss(self) -> float:
        losses = self.log.losses()
        return losses[-1] if losses else float("nan")


def _streams(seed: int) -> tuple[np.random.Generator, np.random.Generator]:
    """Return the training and validation random streams of a seed."""
    train, valid = np.random.SeedSequence(seed).spawn(2)
    return np.random.default_rng(train), np.random.default_rng(valid)


def _validation_triples(
    dataset: Dataset, config: TrainConfig, rng: np.random.Generator
) -> np.ndarray:
    valid = dataset.valid
    if config.valid_sample and len(valid) > config.valid_sample:
        chosen = rng.choice(len(valid), config.valid_sample, replace=False)
        valid = valid[np.sort(chosen)]

    return valid


def train_epoch(
    model: TranslationalModel,
    embeddings: EmbeddingSet,
    parameters: Parameters,
    triples: np.ndarray,
    config: TrainConfig,
    optimizer: torch.optim.Optimizer,
    sampler: NegativeSampler,
    rng: np.random.Generator,
) -> float:
    """Run one epoch in place and return the mean batch loss.

    `parameters` are the tensors of `embeddings`, sharing their memory,
    and `optimizer` steps the trainable ones.

    """
    criterion = torch.nn.MarginRankingLoss(margin=config.margin)
    order = rng.permutation(len(triples))
    total = 0.0
    for begin in range(0, len(order), config.batch_size):
        positives = triples[order[begin : begin + config.batch_size]]
        positives = np.repeat(positives, config.negatives_per_positive, 0)
        negatives = sampler.corrupt(positives)
        optimizer.zero_grad()
        scores = model.forward(
            parameters, as_triples(np.concatenate([positives, negatives]))
        )
        pos_scores, neg_scores = scores.split(len(positives))
        loss = criterion(neg_scores, pos_scores, torch.ones_like(pos_scores))
        if not torch.isfinite(loss):
            raise DivergenceError(
                f"non-finite loss at batch {begin // config.batch_size}, "
                f"the learning rate ({config.lr}) may be too high"
            )

        loss.backward()
        optimizer.step()
        model.constrain(embeddings, entities=not config.freeze_entities)
        total += loss.item() * len(positives)

    return total / (len(order) * config.negatives_per_positive)


def train(
    dataset: Dataset,
    model: TranslationalModel,
    config: TrainConfig,
    init_emb: EmbeddingSet,
    callbacks: list[Callback] | None = None,
    filter_index: FilterIndex | None = None,
    jobs: int | None = None,
) -> TrainResult:
    """Train a model on the training split of a dataset.

    Validation happens every `config.eval_every` epochs and after the
    last one, on at most `config.valid_sample` validation triples
    (the same ones every time).  Callbacks receive the epoch record
    and a read-only view of the parameters after each validation, or
    after every epoch when validation is disabled.

    Args:
        dataset (Dataset): the dataset.
        model (TranslationalModel): the model to train.
        config (TrainConfig): the run configuration.
        init_emb (EmbeddingSet): the initial parameters, not modified.
        callbacks (list, optional): functions called with the record.
        filter_index (FilterIndex, optional): the known triples for
                validation, built from the dataset if not given.
        jobs (int, optional): the number of validation workers.

    Returns:
        result (TrainResult): the best parameters and the log.

    Raises:
        ConfigError: the training split is empty.
        DivergenceError: the loss stopped being finite.

    """
    triples = dataset.train
    if len(triples) == 0:
        raise ConfigError("the training split is empty")

    model.check_embeddings(init_emb)
    embeddings = init_emb.copy()
    rng, valid_rng = _streams(config.seed)
    sampler = NegativeSampler.for_graph(dataset.graph, rng)
    trainable = set(embeddings.parameters())
    if config.freeze_entities:
        trainable.discard("entities")
    parameters = embeddings.tensors(trainable)
    optimizer = torch.optim.Adam(
        [parameters[name] for name in sorted(trainable)],
        lr=config.lr,
        betas=(0.9, 0.999),
        eps=1e-8,
    )
    valid = _validation_triples(dataset, config, valid_rng)
    validating = config.eval_every > 0 and len(valid) > 0
    if validating and filter_index is None:
        filter_index = FilterIndex.from_dataset(dataset)

    log = TrainingLog()
    best, best_epoch, best_mrr = embeddings, 0, None
    stale = 0
    stop_reason = "epochs"
    epoch = 0
    started = perf_counter()
    logger.info(
        "training",
        model=model.name,
        norm=model.norm_p,
        init=config.init,
        frozen=config.freeze_entities,
        epochs=config.epochs,
    )
    for epoch in range(1, config.epochs + 1):
        loss = train_epoch(
            model,
            embeddings,
            parameters,
            triples,
            config,
            optimizer,
            sampler,
            rng,
        )
        last = epoch == config.epochs
        due = config.eval_every and (epoch % config.eval_every == 0 or last)
        metrics = {}
        if validating and due:
            report = evaluate(
                embeddings, model, valid, filter_index, jobs, keep_ranks=False
            )
            metrics = report.as_dict()

        record = log.add(epoch, loss, metrics)
        logger.debug("epoch done", epoch=epoch, loss=round(loss, 6))
        if metrics:
            logger.info(
                "validation",
                epoch=epoch,
                loss=round(loss, 6),
                mr=round(metrics["MR"], 2),
                mrr=round(metrics["MRR"], 4),
            )
            if best_mrr is None or metrics["MRR"] > best_mrr:
                best, best_epoch = embeddings.copy(), epoch
                best_mrr = metrics["MRR"]
                stale = 0
            else:
                stale += 1

        if due or not config.eval_every:
            for callback in callbacks or ():
                callback(record, embeddings)

        if metrics and config.patience and stale >= config.patience:
            stop_reason = "patience"
            break

        window = config.plateau_window
        losses = log.losses()
        if window and len(losses) > window:
            if losses[-window - 1] - loss < config.plateau_tolerance:
                stop_reason = "plateau"
                break

    if best_mrr is None:
        best, best_epoch = embeddings, epoch

    logger.info(
        "training done",
        model=model.name,
        epochs=epoch,
        stop=stop_reason,
        best_epoch=best_epoch,
        seconds=round(perf_counter() - started, 2),
    )
    return TrainResult(
        model,
        best,
        log,
        epoch,
        best_epoch,
        best_mrr,
        stop_reason,
        sampler.exhausted,
    )
