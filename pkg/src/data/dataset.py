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

"""Triple files, datasets and splits.

A triple file holds one `head<TAB>relation<TAB>tail` line per triple,
the format FB15k-237 and WN18RR are distributed in.  Blank lines are
ignored.  The three splits of a dataset share their vocabularies, but
the graph (and so every index the DP and the trainer rely on) is built
from the training split only.

"""

from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable

from beautifultable import BeautifulTable
import numpy as np

from data.graph import KnowledgeGraph, encode_keys
from data.log import logger
from data.triple import Triple
from data.vocabulary import Vocabularies
from tools.errors import ConfigError, DataError, ParseError
from tools.settings import settings

SPLITS = ("train", "valid", "test")


@dataclass
class LoadReport:

    """Counts and anomalies found while loading a dataset."""

    sizes: dict[str, int]
    num_entities: int
    num_relations: int
    duplicates: int = 0
    orphan_entities: list[str] = field(default_factory=list)
    orphan_relations: list[str] = field(default_factory=list)

    def as_table(self) -> str:
        """Return the report as an aligned text table."""
        table = BeautifulTable()
        table.columns.header = ("Item", "Count")
        table.columns.alignment["Item"] = BeautifulTable.ALIGN_LEFT
        table.columns.alignment["Count"] = BeautifulTable.ALIGN_RIGHT
        table.set_style(BeautifulTable.STYLE_COMPACT)
        table.rows.append(("entities", self.num_entities))
        table.rows.append(("relations", self.num_relations))
        for split in SPLITS:
            table.rows.append((f"{split} triples", self.sizes.get(split, 0)))
        table.rows.append(("duplicate train triples", self.duplicates))
        table.rows.append(("orphan entities", len(self.orphan_entities)))
        table.rows.append(("orphan relations", len(self.orphan_relations)))
        return str(table)

    def as_text(self) -> str:
        """Return the table followed by the orphan names, if any."""
        lines = [self.as_table()]
        if self.orphan_entities:
            lines.append(
                "Entities absent from train: "
                + ", ".join(self.orphan_entities[:20])
                + (" ..." if len(self.orphan_entities) > 20 else "")
            )
        if self.orphan_relations:
            lines.append(
                "Relations absent from train: "
                + ", ".join(self.orphan_relations)
            )
        return "\n".join(lines)


@dataclass
class Dataset:

    """Train, validation and test triples over shared vocabularies."""

    vocab: Vocabularies
    train: np.ndarray
    valid: np.ndarray
    test: np.ndarray
    graph: KnowledgeGraph = field(init=False)
    report: LoadReport = field(init=False)

    def __post_init__(self):
        self.train = _as_triples(self.train)
        self.valid = _as_triples(self.valid)
        self.test = _as_triples(self.test)
        self.graph = KnowledgeGraph(self.vocab, self.train)
        self.report = self._build_report()

    @property
    def num_entities(self) -> int:
        return len(self.vocab.entities)

    @property
    def num_relations(self) -> int:
        return len(self.vocab.relations)

    def split(self, name: str) -> np.ndarray:
        """Return the triples of a split by name."""
        if name not in SPLITS:
            raise ConfigError(f"unknown split {name!r}")

        return getattr(self, name)

    def all_triples(self) -> np.ndarray:
        """Return the concatenation of the three splits."""
        return np.concatenate([self.train, self.valid, self.test])

    def filter_keys(self) -> np.ndarray:
        """Return the deduplicated keys of every known triple."""
        return encode_keys(
            self.all_triples(), self.num_entities, self.num_relations
        )

    def _build_report(self) -> LoadReport:
        graph = self.graph
        degrees = graph.out_degrees() + graph.in_degrees()
        entities = self.vocab.entities
        relations = self.vocab.relations
        orphan_entities = [
            entities.name(u) for u in np.flatnonzero(degrees == 0)
        ]
        used = np.zeros(self.num_relations, dtype=bool)
        used[graph.relations] = True
        orphan_relations = [
            relations.name(r) for r in np.flatnonzero(~used)
        ]
        return LoadReport(
            sizes={name: len(getattr(self, name)) for name in SPLITS},
            num_entities=self.num_entities,
            num_relations=self.num_relations,
            duplicates=len(self.train)
            - len(encode_keys(self.train, len(entities), len(relations))),
            orphan_entities=orphan_entities,
            orphan_relations=orphan_relations,
        )


def _as_triples(triples) -> np.ndarray:
    return np.asarray(triples, dtype=np.int64).reshape(-1, 3)


def parse_triple_line(
    line: str, vocab: Vocabularies, line_number: int = 0, path: str = ""
) -> Triple:
    """Parse a tab-separated triple line, registering unseen names.

    Args:
        line (str): the line, with or without its line break.
        vocab (Vocabularies): the vocabularies, updated in place.
        line_number (int, optional): the line number, for errors.
        path (str, optional): the file path, for errors.

    Returns:
        triple (Triple): the identifier triple.

    Raises:
        ParseError: the line doesn't hold exactly three non-empty fields.

    """
    fields = line.rstrip("\r\n").split("\t")
    if len(fields) != 3:
        raise ParseError(
            f"expected 3 tab-separated fields, found {len(fields)}",
            line_number,
            path,
        )

    if not all(fields):
        raise ParseError("empty field", line_number, path)

    head, relation, tail = fields
    return Triple(
        vocab.entities.add(head),
        vocab.relations.add(relation),
        vocab.entities.add(tail),
    )


def load_triples(path: str | Path, vocab: Vocabularies) -> np.ndarray:
    """Load a triple file, registering its names in the vocabularies.

    Args:
        path (str or Path): the file to read.
        vocab (Vocabularies): the vocabularies, updated in place.

    Returns:
        triples (array): an (n, 3) int64 array, in file order.

    """
    path = Path(path)
    try:
        file = path.open("r", encoding=settings.DEFAULT_ENCODING)
    except OSError as err:
        raise DataError(f"cannot open {path}: {err}") from None

    rows = []
    with file:
        for number, line in enumerate(file, start=1):
            if not line.strip():
                continue

            rows.append(parse_triple_line(line, vocab, number, str(path)))

    return _as_triples(rows)


def load_dataset(
    train_path: str | Path,
    valid_path: str | Path | None = None,
    test_path: str | Path | None = None,
) -> Dataset:
    """Load a dataset from its three split files.

    Files are read in train, valid, test order, so train names get the
    lowest identifiers.  A missing valid or test path gives an empty
    split.  Names that only appear in valid or test stay in the
    vocabularies and are listed in the load report.

    Returns:
        dataset (Dataset): the dataset, with its graph and report.

    """
    vocab = Vocabularies()
    splits = {}
    for name, path in zip(SPLITS, (train_path, valid_path, test_path)):
        splits[name] = np.zeros((0, 3), dtype=np.int64)
        if path is not None:
            splits[name] = load_triples(path, vocab)

    dataset = Dataset(vocab, **splits)
    _log_report(dataset.report)
    return dataset


def load_dataset_directory(directory: str | Path) -> Dataset:
    """Load `train.txt`, `valid.txt` and `test.txt` from a directory.

    Missing valid or test files give empty splits.

    """
    directory = Path(directory)
    train = directory / "train.txt"
    if not train.exists():
        raise DataError(f"no train.txt in {directory}")

    paths = [directory / f"{name}.txt" for name in SPLITS[1:]]
    paths = [path if path.exists() else None for path in paths]
    return load_dataset(train, *paths)


def split_dataset(
    triples: np.ndarray,
    vocab: Vocabularies,
    train_frac: float,
    valid_frac: float | None = None,
    seed: int = 0,
) -> Dataset:
    """Shuffle triples with a seed and slice them into three splits.

    When `valid_frac` is not set, the remainder after the training
    split is cut in half, validation getting the smaller part.

    Args:
        triples (array): the (n, 3) triples to split.
        vocab (Vocabularies): their vocabularies.
        train_frac (float): training fraction, in (0, 1).
        valid_frac (float, optional): validation fraction, in (0, 1).
        seed (int): the shuffle seed.

    Returns:
        dataset (Dataset): the split dataset.

    Raises:
        ConfigError: a fraction is outside (0, 1) or their sum exceeds 1.

    """
    fractions = (("train_frac", train_frac), ("valid_frac", valid_frac))
    for name, value in fractions:
        if value is not None and not 0 < value < 1:
            raise ConfigError(f"{name} must be in (0, 1), got {value}")

    if valid_frac is not None and train_frac + valid_frac > 1:
        raise ConfigError("train_frac + valid_frac must not exceed 1")

    triples = _as_triples(triples)
    size = len(triples)
    num_train = int(round(size * train_frac))
    rest = size - num_train
    if valid_frac is None:
        num_valid = rest // 2
    else:
        num_valid = min(rest, int(round(size * valid_frac)))

    order = np.random.default_rng(seed).permutation(size)
    shuffled = triples[order]
    train = shuffled[:num_train]
    valid = shuffled[num_train : num_train + num_valid]
    test = shuffled[num_train + num_valid :]
    logger.info(
        "split triples",
        seed=seed,
        train=len(train),
        valid=len(valid),
        test=len(test),
    )
    return Dataset(vocab, train, valid, test)


def write_triples(
    path: str | Path, triples: Iterable, vocab: Vocabularies
) -> Path:
    """Write triples as a tab-separated file of names."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    entities, relations = vocab.entities, vocab.relations
    with path.open("w", encoding=settings.DEFAULT_ENCODING) as file:
        for head, relation, tail in _as_triples(triples).tolist():
            file.write(
                f"{entities.name(head)}\t{relations.name(relation)}\t"
                f"{entities.name(tail)}\n"
            )

    return path


def write_dataset(dataset: Dataset, directory: str | Path) -> Path:
    """Write the three splits as `train.txt`, `valid.txt`, `test.txt`."""
    directory = Path(directory)
    for name in SPLITS:
        path = directory / f"{name}.txt"
        write_triples(path, dataset.split(name), dataset.vocab)

    return directory


def _log_report(report: LoadReport) -> None:
    logger.info(
        "loaded dataset",
        entities=report.num_entities,
        relations=report.num_relations,
        **report.sizes,
    )
    if report.orphan_entities or report.orphan_relations:
        logger.warning(
            "names absent from the training split",
            entities=len(report.orphan_entities),
            relations=len(report.orphan_relations),
        )
