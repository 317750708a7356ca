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

"""Dataset service, loading and splitting triple files."""

from pathlib import Path

from data.dataset import Dataset, load_triples, split_dataset, write_dataset
from data.vocabulary import Vocabularies
from service.base import BaseService
from service.config import DATASET_OPTIONS, DatasetConfig, options_from
from tools.errors import DataError


class Service(BaseService):

    """Dataset service."""

    name = "dataset"

    def init(self):
        """Initialize the service."""
        self.loaded = {}

    def load(self, config: DatasetConfig) -> Dataset:
        """Load a dataset, once per configuration."""
        key = config.config_hash()
        if (dataset := self.loaded.get(key)) is None:
            dataset = config.load()
            self.loaded[key] = dataset
            self.stage("dataset").debug(dataset.report.as_text())

        return dataset

    def from_args(self, args) -> Dataset:
        """Load the dataset named by the command-line options."""
        config = DatasetConfig.build(**options_from(args, DATASET_OPTIONS))
        return self.load(config)

    def action_split(self, args):
        """Split one triple file into train, validation and test files."""
        vocab = Vocabularies()
        triples = load_triples(args.input, vocab)
        if len(triples) == 0:
            raise DataError(f"{args.input} holds no triple")

        dataset = split_dataset(
            triples, vocab, args.train_frac, args.valid_frac, args.seed or 0
        )
        directory = write_dataset(dataset, Path(args.out))
        print(dataset.report.as_table())
        self.stage("split").info("dataset written", directory=str(directory))
