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

"""The launcher process, running one command of the pipeline.

The launcher process is the one behind the `kghait` command.  It parses
the command line, calls the `action_<command>` method of the service
in charge and exits with a code telling what went wrong, if anything:

- 0: success.
- 2: invalid configuration or command-line usage.
- 3: invalid or inconsistent input data.
- 4: numerical failure.

"""

import argparse

from hif.semiring import Semiring
from process.base import Process
from tools.errors import KgHaitError


def positive_int(value: str) -> int:
    """Parse a strictly positive integer."""
    try:
        number = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer: {value!r}")

    if number < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {number}")

    return number


def non_negative_int(value: str) -> int:
    """Parse a positive or null integer."""
    try:
        number = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer: {value!r}")

    if number < 0:
        raise argparse.ArgumentTypeError(f"must be at least 0, got {number}")

    return number


def positive_float(value: str) -> float:
    """Parse a strictly positive float."""
    try:
        number = float(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid number: {value!r}")

    if not number > 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {number}")

    return number


common = argparse.ArgumentParser(add_help=False)
common.add_argument(
    "--jobs", type=non_negative_int, help="maximum number of workers"
)
common.add_argument("--seed", type=non_negative_int, help="global seed")

dataset_options = argparse.ArgumentParser(add_help=False)
dataset_options.add_argument(
    "--dataset",
    dest="directory",
    help="dataset directory, looked up in the data directory if relative",
)
dataset_options.add_argument("--train", help="training triple file")
dataset_options.add_argument("--valid", help="validation triple file")
dataset_options.add_argument("--test", help="test triple file")

dp_options = argparse.ArgumentParser(add_help=False)
dp_options.add_argument(
    "--T", dest="iterations", type=positive_int, help="DP iterations"
)
dp_options.add_argument("--alpha", type=positive_float, help="decay rate")
dp_options.add_argument(
    "--semiring", choices=[semiring.value for semiring in Semiring]
)
dp_options.add_argument(
    "--identity-each-step",
    dest="include_identity_each_step",
    action=argparse.BooleanOptionalAction,
    default=None,
    help="re-seed the side aggregates with the identity at every step",
)

model_options = argparse.ArgumentParser(add_help=False)
model_options.add_argument("--model", choices=["TransE", "TransH", "TransR"])
model_options.add_argument(
    "--norm", dest="norm_p", type=int, choices=[1, 2], help="distance norm"
)
model_options.add_argument(
    "--dim", dest="dim_entity", type=positive_int, help="entity dimension"
)
model_options.add_argument(
    "--dim-relation", type=positive_int, help="relation dimension"
)
model_options.add_argument("--margin", type=positive_float)
model_options.add_argument("--lr", type=positive_float, help="learning rate")
model_options.add_argument("--epochs", type=positive_int)
model_options.add_argument("--batch-size", type=positive_int)
model_options.add_argument(
    "--negatives", dest="negatives_per_positive", type=positive_int
)
model_options.add_argument(
    "--eval-every", type=non_negative_int, help="0 disables validation"
)
model_options.add_argument(
    "--patience", type=non_negative_int, help="0 disables early stopping"
)
model_options.add_argument(
    "--valid-sample", type=non_negative_int, help="0 uses the whole split"
)

parser = argparse.ArgumentParser(
    prog="kghait",
    description="HIF-initialized knowledge graph embedding pipeline.",
)
parser.set_defaults(service=None, action="help")
subparsers = parser.add_subparsers()

sub_build = subparsers.add_parser(
    "build-hif",
    parents=[common, dataset_options, dp_options],
    help="build the HIF-entity matrix of a dataset",
)
sub_build.set_defaults(service="hif", action="build_hif")
sub_build.add_argument("--out", default="hif.bin", help="matrix file")
sub_build.add_argument("--csv", help="also export the matrix as CSV")

sub_squeeze = subparsers.add_parser(
    "squeeze",
    parents=[common],
    help="optimize the transform squeezing HIF vectors",
)
sub_squeeze.set_defaults(service="squeeze", action="squeeze")
sub_squeeze.add_argument(
    "--dim", dest="dim_entity", type=positive_int, help="entity dimension"
)
sub_squeeze.add_argument(
    "--relations", type=positive_int, help="number of relations"
)
sub_squeeze.add_argument("--hif", help="read the relation count from it")
sub_squeeze.add_argument("--lr", type=positive_float)
sub_squeeze.add_argument("--max-iters", type=positive_int)
sub_squeeze.add_argument("--target-loss", type=positive_float)
sub_squeeze.add_argument("--out", default="squeeze.bin")

sub_bootstrap = subparsers.add_parser(
    "bootstrap-relations",
    parents=[common, dataset_options, model_options],
    help="train relations against frozen HIF-entity vectors",
)
sub_bootstrap.set_defaults(service="hif", action="bootstrap_relations")
sub_bootstrap.add_argument("--hif", required=True, help="HIF matrix file")
sub_bootstrap.add_argument("--squeeze", required=True, help="transform")
sub_bootstrap.add_argument("--relation-init", choices=["random", "zeros"])
sub_bootstrap.add_argument("--out", default="bootstrap.bin")

sub_train = subparsers.add_parser(
    "train",
    parents=[common, dataset_options, model_options],
    help="train a model",
)
sub_train.set_defaults(service="train", action="train")
sub_train.add_argument("--init", choices=["random", "hif"], default="random")
sub_train.add_argument("--hif", help="HIF matrix file, with --init hif")
sub_train.add_argument("--squeeze", help="transform, with --init hif")
sub_train.add_argument("--bootstrap", help="bootstrap, with --init hif")
sub_train.add_argument(
    "--inherit", help="TransE checkpoint a TransR model starts from"
)
sub_train.add_argument("--out", default="train", help="output directory")

sub_evaluate = subparsers.add_parser(
    "evaluate",
    parents=[common, dataset_options],
    help="evaluate a checkpoint with filtered ranking",
)
sub_evaluate.set_defaults(service="evaluation", action="evaluate")
sub_evaluate.add_argument("--checkpoint", required=True)
sub_evaluate.add_argument("--split", choices=["test", "valid"])
sub_evaluate.add_argument("--hits", type=positive_int, nargs="+")
sub_evaluate.add_argument("--out", help="directory for the report files")

sub_similarity = subparsers.add_parser(
    "similarity",
    parents=[common, dataset_options],
    help="cosine similarity of HIF vectors over entity groups",
)
sub_similarity.set_defaults(service="evaluation", action="similarity")
sub_similarity.add_argument("--hif", required=True, help="HIF matrix file")
sub_similarity.add_argument(
    "--groups", required=True, help="TSV file of group and entity names"
)
sub_similarity.add_argument("--out", default="similarity")

sub_curves = subparsers.add_parser(
    "curves", parents=[common], help="extract convergence curves"
)
sub_curves.set_defaults(service="evaluation", action="curves")
sub_curves.add_argument(
    "--log",
    required=True,
    nargs="+",
    help="training logs, as LABEL=PATH or PATH",
)
sub_curves.add_argument("--metric", nargs="+", help="H@10 by default")
sub_curves.add_argument("--every", type=positive_int)
sub_curves.add_argument("--tolerance", type=positive_float)
sub_curves.add_argument("--out", default="curves.csv")

sub_pipeline = subparsers.add_parser(
    "pipeline",
    parents=[common, dataset_options, dp_options, model_options],
    help="run every stage into a run directory",
)
sub_pipeline.set_defaults(service="pipeline", action="pipeline")
sub_pipeline.add_argument("--config", help="YAML run configuration")
sub_pipeline.add_argument("--out", help="run directory")
sub_pipeline.add_argument(
    "--baseline", action="store_true", help="also train without HIF"
)
sub_pipeline.add_argument(
    "--grid", action="store_true", help="grid search over norm, T and lr"
)
sub_pipeline.add_argument(
    "--resume", action="store_true", help="skip the stages already done"
)
sub_pipeline.add_argument("--groups", help="entity groups for similarity")

sub_split = subparsers.add_parser(
    "split", parents=[common], help="split a triple file in three"
)
sub_split.set_defaults(service="dataset", action="split")
sub_split.add_argument("--input", required=True, help="triple file")
sub_split.add_argument("--train-frac", type=float, required=True)
sub_split.add_argument("--valid-frac", type=float)
sub_split.add_argument("--out", required=True, help="output directory")


class Launcher(Process):

    """Launcher process, running one command and exiting."""

    name = "launcher"
    services = ("dataset", "hif", "squeeze", "train", "evaluation", "pipeline")

    def setup(self):
        """Called when services have all been started."""
        args = parser.parse_args()
        if args.service is None:
            parser.print_help()
            return

        service = self.services[args.service]
        method = getattr(service, f"action_{args.action}")
        try:
            method(args)
        except KgHaitError as err:
            stage = getattr(err, "stage", args.action.replace("_", "-"))
            self.logger.stage(stage).error(
                f"{type(err).__name__}: {err}", exit_code=err.exit_code
            )
            self.exit_code = err.exit_code

    def cleanup(self):
        """Called when the process is about to be stopped."""
        pass
