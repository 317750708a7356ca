import os
from pathlib import Path
import shutil
import sys
import tempfile

ROOT = Path(__file__).resolve().parents[2]
sys.path.insert(0, str(ROOT / "src"))

from data.log import logger as data_logger  # noqa: E402
from evaluation.log import logger as evaluation_logger  # noqa: E402
from hif.log import logger as hif_logger  # noqa: E402
from kge.log import logger as kge_logger  # noqa: E402
from squeeze.log import logger as squeeze_logger  # noqa: E402
from tools.settings import settings  # noqa: E402

LIBRARY_LOGGERS = (
    data_logger,
    evaluation_logger,
    hif_logger,
    kge_logger,
    squeeze_logger,
)


def before_scenario(context, scenario):
    """Run every scenario in a fresh working directory."""
    context.previous_directory = Path.cwd()
    context.directory = Path(tempfile.mkdtemp(prefix="kghait-"))
    context.toy = ROOT / "data" / "toy"
    os.chdir(context.directory)


def after_scenario(context, scenario):
    """Go back, put library logs back in place and clean up."""
    os.chdir(context.previous_directory)
    for logger in LIBRARY_LOGGERS:
        logger.redirect(Path(settings.LOG_DIRECTORY).resolve())

    shutil.rmtree(context.directory, ignore_errors=True)
