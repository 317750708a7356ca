import io

from tools.logging import Level, Stream
from tools.logging.run import RunLogger


def test_file_log_has_stage_headers_and_fields(tmp_path):
    logger = RunLogger("train", tmp_path, quiet=True)
    logger.setup()
    logger.info("starting")
    logger.stage("squeeze").info("converged", loss=0.14213)
    logger.stage("squeeze").debug("detail")
    logger.stage("train").warning("slow", seconds=3)
    lines = (tmp_path / "train.log").read_text().splitlines()
    assert lines[0].endswith("INFO starting")
    assert lines[1].startswith("-- Stage squeeze")
    assert lines[2].endswith("INFO [squeeze] converged loss=0.14213")
    assert lines[3].endswith("DEBUG [squeeze] detail")
    assert lines[4].startswith("-- Stage train")
    assert lines[5].endswith("WARNING [train] slow seconds=3")


def test_stream_only_shows_its_level(tmp_path):
    output = io.StringIO()
    logger = RunLogger("quiet", tmp_path, quiet=True)
    logger.setup()
    logger.add_handler(Stream, "info", format="{tag}{message}", output=output)
    logger.debug("hidden")
    logger.stage("eval").info("shown")
    assert output.getvalue() == "[eval] shown\n"


def test_redirect_moves_the_log_file(tmp_path):
    logger = RunLogger("run", tmp_path / "first", quiet=True)
    logger.setup()
    logger.info("before")
    logger.redirect(tmp_path / "second")
    logger.stage("hif").info("after")
    assert "before" in (tmp_path / "first" / "run.log").read_text()
    assert "after" in (tmp_path / "second" / "run.log").read_text()
    assert "after" not in (tmp_path / "first" / "run.log").read_text()


def test_level_parsing():
    assert Level.parse("warning") is Level.WARNING
    assert Level.parse(Level.DEBUG) is Level.DEBUG
