"""Tests for forge_logging.py."""

import logging

import pytest

from hopfforge.forge_logging import (
    add_file_logging,
    console_handler,
    format_log_message,
    log_critical,
    log_debug,
    log_error,
    log_failed_checks,
    log_info,
    log_warning,
    logger,
    set_log_level,
)
from hopfforge.models.verdict import VerdictReportModel


@pytest.fixture(autouse=True)
def restore_level():
    yield
    set_log_level("INFO")


def test_format_log_message():
    """Test format_log_message function."""
    assert format_log_message("INFO", "Test message") == "[INFO] Test message"


def test_set_log_level():
    """Test set_log_level applies to the logger and the console handler."""
    set_log_level("debug")
    assert logger.level == logging.DEBUG
    assert console_handler.level == logging.DEBUG


def test_set_log_level_with_none():
    """Test set_log_level with None keeps the current level."""
    set_log_level("ERROR")
    set_log_level(None)
    assert logger.level == logging.ERROR


def test_set_log_level_with_invalid_level():
    """Test unknown level names fall back to INFO."""
    set_log_level("INVALID_LEVEL")
    assert logger.level == logging.INFO


def test_log_functions(caplog):
    """Test each helper logs at its level with the severity prefix."""
    set_log_level("DEBUG")
    with caplog.at_level(logging.DEBUG, logger="hopfforge"):
        log_debug("DEBUG", "debug message")
        log_info("INFO", "info message")
        log_warning("WARNING", "warning message")
        log_error("ERROR", "error message")
        log_critical("CRITICAL", "critical message")
    assert [(r.levelno, r.getMessage()) for r in caplog.records] == [
        (logging.DEBUG, "[DEBUG] debug message"),
        (logging.INFO, "[INFO] info message"),
        (logging.WARNING, "[WARNING] warning message"),
        (logging.ERROR, "[ERROR] error message"),
        (logging.CRITICAL, "[CRITICAL] critical message"),
    ]


def test_add_file_logging(tmp_path):
    """Test file logging writes formatted messages."""
    path = tmp_path / "hopfforge.log"
    handler = add_file_logging(str(path), "WARNING")
    try:
        log_info("INFO", "not written")
        log_warning("WARNING", "written")
        handler.flush()
    finally:
        logger.removeHandler(handler)
        handler.close()
    text = path.read_text(encoding="utf-8")
    assert "[WARNING] written" in text
    assert "not written" not in text


def test_log_failed_checks(caplog):
    """Test failed checks are logged at WARNING with their witnesses."""
    report = VerdictReportModel().record("unitarity", True).record("intertwiner", False, [2])
    with caplog.at_level(logging.WARNING, logger="hopfforge"):
        assert log_failed_checks(report, "R-matrix check") == 1
    assert [r.getMessage() for r in caplog.records] == [
        "[WARNING] R-matrix check intertwiner fails: [2]"
    ]
