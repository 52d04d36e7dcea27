import logging
import sys
from typing import Optional

from .enums.severity_enum import Severity_Enum

# Engine logger; records go to stderr so stdout stays reserved for reports
logger = logging.getLogger("hopfforge")
logger.setLevel(logging.DEBUG)

console_handler = logging.StreamHandler(sys.stderr)
console_handler.setLevel(logging.INFO)

formatter = logging.Formatter(
    "%(asctime)s %(message)s",
    datefmt="%Y-%m-%d %H:%M:%S",
)
console_handler.setFormatter(formatter)
logger.addHandler(console_handler)


def _resolve_level(level: Optional[str]) -> int:
    """Map a severity name such as "warning" to a logging level, INFO if unknown."""
    names = {member.value for member in Severity_Enum}
    name = (level or "").upper()
    return getattr(logging, name) if name in names else logging.INFO


def set_log_level(level: Optional[str] = "INFO") -> int:
    """
    Set the level of the engine logger and its console handler.

    None leaves the current level in place.
    """
    if not level:
        return logger.level
    resolved = _resolve_level(level)
    logger.setLevel(resolved)
    console_handler.setLevel(resolved)
    return resolved


def add_file_logging(log_file_path: str, level: Optional[str] = "INFO") -> logging.Handler:
    """Also write engine records to ``log_file_path``; returns the new handler."""
    file_handler = logging.FileHandler(log_file_path)
    file_handler.setLevel(_resolve_level(level))
    file_handler.setFormatter(formatter)
    logger.addHandler(file_handler)
    return file_handler


def format_log_message(severity: str, message: str) -> str:
    return f"[{severity}] {message}"


def log_debug(severity: str, message: str):
    logger.debug(format_log_message(severity, message))


def log_info(severity: str, message: str):
    logger.info(format_log_message(severity, message))


def log_warning(severity: str, message: str):
    logger.warning(format_log_message(severity, message))


def log_error(severity: str, message: str):
    logger.error(format_log_message(severity, message))


def log_critical(severity: str, message: str):
    logger.critical(format_log_message(severity, message))


def log_failed_checks(report, subject: str) -> int:
    """
    Log every failed check of a verdict report at WARNING, with its witness.

    Args:
        report: Anything with a ``failures()`` mapping of name to verdict.
        subject (str): What was checked, e.g. "Hopf axiom".

    Returns:
        int: The number of failed checks.
    """
    failures = report.failures()
    for name, verdict in sorted(failures.items()):
        log_warning(Severity_Enum.Warn.value, f"{subject} {name} fails: {verdict.witness}")
    return len(failures)
