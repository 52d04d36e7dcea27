import sys
from typing import Callable, Optional, TextIO, Union

from .configuration import configure
from .enums.exit_code_enum import ExitCode_Enum
from .enums.severity_enum import Severity_Enum
from .exceptions import (
    HopfForgeException,
    HypothesisViolationError,
    describe_error,
    error_code_for_exception,
    exit_code_for_exception,
)
from .forge_logging import log_debug, log_error, log_info, set_log_level
from .models.job_config import JobConfigModel
from .utils.canonical_json import dumps

Handler = Callable[["JobRunner"], Optional[Union[int, ExitCode_Enum]]]


class JobRunner:
    """
    Runs one command under a job configuration.
    Engine exceptions become exit codes and a one-line diagnostic on stderr.
    """

    def __init__(
        self,
        config: JobConfigModel,
        stdout: Optional[TextIO] = None,
        stderr: Optional[TextIO] = None,
    ):
        self.config = config
        self.stdout = stdout if stdout is not None else sys.stdout
        self.stderr = stderr if stderr is not None else sys.stderr
        set_log_level(config.log_level)
        self.bounds = configure(
            max_group_order=config.bounds.max_group_order,
            max_dimension=config.bounds.max_dimension,
            max_hexagon_dimension=config.bounds.max_hexagon_dimension,
        )

        log_info(
            Severity_Enum.Info.value,
            f"JobRunner initialized for command: {config.command}, "
            f"inputs: {config.inputs}, "
            f"seed: {config.seed}",
        )

    def emit(self, text: str, path: Optional[str] = None):
        """Write text to ``path``, or to stdout when no path is given."""
        if not text.endswith("\n"):
            text += "\n"
        if path is None:
            self.stdout.write(text)
            return
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)
        log_info(Severity_Enum.Info.value, f"Wrote {path}")

    def emit_json(self, payload, path: Optional[str] = None):
        self.emit(dumps(payload), path)

    def fail(self, message: str):
        self.stderr.write(f"hopfforge {self.config.command}: {message}\n")

    def run(self, handler: Handler) -> int:
        """
        Run a command handler and map its outcome to an exit code.

        Args:
            handler: Called with this runner; returns an exit code or None for success.

        Returns:
            int: The process exit code.
        """
        try:
            code = handler(self)
        except HopfForgeException as error:
            code = exit_code_for_exception(error)
            message = str(error)
            if isinstance(error, HypothesisViolationError) and error.witness is not None:
                message = f"{message} (witness: {error.witness})"
            log_error(
                Severity_Enum.Error.value,
                f"{error_code_for_exception(error).value} in {self.config.command}: {message}",
            )
            log_debug(Severity_Enum.Debug.value, describe_error(error))
            self.fail(message)
        except OSError as error:
            code = ExitCode_Enum.InputError
            log_error(Severity_Enum.Error.value, f"I/O error in {self.config.command}: {error}")
            self.fail(str(error))
        return int(ExitCode_Enum.Passed if code is None else code)
