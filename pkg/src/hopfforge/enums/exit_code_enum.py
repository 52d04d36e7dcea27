from enum import IntEnum


class ExitCode_Enum(IntEnum):
    """
    Process exit codes of the command line front end
    """

    Passed = 0
    VerificationFailed = 1
    InputError = 2
    BoundExceeded = 3
