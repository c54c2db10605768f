"""Exception hierarchy shared by the library and the CLI exit-code mapping."""


class KonigError(Exception):
    """Base class for all errors raised by this package."""

    exit_code = 1


class InputError(KonigError, ValueError):
    """Malformed input: bad file syntax, invalid parameters, wrong graph class."""

    exit_code = 2

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class SizeError(KonigError):
    """An operation's size or search budget was exceeded."""

    exit_code = 3


class TheoremViolation(KonigError):
    """Two routes that a theorem says must agree did not.

    Should be unreachable; raised instead of silently picking one answer.
    """

    exit_code = 1
