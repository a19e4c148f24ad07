"""Exception hierarchy mapped to CLI exit codes (2 input, 3 bundle, 4 server)."""

from __future__ import annotations


class SysmapError(Exception):
    exit_code = 1


class InputError(SysmapError):
    """Bad analysis input: missing tree, duplicate class, bad config."""

    exit_code = 2


class BundleError(SysmapError):
    """Unreadable or schema-invalid bundle file."""

    exit_code = 3


class ServerError(SysmapError):
    """Server could not start (typically: port already in use)."""

    exit_code = 4


class JavaParseError(SysmapError):
    """Irrecoverable syntax problem in one compilation unit."""

    exit_code = 2

    def __init__(self, path: str, line: int, message: str) -> None:
        super().__init__(f"{path}:{line}: {message}")
        self.path = path
        self.line = line
        self.message = message
