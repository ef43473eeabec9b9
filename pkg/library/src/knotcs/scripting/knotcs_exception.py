"""Optional scripting helpers to log exceptions and convert them to exit codes."""

from __future__ import annotations

from ..errors import KnotCSError
from .knotcs_logging import log


class Interceptor:
    """
    Context manager to intercept exceptions.

    Use as a context manager:

        interceptor = knotcs_exception.Interceptor()
        with interceptor:
            func()
        sys.exit(interceptor.exitcode())

    Exceptions are logged and suppressed. KeyboardInterrupt is never
    intercepted. The first intercepted exception decides the exit code:
    its `exit_code` for knotcs errors, 1 for anything else.
    """

    def __init__(self):
        self.failed = False
        self.code = 0

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc_value, traceback):
        if exc_type is None:
            return False
        if issubclass(exc_type, KeyboardInterrupt):
            return False
        log.error("operation failed: %s", exc_value)
        _ = traceback
        if not self.failed:
            self.code = exc_value.exit_code if isinstance(exc_value, KnotCSError) else 1
        self.failed = True
        return True  # suppress the exception

    def exitcode(self) -> int:
        """
        Return the exitcode to pass to sys.exit.

        Zero on success, otherwise the code of the first failure.
        """
        return self.code if self.failed else 0
