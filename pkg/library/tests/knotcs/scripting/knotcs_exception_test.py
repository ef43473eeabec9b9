"""Tests for the knotcs.scripting.knotcs_exception module."""

from unittest.mock import patch

import pytest

from knotcs.errors import DomainError, GeometryError, NonHyperbolicError, SolverError
from knotcs.scripting import knotcs_exception


class TestInterceptor:
    """Tests for Interceptor."""

    def test_no_exception(self) -> None:
        interceptor = knotcs_exception.Interceptor()

        with patch("knotcs.scripting.knotcs_exception.log") as log, interceptor:
            pass

        assert interceptor.failed is False
        assert interceptor.exitcode() == 0
        log.error.assert_not_called()

    def test_foreign_exception_exits_one(self) -> None:
        interceptor = knotcs_exception.Interceptor()

        with patch("knotcs.scripting.knotcs_exception.log") as log, interceptor:
            raise RuntimeError("boom")

        assert interceptor.failed is True
        assert interceptor.exitcode() == 1
        log.error.assert_called_once()
        assert log.error.call_args[0][0] == "operation failed: %s"
        assert str(log.error.call_args[0][1]) == "boom"

    @pytest.mark.parametrize(
        ("exc", "code"),
        [
            (DomainError("bad n"), 2),
            (NonHyperbolicError("not hyperbolic"), 3),
            (GeometryError("no collision"), 4),
            (SolverError("stuck", iterations=5, residual=1.0), 4),
        ],
    )
    def test_knotcs_error_exit_codes(self, exc: Exception, code: int) -> None:
        interceptor = knotcs_exception.Interceptor()

        with patch("knotcs.scripting.knotcs_exception.log"), interceptor:
            raise exc

        assert interceptor.exitcode() == code

    def test_first_failure_decides(self) -> None:
        interceptor = knotcs_exception.Interceptor()

        with patch("knotcs.scripting.knotcs_exception.log"):
            with interceptor:
                raise NonHyperbolicError("first")
            with interceptor:
                raise DomainError("second")

        assert interceptor.exitcode() == 3

    def test_keyboard_interrupt_not_suppressed(self) -> None:
        interceptor = knotcs_exception.Interceptor()

        with (
            patch("knotcs.scripting.knotcs_exception.log") as log,
            pytest.raises(KeyboardInterrupt),
            interceptor,
        ):
            raise KeyboardInterrupt()

        assert interceptor.failed is False
        assert interceptor.exitcode() == 0
        log.error.assert_not_called()
