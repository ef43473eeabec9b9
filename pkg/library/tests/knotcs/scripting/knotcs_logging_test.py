"""Tests for the knotcs.scripting.knotcs_logging module."""

import logging

import pytest
from rich.text import Text

from knotcs.scripting import knotcs_logging


@pytest.mark.parametrize(
    ("verbose", "expected_level"),
    [
        (True, logging.DEBUG),
        (False, logging.WARNING),
    ],
)
def test_configure_sets_level_and_handler(verbose: bool, expected_level: int) -> None:
    knotcs_logging.configure(verbose=verbose)

    root = logging.getLogger()
    assert root.level == expected_level
    handlers = [h for h in root.handlers if isinstance(h, knotcs_logging.LocalTZRichHandler)]
    assert handlers
    assert handlers[0].console.stderr is True


def test_render_uses_local_tz(monkeypatch: pytest.MonkeyPatch) -> None:
    handler = knotcs_logging.LocalTZRichHandler()
    captured = {}

    def fake_log_render(*_args, **kwargs):
        _ = _args
        captured.update(kwargs)
        return None

    monkeypatch.setattr(handler, "_log_render", fake_log_render)

    record = logging.LogRecord(
        name="test",
        level=logging.INFO,
        pathname=__file__,
        lineno=1,
        msg="hello",
        args=(),
        exc_info=None,
    )

    handler.render(record=record, traceback=None, message_renderable=Text("hello"))

    log_time = captured.get("log_time")
    assert log_time is not None
    assert log_time.tzinfo is not None
    assert captured.get("path") == "knotcs_logging_test.py"


def test_log_is_named_scripting() -> None:
    assert knotcs_logging.log.name == "knotcs.scripting"
