"""Optional scripting extensions to configure logging."""

from __future__ import annotations

import logging
from datetime import datetime
from pathlib import Path

from rich.console import Console
from rich.logging import RichHandler


class LocalTZRichHandler(RichHandler):
    """RichHandler with timezone aware timestamps."""

    def render(self, *, record, traceback, message_renderable):
        level = self.get_level_text(record)
        time_format = None if self.formatter is None else self.formatter.datefmt
        return self._log_render(
            self.console,
            [message_renderable] if not traceback else [message_renderable, traceback],
            log_time=datetime.fromtimestamp(record.created).astimezone(),
            time_format=time_format,
            level=level,
            path=Path(record.pathname).name,
            line_no=record.lineno,
            link_path=record.pathname if self.enable_link_path else None,
        )


def configure(verbose: bool) -> None:
    """Send log records to stderr through LocalTZRichHandler.

    The level is WARNING, or DEBUG when verbose is set; stdout stays free
    for tables and values.
    """
    handler = LocalTZRichHandler(
        console=Console(stderr=True),
        show_time=True,
        show_level=True,
        show_path=False,
        log_time_format="[%Y-%m-%d %H:%M:%S %z]",
    )
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="<%(name)s> %(message)s",
        handlers=[handler],
        force=True,
    )
    logging.captureWarnings(True)


log = logging.getLogger("knotcs.scripting")
"""Logger that the scripting package should use."""
