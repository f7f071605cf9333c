"""Append-only log file helper.

The log file is named by the ``LADDER_LOG`` environment variable; when it is
unset nothing is written.
"""

from __future__ import annotations

import os
from datetime import datetime


def log(message: object, file: str | None = None) -> None:
    target = file or os.environ.get("LADDER_LOG")
    if not target:
        return
    ts = datetime.now().strftime("%Y-%m-%d %H:%M:%S")
    with open(target, "a", encoding="utf-8") as f:
        f.write(f"{ts} - {message}\n")
