"""Text progress bar for long enumerations"""

import logging
from typing import Callable

log = logging.getLogger("assoc")


def make_bar(percent: float) -> str:
    percent = max(0.0, min(100.0, percent))
    filled = int(percent / 5)
    return "█" * filled + "░" * (20 - filled)


def logging_progress(label: str, step: int = 10) -> Callable[[int, int], None]:
    """
    Callback (found, expected) that logs a bar every `step` percent

    Args:
        label: prefix for the log line
        step: minimal percent change between two lines
    """
    last = {"percent": -step}

    def callback(found: int, expected: int) -> None:
        percent = 100.0 * found / expected if expected else 100.0
        if percent - last["percent"] >= step or found == expected:
            last["percent"] = percent
            log.info(f"⏳ {label} {make_bar(percent)} {found}/{expected}")

    return callback
