"""Term-file and pins-file I/O.

Term files are ASCII decimal integers, one per line, LF line endings, no
blank lines or comments, strictly increasing.  Readers reject anything
else with the offending line number.
"""

from __future__ import annotations

import re
from pathlib import Path
from typing import Mapping, Sequence

__all__ = ["TermFileError", "read_terms", "write_terms", "read_pins"]

_INT_RE = re.compile(rb"[0-9]+")


class TermFileError(ValueError):
    def __init__(self, path, line: int, message: str):
        super().__init__(f"{path}:{line}: {message}")
        self.path = str(path)
        self.line = line


def read_terms(path) -> list[int]:
    data = Path(path).read_bytes()
    if not data:
        raise TermFileError(path, 1, "empty file")
    if not data.endswith(b"\n"):
        raise TermFileError(path, data.count(b"\n") + 1, "missing trailing newline")
    terms: list[int] = []
    prev = 0
    for lineno, raw in enumerate(data[:-1].split(b"\n"), start=1):
        if not _INT_RE.fullmatch(raw):
            raise TermFileError(path, lineno, f"not a decimal integer: {raw!r}")
        value = int(raw)
        if value < 1:
            raise TermFileError(path, lineno, f"term must be positive, got {value}")
        if value <= prev:
            raise TermFileError(
                path, lineno, f"terms must be strictly increasing ({value} after {prev})")
        terms.append(value)
        prev = value
    return terms


def write_terms(path, terms: Sequence[int]) -> None:
    Path(path).write_bytes(b"".join(b"%d\n" % t for t in terms))


def read_pins(path) -> dict[int, int]:
    """Parse lines of "position value" pairs into a pin map."""
    data = Path(path).read_bytes()
    if not data:
        raise TermFileError(path, 1, "empty pins file")
    pins: dict[int, int] = {}
    for lineno, raw in enumerate(data.rstrip(b"\n").split(b"\n"), start=1):
        parts = raw.split()
        if len(parts) != 2 or not all(_INT_RE.fullmatch(p) for p in parts):
            raise TermFileError(path, lineno, f"expected 'position value', got {raw!r}")
        pos, val = int(parts[0]), int(parts[1])
        if pos < 1 or val < 1:
            raise TermFileError(path, lineno, "position and value must be >= 1")
        if pos in pins:
            raise TermFileError(path, lineno, f"duplicate pin for position {pos}")
        pins[pos] = val
    return pins
