from __future__ import annotations

import re
from bisect import bisect_right
from dataclasses import dataclass
from typing import Iterator

from .ast import Span

KEYWORDS = frozenset(
    {"point", "line", "circle", "intersect", "midpoint", "transfer", "perp", "copy_angle", "grid", "role"}
)

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<comment>\#[^\n]*)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<int>[0-9]+)
  | (?P<punct>[(),=\[\]/+\-])
  | (?P<error>[^\sA-Za-z0-9_\#(),=\[\]/+\-]+)
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    kind: str  # ident | keyword | int | punctuation char | error | eof
    text: str
    offset: int


class SourceMap:
    """Offset -> (line, column), both 1-based."""

    def __init__(self, source: str):
        self._starts = [0] + [m.end() for m in re.finditer("\n", source)]
        self._len = len(source)

    def span(self, offset: int) -> Span:
        i = bisect_right(self._starts, offset) - 1
        return Span(i + 1, offset - self._starts[i] + 1)

    @property
    def end(self) -> Span:
        return self.span(self._len)


def tokenize(source: str) -> Iterator[Token]:
    for m in _TOKEN_RE.finditer(source):
        kind = m.lastgroup
        if kind in ("ws", "comment"):
            continue
        text = m.group()
        if kind == "ident" and text in KEYWORDS:
            kind = "keyword"
        elif kind == "punct":
            kind = text
        yield Token(kind, text, m.start())
    yield Token("eof", "", len(source))
