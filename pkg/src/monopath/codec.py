"""Flat text format for colourings: a header line holding n, then one line
of R/B characters in iter_edges order.  encode emits no trailing newline;
decode tolerates any number of them."""

from __future__ import annotations

from .core import Colouring, MonopathError, edge_count


class CodecError(MonopathError):
    pass


class MalformedHeader(CodecError):
    pass


class BadLength(CodecError):
    def __init__(self, expected: int, got: int):
        super().__init__(f"expected {expected} edge characters, got {got}")
        self.expected = expected
        self.got = got


class BadCharacter(CodecError):
    # line/column are 1-based, matching editor conventions
    def __init__(self, line: int, column: int, char: str):
        super().__init__(f"bad character {char!r} at line {line}, column {column}")
        self.line = line
        self.column = column
        self.char = char


def encode(g: Colouring) -> str:
    chars = "".join("R" if bit else "B" for bit in g.edge_bits())
    return f"{g.n}\n{chars}"


def decode(text: str) -> Colouring:
    lines = text.split("\n")
    while lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise MalformedHeader("empty input")
    try:
        n = int(lines[0].strip())
    except ValueError:
        raise MalformedHeader(f"header is not an integer: {lines[0]!r}") from None
    if n < 1:
        raise MalformedHeader(f"need n >= 1, got {n}")
    if len(lines) > 2:
        raise MalformedHeader(f"expected 2 lines, got {len(lines)}")
    body = lines[1] if len(lines) == 2 else ""
    m = edge_count(n)
    if len(body) != m:
        raise BadLength(m, len(body))
    for i, ch in enumerate(body):
        if ch not in "RB":
            raise BadCharacter(2, i + 1, ch)
    return Colouring.from_edge_bits(n, (ch == "R" for ch in body))
