"""Line-oriented file formats and their canonical renderings.

All formats share the same skeleton: '#' starts a comment, blank lines are
ignored, and the empty string is written as '-'.  Rendering is canonical so
equal values always serialize to identical bytes: strings sort by (length,
lex), coloring pairs by (y, x), enumeration events by (stage, index,
element), and naturals ascending.
"""

from __future__ import annotations

from rkl.core import (
    BitString,
    FinTree,
    NatSet,
    PairColoring,
    StringFamily,
    lenlex,
    validate_tree,
)
from rkl.diagonal import StagedEnum


class FormatError(ValueError):
    """Unparseable or inconsistent file content."""

    def __init__(self, line: int | None, message: str) -> None:
        self.line = line
        where = f"line {line}: " if line is not None else ""
        super().__init__(where + message)


def _data_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            out.append((lineno, body))
    return out


def _parse_bits(token: str, lineno: int) -> BitString:
    if token == "-":
        return BitString()
    if token.strip("01"):
        raise FormatError(lineno, f"not a binary string: {token!r}")
    return BitString(token)


def _parse_nat(token: str, lineno: int, minimum: int = 0) -> int:
    if not token.isdigit():
        raise FormatError(lineno, f"not a natural number: {token!r}")
    value = int(token)
    if value < minimum:
        raise FormatError(lineno, f"value {value} below minimum {minimum}")
    return value


def _string_lines(text: str, what: str) -> list[BitString]:
    seen: set[BitString] = set()
    out: list[BitString] = []
    for lineno, body in _data_lines(text):
        if len(body.split()) != 1:
            raise FormatError(lineno, f"expected one {what} per line")
        s = _parse_bits(body, lineno)
        if s in seen:
            raise FormatError(lineno, f"duplicate {what} {str(s)!r}")
        seen.add(s)
        out.append(s)
    return out


def parse_tree(text: str, close: bool = False) -> FinTree:
    """Read a .tree file; with close=True take the downward closure instead
    of insisting the listed strings are already prefix-closed."""
    strings = _string_lines(text, "string")
    if close:
        return FinTree(frozenset(t for s in strings for t in s.prefixes()))
    return validate_tree(strings)


def parse_sigma(text: str) -> StringFamily:
    return StringFamily(frozenset(_string_lines(text, "string")))


def parse_coloring(text: str) -> PairColoring:
    lines = _data_lines(text)
    if not lines:
        raise FormatError(None, "missing 'n <N>' header")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or parts[0] != "n":
        raise FormatError(lineno, "header must read 'n <N>'")
    n = _parse_nat(parts[1], lineno)
    values: dict[tuple[int, int], int] = {}
    for lineno, body in lines[1:]:
        parts = body.split()
        if len(parts) != 3:
            raise FormatError(lineno, "expected 'x y c'")
        x, y, c = (_parse_nat(p, lineno) for p in parts)
        if not 0 <= x < y <= n:
            raise FormatError(lineno, f"pair ({x},{y}) outside 0 <= x < y <= {n}")
        if c not in (0, 1):
            raise FormatError(lineno, f"color must be 0 or 1, got {c}")
        if (x, y) in values:
            raise FormatError(lineno, f"pair ({x},{y}) given twice")
        values[(x, y)] = c
    for y in range(1, n + 1):
        for x in range(y):
            if (x, y) not in values:
                raise FormatError(None, f"pair ({x},{y}) missing")
    return PairColoring(
        n, tuple(tuple(values[(x, y)] for x in range(y)) for y in range(1, n + 1))
    )


def parse_enum(text: str) -> StagedEnum:
    events: list[tuple[int, int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, body in _data_lines(text):
        parts = body.split()
        if len(parts) != 3:
            raise FormatError(lineno, "expected 'e s x'")
        e = _parse_nat(parts[0], lineno)
        s = _parse_nat(parts[1], lineno, minimum=1)
        x = _parse_nat(parts[2], lineno)
        if (e, x) in seen:
            raise FormatError(lineno, f"element {x} enumerated twice for index {e}")
        seen.add((e, x))
        events.append((e, s, x))
    return StagedEnum.of(events)


def parse_natset(text: str) -> NatSet:
    values: list[int] = []
    for lineno, body in _data_lines(text):
        if len(body.split()) != 1:
            raise FormatError(lineno, "expected one natural per line")
        value = _parse_nat(body, lineno)
        if values and value <= values[-1]:
            raise FormatError(lineno, "elements must be strictly increasing")
        values.append(value)
    return NatSet(tuple(values))


def parse_stages(text: str) -> tuple[list[tuple[int, BitString]], int]:
    """Read a .stages file of 's string' lines; returns (events, max stage)."""
    events: list[tuple[int, BitString]] = []
    for lineno, body in _data_lines(text):
        parts = body.split()
        if len(parts) != 2:
            raise FormatError(lineno, "expected 's string'")
        s = _parse_nat(parts[0], lineno, minimum=1)
        events.append((s, _parse_bits(parts[1], lineno)))
    if not events:
        raise FormatError(None, "no stages listed")
    return events, max(s for s, _ in events)


def _bits_text(s: BitString) -> str:
    return s.bits or "-"


def render_tree(t: FinTree) -> str:
    return "".join(f"{_bits_text(s)}\n" for s in sorted(t.members, key=lenlex))


def render_sigma(family: StringFamily) -> str:
    return "".join(f"{_bits_text(s)}\n" for s in sorted(family.members, key=lenlex))


def render_coloring(f: PairColoring) -> str:
    lines = [f"n {f.n}"]
    lines.extend(f"{x} {y} {c}" for x, y, c in f.pairs())
    return "".join(line + "\n" for line in lines)


def render_enum(enums: StagedEnum) -> str:
    return "".join(f"{e} {s} {x}\n" for e, s, x in enums.events)


def render_natset(h: NatSet) -> str:
    return "".join(f"{v}\n" for v in h)
