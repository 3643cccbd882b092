"""Pattern mini-language: ``P6[1,6]``, ``C8[1,2]``, ``K4``.

A family letter (P path, C cycle, K complete), a size, and optionally a list
of 1-based root positions along the family's canonical vertex order.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .graph import RootedPattern, complete, cycle, path

__all__ = ["PatternSpec", "PatternError", "parse_pattern"]

_FAMILIES = {"P": path, "C": cycle, "K": complete}
_MIN_SIZE = {"P": 1, "C": 3, "K": 1}


class PatternError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclass(frozen=True)
class PatternSpec:
    family: str
    size: int
    roots: tuple[int, ...] = ()

    def __str__(self) -> str:
        if not self.roots:
            return f"{self.family}{self.size}"
        return f"{self.family}{self.size}[{','.join(map(str, self.roots))}]"

    def to_pattern(self) -> RootedPattern:
        g = _FAMILIES[self.family](self.size)
        return RootedPattern(g, tuple(r - 1 for r in self.roots))


_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<sym>[\[\],]))")


def parse_pattern(text: str) -> PatternSpec:
    s = text.strip()
    offset = len(text) - len(text.lstrip())
    if not s:
        raise PatternError("empty pattern", offset)
    family = s[0].upper()
    if family not in _FAMILIES:
        raise PatternError(f"unknown family {s[0]!r}, expected one of P, C, K", offset)
    m = re.match(r"\d+", s[1:])
    if not m:
        raise PatternError("expected a size after the family letter", offset + 1)
    size = int(m.group())
    if size < _MIN_SIZE[family]:
        raise PatternError(f"{family} needs size >= {_MIN_SIZE[family]}, got {size}", offset + 1)
    pos = 1 + m.end()
    rest = s[pos:]
    roots: list[int] = []
    if rest.strip():
        i = len(rest) - len(rest.lstrip())
        if rest[i] != "[":
            raise PatternError(f"unexpected {rest[i]!r}", offset + pos + i)
        i += 1
        expect_int = True
        closed = False
        while i < len(rest):
            tok = _TOKEN.match(rest, i)
            if not tok:
                raise PatternError(f"unexpected {rest[i]!r}", offset + pos + i)
            start = tok.start("int") if tok.group("int") else tok.start("sym")
            if expect_int:
                if tok.group("int") is None:
                    if tok.group("sym") == "]" and not roots:
                        closed, i = True, tok.end()
                        break
                    raise PatternError("expected a root index", offset + pos + start)
                r = int(tok.group("int"))
                if not 1 <= r <= size:
                    raise PatternError(f"root index {r} outside 1..{size}", offset + pos + start)
                if r in roots:
                    raise PatternError(f"duplicate root index {r}", offset + pos + start)
                roots.append(r)
                expect_int = False
            else:
                sym = tok.group("sym")
                if sym == ",":
                    expect_int = True
                elif sym == "]":
                    closed = True
                    i = tok.end()
                    break
                else:
                    raise PatternError("expected ',' or ']'", offset + pos + start)
            i = tok.end()
        if not closed:
            raise PatternError("missing ']'", offset + pos + len(rest))
        if rest[i:].strip():
            j = i + len(rest[i:]) - len(rest[i:].lstrip())
            raise PatternError(f"trailing text {rest[j:]!r}", offset + pos + j)
    return PatternSpec(family, size, tuple(roots))
