"""Minimal S-expression reader and writer shared by all text formats."""

from __future__ import annotations

import re
from dataclasses import dataclass


class ParseError(ValueError):
    """Raised on malformed input; carries a 1-based line and column."""

    def __init__(self, message: str, line: int = 0, col: int = 0):
        self.line = line
        self.col = col
        where = f"{line}:{col}: " if line else ""
        super().__init__(where + message)


@dataclass(frozen=True)
class Sym:
    name: str
    line: int = 0
    col: int = 0

    def __eq__(self, other):
        if isinstance(other, Sym):
            return self.name == other.name
        if isinstance(other, str):
            return self.name == other
        return NotImplemented

    def __hash__(self):
        return hash(self.name)

    def __str__(self):
        return self.name


class SList(list):
    """A parenthesised list that remembers where it started."""

    line = 0
    col = 0


_TOKEN = re.compile(r"\s+|;[^\n]*|\(|\)|[^\s();]+")


def tokenize(text: str):
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # pragma: no cover - regex covers every character
            raise ParseError("unexpected character", line, pos - line_start + 1)
        tok = m.group()
        col = pos - line_start + 1
        if not tok[0].isspace() and tok[0] != ";":
            yield tok, line, col
        nl = tok.count("\n")
        if nl:
            line += nl
            line_start = pos + tok.rfind("\n") + 1
        pos = m.end()


def read_all(text: str) -> list:
    """Parse every top-level S-expression in ``text``."""
    stack: list[SList] = [SList()]
    for tok, line, col in tokenize(text):
        if tok == "(":
            lst = SList()
            lst.line, lst.col = line, col
            stack.append(lst)
        elif tok == ")":
            if len(stack) == 1:
                raise ParseError("unbalanced ')'", line, col)
            done = stack.pop()
            stack[-1].append(done)
        else:
            stack[-1].append(Sym(tok, line, col))
    if len(stack) != 1:
        open_ = stack[-1]
        raise ParseError("unclosed '('", open_.line, open_.col)
    return list(stack[0])


def read(text: str):
    items = read_all(text)
    if len(items) != 1:
        raise ParseError(f"expected exactly one expression, found {len(items)}", 1, 1)
    return items[0]


def where(x) -> tuple[int, int]:
    return getattr(x, "line", 0), getattr(x, "col", 0)


def write(x) -> str:
    if isinstance(x, (list, tuple)):
        return "(" + " ".join(write(i) for i in x) + ")"
    return str(x)
