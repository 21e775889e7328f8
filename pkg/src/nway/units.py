"""Segmentation of solution text into comparison units.

Every downstream alignment and score operates on the unit sequences produced
here. The contract is exact reconstruction: concatenating the ``text`` of all
units of a solution, in order, reproduces the source byte-for-byte, and the
units' byte ranges tile the UTF-8 encoding of the source without gaps.

Three granularities are supported: one unit per Unicode scalar value
(``char``, the default), a language-agnostic token segmentation (``token``),
and one unit per newline-terminated line (``line``).
"""

from __future__ import annotations

import string
from dataclasses import dataclass
from enum import Enum

from .errors import EncodingError

__all__ = ["Unit", "UnitKind", "UnitMode", "segment"]


class UnitMode(str, Enum):
    """Granularity at which solutions are segmented, aligned, and scored."""

    CHAR = "char"
    TOKEN = "token"
    LINE = "line"


class UnitKind(str, Enum):
    CHAR = "char"
    WORD = "token-word"
    NUMBER = "token-number"
    STRING = "token-string"
    OPERATOR = "token-operator"
    WHITESPACE = "token-whitespace"
    COMMENT = "token-comment"
    LINE = "line"


@dataclass(frozen=True)
class Unit:
    """One comparison unit: an exact substring plus its UTF-8 byte span."""

    text: str
    byte_range: tuple[int, int]
    kind: UnitKind


# Token-mode word characters. Deliberately ASCII-only: anything outside this
# set that is not whitespace, a quote, or a comment opener is an operator.
_WORD_CHARS = frozenset(string.ascii_letters + string.digits + "_")
_DIGITS = frozenset(string.digits)
_QUOTES = frozenset("'\"")


def segment(text: str, mode: UnitMode | str = UnitMode.CHAR) -> list[Unit]:
    """Split ``text`` into comparison units for the given mode.

    Deterministic for a given (text, mode); raises :class:`EncodingError`
    when the text is not valid UTF-8 (e.g. contains surrogates).
    """
    mode = UnitMode(mode)
    _check_utf8(text)
    if mode is UnitMode.CHAR:
        pieces = [(ch, UnitKind.CHAR) for ch in text]
    elif mode is UnitMode.LINE:
        pieces = _split_lines(text)
    else:
        pieces = _lex_tokens(text)

    units: list[Unit] = []
    offset = 0
    for piece, kind in pieces:
        end = offset + len(piece.encode("utf-8"))
        units.append(Unit(piece, (offset, end), kind))
        offset = end
    return units


def _check_utf8(text: str) -> None:
    try:
        text.encode("utf-8")
    except UnicodeEncodeError as exc:
        # The prefix before the offending character is always encodable.
        byte_offset = len(text[: exc.start].encode("utf-8"))
        raise EncodingError(byte_offset) from None


def _split_lines(text: str) -> list[tuple[str, UnitKind]]:
    # Split on '\n' only; each line keeps its newline except possibly the
    # last. '\r' stays inside the line it terminates.
    parts = text.split("\n")
    lines = [part + "\n" for part in parts[:-1]]
    if parts[-1]:
        lines.append(parts[-1])
    return [(line, UnitKind.LINE) for line in lines]


def _lex_tokens(text: str) -> list[tuple[str, UnitKind]]:
    """Language-agnostic lexer.

    Rules: maximal [A-Za-z0-9_] runs are word tokens (number tokens when they
    start with a digit); ' or " opens a string literal closed by the same
    quote, with backslash escapes honored; '#' starts a comment running to
    end-of-line; each maximal whitespace run is one token; any other single
    character is an operator. An unterminated string degrades to an operator
    token for the quote character, so segmentation never fails on valid text.
    """
    out: list[tuple[str, UnitKind]] = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "#":
            j = text.find("\n", i)
            j = n if j == -1 else j
            out.append((text[i:j], UnitKind.COMMENT))
            i = j
        elif ch in _QUOTES:
            j = _scan_string(text, i)
            if j == -1:
                out.append((ch, UnitKind.OPERATOR))
                i += 1
            else:
                out.append((text[i:j], UnitKind.STRING))
                i = j
        elif ch in _WORD_CHARS:
            j = i + 1
            while j < n and text[j] in _WORD_CHARS:
                j += 1
            kind = UnitKind.NUMBER if ch in _DIGITS else UnitKind.WORD
            out.append((text[i:j], kind))
            i = j
        elif ch.isspace():
            j = i + 1
            while j < n and text[j].isspace():
                j += 1
            out.append((text[i:j], UnitKind.WHITESPACE))
            i = j
        else:
            out.append((ch, UnitKind.OPERATOR))
            i += 1
    return out


def _scan_string(text: str, start: int) -> int:
    """Return the end offset (exclusive) of the string literal opened at
    ``start``, or -1 if it never closes."""
    quote = text[start]
    j = start + 1
    n = len(text)
    while j < n:
        ch = text[j]
        if ch == "\\":
            j += 2
        elif ch == quote:
            return j + 1
        else:
            j += 1
    return -1
